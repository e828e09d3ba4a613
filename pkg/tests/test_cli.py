"""Command-line surface: golden outputs, exit codes, report consistency."""
import json
import subprocess
import sys
from pathlib import Path

from polyentropy import TOLERANCE, enumerate_polys, parse_poly
from polyentropy.cli import entropy_report, main

REPO = Path(__file__).resolve().parent.parent
SAMPLE_CSV = str(REPO / "demos" / "data" / "eight_draws.csv")

GOLDEN_ENTROPY_TEXT = """\
polynomial           y^4 + 4y
positions            5
draws                8
gamma_total          256
length               8
width                2
entropy_categorical  2
shannon_direct       2
match                true
"""

GOLDEN_ENTROPY_JSON = """\
{
  "polynomial": "y^4 + 4y",
  "positions": 5,
  "draws": 8,
  "gamma_total": "256",
  "length": 8,
  "width": 2.0,
  "entropy_categorical": 2.0,
  "shannon_direct": 2.0,
  "match": true
}
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_entropy_expression_text_golden(capsys):
    code, out, err = run(capsys, "entropy", "y^4+4y")
    assert code == 0
    assert out == GOLDEN_ENTROPY_TEXT
    assert err == ""


def test_entropy_expression_json_golden(capsys):
    code, out, err = run(capsys, "entropy", "--format", "json", "y^4+4y")
    assert code == 0
    assert out == GOLDEN_ENTROPY_JSON
    assert err == ""


def test_entropy_sample_matches_expression(capsys):
    code, out, _ = run(capsys, "entropy", "--sample", SAMPLE_CSV)
    assert code == 0
    assert out == GOLDEN_ENTROPY_TEXT
    code, out, _ = run(capsys, "entropy", "--format", "json", "--sample", SAMPLE_CSV)
    assert code == 0
    assert out == GOLDEN_ENTROPY_JSON


def test_entropy_degenerate_input_omits_undefined_fields(capsys):
    code, out, _ = run(capsys, "entropy", "3")
    assert code == 0
    assert out == (
        "polynomial           3\n"
        "positions            3\n"
        "draws                0\n"
        "gamma_total          1\n"
        "length               0\n"
        "entropy_categorical  0\n"
    )
    code, out, _ = run(capsys, "entropy", "--format", "json", "0")
    assert code == 0
    parsed = json.loads(out)
    assert parsed["positions"] == 0
    assert parsed["entropy_categorical"] == 0.0
    assert "width" not in parsed
    assert "shannon_direct" not in parsed
    assert "match" not in parsed


def test_aspect_golden(capsys):
    code, out, _ = run(capsys, "aspect", "y^4+4y")
    assert code == 0
    assert out == (
        "polynomial  y^4 + 4y\n"
        "length      5\n"
        "width       1.31950791077\n"
    )


def test_derive_golden(capsys):
    code, out, _ = run(capsys, "derive", "y^4+4y")
    assert code == 0
    assert out == (
        "polynomial  y^4 + 4y\n"
        "derivative  4y^3 + 4\n"
        "total       4y^4 + 4y\n"
    )


def test_dist_golden(capsys):
    code, out, _ = run(capsys, "dist", "2y^3+y")
    assert code == 0
    assert out == (
        "polynomial    2y^3 + y\n"
        "distribution  3/7 3/7 1/7\n"
    )
    code, out, _ = run(capsys, "dist", "--format", "json", "2y^3+y")
    assert code == 0
    assert json.loads(out) == {
        "polynomial": "2y^3 + y",
        "distribution": ["3/7", "3/7", "1/7"],
    }


def test_laws_small_run(capsys):
    code, out, _ = run(capsys, "laws", "--max-positions", "2", "--max-exponent", "2")
    assert code == 0
    assert "all 16 suites passed" in out
    code, out, _ = run(
        capsys, "laws", "--max-positions", "2", "--max-exponent", "2",
        "--format", "json",
    )
    assert code == 0
    parsed = json.loads(out)
    assert parsed["all_passed"] is True
    assert len(parsed["suites"]) == 16
    assert parsed["total_cases"] == sum(s["cases"] for s in parsed["suites"])
    assert all(s["cases"] >= 1 for s in parsed["suites"])


def test_parse_errors_exit_2(capsys):
    code, out, err = run(capsys, "entropy", "y^")
    assert code == 2
    assert out == ""
    assert "parse error" in err
    assert "(byte 2)" in err
    assert run(capsys, "aspect", "1 + + y")[0] == 2
    assert run(capsys, "derive", "")[0] == 2


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "entropy")
    assert code == 2
    assert "usage error" in err
    code, _, err = run(capsys, "entropy", "y", "--sample", SAMPLE_CSV)
    assert code == 2
    assert "not both" in err
    code, _, err = run(capsys, "entropy", "y", "--outcomes", "whatever.txt")
    assert code == 2
    assert "--outcomes" in err


def test_argparse_failures_exit_2(capsys):
    assert run(capsys, "entropy", "--no-such-flag", "y")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "entropy", "--format", "yaml", "y")[0] == 2


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "entropy", "--help")[0] == 0


def test_domain_errors_exit_1(capsys):
    code, _, err = run(capsys, "dist", "3")
    assert code == 1
    assert "error:" in err
    assert run(capsys, "dist", "0")[0] == 1
    assert run(capsys, "aspect", "0")[0] == 1


def test_file_errors_exit_1(capsys, tmp_path):
    code, _, err = run(capsys, "entropy", "--sample", str(tmp_path / "missing.csv"))
    assert code == 1
    assert "error:" in err
    bad = tmp_path / "bad.csv"
    bad.write_text("id,value\nd1,a\n", encoding="utf-8")
    assert run(capsys, "entropy", "--sample", str(bad))[0] == 1


def test_entropy_with_declared_outcomes(capsys, tmp_path):
    csv_path = tmp_path / "s.csv"
    csv_path.write_text("draw,outcome\nd1,a\nd2,a\n", encoding="utf-8")
    outcomes = tmp_path / "o.txt"
    outcomes.write_text("a\nb\nc\n", encoding="utf-8")
    code, out, _ = run(
        capsys, "entropy", "--format", "json",
        "--sample", str(csv_path), "--outcomes", str(outcomes),
    )
    assert code == 0
    parsed = json.loads(out)
    assert parsed["polynomial"] == "y^2 + 2"
    assert parsed["positions"] == 3
    assert parsed["draws"] == 2


def test_entropy_sample_beyond_default_decimal_cap(capsys, tmp_path):
    # 2000^2000 has 6603 digits, past the interpreter's default str cap
    big = tmp_path / "big.csv"
    lines = ["draw,outcome"] + [f"d{i},a" for i in range(2000)]
    big.write_text("\n".join(lines) + "\n", encoding="utf-8")
    code, out, _ = run(capsys, "entropy", "--format", "json", "--sample", str(big))
    assert code == 0
    parsed = json.loads(out)
    assert len(parsed["gamma_total"]) == 6603
    assert parsed["shannon_direct"] == 0.0
    assert abs(parsed["entropy_categorical"]) <= 1e-9
    assert parsed["match"] is True


def test_report_consistency_sweep():
    for p in enumerate_polys(3, 3):
        report = entropy_report(p)
        assert report["positions"] == p.position_count()
        assert report["draws"] == p.term_count()
        if p.term_count() >= 1:
            assert report["match"] is True
            assert abs(report["shannon_direct"] - report["entropy_categorical"]) <= TOLERANCE
        else:
            assert "shannon_direct" not in report
            assert report["entropy_categorical"] == 0.0


def test_text_and_json_agree(capsys):
    for expr in ("y^4+4y", "2y^3+5y^2+1", "y", "7"):
        _, text_out, _ = run(capsys, "entropy", expr)
        _, json_out, _ = run(capsys, "entropy", "--format", "json", expr)
        parsed = json.loads(json_out)
        text_keys = [line.split("  ", 1)[0].rstrip() for line in text_out.splitlines()]
        assert text_keys == list(parsed)
        assert parsed["polynomial"] == str(parse_poly(expr))


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "polyentropy", "entropy", "y^4+4y"],
        capture_output=True, text=True, cwd=REPO,
    )
    assert result.returncode == 0
    assert result.stdout == GOLDEN_ENTROPY_TEXT
    result = subprocess.run(
        [sys.executable, "-m", "polyentropy", "dist", "3"],
        capture_output=True, text=True, cwd=REPO,
    )
    assert result.returncode == 1
