"""Draw/outcome tables, their CSV form, and the polynomial encoding."""
from pathlib import Path

import pytest

from polyentropy import (
    ZERO,
    FinPoly,
    SampleError,
    SampleTable,
    load_sample_csv,
    poly_from_sample,
)
from polyentropy.samples import load_outcomes

REPO = Path(__file__).resolve().parent.parent
SAMPLE_CSV = REPO / "demos" / "data" / "eight_draws.csv"

EIGHT_DRAWS = (
    ("d1", "o1"),
    ("d2", "o1"),
    ("d3", "o1"),
    ("d4", "o1"),
    ("d5", "o2"),
    ("d6", "o3"),
    ("d7", "o4"),
    ("d8", "o5"),
)


def test_eight_draw_table_encodes_as_quartic_plus_four_lines():
    assert poly_from_sample(SampleTable(EIGHT_DRAWS)) == FinPoly([4, 1, 1, 1, 1])


def test_row_order_never_matters():
    reversed_rows = tuple(reversed(EIGHT_DRAWS))
    assert poly_from_sample(SampleTable(reversed_rows)) == FinPoly([4, 1, 1, 1, 1])
    interleaved = (
        ("d5", "o2"),
        ("d1", "o1"),
        ("d8", "o5"),
        ("d2", "o1"),
        ("d6", "o3"),
        ("d3", "o1"),
        ("d7", "o4"),
        ("d4", "o1"),
    )
    assert poly_from_sample(SampleTable(interleaved)) == FinPoly([4, 1, 1, 1, 1])


def test_declared_outcomes_become_constant_positions():
    table = SampleTable((("d1", "a"), ("d2", "a")), declared_outcomes=("a", "b", "c"))
    assert poly_from_sample(table) == FinPoly([2, 0, 0])
    # declaring an outcome that was drawn anyway changes nothing
    assert poly_from_sample(SampleTable(EIGHT_DRAWS, ("o1",))) == FinPoly([4, 1, 1, 1, 1])


def test_empty_table_encodes_the_zero_polynomial():
    assert poly_from_sample(SampleTable(())) == ZERO
    assert poly_from_sample(SampleTable((), ("a", "b"))) == FinPoly([0, 0])


def test_duplicate_draw_ids_rejected():
    with pytest.raises(SampleError, match="duplicate draw ids: d1"):
        SampleTable((("d1", "a"), ("d1", "b")))
    with pytest.raises(SampleError, match="d1, d2"):
        SampleTable((("d1", "a"), ("d1", "b"), ("d2", "a"), ("d2", "a")))


def test_sample_error_is_a_value_error():
    assert issubclass(SampleError, ValueError)


def test_load_sample_csv():
    table = load_sample_csv(SAMPLE_CSV)
    assert table.rows == EIGHT_DRAWS
    assert table.declared_outcomes == ()
    assert poly_from_sample(table) == FinPoly([4, 1, 1, 1, 1])


def test_load_sample_csv_strips_field_whitespace(tmp_path):
    path = tmp_path / "padded.csv"
    path.write_text("draw , outcome\n d1 , a \nd2,b\n", encoding="utf-8")
    table = load_sample_csv(path)
    assert table.rows == (("d1", "a"), ("d2", "b"))


def test_load_sample_csv_skips_blank_lines(tmp_path):
    path = tmp_path / "gaps.csv"
    path.write_text("draw,outcome\nd1,a\n\nd2,b\n\n", encoding="utf-8")
    assert load_sample_csv(path).rows == (("d1", "a"), ("d2", "b"))


def test_load_sample_csv_header_only_gives_zero_polynomial(tmp_path):
    path = tmp_path / "headeronly.csv"
    path.write_text("draw,outcome\n", encoding="utf-8")
    assert poly_from_sample(load_sample_csv(path)) == ZERO


def test_load_sample_csv_rejects_bad_files(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("", encoding="utf-8")
    with pytest.raises(SampleError, match="empty file"):
        load_sample_csv(empty)

    wrong_header = tmp_path / "wrong.csv"
    wrong_header.write_text("id,value\nd1,a\n", encoding="utf-8")
    with pytest.raises(SampleError, match="expected header"):
        load_sample_csv(wrong_header)

    ragged = tmp_path / "ragged.csv"
    ragged.write_text("draw,outcome\nd1,a,extra\n", encoding="utf-8")
    with pytest.raises(SampleError, match=":2:"):
        load_sample_csv(ragged)

    dupes = tmp_path / "dupes.csv"
    dupes.write_text("draw,outcome\nd1,a\nd1,b\n", encoding="utf-8")
    with pytest.raises(SampleError, match="duplicate"):
        load_sample_csv(dupes)


def test_load_outcomes(tmp_path):
    path = tmp_path / "outcomes.txt"
    path.write_text("a\n\n  b \nc\n", encoding="utf-8")
    assert load_outcomes(path) == ("a", "b", "c")


def test_load_sample_csv_with_declared_outcomes(tmp_path):
    csv_path = tmp_path / "s.csv"
    csv_path.write_text("draw,outcome\nd1,a\n", encoding="utf-8")
    outcomes_path = tmp_path / "o.txt"
    outcomes_path.write_text("a\nb\n", encoding="utf-8")
    table = load_sample_csv(csv_path, outcomes_path)
    assert table.declared_outcomes == ("a", "b")
    assert poly_from_sample(table) == FinPoly([1, 0])
