"""Raw samples: draw/outcome tables and their polynomial encoding.

Each row records one draw of one outcome.  The encoding has one position
per distinct outcome, with the outcome's draw count as exponent; outcomes
that were declared but never drawn become constant (exponent 0) positions.
Row order never matters.
"""
from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .finpoly import FinPoly


class SampleError(ValueError):
    """A sample table or sample file is not usable."""


@dataclass(frozen=True)
class SampleTable:
    """Draw/outcome rows, plus optional declared outcomes with zero draws."""

    rows: tuple[tuple[str, str], ...]
    declared_outcomes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple((str(d), str(o)) for d, o in self.rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "declared_outcomes", tuple(self.declared_outcomes))
        seen = Counter(d for d, _ in rows)
        dupes = sorted(d for d, c in seen.items() if c > 1)
        if dupes:
            raise SampleError(f"duplicate draw ids: {', '.join(dupes)}")


def poly_from_sample(table: SampleTable) -> FinPoly:
    """Encode a sample: one position per outcome, exponent its draw count."""
    counts = Counter(outcome for _, outcome in table.rows)
    for outcome in table.declared_outcomes:
        counts.setdefault(outcome, 0)
    return FinPoly(counts.values())


def load_outcomes(path: str | Path) -> tuple[str, ...]:
    """Read declared outcome ids, one per line; blank lines are skipped."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return tuple(line.strip() for line in lines if line.strip())


def load_sample_csv(path: str | Path, outcomes_path: str | Path | None = None) -> SampleTable:
    """Read a sample table from CSV with the exact header ``draw,outcome``."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SampleError(f"{path}: empty file, expected header 'draw,outcome'") from None
        if [h.strip() for h in header] != ["draw", "outcome"]:
            raise SampleError(f"{path}: expected header 'draw,outcome', got {','.join(header)!r}")
        rows = []
        for number, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise SampleError(f"{path}:{number}: expected two fields, got {len(row)}")
            rows.append((row[0].strip(), row[1].strip()))
    declared = load_outcomes(outcomes_path) if outcomes_path is not None else ()
    return SampleTable(tuple(rows), declared)
