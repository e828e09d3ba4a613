"""Finite polynomial functors in one variable.

Up to isomorphism a finite polynomial functor is a finite sum of
representables

    p = y^e0 + y^e1 + ... + y^e(n-1),

so it is determined by the multiset of its exponents.  ``FinPoly`` stores
that multiset as a tuple sorted in descending order.  "Position I" means the
index I into this tuple, and the term set at I is ``range(e_I)``, so equality
of values decides isomorphism of the functors they describe.

Exponent-0 entries are constant summands (y^0 = 1) and the empty tuple is
the zero polynomial.  All counting is exact: results are Python ints, since
section counts of total polynomials multiply up factors of e^e and leave
64-bit range at toy sizes already.  Values are immutable after construction.
"""
from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from math import prod
from typing import Iterator

#: Default ceiling for APIs that yield one element per counted object.
ENUMERATION_BOUND = 10**6


class BoundExceededError(ValueError):
    """An enumeration would yield more elements than the configured bound."""


@dataclass(frozen=True)
class FinPoly:
    """A finite polynomial functor in canonical form.

    ``exponents`` may be any iterable of non-negative integers, in any
    order; construction sorts it descending, so ``FinPoly([1, 4, 1, 1, 1])``
    equals ``FinPoly([4, 1, 1, 1, 1])``.
    """

    exponents: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        canon = tuple(sorted((operator.index(e) for e in self.exponents), reverse=True))
        if canon and canon[-1] < 0:
            raise ValueError("exponents must be non-negative")
        object.__setattr__(self, "exponents", canon)

    def __str__(self) -> str:
        if not self.exponents:
            return "0"
        parts = []
        for e, run in itertools.groupby(self.exponents):
            count = sum(1 for _ in run)
            if e == 0:
                parts.append(str(count))
                continue
            base = "y" if e == 1 else f"y^{e}"
            parts.append(base if count == 1 else f"{count}{base}")
        return " + ".join(parts)

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents)

    # counting ------------------------------------------------------------

    def position_count(self) -> int:
        """Number of summands, the cardinality of the value at a singleton."""
        return len(self.exponents)

    def term_count(self) -> int:
        """Total number of terms over all positions; the draw count of a sample."""
        return sum(self.exponents)

    def section_count(self) -> int:
        """Number of global sections, i.e. ways to pick one term per position."""
        return prod(self.exponents)

    def eval_count(self, size: int) -> int:
        """Cardinality of the image of a finite set of the given size.

        Uses the convention 0**0 == 1, so constant summands still count one
        element each at size 0.
        """
        size = operator.index(size)
        if size < 0:
            raise ValueError("size must be non-negative")
        return sum(size**e for e in self.exponents)

    __call__ = eval_count

    def hom_count(self, other: FinPoly) -> int:
        """Number of morphisms from this polynomial into ``other``."""
        return prod(sum(e**f for f in other.exponents) for e in self.exponents)

    # arithmetic ----------------------------------------------------------

    def __add__(self, other: FinPoly) -> FinPoly:
        """Coproduct: disjoint union of positions."""
        if not isinstance(other, FinPoly):
            return NotImplemented
        return FinPoly(self.exponents + other.exponents)

    def __mul__(self, other: FinPoly) -> FinPoly:
        """Product: positions are pairs of positions, exponents add."""
        if not isinstance(other, FinPoly):
            return NotImplemented
        return FinPoly(a + b for a in self.exponents for b in other.exponents)

    def dirichlet(self, other: FinPoly) -> FinPoly:
        """Dirichlet product: positions are pairs of positions, exponents multiply."""
        return FinPoly(a * b for a in self.exponents for b in other.exponents)

    __matmul__ = dirichlet

    def compose(self, other: FinPoly) -> FinPoly:
        """Substitution: this polynomial evaluated at ``other``.

        A composite position is a position I here together with a map from
        I's terms to positions of ``other``; its exponent is the sum of the
        exponents that map picks out.
        """
        targets = other.exponents
        exps = []
        for e in self.exponents:
            for choice in itertools.product(range(len(targets)), repeat=e):
                exps.append(sum(targets[j] for j in choice))
        return FinPoly(exps)

    def derivative(self) -> FinPoly:
        """Formal derivative: a position of exponent e yields e positions of exponent e - 1."""
        return FinPoly(e - 1 for e in self.exponents for _ in range(e))

    def total_polynomial(self) -> FinPoly:
        """Derivative times y; the total space of the polynomial read as a bundle.

        A position of exponent e yields e positions of exponent e, one per
        term, laid out block by block in canonical position order (see
        ``term_offsets``).
        """
        return FinPoly(e for e in self.exponents for _ in range(e))

    # enumeration ---------------------------------------------------------

    def sections(self, bound: int = ENUMERATION_BOUND) -> Iterator[tuple[int, ...]]:
        """Yield every global section as a tuple with one term index per position."""
        count = self.section_count()
        if count > bound:
            raise BoundExceededError(
                f"{count} sections exceed the enumeration bound {bound}; "
                "use section_count for counting"
            )
        return itertools.product(*(range(e) for e in self.exponents))


#: The zero polynomial, the constant 1 and the identity y.
ZERO = FinPoly()
ONE = FinPoly((0,))
Y = FinPoly((1,))


def term_offsets(p: FinPoly) -> tuple[int, ...]:
    """Start of each position's term block, numbering all terms 0..term_count - 1.

    The numbering runs through positions in canonical order, so it also
    indexes the positions of ``p.total_polynomial()``.
    """
    return tuple(itertools.accumulate((0,) + p.exponents))[:-1]


def enumerate_polys(max_positions: int, max_exponent: int) -> Iterator[FinPoly]:
    """Yield each canonical polynomial with at most ``max_positions`` positions
    and every exponent at most ``max_exponent``, exactly once.

    Ordered by position count, then lexicographically on the descending
    exponent tuple, so sweeps are reproducible.
    """
    if max_positions < 0 or max_exponent < 0:
        raise ValueError("bounds must be non-negative")
    for n in range(max_positions + 1):
        for exps in itertools.combinations_with_replacement(range(max_exponent, -1, -1), n):
            yield FinPoly(exps)
