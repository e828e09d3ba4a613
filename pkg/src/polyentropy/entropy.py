"""Shannon entropy of a sample encoded as a polynomial, via two routes.

A polynomial p encodes a finite sample: positions are outcomes and the
terms at a position are the draws of that outcome.  The empirical
distribution divides each position's term count by the total draw count.
Its Shannon entropy can be computed directly, or through the categorical
route: form the rectangle

    (draw count, section count of the total polynomial)

and read off its log aspect ratio.  The two routes agree on every
polynomial with at least one draw; ``compare_entropies`` checks that on a
concrete input.  Distributions hold exact rationals and floats enter only
in the final log step, which is why a 1e-9 comparison is safe.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .finpoly import FinPoly
from .rectangles import RectObj, log2_int

#: Absolute tolerance for comparing the two entropy routes.
TOLERANCE = 1e-9


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("probabilities and weights must be exact (int or Fraction)")
    return Fraction(value)


@dataclass(frozen=True)
class Dist:
    """A finite probability distribution with exact rational entries."""

    probabilities: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        probs = tuple(_exact(x) for x in self.probabilities)
        if any(x < 0 for x in probs):
            raise ValueError("probabilities must be non-negative")
        if sum(probs) != 1:
            raise ValueError("probabilities must sum to exactly 1")
        object.__setattr__(self, "probabilities", probs)

    def __len__(self) -> int:
        return len(self.probabilities)

    def __iter__(self):
        return iter(self.probabilities)

    def tensor(self, other: Dist) -> Dist:
        """Independent product; outcomes are pairs in lexicographic order."""
        return Dist(tuple(x * y for x in self.probabilities for y in other.probabilities))


def convex_mix(d1: Dist, w1, d2: Dist, w2) -> Dist:
    """Concatenate two distributions with exact weights summing to 1."""
    w1, w2 = _exact(w1), _exact(w2)
    if w1 < 0 or w2 < 0:
        raise ValueError("weights must be non-negative")
    if w1 + w2 != 1:
        raise ValueError("weights must sum to exactly 1")
    return Dist(tuple(w1 * x for x in d1.probabilities) + tuple(w2 * x for x in d2.probabilities))


def categorical_entropy(p: FinPoly) -> RectObj:
    """The entropy rectangle: (draw count, section count of the total polynomial)."""
    return RectObj(p.term_count(), p.total_polynomial().section_count())


def empirical_distribution(p: FinPoly) -> Dist:
    """Outcome frequencies: term count at each position over total draws."""
    if p.position_count() == 0:
        raise ValueError("the zero polynomial carries no distribution")
    draws = p.term_count()
    if draws == 0:
        raise ValueError("a constant polynomial has no draws to normalize by")
    return Dist(tuple(Fraction(e, draws) for e in p.exponents))


def shannon_entropy(dist: Dist) -> float:
    """Base-2 Shannon entropy, with 0 * log 0 taken as 0."""
    acc = 0.0
    for prob in dist.probabilities:
        if prob == 0:
            continue
        acc -= float(prob) * (log2_int(prob.numerator) - log2_int(prob.denominator))
    return acc + 0.0


def entropy_of_polynomial(p: FinPoly) -> float:
    """Entropy via the categorical route: log aspect ratio of the entropy rectangle.

    Total on all finite polynomials; samples with no draws come out at
    exactly 0 because their rectangle is the degenerate (0, 1).
    """
    return categorical_entropy(p).log_aspect_ratio()


@dataclass(frozen=True)
class EntropyComparison:
    """Both entropy routes on one polynomial, compared at a tolerance."""

    shannon: float
    categorical: float
    match: bool


def compare_entropies(p: FinPoly, tolerance: float = TOLERANCE) -> EntropyComparison:
    """Run the direct and the categorical route on p and compare them.

    Needs a polynomial with at least one draw, like the direct route does.
    """
    shannon = shannon_entropy(empirical_distribution(p))
    categorical = entropy_of_polynomial(p)
    return EntropyComparison(shannon, categorical, abs(shannon - categorical) <= tolerance)
