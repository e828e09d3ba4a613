"""Pairs of cardinalities read as rectangles, with a sum and a tensor.

A pair (a, b) of non-negative integers stands for a rectangle of length a
and width b**(1/a), so b is the a-th power of the width.  Sum lays
rectangles end to end and mixes widths by their geometric mean; tensor
multiplies lengths and widths:

    (a1, b1) + (a2, b2)      = (a1 + a2, b1 * b2)
    (a1, b1) tensor (a2, b2) = (a1 * a2, b1**a2 * b2**a1)

Both are commutative monoids, with units (0, 1) and (1, 1), and tensor
distributes over sum; all of that holds exactly at the integer level with
the convention 0**0 == 1.  ``log_aspect_ratio`` reads off log2 of length
over width, the quantity that agrees with Shannon entropy downstream.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass


def log2_int(n: int) -> float:
    """Base-2 log of a positive integer, valid far beyond float range.

    Splits n as (n >> s) * 2**s with a 64-bit leading chunk, so the result
    keeps full double precision even when float(n) would overflow.
    """
    n = operator.index(n)
    if n <= 0:
        raise ValueError("log2_int needs a positive integer")
    shift = n.bit_length() - 64
    if shift <= 0:
        return math.log2(n)
    return math.log2(n >> shift) + shift


@dataclass(frozen=True)
class RectObj:
    """A rectangle, given by its length ``a`` and its width's ``a``-th power ``b``."""

    a: int
    b: int

    def __post_init__(self) -> None:
        a, b = operator.index(self.a), operator.index(self.b)
        if a < 0 or b < 0:
            raise ValueError("components must be non-negative")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __add__(self, other: RectObj) -> RectObj:
        if not isinstance(other, RectObj):
            return NotImplemented
        return RectObj(self.a + other.a, self.b * other.b)

    def tensor(self, other: RectObj) -> RectObj:
        return RectObj(self.a * other.a, self.b**other.a * other.b**self.a)

    __matmul__ = tensor

    def width(self) -> float:
        """The geometric-mean side b**(1/a); needs positive length."""
        if self.a == 0:
            raise ValueError("width undefined for zero length")
        if self.b == 0:
            return 0.0
        return 2.0 ** (log2_int(self.b) / self.a)

    def log_aspect_ratio(self) -> float:
        """log2 of length over width: log2(a) - log2(b) / a.

        The sum unit (0, 1) is assigned 0 exactly; any other rectangle with a
        zero component has no defined aspect.
        """
        if self.a == 0 and self.b == 1:
            return 0.0
        if self.a == 0 or self.b == 0:
            raise ValueError(f"log aspect ratio undefined for ({self.a}, {self.b})")
        return log2_int(self.a) - log2_int(self.b) / self.a


#: Units for sum and tensor.
RECT_ZERO = RectObj(0, 1)
RECT_ONE = RectObj(1, 1)


def hom_count(x: RectObj, z: RectObj) -> int:
    """Number of morphisms x -> z: maps forward on the first component, backward on the second."""
    return z.a**x.a * x.b**z.b


def closure(x: RectObj, z: RectObj) -> RectObj:
    """Internal hom [x, z], the currying partner of tensor at the hom-count level:

    hom_count(w tensor x, z) == hom_count(w, closure(x, z)) for all w.
    """
    return RectObj(z.a**x.a * x.b**z.b, x.a * z.b)
