"""Finite polynomial functors and the Shannon entropy of empirical samples.

The library encodes a finite sample as a polynomial (outcomes are positions,
draws are terms), computes its Shannon entropy through an exact categorical
pipeline (total polynomial, section counts, rectangle geometry) and checks
the result against the classical formula.  Everything is immutable and
arithmetic is exact until the final logarithm.
"""
from .comonad import coalgebra_from_section, comultiplication, counit
from .entropy import (
    TOLERANCE,
    Dist,
    EntropyComparison,
    categorical_entropy,
    compare_entropies,
    convex_mix,
    empirical_distribution,
    entropy_of_polynomial,
    shannon_entropy,
)
from .finpoly import (
    ENUMERATION_BOUND,
    ONE,
    Y,
    ZERO,
    BoundExceededError,
    FinPoly,
    enumerate_polys,
    term_offsets,
)
from .morphisms import (
    PolyMorphism,
    aspect_map,
    compose_morphisms,
    enumerate_morphisms,
    identity,
    total_map,
)
from .parsing import ParseError, parse_poly
from .rectangles import RECT_ONE, RECT_ZERO, RectObj, closure, log2_int
from .samples import SampleError, SampleTable, load_sample_csv, poly_from_sample

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "Dist",
    "ENUMERATION_BOUND",
    "EntropyComparison",
    "FinPoly",
    "ONE",
    "ParseError",
    "PolyMorphism",
    "RECT_ONE",
    "RECT_ZERO",
    "RectObj",
    "SampleError",
    "SampleTable",
    "TOLERANCE",
    "Y",
    "ZERO",
    "aspect_map",
    "categorical_entropy",
    "closure",
    "coalgebra_from_section",
    "compare_entropies",
    "compose_morphisms",
    "comultiplication",
    "convex_mix",
    "counit",
    "empirical_distribution",
    "entropy_of_polynomial",
    "enumerate_morphisms",
    "enumerate_polys",
    "identity",
    "load_sample_csv",
    "log2_int",
    "parse_poly",
    "poly_from_sample",
    "shannon_entropy",
    "term_offsets",
    "total_map",
]
