"""Comonad structure carried by the total-polynomial construction.

On cartesian morphisms, sending p to its total polynomial is a comonad.
The counit projects a total position (I, i) back down to I.  Writing Tp for
the total polynomial, the total polynomial of Tp splits as

    T(Tp) = (second derivative of p) * y^2  +  Tp,

and comultiplication embeds Tp along the diagonal (I, i) -> ((I, i), i),
which is exactly the inclusion of the second summand.  A coalgebra is a
cartesian section of the counit and amounts to choosing one global section
of p, so coalgebra structures are counted by ``section_count``.
"""
from __future__ import annotations

from .finpoly import FinPoly, term_offsets
from .morphisms import PolyMorphism


def counit(p: FinPoly) -> PolyMorphism:
    """Project the total polynomial onto its base: on positions, (I, i) -> I."""
    on_types = tuple(i for i, e in enumerate(p.exponents) for _ in range(e))
    backs = tuple(tuple(range(e)) for e in p.exponents for _ in range(e))
    return PolyMorphism(p.total_polynomial(), p, on_types, backs)


def comultiplication(p: FinPoly) -> PolyMorphism:
    """Embed the total polynomial into the total polynomial of itself.

    The codomain is built as second_derivative * y^2 + total, and the image
    is the diagonal copy of the second summand: position (I, i) lands on
    ((I, i), i), with identity backwards maps.
    """
    total = p.total_polynomial()
    codomain = p.derivative().derivative() * FinPoly((2,)) + total
    offsets = term_offsets(total)
    on_types = []
    backs = []
    t = 0
    for e in p.exponents:
        for i in range(e):
            on_types.append(offsets[t] + i)
            backs.append(tuple(range(e)))
            t += 1
    return PolyMorphism(total, codomain, tuple(on_types), tuple(backs))


def coalgebra_from_section(p: FinPoly, section: tuple[int, ...]) -> PolyMorphism:
    """The coalgebra p -> total(p) that picks term section[I] at every position I.

    Composing with the counit gives the identity on p.
    """
    exps = p.exponents
    section = tuple(section)
    if len(section) != len(exps) or any(not 0 <= s < e for s, e in zip(section, exps)):
        raise ValueError("not a section: need one in-range term choice per position")
    offsets = term_offsets(p)
    on_types = tuple(offsets[i] + s for i, s in enumerate(section))
    backs = tuple(tuple(range(e)) for e in exps)
    return PolyMorphism(p, p.total_polynomial(), on_types, backs)
