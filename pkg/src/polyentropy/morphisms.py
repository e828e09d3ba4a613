"""Morphisms of finite polynomial functors.

A morphism p -> q sends positions forward and, over each source position I,
pulls terms backwards from the target position it hits.  Both maps are
stored as index tuples: ``on_types[I]`` is the image position of I and
``on_terms_back[I][k]`` is the source term that target term k pulls back to.

A morphism is cartesian when every backwards map is a bijection; those are
the morphisms the total-polynomial construction acts on (``total_map``).
``aspect_map`` gives the action on the other invariant, sending positions
forward and global sections backward.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .finpoly import ENUMERATION_BOUND, BoundExceededError, FinPoly, term_offsets


@dataclass(frozen=True)
class PolyMorphism:
    source: FinPoly
    target: FinPoly
    on_types: tuple[int, ...]
    on_terms_back: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "on_types", tuple(self.on_types))
        object.__setattr__(self, "on_terms_back", tuple(tuple(m) for m in self.on_terms_back))
        n = self.source.position_count()
        if len(self.on_types) != n or len(self.on_terms_back) != n:
            raise ValueError("need one image position and one backwards map per source position")
        for i, (j, back) in enumerate(zip(self.on_types, self.on_terms_back)):
            if not 0 <= j < self.target.position_count():
                raise ValueError(f"source position {i} maps to {j}, which is not a target position")
            if len(back) != self.target.exponents[j]:
                raise ValueError(
                    f"backwards map at position {i} must cover all "
                    f"{self.target.exponents[j]} target terms"
                )
            if any(not 0 <= v < self.source.exponents[i] for v in back):
                raise ValueError(f"backwards map at position {i} leaves the source term set")

    def is_cartesian(self) -> bool:
        """True when every backwards map on terms is a bijection."""
        return all(
            len(back) == e and len(set(back)) == e
            for e, back in zip(self.source.exponents, self.on_terms_back)
        )


def identity(p: FinPoly) -> PolyMorphism:
    """The identity morphism on p."""
    return PolyMorphism(
        p,
        p,
        tuple(range(p.position_count())),
        tuple(tuple(range(e)) for e in p.exponents),
    )


def compose_morphisms(first: PolyMorphism, second: PolyMorphism) -> PolyMorphism:
    """Composite of first: p -> q with second: q -> r, in application order.

    Positions compose forwards; the backwards map at I is the backwards map
    of ``first`` after the one ``second`` holds over first's image of I.
    """
    if first.target != second.source:
        raise ValueError("cannot compose: first.target differs from second.source")
    on_types = tuple(second.on_types[j] for j in first.on_types)
    backs = []
    for i, j in enumerate(first.on_types):
        outer = second.on_terms_back[j]
        inner = first.on_terms_back[i]
        backs.append(tuple(inner[v] for v in outer))
    return PolyMorphism(first.source, second.target, on_types, tuple(backs))


def enumerate_morphisms(p: FinPoly, q: FinPoly, bound: int = ENUMERATION_BOUND) -> Iterator[PolyMorphism]:
    """Yield every morphism p -> q exactly once, deterministically.

    Per source position, choices run through target positions in order and,
    within one, through backwards maps odometer-style; the stream is the
    cartesian product of those per-position choice lists.
    """
    total = p.hom_count(q)
    if total > bound:
        raise BoundExceededError(
            f"{total} morphisms exceed the enumeration bound {bound}; use hom_count"
        )
    if total == 0:
        return iter(())
    choices_per_position = [
        [
            (j, g)
            for j, f in enumerate(q.exponents)
            for g in itertools.product(range(e), repeat=f)
        ]
        for e in p.exponents
    ]

    def generate() -> Iterator[PolyMorphism]:
        for combo in itertools.product(*choices_per_position):
            yield PolyMorphism(
                p,
                q,
                tuple(j for j, _ in combo),
                tuple(g for _, g in combo),
            )

    return generate()


def total_map(phi: PolyMorphism) -> PolyMorphism:
    """Action on total polynomials of a cartesian morphism.

    The source total position (I, i) goes to (image of I, preimage of i
    under the backwards bijection at I); backwards on terms it reuses that
    same bijection.  Preserves identities, composites and cartesianness.
    """
    if not phi.is_cartesian():
        raise ValueError("total_map is defined for cartesian morphisms only")
    p, q = phi.source, phi.target
    q_offsets = term_offsets(q)
    on_types: list[int] = []
    backs: list[tuple[int, ...]] = []
    for i, e in enumerate(p.exponents):
        j = phi.on_types[i]
        back = phi.on_terms_back[i]
        inverse = [0] * e
        for k, v in enumerate(back):
            inverse[v] = k
        base = q_offsets[j]
        for term in range(e):
            on_types.append(base + inverse[term])
            backs.append(back)
    return PolyMorphism(p.total_polynomial(), q.total_polynomial(), tuple(on_types), tuple(backs))


def aspect_map(
    phi: PolyMorphism, bound: int = ENUMERATION_BOUND
) -> tuple[tuple[int, ...], dict[tuple[int, ...], tuple[int, ...]]]:
    """Forward action on positions paired with the contravariant action on sections.

    A target section picks one term at every target position; composing with
    the backwards maps picks one at every source position.  The backward leg
    is materialized as a dict, so the target's sections must be enumerable
    within ``bound``.
    """
    n = phi.source.position_count()
    backward: dict[tuple[int, ...], tuple[int, ...]] = {}
    for section in phi.target.sections(bound):
        backward[section] = tuple(
            phi.on_terms_back[i][section[phi.on_types[i]]] for i in range(n)
        )
    return phi.on_types, backward
