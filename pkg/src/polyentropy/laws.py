"""Exhaustive desk-scale checks of the structural laws the library rests on.

Each suite sweeps a bounded enumeration, raises ``LawViolation`` on the
first counterexample and returns the number of cases checked otherwise.
Suites that enumerate morphisms or comonad data clamp their bounds
internally to keep the sweep affordable; the polynomial-arithmetic suites
honor the requested bounds as given.  The CLI exposes all of this under the
``laws`` subcommand.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .comonad import coalgebra_from_section, comultiplication, counit
from .entropy import TOLERANCE, categorical_entropy, compare_entropies
from .finpoly import ONE, Y, ZERO, FinPoly, enumerate_polys
from .morphisms import compose_morphisms, identity, enumerate_morphisms, total_map
from .rectangles import RECT_ONE, RECT_ZERO, RectObj, closure, hom_count


class LawViolation(ValueError):
    """An algebraic law failed on a concrete instance."""


def _require(condition: bool, context: str) -> None:
    if not condition:
        raise LawViolation(context)


def check_sum_monoid(max_positions: int, max_exponent: int) -> int:
    cases = 0
    pool = list(enumerate_polys(max_positions, max_exponent))
    for p in pool:
        _require(p + ZERO == p == ZERO + p, f"sum unit fails on {p}")
        cases += 1
    for p in pool:
        for q in pool:
            _require(p + q == q + p, f"sum commutativity fails on {p}, {q}")
            cases += 1
    small = list(enumerate_polys(min(max_positions, 2), min(max_exponent, 2)))
    for p in small:
        for q in small:
            for r in small:
                _require((p + q) + r == p + (q + r), f"sum associativity fails on {p}, {q}, {r}")
                cases += 1
    return cases


def check_dirichlet_monoid(max_positions: int, max_exponent: int) -> int:
    cases = 0
    pool = list(enumerate_polys(max_positions, max_exponent))
    for p in pool:
        _require(p @ Y == p == Y @ p, f"dirichlet unit fails on {p}")
        _require(p @ ZERO == ZERO, f"dirichlet absorption fails on {p}")
        cases += 1
    for p in pool:
        for q in pool:
            _require(p @ q == q @ p, f"dirichlet commutativity fails on {p}, {q}")
            cases += 1
    small = list(enumerate_polys(min(max_positions, 2), min(max_exponent, 2)))
    for p in small:
        for q in small:
            for r in small:
                _require((p @ q) @ r == p @ (q @ r), f"dirichlet associativity fails on {p}, {q}, {r}")
                cases += 1
    return cases


def check_distributivity(max_positions: int, max_exponent: int) -> int:
    cases = 0
    pool = list(enumerate_polys(max_positions, max_exponent))
    for p in pool:
        for q in pool:
            for r in pool:
                _require(
                    p @ (q + r) == p @ q + p @ r,
                    f"dirichlet/sum distributivity fails on {p}, {q}, {r}",
                )
                cases += 1
    return cases


def check_derivative_additivity(max_positions: int, max_exponent: int) -> int:
    cases = 0
    for p in enumerate_polys(max_positions, max_exponent):
        for q in enumerate_polys(max_positions, max_exponent):
            _require(
                (p + q).derivative() == p.derivative() + q.derivative(),
                f"derivative additivity fails on {p}, {q}",
            )
            cases += 1
    return cases


def check_leibniz_rule(max_positions: int, max_exponent: int) -> int:
    cases = 0
    pool = list(enumerate_polys(min(max_positions, 2), max_exponent))
    for p in pool:
        for q in pool:
            _require(
                (p * q).derivative() == p.derivative() * q + p * q.derivative(),
                f"Leibniz rule fails on {p}, {q}",
            )
            cases += 1
    return cases


def check_chain_rule(max_positions: int, max_exponent: int) -> int:
    cases = 0
    pool = list(enumerate_polys(min(max_positions, 2), max_exponent))
    for p in pool:
        for q in pool:
            _require(
                p.compose(q).derivative() == p.derivative().compose(q) * q.derivative(),
                f"chain rule fails on {p}, {q}",
            )
            cases += 1
    return cases


def check_total_rig_functor(max_positions: int, max_exponent: int) -> int:
    cases = 0
    _require(Y.total_polynomial() == Y, "total polynomial of y is not y")
    cases += 1
    pool = list(enumerate_polys(max_positions, max_exponent))
    for p in pool:
        _require(
            p.total_polynomial() == p.derivative() * Y,
            f"total polynomial differs from derivative * y on {p}",
        )
        cases += 1
    for p in pool:
        for q in pool:
            _require(
                (p + q).total_polynomial() == p.total_polynomial() + q.total_polynomial(),
                f"total polynomial fails to preserve sum on {p}, {q}",
            )
            _require(
                (p @ q).total_polynomial() == p.total_polynomial() @ q.total_polynomial(),
                f"total polynomial fails to preserve dirichlet on {p}, {q}",
            )
            cases += 2
    return cases


def check_counting_consistency(max_positions: int, max_exponent: int) -> int:
    cases = 0
    for p in enumerate_polys(max_positions, max_exponent):
        _require(
            p.term_count() == p.derivative().position_count() == p.total_polynomial().position_count(),
            f"term count disagrees with derivative positions on {p}",
        )
        _require(p.eval_count(1) == p.position_count(), f"eval at 1 differs from position count on {p}")
        cases += 1
    return cases


def check_section_consistency(max_positions: int, max_exponent: int) -> int:
    cases = 0
    for p in enumerate_polys(min(max_positions, 3), min(max_exponent, 4)):
        count = p.section_count()
        _require(count == sum(1 for _ in p.sections()), f"section enumeration miscounts on {p}")
        _require(count == p.hom_count(Y), f"sections differ from morphisms into y on {p}")
        _require(
            p.total_polynomial().section_count() == math.prod(e**e for e in p.exponents),
            f"total-polynomial section count differs from the product of e^e on {p}",
        )
        cases += 1
    return cases


def check_entropy_rig_functor(max_positions: int, max_exponent: int) -> int:
    cases = 0
    pool = list(enumerate_polys(max_positions, max_exponent))
    for p in pool:
        for q in pool:
            hp, hq = categorical_entropy(p), categorical_entropy(q)
            _require(
                categorical_entropy(p + q) == hp + hq,
                f"categorical entropy fails to preserve sum on {p}, {q}",
            )
            _require(
                categorical_entropy(p @ q) == hp @ hq,
                f"categorical entropy fails to preserve dirichlet on {p}, {q}",
            )
            cases += 2
    return cases


def check_entropy_identity(max_positions: int, max_exponent: int) -> int:
    cases = 0
    for p in enumerate_polys(max_positions, max_exponent):
        rect = categorical_entropy(p)
        _require(rect.b >= 1, f"entropy rectangle has zero sections on {p}")
        if rect.a == 0:
            _require(rect.b == 1, f"degenerate entropy rectangle is not (0, 1) on {p}")
        else:
            report = compare_entropies(p)
            _require(
                report.match,
                f"entropy routes disagree on {p}: {report.shannon} vs {report.categorical}",
            )
        cases += 1
    return cases


def check_hom_enumeration(max_positions: int, max_exponent: int) -> int:
    cases = 0
    pool = list(enumerate_polys(min(max_positions, 2), min(max_exponent, 2)))
    for p in pool:
        for q in pool:
            morphisms = list(enumerate_morphisms(p, q))
            _require(
                len(morphisms) == p.hom_count(q),
                f"morphism enumeration disagrees with hom_count on {p} -> {q}",
            )
            _require(
                len(set(morphisms)) == len(morphisms),
                f"morphism enumeration repeats an element on {p} -> {q}",
            )
            cases += 1
    return cases


def check_comonad_laws(max_positions: int, max_exponent: int) -> int:
    cases = 0
    for p in enumerate_polys(min(max_positions, 2), min(max_exponent, 3)):
        eps = counit(p)
        delta = comultiplication(p)
        total = p.total_polynomial()
        _require(eps.is_cartesian(), f"counit is not cartesian on {p}")
        _require(delta.is_cartesian(), f"comultiplication is not cartesian on {p}")
        id_total = identity(total)
        _require(
            compose_morphisms(delta, counit(total)) == id_total,
            f"counit law (outer) fails on {p}",
        )
        _require(
            compose_morphisms(delta, total_map(eps)) == id_total,
            f"counit law (inner) fails on {p}",
        )
        _require(
            compose_morphisms(delta, comultiplication(total))
            == compose_morphisms(delta, total_map(delta)),
            f"coassociativity fails on {p}",
        )
        cases += 5
        if all(e >= 1 for e in p.exponents):
            coalgebras = [coalgebra_from_section(p, s) for s in p.sections()]
            _require(
                len(set(coalgebras)) == p.section_count(),
                f"coalgebras do not biject with sections on {p}",
            )
            for coalgebra in coalgebras:
                _require(coalgebra.is_cartesian(), f"coalgebra is not cartesian on {p}")
                _require(
                    compose_morphisms(coalgebra, eps) == identity(p),
                    f"coalgebra does not split the counit on {p}",
                )
                cases += 2
            cases += 1
    return cases


def check_rect_rig(max_positions: int, max_exponent: int) -> int:
    cases = 0
    grid = [RectObj(a, b) for a in range(5) for b in range(5)]
    for x in grid:
        _require(x + RECT_ZERO == x == RECT_ZERO + x, f"rect sum unit fails on {x}")
        _require(x @ RECT_ONE == x == RECT_ONE @ x, f"rect tensor unit fails on {x}")
        _require(x @ RECT_ZERO == RECT_ZERO, f"rect absorption fails on {x}")
        cases += 1
    for x in grid:
        for y in grid:
            _require(x + y == y + x, f"rect sum commutativity fails on {x}, {y}")
            _require(x @ y == y @ x, f"rect tensor commutativity fails on {x}, {y}")
            cases += 2
    for x in grid:
        for y in grid:
            for z in grid:
                _require((x + y) + z == x + (y + z), f"rect sum associativity fails on {x}, {y}, {z}")
                _require((x @ y) @ z == x @ (y @ z), f"rect tensor associativity fails on {x}, {y}, {z}")
                _require(x @ (y + z) == x @ y + x @ z, f"rect distributivity fails on {x}, {y}, {z}")
                cases += 3
    return cases


def check_rect_geometry(max_positions: int, max_exponent: int) -> int:
    cases = 0
    grid = [RectObj(a, b) for a in range(1, 5) for b in range(1, 10)]
    for x in grid:
        for y in grid:
            lhs = (x + y).width() ** (x.a + y.a)
            rhs = x.width() ** x.a * y.width() ** y.a
            _require(
                math.isclose(lhs, rhs, rel_tol=1e-9),
                f"width of a sum breaks the geometric mean on {x}, {y}",
            )
            _require(
                math.isclose((x @ y).width(), x.width() * y.width(), rel_tol=1e-9),
                f"width multiplicativity fails on {x}, {y}",
            )
            _require(
                abs((x @ y).log_aspect_ratio() - (x.log_aspect_ratio() + y.log_aspect_ratio()))
                <= TOLERANCE,
                f"log aspect ratio is not additive under tensor on {x}, {y}",
            )
            cases += 3
    return cases


def check_closure_currying(max_positions: int, max_exponent: int) -> int:
    cases = 0
    grid = [RectObj(a, b) for a in range(4) for b in range(4)]
    for w in grid:
        for x in grid:
            for z in grid:
                _require(
                    hom_count(w @ x, z) == hom_count(w, closure(x, z)),
                    f"closure currying fails on {w}, {x}, {z}",
                )
                cases += 1
    return cases


@dataclass(frozen=True)
class LawSuiteResult:
    name: str
    cases: int


ALL_SUITES: tuple[tuple[str, Callable[[int, int], int]], ...] = (
    ("sum_monoid", check_sum_monoid),
    ("dirichlet_monoid", check_dirichlet_monoid),
    ("distributivity", check_distributivity),
    ("derivative_additivity", check_derivative_additivity),
    ("leibniz_rule", check_leibniz_rule),
    ("chain_rule", check_chain_rule),
    ("total_rig_functor", check_total_rig_functor),
    ("counting_consistency", check_counting_consistency),
    ("section_consistency", check_section_consistency),
    ("entropy_rig_functor", check_entropy_rig_functor),
    ("entropy_identity", check_entropy_identity),
    ("hom_enumeration", check_hom_enumeration),
    ("comonad_laws", check_comonad_laws),
    ("rect_rig", check_rect_rig),
    ("rect_geometry", check_rect_geometry),
    ("closure_currying", check_closure_currying),
)


def run_all(max_positions: int = 3, max_exponent: int = 3) -> list[LawSuiteResult]:
    """Run every suite; raises LawViolation on the first failing law."""
    return [
        LawSuiteResult(name, check(max_positions, max_exponent)) for name, check in ALL_SUITES
    ]
