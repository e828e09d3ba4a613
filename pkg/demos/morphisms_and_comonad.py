"""
Morphisms, the total-polynomial comonad, and its coalgebras
===========================================================

Morphisms of polynomials go forwards on positions and backwards on terms.
The cartesian ones (backwards maps all bijections) are where the comonad
lives: the total polynomial construction, its counit and comultiplication,
and one coalgebra per global section.
"""
from polyentropy import (
    FinPoly,
    coalgebra_from_section,
    compose_morphisms,
    comultiplication,
    counit,
    enumerate_morphisms,
    identity,
    parse_poly,
    total_map,
)

p = parse_poly("y^2 + y")
q = parse_poly("y^2")

print("morphisms", q, "->", p)
for phi in enumerate_morphisms(q, p):
    tag = "cartesian" if phi.is_cartesian() else "not cartesian"
    print("  positions", phi.on_types, " backwards", phi.on_terms_back, " ", tag)
print("closed-form count:", q.hom_count(p))

# folding two squares onto one is cartesian, so it lifts to total polynomials
fold = next(
    phi for phi in enumerate_morphisms(FinPoly([2, 2]), FinPoly([2]))
    if phi.is_cartesian() and phi.on_terms_back == ((0, 1), (0, 1))
)
lifted = total_map(fold)
print("fold:", fold.source, "->", fold.target)
print("lifted to totals:", lifted.source, "->", lifted.target)

# counit and comultiplication on y^2
r = FinPoly([2])
eps = counit(r)
delta = comultiplication(r)
total = r.total_polynomial()
print("counit:", eps.source, "->", eps.target, " positions", eps.on_types)
print("comultiplication:", delta.source, "->", delta.target, " positions", delta.on_types)
print("counit law (outer):", compose_morphisms(delta, counit(total)) == identity(total))
print("counit law (inner):", compose_morphisms(delta, total_map(eps)) == identity(total))

# one coalgebra per section; each splits the counit
s = FinPoly([2, 2])
for section in s.sections():
    coalg = coalgebra_from_section(s, section)
    assert compose_morphisms(coalg, counit(s)) == identity(s)
print(s, "has", s.section_count(), "coalgebra structures, one per section")
