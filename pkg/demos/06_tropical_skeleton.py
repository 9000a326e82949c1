"""Tropical shadows of pluriforms, skeleton polytopes, exact maximality
loci, and the retraction onto the skeleton.

Maximizing the multiplicative norm is minimizing its additive value, so
the maximality locus of a form on a skeleton is the minimality locus of
a min-plus polynomial on a rational polytope: a union of faces, computed
here by exact rational LPs and verified by vertex enumeration.
"""

from fractions import Fraction

from nonarch import (
    LaurentPoly,
    MonomialChart,
    Pluriform,
    TropPoly,
    min_locus,
    pi_adic_q,
    polytope_vertices,
    retract,
    semistable_skeleton,
    trop_eval,
    tropicalize,
)

k = pi_adic_q()

print("== tropicalizing a form ==")
t = LaurentPoly.variable(k, 1, 1)
pi = LaurentPoly.constant(k, 1, k.uniformizer())
phi = Pluriform(k, 1, 1, 1, {((1,),): pi + t})
poly = tropicalize(phi)
print("(pi + t) dt/t  ->  terms", poly.terms)
for rho in (Fraction(0), Fraction(1, 2), Fraction(2)):
    print(f"  value at rho={rho}:", trop_eval(poly, (rho,)))

print()
print("== the standard skeleton simplex ==")
skel = semistable_skeleton(2, 2)
print("n=2, v(a)=2:", skel)
print("vertices:", polytope_vertices(skel))

print()
print("== maximality locus = union of faces ==")
examples = [
    ("constant form", TropPoly(2, [(0, (0, 0))])),
    ("min(rho1, rho2)", TropPoly(2, [(0, (1, 0)), (0, (0, 1))])),
    ("slope (-1, 0) vs 0", TropPoly(2, [(0, (0, 0)), (1, (-1, 0))])),
]
for label, poly in examples:
    m_star, locus = min_locus(poly, skel)
    print(f"{label}: optimum {m_star}")
    for face in locus:
        print(f"   face tight={face.tight} vertices={face.vertices}")

print()
print("== the retraction sends any chart point to the skeleton ==")
s = LaurentPoly.variable(k, 1, 1)
for rho in (Fraction(2), Fraction(1, 2)):
    chart = MonomialChart(k, [pi + s], (rho,))
    print(f"t = pi + s at rho={rho}  ->  skeleton point {retract(chart)}")
