"""Diagonal seminorms: tensor, wedge and symmetric powers, determinant
norms, and the index of two norms.

A diagonal seminorm lists the additive weights of an orthogonal basis;
the seminorm of a vector is the min of coordinate valuation + weight.
"""

from fractions import Fraction

from nonarch import (
    DiagSeminorm,
    det_norm,
    norm_index,
    sym_power,
    sym_power_is_exact,
    tensor,
    wedge_power,
)

a = DiagSeminorm.from_weights([0, 1, 3])
b = DiagSeminorm.from_weights([Fraction(1, 2)])

print("A has weights", a.weights)
print("B has weights", b.weights)

print()
print("tensor(A, B) weights:", sorted(tensor(a, b).weights))
print("wedge^2(A) weights (pairwise sums):", sorted(wedge_power(a, 2).weights))
print("sym^2(A) weights (multiset sums):  ", sorted(sym_power(a, 2).weights))

print()
print("det norm of A (top wedge weight):", det_norm(a))
c = DiagSeminorm.from_weights([1, 1, 3])
print("index [A : C] = det(C) - det(A) =", norm_index(a, c))
print("transitivity: [A:C] + [C:A] =", norm_index(a, c) + norm_index(c, a))

print()
print("symmetric powers and the residue characteristic:")
for q, p in [(2, 3), (3, 3), (5, 0)]:
    tag = "exact" if sym_power_is_exact(q, p) else "upper bound only"
    print(f"  sym^{q} over residue char {p}: diagonal weights are {tag}")
