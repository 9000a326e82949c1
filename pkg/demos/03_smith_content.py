"""Smith normal form over valuation rings: elementary divisors, content,
the content-index duality, and the adic seminorm on a presented module.
"""

from fractions import Fraction

from nonarch import (
    ElementaryDivisors,
    LaurentPoly,
    PresentationMatrix,
    adic_norm,
    content,
    det_val,
    p_adic_q,
    semilattice_index,
    smith,
)

k2 = p_adic_q(2)

print("== elementary divisors over Z_2 ==")
pres = PresentationMatrix.from_rows(k2, [[2, 1], [4, 8]])
d = smith(pres)
print("matrix [[2,1],[4,8]]  ->  divisors", d.divisors, " free rank", d.free_rank)
print("checksum: sum of divisors =", sum(v.fraction for v in d.divisors),
      " = v(det) =", det_val([[2, 1], [4, 8]], k2))

print()
print("== content measures the size of a torsion module ==")
print("content of Z_2^2 / (2, 4) =", content(PresentationMatrix.from_rows(k2, [[2, 0], [0, 4]])))
print("content of a free module  =", content(PresentationMatrix(k2, [[]])))

print()
print("== duality with the index of lattices ==")
ident = [[1, 0], [0, 1]]
twice = [[2, 0], [0, 2]]
print("[M : 2M] =", semilattice_index(ident, twice, k2),
      "  content(M/2M) =", content(PresentationMatrix.from_rows(k2, twice)))

print()
print("== the adic seminorm on Z_2 + Z_2/4 ==")
d = ElementaryDivisors((Fraction(2),), 1)
for coords in ([2, 3], [0, 2], [0, 4]):
    print(f"  |{coords}|_adic = {adic_norm(d, coords, k2)}")

print()
print("== entries may carry auxiliary Gauss variables ==")
# a ramified relation e*s^(e-1) with v(s) = 1/e
e = 4
s = LaurentPoly.variable(k2, 1, 1)
pres = PresentationMatrix(k2, [[s ** (e - 1) * e]], nvars=1, rho=(Fraction(1, e),))
print(f"content of ({e}*s^{e - 1}) at v(s)=1/{e}:", content(pres), f"(expected {e - 1}/{e} + v({e}))")
