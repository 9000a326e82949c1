"""Kahler seminorms of pluriforms at monomial points.

At a monomial point with residually tame parameters the logarithmic basis
dt_i/t_i is orthonormal, so the norm of a pluriform is the max (min
additively) of the Gauss values of its coefficients.  Off the skeleton
the norm drops, which is what makes maximality loci meaningful.
"""

from fractions import Fraction

from nonarch import (
    LaurentPoly,
    MonomialChart,
    Pluriform,
    differential,
    kahler_norm_at,
    p_adic_q,
    pi_adic_q,
    pullback,
    tame_certificate,
)

k = pi_adic_q()

print("== the canonical form has norm 1 exactly on the skeleton ==")
phi = Pluriform.canonical(k, 2, m=1)
on = MonomialChart.identity(k, 2, (Fraction(1, 2), Fraction(3)))
print("identity chart:", kahler_norm_at(phi, on), "(norm 1)")

s1 = LaurentPoly.variable(k, 2, 1)
s2 = LaurentPoly.variable(k, 2, 2)
off = MonomialChart(k, [1 + s1, 1 + s2], (Fraction(1, 2), Fraction(3)))
print("translated chart t_i = 1 + s_i:", kahler_norm_at(phi, off), "(norm < 1)")

print()
print("== the norm of dT on the disc is the radius function ==")
t = LaurentPoly.variable(k, 1, 1)
dT = Pluriform(k, 1, 1, 1, {((1,),): t})
for rho in (Fraction(0), Fraction(1, 2), Fraction(2)):
    print(f"  at radius exponent {rho}: |dT| =", kahler_norm_at(dT, MonomialChart.identity(k, 1, (rho,))))

print()
print("== pullback keeps everything exact ==")
chart = MonomialChart(k, [1 + LaurentPoly.variable(k, 1, 1)], (Fraction(1),))
pulled = pullback(Pluriform(k, 1, 1, 1, {((1,),): LaurentPoly.one(k, 1)}), chart)
coeff = pulled.form.coeffs[((1,),)]
print(f"dt/t along t = 1+s:  ({coeff.to_string('s')}) / ({pulled.denominator.to_string('s')})  on ds/s")

print()
print("== tameness certificates ==")
k3 = p_adic_q(3)
s = LaurentPoly.variable(k3, 1, 1)
for sub, label in [(s, "t = s"), (s ** 2, "t = s^2"), (s ** 3, "t = s^3"), (1 + s, "t = 1 + s")]:
    chart = MonomialChart(k3, [sub], (Fraction(1),))
    print(f"  {label} over Q_3: {tame_certificate(chart).value}")

print()
print("== d is non-expansive: |df| <= |f| ==")
f = 3 + t ** 2
rho = (Fraction(1, 3),)
from nonarch import gauss_val  # noqa: E402

print("v(f) =", gauss_val(f, rho), " value of df =",
      kahler_norm_at(differential(f), MonomialChart.identity(k, 1, rho)))
