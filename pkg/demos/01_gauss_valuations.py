"""Base-field models and generalized Gauss valuations.

Everything in nonarch is additive and exact: a multiplicative absolute
value |x| = eps**q is stored as the rational exponent q, and |x| = 0 is
the distinguished value INF.  Smaller additive value = larger element.
"""

from fractions import Fraction

from nonarch import (
    LaurentPoly,
    gauss_val,
    gauss_val_rational,
    log_derivative,
    p_adic_q,
    pi_adic_fp,
    pi_adic_q,
    trivial_q,
)

print("== the four base-field models ==")
for model in (trivial_q(), p_adic_q(2), pi_adic_q(), pi_adic_fp(3)):
    x = model.elem(12)
    print(f"{model.kind:>10}: v(12) = {x.val()}, residue char {model.residue_char}")

print()
print("== pi-adic arithmetic is exact rational-function arithmetic ==")
k = pi_adic_q()
pi = k.uniformizer()
x = (pi ** 3 + pi) / (1 + pi)
print(f"x = (pi^3 + pi)/(1 + pi) = {x},  v(x) = {x.val()}")

print()
print("== Gauss valuations evaluate term by term ==")
k2 = p_adic_q(2)
t = LaurentPoly.variable(k2, 1, 1)
f = 4 + 2 * t + t ** 3
rho = (Fraction(1, 3),)
print(f"f = {f} over Q_2, radius exponent rho = {rho[0]}")
print(f"gauss_val(f, rho) = min(v(4), v(2)+1/3, 0+3*1/3) = {gauss_val(f, rho)}")

print()
print("== the valuation is multiplicative, hence extends to ratios ==")
g = 1 + t
print(f"gauss_val(f*g) = {gauss_val(f * g, rho)} = "
      f"{gauss_val(f, rho)} + {gauss_val(g, rho)}")
print(f"gauss_val_rational(t, 1+t, rho=(1,)) = {gauss_val_rational(t, g, (1,))}")

print()
print("== logarithmic derivative t d/dt, the workhorse for forms ==")
h = 1 + t ** 2
print(f"t d/dt ({h}) = {log_derivative(h, 1)}")
