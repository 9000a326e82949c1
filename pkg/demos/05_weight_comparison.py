"""Weight norm versus Kahler norm on Kummer-over-Gauss divisorial points.

The two norms on m-canonical forms differ exactly by the factor
|pi_k|^m * (log different)^m; on this family the log different over the
base vanishes, so additively wt = m*(1 + delta_log) + omega.  In residue
characteristic p > 0 the norms genuinely diverge beyond the uniformizer
shift on more general divisorial points (already on the affine line),
but those need algebraic extensions of the base field and sit outside
this computable family.
"""

from nonarch import (
    KummerDivisorialSpec,
    compare,
    different_kummer_ramified,
    kahler_norm_divisorial,
    log_different,
    p_adic_q,
    pi_adic_q,
    weight_norm,
)

print("== one Kummer layer s^2 = t ==")
for p in (3, 2):
    spec = KummerDivisorialSpec(p_adic_q(p), 1, [(1, 2)])
    g = spec.one()
    print(f"over Q_{p}:  wt = {weight_norm(spec, g, 1)},  omega = "
          f"{kahler_norm_divisorial(spec, g, 1)},  delta_log/l = {log_different(spec, 'l')}")

print()
print("== the comparison identity, checked exactly ==")
spec = KummerDivisorialSpec(p_adic_q(2), 2, [(1, 2), (2, 6)])
for m in (1, 2, 3):
    rep = compare(spec, spec.t(1) + spec.s(1) * 4, m)
    print(f"m={m}: wt {rep.wt} = m*(1 + {rep.delta_log_k}) + {rep.omega}  ->  {rep.identity_holds}")

print()
print("== residue characteristic zero: the norms agree up to |pi|^m ==")
spec = KummerDivisorialSpec(pi_adic_q(), 1, [(1, 6)])
rep = compare(spec, spec.one(), 2)
print(f"wt = {rep.wt}, omega = {rep.omega}, delta_log = {rep.delta_log_k}")

print()
print("== the tame different of adjoining an e-th root of pi ==")
for p, e in [(3, 2), (5, 4), (2, 3), (7, 6)]:
    print(f"  p={p}, e={e}: different = {different_kummer_ramified(p_adic_q(p), e)} "
          f"(closed form {e - 1}/{e})")
