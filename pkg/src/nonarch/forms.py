"""Pluriforms in logarithmic coordinates and their norms at monomial points.

A pluriform of type (l, m) on the n-torus is written in the logarithmic
basis: phi = sum over e of phi_e * (dt/t)^e, where e is an m-tuple of
strictly increasing l-subsets of {1..n} and (dt/t)^e is the tensor product
over slots of the wedge of dt_i/t_i for i in the subset.

At a monomial point presented by a chart t_i = g_i(s) with Gauss radii
rho, the logarithmic basis of the s-coordinates is orthonormal, so the
norm of a pulled-back form is the minimum of the Gauss valuations of its
coefficients.  The value is the geometric Kahler seminorm whenever the
chart is residually tame; otherwise it is reported as the chart-basis
value together with the certificate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import DomainError
from .fields import BaseFieldModel
from .laurent import LaurentPoly, gauss_val
from .values import INF, Val, vmin

__all__ = [
    "MonomialChart",
    "Pluriform",
    "PullbackResult",
    "TameStatus",
    "pullback",
    "kahler_norm_at",
    "tame_certificate",
    "differential",
]


class TameStatus(enum.Enum):
    TAME = "tame"
    WILD = "wild"
    UNKNOWN = "unknown"


class MonomialChart:
    """A monomial point presented through a chart: the substitution
    t_i = g_i(s_1..s_n) together with the Gauss radii of the s-coordinates.
    The g_i must be nonzero, so every t_i is nonzero at the point."""

    __slots__ = ("model", "n", "substitutions", "rho")

    def __init__(self, model: BaseFieldModel, substitutions, rho):
        self.model = model
        subs = tuple(substitutions)
        self.n = len(subs)
        for g in subs:
            if not isinstance(g, LaurentPoly) or g.model != model or g.n != self.n:
                raise DomainError("each substitution must be a Laurent polynomial in the s-variables")
            if g.is_zero:
                raise DomainError("chart substitutions must be nonzero")
        self.substitutions = subs
        self.rho = tuple(Fraction(r) for r in rho)
        if len(self.rho) != self.n:
            raise DomainError("one radius per variable is required")

    @classmethod
    def identity(cls, model, n, rho) -> "MonomialChart":
        subs = [LaurentPoly.variable(model, n, i) for i in range(1, n + 1)]
        return cls(model, subs, rho)

    @property
    def is_identity(self) -> bool:
        return all(
            g == LaurentPoly.variable(self.model, self.n, i)
            for i, g in enumerate(self.substitutions, start=1)
        )

    def __repr__(self):
        subs = ", ".join(g.to_string("s") for g in self.substitutions)
        return f"<MonomialChart t=({subs}) at rho={self.rho}>"


def _check_subset(s, l, n):
    s = tuple(int(i) for i in s)
    if len(s) != l or any(not 1 <= i <= n for i in s) or list(s) != sorted(set(s)):
        raise DomainError(f"basis subset {s} is not a strictly increasing {l}-subset of 1..{n}")
    return s


class Pluriform:
    """An element of (Omega^l)^{tensor m} in the logarithmic basis."""

    __slots__ = ("model", "n", "l", "m", "coeffs")

    def __init__(self, model: BaseFieldModel, n: int, l: int, m: int, coeffs):
        if not 0 <= l <= n:
            raise DomainError(f"wedge degree l={l} out of range 0..{n}")
        if m < 1:
            raise DomainError("tensor power m must be >= 1")
        self.model = model
        self.n = n
        self.l = l
        self.m = m
        clean = {}
        for e, coeff in coeffs.items():
            e = tuple(_check_subset(s, l, n) for s in e)
            if len(e) != m:
                raise DomainError(f"basis index {e} must have {m} tensor slots")
            if not isinstance(coeff, LaurentPoly):
                coeff = LaurentPoly.constant(model, n, coeff)
            if coeff.model != model or coeff.n != n:
                raise DomainError("coefficient ring does not match the form")
            if coeff.is_zero:
                continue
            clean[e] = clean[e] + coeff if e in clean else coeff
            if clean[e].is_zero:
                del clean[e]
        self.coeffs = clean

    @classmethod
    def canonical(cls, model, n, m=1, coefficient=1) -> "Pluriform":
        """coefficient * (dt_1/t_1 ^ ... ^ dt_n/t_n)^{tensor m}."""
        e = (tuple(range(1, n + 1)),) * m
        return cls(model, n, n, m, {e: LaurentPoly.constant(model, n, coefficient)})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Pluriform):
            return NotImplemented
        return (
            (self.model, self.n, self.l, self.m) == (other.model, other.n, other.l, other.m)
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        body = ", ".join(f"{e}: {c}" for e, c in sorted(self.coeffs.items()))
        return f"<Pluriform l={self.l} m={self.m} {{{body}}}>"


@dataclass(frozen=True)
class PullbackResult:
    """A pulled-back form with rational-function coefficients, stored as a
    numerator form over one common Laurent denominator."""

    form: Pluriform
    denominator: LaurentPoly


def differential(f: LaurentPoly) -> Pluriform:
    """df as a 1-form in the logarithmic basis: sum_i (t_i df/dt_i) dt_i/t_i."""
    coeffs = {}
    for i in range(1, f.n + 1):
        c = f.log_derivative(i)
        if not c.is_zero:
            coeffs[((i,),)] = c
    if not coeffs:
        # the zero form still needs a consistent shape
        return Pluriform(f.model, f.n, 1, 1, {})
    return Pluriform(f.model, f.n, 1, 1, coeffs)


def _det_laurent(rows) -> LaurentPoly:
    """Determinant of a small square matrix of Laurent polynomials by
    cofactor expansion."""
    size = len(rows)
    if size == 0:
        raise ValueError("empty determinant has no ring to live in")
    if size == 1:
        return rows[0][0]
    model, n = rows[0][0].model, rows[0][0].n
    total = LaurentPoly.zero(model, n)
    for j, head in enumerate(rows[0]):
        if head.is_zero:
            continue
        minor = [[row[c] for c in range(size) if c != j] for row in rows[1:]]
        cof = head * _det_laurent(minor)
        total = total + (cof if j % 2 == 0 else -cof)
    return total


def pullback(phi: Pluriform, chart: MonomialChart) -> PullbackResult:
    """Express phi in the logarithmic basis of the chart coordinates.

    Substitutes t_i = g_i(s), rewrites dt_i/t_i via logarithmic derivatives
    as sum_j (s_j dg_i/ds_j / g_i) ds_j/s_j, expands wedges and tensors
    multilinearly, and clears all denominators into one common Laurent
    denominator.  Pullback along the identity chart is the identity, and
    pullback along a composition agrees with composed pullbacks."""
    if phi.model != chart.model or phi.n != chart.n:
        raise DomainError("form and chart live on different tori")
    model, n, l, m = phi.model, phi.n, phi.l, phi.m
    subs = chart.substitutions

    logd = [[subs[i].log_derivative(j + 1) for j in range(n)] for i in range(n)]

    # global denominator exponents: substitution part plus wedge part
    d_sub = [0] * n
    for coeff in phi.coeffs.values():
        for exps in coeff.terms:
            for i, e in enumerate(exps):
                d_sub[i] = max(d_sub[i], -e)
    w_max = [0] * n
    for e in phi.coeffs:
        for i in range(n):
            w = sum(1 for subset in e if i + 1 in subset)
            w_max[i] = max(w_max[i], w)
    c_exp = [d + w for d, w in zip(d_sub, w_max)]

    max_pow = max(c_exp, default=0)
    for coeff in phi.coeffs.values():
        for exps in coeff.terms:
            for i, e in enumerate(exps):
                max_pow = max(max_pow, e + d_sub[i])
    powers = []
    for g in subs:
        pw = [LaurentPoly.one(model, n)]
        for _ in range(max_pow):
            pw.append(pw[-1] * g)
        powers.append(pw)

    targets = list(combinations(range(1, n + 1), l))
    minor_cache = {}

    def minor_det(source, target):
        key = (source, target)
        got = minor_cache.get(key)
        if got is None:
            rows = [[logd[i - 1][j - 1] for j in target] for i in source]
            got = LaurentPoly.one(model, n) if l == 0 else _det_laurent(rows)
            minor_cache[key] = got
        return got

    out = {}
    for e, coeff in phi.coeffs.items():
        numerator = LaurentPoly.zero(model, n)
        for exps, a in coeff.terms.items():
            term = LaurentPoly.constant(model, n, a)
            for i, ex in enumerate(exps):
                term = term * powers[i][ex + d_sub[i]]
            numerator = numerator + term
        if numerator.is_zero:
            continue
        w_e = [sum(1 for subset in e if i + 1 in subset) for i in range(n)]
        fill = LaurentPoly.one(model, n)
        for i in range(n):
            k = c_exp[i] - d_sub[i] - w_e[i]
            if k:
                fill = fill * powers[i][k]
        base = numerator * fill
        for combo in product(targets, repeat=m):
            det_prod = base
            dead = False
            for subset, target in zip(e, combo):
                d = minor_det(subset, target)
                if d.is_zero:
                    dead = True
                    break
                det_prod = det_prod * d
            if dead:
                continue
            out[combo] = out[combo] + det_prod if combo in out else det_prod

    denominator = LaurentPoly.one(model, n)
    for i in range(n):
        if c_exp[i]:
            denominator = denominator * powers[i][c_exp[i]]

    out = {e: c for e, c in out.items() if not c.is_zero}
    if len(denominator.terms) == 1:
        (exps, coeff), = denominator.terms.items()
        inv_shift = tuple(-x for x in exps)
        inv_coeff = model.one() / coeff
        out = {e: c.shift(inv_shift).scale(inv_coeff) for e, c in out.items()}
        denominator = LaurentPoly.one(model, n)
    return PullbackResult(Pluriform(model, n, l, m, out), denominator)


def kahler_norm_at(phi: Pluriform, chart: MonomialChart) -> Val:
    """Norm of phi at the monomial point of the chart: after pulling back,
    the minimum over basis indices of the Gauss valuation of the
    coefficient, minus the Gauss valuation of the common denominator.
    INF exactly for the zero form."""
    pulled = pullback(phi, chart)
    if pulled.form.is_zero:
        return INF
    best = vmin(gauss_val(c, chart.rho) for c in pulled.form.coeffs.values())
    return best - gauss_val(pulled.denominator, chart.rho)


def _int_det(rows) -> int:
    """Exact integer determinant (Bareiss elimination)."""
    a = [list(map(int, r)) for r in rows]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def tame_certificate(chart: MonomialChart) -> TameStatus:
    """Residual-tameness certificate for the chart.

    Residue characteristic zero is always tame.  For a purely monomial
    substitution t_i = c_i * s^{L_i} the norm of the canonical wedge is
    |det L|, so the chart is tame iff val(det L) = 0; a singular exponent
    matrix is rejected (not a chart).  For general substitutions in
    positive residue characteristic no decision procedure is attempted."""
    if chart.model.residue_char == 0:
        return TameStatus.TAME
    exps = []
    for g in chart.substitutions:
        if len(g.terms) != 1:
            return TameStatus.UNKNOWN
        (e, _coeff), = g.terms.items()
        exps.append(e)
    det = _int_det(exps) if chart.n else 1
    if det == 0:
        raise DomainError("degenerate monomial substitution: exponent matrix is singular")
    v = chart.model.elem(det).val()
    return TameStatus.TAME if v == Val(0) else TameStatus.WILD
