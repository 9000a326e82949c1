"""Laurent polynomials over a base-field model, and generalized Gauss
(monomial) valuations.

A Laurent polynomial is a finite map from exponent vectors in Z^n to
nonzero field elements.  The generalized Gauss valuation attached to a
tuple of rational radii ``rho`` evaluates term-wise:

    gauss_val(sum a_I t^I, rho) = min over I of ( val(a_I) + <I, rho> ),

which is the additive form of ``|sum a_i t^i|_r = max |a_i| r^i``.  The
valuation is multiplicative on products, so it extends to ratios of
Laurent polynomials by subtraction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .fields import BaseFieldModel, FieldElement
from .values import INF, Val, vmin

__all__ = ["LaurentPoly", "gauss_val", "gauss_val_rational", "log_derivative"]


class LaurentPoly:
    """Finite-support Laurent polynomial in n variables.

    Terms are held as a dict from exponent tuples (length n, ints, may be
    negative) to nonzero FieldElement coefficients.  All arithmetic
    re-canonicalizes, so no zero coefficient is ever stored.
    """

    __slots__ = ("model", "n", "terms")

    def __init__(self, model: BaseFieldModel, n: int, terms=None):
        if n < 0:
            raise DomainError("number of variables must be nonnegative")
        self.model = model
        self.n = n
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise DomainError(f"exponent vector {exps} has wrong length (expected {n})")
            coeff = model.elem(coeff)
            if coeff.is_zero:
                continue
            if exps in clean:
                coeff = clean[exps] + coeff
                if coeff.is_zero:
                    del clean[exps]
                    continue
            clean[exps] = coeff
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, model, n, value) -> "LaurentPoly":
        return cls(model, n, {(0,) * n: model.elem(value)})

    @classmethod
    def zero(cls, model, n) -> "LaurentPoly":
        return cls(model, n, {})

    @classmethod
    def one(cls, model, n) -> "LaurentPoly":
        return cls.constant(model, n, 1)

    @classmethod
    def variable(cls, model, n, i) -> "LaurentPoly":
        """The i-th variable (1-based)."""
        if not 1 <= i <= n:
            raise DomainError(f"variable index {i} out of range 1..{n}")
        exps = tuple(1 if k == i - 1 else 0 for k in range(n))
        return cls(model, n, {exps: model.elem(1)})

    @classmethod
    def monomial(cls, model, n, exps, coeff=1) -> "LaurentPoly":
        return cls(model, n, {tuple(exps): model.elem(coeff)})

    # -- ring operations ----------------------------------------------------

    def _check(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction, FieldElement)):
            return LaurentPoly.constant(self.model, self.n, other)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        if other.model != self.model or other.n != self.n:
            raise DomainError("mixed Laurent rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps)
            coeff = coeff if acc is None else acc + coeff
            if coeff.is_zero:
                terms.pop(exps, None)
            else:
                terms[exps] = coeff
        out = LaurentPoly.zero(self.model, self.n)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.zero(self.model, self.n)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = terms.get(e)
                c = c if acc is None else acc + c
                if c.is_zero:
                    terms.pop(e, None)
                else:
                    terms[e] = c
        out = LaurentPoly.zero(self.model, self.n)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        k = int(k)
        if k < 0:
            if len(self.terms) != 1:
                raise DomainError("negative powers require a single-term Laurent polynomial")
            (exps, coeff), = self.terms.items()
            inv = self.model.one() / coeff
            out = LaurentPoly.monomial(self.model, self.n, tuple(-e for e in exps), inv)
            return out ** (-k)
        result = LaurentPoly.one(self.model, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, (LaurentPoly, int, Fraction, FieldElement)):
            return NotImplemented
        other = self._check(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.model, self.n, frozenset(self.terms.items())))

    # -- calculus ----------------------------------------------------------

    def log_derivative(self, i: int) -> "LaurentPoly":
        """The logarithmic derivative t_i * d/dt_i (1-based index):
        sum a_I t^I  |->  sum I_i a_I t^I.  Satisfies the Leibniz rule."""
        if not 1 <= i <= self.n:
            raise DomainError(f"variable index {i} out of range 1..{self.n}")
        terms = {}
        for exps, coeff in self.terms.items():
            c = coeff * exps[i - 1]
            if not c.is_zero:
                terms[exps] = c
        out = LaurentPoly.zero(self.model, self.n)
        out.terms = terms
        return out

    def shift(self, exps) -> "LaurentPoly":
        """Multiply by the monomial t^exps (exact, always invertible)."""
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.n:
            raise DomainError("shift vector has wrong length")
        out = LaurentPoly.zero(self.model, self.n)
        out.terms = {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}
        return out

    def scale(self, coeff) -> "LaurentPoly":
        coeff = self.model.elem(coeff)
        if coeff.is_zero:
            return LaurentPoly.zero(self.model, self.n)
        out = LaurentPoly.zero(self.model, self.n)
        out.terms = {e: c * coeff for e, c in self.terms.items()}
        return out

    # -- rendering -----------------------------------------------------------

    def to_string(self, family: str = "t") -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            factors = []
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                name = f"{family}{i + 1}"
                factors.append(name if e == 1 else f"{name}^{e}")
            cs = str(coeff)
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(factors))
            else:
                body = cs if "/" not in cs and "+" not in cs and " " not in cs else f"({cs})"
                parts.append("*".join([body] + factors))
        return " + ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"<LaurentPoly {self} over {self.model.kind}>"


def _as_radii(rho, n) -> tuple:
    rho = tuple(Fraction(r) for r in rho)
    if len(rho) != n:
        raise DomainError(f"radius vector has length {len(rho)}, expected {n}")
    return rho


def gauss_val(f: LaurentPoly, rho) -> Val:
    """Generalized Gauss valuation of f at rational radii rho: the minimum
    over terms of val(coefficient) + <exponents, rho>.  INF iff f = 0."""
    rho = _as_radii(rho, f.n)
    return vmin(
        coeff.val() + Val(sum(e * r for e, r in zip(exps, rho)))
        for exps, coeff in f.terms.items()
    )


def gauss_val_rational(f: LaurentPoly, g: LaurentPoly, rho) -> Val:
    """Gauss valuation of the ratio f/g: gauss_val(f) - gauss_val(g).
    Rejects g = 0; returns INF iff f = 0."""
    if g.is_zero:
        raise DomainError("denominator of a Gauss ratio must be nonzero")
    vf = gauss_val(f, rho)
    if vf.is_inf:
        return INF
    return vf - gauss_val(g, rho)


def log_derivative(f: LaurentPoly, i: int) -> LaurentPoly:
    """Module-level alias for LaurentPoly.log_derivative."""
    return f.log_derivative(i)
