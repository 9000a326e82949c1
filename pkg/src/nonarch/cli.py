"""Command-line interface: JSON in, JSON (or CSV) out, byte-stable.

Subcommands: eval-norm, trop, max-locus, smith, content, index, adic,
weight-compare, retract, tame-check, grid.  Valuation values are rendered
as {"num": p, "den": q} or "inf", with an optional "approx" field when a
rendering base --epsilon is given.  Exit codes: 0 success, 2 parse error
(with line/column), 3 domain error (naming the violated precondition).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DomainError, ParseError
from .expr import parse_poly
from .fields import BaseFieldModel, p_adic_q, pi_adic_fp, pi_adic_q, trivial_q
from .forms import MonomialChart, Pluriform, kahler_norm_at, tame_certificate
from .lattices import ElementaryDivisors, PresentationMatrix, adic_norm, content, semilattice_index, smith
from .tropical import RationalPolytope, min_locus, polytope_vertices, retract, semistable_skeleton, trop_eval, tropicalize
from .values import Val
from .weights import KummerDivisorialSpec, compare

__all__ = ["run", "main"]


def _parse_field(spec: str) -> BaseFieldModel:
    if spec == "trivial":
        return trivial_q()
    if spec == "piadic-q":
        return pi_adic_q()
    if spec.startswith("padic:"):
        try:
            return p_adic_q(int(spec.split(":", 1)[1]))
        except ValueError as exc:
            raise DomainError(f"bad p-adic field spec {spec!r}: {exc}") from exc
    if spec.startswith("piadic-f"):
        try:
            return pi_adic_fp(int(spec[len("piadic-f"):]))
        except ValueError as exc:
            raise DomainError(f"bad pi-adic residue field spec {spec!r}: {exc}") from exc
    raise DomainError(
        f"unknown field {spec!r}; expected trivial | padic:<p> | piadic-q | piadic-f<p>"
    )


def _parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad rational {text!r}") from exc
    raise DomainError(f"bad rational {text!r}")


def _parse_point(text: str, n: int) -> tuple:
    parts = [p for p in text.split(",") if p.strip()]
    point = tuple(_parse_rational(p) for p in parts)
    if len(point) != n:
        raise DomainError(f"--point has {len(point)} coordinates, expected {n}")
    return point


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc.msg}", exc.lineno, exc.colno) from exc


def _render_val(v: Val, eps) -> object:
    if v.is_inf:
        return "inf"
    q = v.fraction
    out = {"num": q.numerator, "den": q.denominator}
    if eps is not None:
        out["approx"] = float(eps) ** float(q)
    return out


def _render_fraction(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")


def _load_form(args, model) -> Pluriform:
    doc = _load_json(args.form)
    n = args.n if args.n else int(doc.get("n", 0))
    if n < 1:
        raise DomainError("--n (or an n field in the form file) is required")
    l = int(doc.get("l", n))
    m = int(doc.get("m", 1))
    coeffs = {}
    for entry in doc.get("entries", []):
        e = tuple(tuple(int(i) for i in subset) for subset in entry["e"])
        coeff = parse_poly(entry["coeff"], model, n, variables="t")
        if e in coeffs:
            coeffs[e] = coeffs[e] + coeff
        else:
            coeffs[e] = coeff
    return Pluriform(model, n, l, m, coeffs)


def _load_chart(args, model, n) -> MonomialChart:
    if args.point is None:
        raise DomainError("--point is required to place the monomial point")
    rho = _parse_point(args.point, n)
    if getattr(args, "chart", None):
        doc = _load_json(args.chart)
        subs = [parse_poly(src, model, n, variables="s") for src in doc["substitutions"]]
        if len(subs) != n:
            raise DomainError(f"chart lists {len(subs)} substitutions, expected {n}")
        return MonomialChart(model, subs, rho)
    return MonomialChart.identity(model, n, rho)


def _load_matrix(doc: dict, model, point) -> PresentationMatrix:
    nvars = int(doc.get("nvars", 0))
    rho = ()
    if nvars:
        if point is None:
            raise DomainError("--point must supply Gauss radii for matrix entries with variables")
        rho = _parse_point(point, nvars)
    entries = [
        [parse_poly(src, model, nvars, variables="t") if nvars else _field_entry(src, model)
         for src in row]
        for row in doc["entries"]
    ]
    return PresentationMatrix(model, entries, nvars=nvars, rho=rho)


def _field_entry(src, model):
    poly = parse_poly(str(src), model, 0, variables="t")
    return poly.terms.get((), model.zero())


def _polytope_from_args(args) -> RationalPolytope:
    if getattr(args, "semistable", None):
        try:
            n_text, va_text = args.semistable.split(",")
        except ValueError as exc:
            raise DomainError("--semistable wants '<n>,<va>'") from exc
        return semistable_skeleton(int(n_text), _parse_rational(va_text))
    if getattr(args, "polytope", None):
        doc = _load_json(args.polytope)
        constraints = [
            (tuple(_parse_rational(x) for x in c["a"]), _parse_rational(c["b"]))
            for c in doc["constraints"]
        ]
        return RationalPolytope(int(doc["n"]), constraints)
    raise DomainError("either --polytope or --semistable is required")


def _parse_kummer(text: str):
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            j, e = chunk.split(":")
            pairs.append((int(j), int(e)))
        except ValueError as exc:
            raise DomainError(f"--kummer wants 'j:e,...', got {chunk!r}") from exc
    return pairs


# -- subcommand handlers ------------------------------------------------------

def _cmd_eval_norm(args, model, eps):
    phi = _load_form(args, model)
    chart = _load_chart(args, model, phi.n)
    value = kahler_norm_at(phi, chart)
    cert = tame_certificate(chart)
    _emit({
        "value": _render_val(value, eps),
        "certificate": cert.value,
        "seminorm": "geometric-kahler",
    })


def _cmd_trop(args, model, eps):
    phi = _load_form(args, model)
    poly = tropicalize(phi)
    _emit({
        "n": poly.n,
        "terms": [{"c": _render_fraction(c), "I": list(e)} for c, e in poly.terms],
    })


def _infer_n_from_region(args):
    """Allow --n to be omitted when the polytope fixes the dimension."""
    if args.n:
        return
    if getattr(args, "semistable", None):
        args.n = int(args.semistable.split(",")[0])
    elif getattr(args, "polytope", None):
        args.n = int(_load_json(args.polytope)["n"])


def _cmd_max_locus(args, model, eps):
    _infer_n_from_region(args)
    phi = _load_form(args, model)
    poly = tropicalize(phi)
    p = _polytope_from_args(args)
    m_star, locus = min_locus(poly, p)
    _emit({
        "m_star": _render_val(Val(m_star), eps),
        "locus": [
            {
                "tight": list(face.tight),
                "vertices": [[_render_fraction(x) for x in v] for v in face.vertices],
            }
            for face in locus
        ],
    })


def _cmd_smith(args, model, eps):
    doc = _load_json(args.matrix)
    pres = _load_matrix(doc, model, args.point)
    d = smith(pres)
    _emit({
        "divisors": [_render_val(v, eps) for v in d.divisors],
        "free_rank": d.free_rank,
    })


def _cmd_content(args, model, eps):
    doc = _load_json(args.matrix)
    pres = _load_matrix(doc, model, args.point)
    _emit({"content": _render_val(content(pres), eps)})


def _cmd_index(args, model, eps):
    doc = _load_json(args.matrix)
    if "M" not in doc or "L" not in doc:
        raise DomainError("index wants a JSON file with matrices under keys 'M' and 'L'")
    nvars = int(doc.get("nvars", 0))
    rho = _parse_point(args.point, nvars) if nvars else ()

    def rows(key):
        return [
            [parse_poly(src, model, nvars, variables="t") if nvars else _field_entry(src, model)
             for src in row]
            for row in doc[key]
        ]

    value = semilattice_index(rows("M"), rows("L"), model, nvars=nvars, rho=rho)
    _emit({"index": _render_val(value, eps)})


def _cmd_adic(args, model, eps):
    doc = _load_json(args.matrix)
    if "divisors" not in doc or "coords" not in doc:
        raise DomainError("adic wants a JSON file with 'divisors', 'free_rank' and 'coords'")
    divisors = ElementaryDivisors(
        tuple(Val(_parse_rational(d)) for d in doc["divisors"]),
        int(doc.get("free_rank", 0)),
    )
    coords = [_field_entry(src, model) for src in doc["coords"]]
    _emit({"value": _render_val(adic_norm(divisors, coords, model), eps)})


def _cmd_weight_compare(args, model, eps):
    if not args.kummer:
        raise DomainError("--kummer is required")
    if not args.n:
        raise DomainError("--n is required")
    spec = KummerDivisorialSpec(model, args.n, _parse_kummer(args.kummer))
    if args.form:
        doc = _load_json(args.form)
        g = parse_poly(doc["g"], model, args.n, variables="ts")
    else:
        g = spec.one()
    report = compare(spec, g, args.m)
    _emit({
        "wt": _render_val(report.wt, eps),
        "omega": _render_val(report.omega, eps),
        "delta_log": _render_val(report.delta_log_k, eps),
        "holds": report.identity_holds,
    })


def _cmd_retract(args, model, eps):
    if not args.n:
        raise DomainError("--n is required")
    chart = _load_chart(args, model, args.n)
    point = retract(chart)
    _emit({"point": [_render_fraction(x) for x in point]})


def _cmd_tame_check(args, model, eps):
    if not args.n:
        raise DomainError("--n is required")
    chart = _load_chart(args, model, args.n)
    _emit({"certificate": tame_certificate(chart).value})


def _cmd_grid(args, model, eps):
    if not args.grid:
        raise DomainError("--grid <steps> is required")
    steps = int(args.grid)
    if steps < 1:
        raise DomainError("--grid wants a positive number of steps")
    _infer_n_from_region(args)
    phi = _load_form(args, model)
    poly = tropicalize(phi)
    p = _polytope_from_args(args)
    if p.n != poly.n:
        raise DomainError("form and polytope dimensions disagree")
    verts = polytope_vertices(p)
    if not verts:
        raise DomainError("polytope has no vertices (empty or unbounded)")
    lo = [min(v[i] for v in verts) for i in range(p.n)]
    hi = [max(v[i] for v in verts) for i in range(p.n)]

    axes = []
    for i in range(p.n):
        span = hi[i] - lo[i]
        axes.append([lo[i] + span * Fraction(k, steps) for k in range(steps + 1)])

    out = sys.stdout
    out.write(",".join(f"rho{i + 1}" for i in range(p.n)) + ",value\n")

    def walk(prefix, depth):
        if depth == p.n:
            if p.contains(prefix):
                value = trop_eval(poly, prefix)
                out.write(",".join(str(x) for x in prefix) + f",{value}\n")
            return
        for x in axes[depth]:
            walk(prefix + (x,), depth + 1)

    walk((), 0)


_HANDLERS = {
    "eval-norm": _cmd_eval_norm,
    "trop": _cmd_trop,
    "max-locus": _cmd_max_locus,
    "smith": _cmd_smith,
    "content": _cmd_content,
    "index": _cmd_index,
    "adic": _cmd_adic,
    "weight-compare": _cmd_weight_compare,
    "retract": _cmd_retract,
    "tame-check": _cmd_tame_check,
    "grid": _cmd_grid,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonarch",
        description="Exact non-archimedean seminorm and tropical skeleton calculator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _HANDLERS:
        p = sub.add_parser(name)
        p.add_argument("--field", default="piadic-q",
                       help="trivial | padic:<p> | piadic-q | piadic-f<p>")
        p.add_argument("--n", type=int, default=0, help="number of variables")
        p.add_argument("--point", help="comma-separated rational radii, e.g. '1/2,3'")
        p.add_argument("--chart", help="JSON file with a substitution list")
        p.add_argument("--form", help="JSON file with a pluriform")
        p.add_argument("--matrix", help="JSON file with matrix data")
        p.add_argument("--polytope", help="JSON file with polytope constraints")
        p.add_argument("--semistable", help="'<n>,<va>': the standard skeleton simplex")
        p.add_argument("--kummer", help="Kummer layers 'j:e,...'")
        p.add_argument("--m", type=int, default=1, help="tensor power of the canonical form")
        p.add_argument("--epsilon", help="optional decimal base for approximate rendering")
        p.add_argument("--grid", type=int, help="grid steps per axis (grid subcommand)")
    return parser


def run(argv) -> int:
    """Entry point; returns the process exit code instead of raising."""
    try:
        try:
            args = _build_parser().parse_args(argv)
        except SystemExit as exc:
            return 0 if exc.code == 0 else 2
        model = _parse_field(args.field)
        eps = None
        if args.epsilon is not None:
            eps = _parse_rational(args.epsilon)
            if not 0 < eps < 1:
                raise DomainError("--epsilon must lie strictly between 0 and 1")
        _HANDLERS[args.command](args, model, eps)
        return 0
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return 2
    except DomainError as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))
