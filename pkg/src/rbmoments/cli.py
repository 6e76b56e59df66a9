"""Command-line interface.

Exit codes: 0 success, 1 verification failure (or numeric tolerance not
reached), 2 argument or domain error, 3 inadmissible parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Optional

from .bernoulli import psi
from .catalog import catalog, get_entry
from .lfunction import L2_SPEC, DomainError, LSeriesSpec, ToleranceNotReached, l_direct, l_eval, l_value_neg
from .moments import QuasiDefiniteError, favard_moments, hankel_dets, jacobi_from_moments, verify_theorem, verify_u_shift
from .poly import Poly, parse_rat
from .racah import InadmissibleParameters, RacahParams
from .sequences import RSeqKind, r_sequence

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INADMISSIBLE = 0, 1, 2, 3
FORMATS = ("plain", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class Output:
    command: str
    inputs: dict
    values: list
    report: dict = field(default_factory=dict)
    # (header, rows) for plain tables and csv; None means a flat value list
    table: Optional[tuple[list[str], list[list[Any]]]] = None
    plain: Optional[list[str]] = None
    exit_code: int = EXIT_OK


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _decimal(q: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return format(Decimal(q.numerator) / Decimal(q.denominator), f".{digits}g")


def render(out: Output, fmt: str, decimal_digits: Optional[int] = None) -> str:
    if fmt == "json":
        doc = {"command": out.command, "inputs": out.inputs, "values": out.values, "report": out.report}
        return dump_json(_jsonable(doc))

    def cell(v) -> str:
        if isinstance(v, Fraction):
            if fmt == "plain" and decimal_digits:
                return _decimal(v, decimal_digits)
            return str(v)
        if isinstance(v, float):
            return repr(v)
        if v is None:
            return ""
        return str(v)

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if out.table is not None:
            header, rows = out.table
        else:
            header, rows = ["n", "value"], [[i, v] for i, v in enumerate(out.values)]
        writer.writerow(header)
        for row in rows:
            writer.writerow([cell(v) for v in row])
        return buf.getvalue()

    if out.plain is not None:
        return "\n".join(out.plain) + "\n"
    if out.table is not None:
        header, rows = out.table
        lines = [[str(h) for h in header]] + [[cell(v) for v in row] for row in rows]
        widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(line, widths)).rstrip() for line in lines) + "\n"
    return ", ".join(cell(v) for v in out.values) + "\n"


# -- argument helpers


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _poly(text: str) -> Poly:
    try:
        return Poly.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family(args) -> tuple[RacahParams, Fraction, dict]:
    """Parameters and shift from --params/--shift or --theorem."""
    if args.theorem is not None and args.params is not None:
        raise UsageError("give either --params or --theorem, not both")
    if args.theorem is not None:
        try:
            spec = get_entry(args.theorem).spec
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        shift = spec.shift if args.shift is None else args.shift
        return spec.params, shift, {"theorem": str(args.theorem), "shift": str(shift)}
    if args.params is None:
        raise UsageError("one of --params or --theorem is required")
    try:
        params = RacahParams.parse(args.params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    shift = args.shift if args.shift is not None else Fraction(0)
    return params, shift, {"params": str(params), "shift": str(shift)}


def _series_spec(args) -> LSeriesSpec:
    if args.poly is None:
        return L2_SPEC
    return LSeriesSpec.from_poly(args.poly)


# -- commands


def cmd_seq(args) -> Output:
    kind = RSeqKind.parse(args.kind)
    vals = r_sequence(kind, args.count)
    return Output("seq", {"kind": kind.value, "count": args.count}, vals)


def cmd_psi(args) -> Output:
    return Output("psi", {"poly": args.poly.to_text()}, [psi(args.poly)])


def _theorem_ids(text: str) -> list[str]:
    if text.strip().lower() == "all":
        return [e.id for e in catalog()]
    ids = []
    for part in text.split(","):
        try:
            ids.append(get_entry(part).id)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    return ids


def cmd_verify(args) -> Output:
    ids = _theorem_ids(args.theorem)
    reports = {}
    values = []
    plain = []
    rows = []
    failed = False
    kind = RSeqKind.parse(args.target_kind) if args.target_kind else None
    for tid in ids:
        rep = verify_theorem(get_entry(tid).spec, args.depth, kind)
        reports[tid] = rep.to_dict()
        values.append({"theorem": tid, "all_equal": rep.all_equal, "first_mismatch": rep.first_mismatch})
        if rep.all_equal:
            plain.append(f"{tid}: ok (n < {args.depth})")
        else:
            failed = True
            where = "normalizer" if rep.first_mismatch is None else f"n = {rep.first_mismatch}"
            plain.append(f"{tid}: FAIL at {where}")
        for r in rep.rows:
            rows.append([tid, r.n, r.favard, r.psi, r.target, rep.residues[r.n]])
    return Output(
        "verify",
        {"theorem": args.theorem, "depth": args.depth, "target_kind": kind.value if kind else None},
        values,
        reports,
        table=(["theorem", "n", "favard", "psi", "target", "residue"], rows),
        plain=plain,
        exit_code=EXIT_FAIL if failed else EXIT_OK,
    )


def cmd_ushift(args) -> Output:
    rep = verify_u_shift(args.u, args.depth)
    rows = [[n, a, b] for n, (a, b) in enumerate(zip(rep.psi_values, rep.favard_values))]
    status = "ok" if rep.holds else "FAIL"
    return Output(
        "ushift",
        {"u": str(args.u), "depth": args.depth},
        [{"holds": rep.holds, "shift": rep.shift}],
        rep.to_dict(),
        table=(["n", "psi", "favard"], rows),
        plain=[f"u = {args.u}: {status} with shift {rep.shift}"],
        exit_code=EXIT_OK if rep.holds else EXIT_FAIL,
    )


def cmd_moments(args) -> Output:
    params, shift, inputs = _family(args)
    mu = favard_moments(params, shift, args.count)
    return Output("moments", {**inputs, "count": args.count}, mu)


def cmd_jacobi(args) -> Output:
    params, shift, inputs = _family(args)
    jac = jacobi_from_moments(favard_moments(params, shift, 2 * args.count), args.count)
    rows = [[k, b, lam] for k, (b, lam) in enumerate(zip(jac.b, jac.lam))]
    return Output(
        "jacobi",
        {**inputs, "count": args.count},
        [{"k": k, "b": b, "lam": lam} for k, b, lam in rows],
        table=(["k", "b", "lam"], rows),
    )


def cmd_hankel(args) -> Output:
    params, shift, inputs = _family(args)
    mu = favard_moments(params, shift, max(2 * args.size - 1, 1))
    return Output("hankel", {**inputs, "size": args.size}, hankel_dets(mu, args.size))


def cmd_lvalue(args) -> Output:
    spec = _series_spec(args)
    val = l_value_neg(spec, args.n)
    return Output("lvalue", {"n": args.n, "s": str(1 - args.n), "poly": spec.P.to_text()}, [val])


def _complex_output(command: str, inputs: dict, res, exit_code=EXIT_OK) -> Output:
    v = res.value
    return Output(
        command,
        inputs,
        [v],
        {"error": res.error, "terms": res.terms, "converged": res.converged},
        table=(["re", "im", "error", "terms"], [[v.real, v.imag, res.error, res.terms]]),
        exit_code=exit_code,
    )


def cmd_leval(args) -> Output:
    spec = _series_spec(args)
    s = complex(args.s_re, args.s_im)
    inputs = {"s": {"re": s.real, "im": s.imag}, "tol": args.tol, "max_terms": args.max_terms, "poly": spec.P.to_text()}
    try:
        res = l_eval(spec, s, args.tol, args.max_terms)
    except ToleranceNotReached as exc:
        print(f"warning: {exc}", file=sys.stderr)
        return _complex_output("leval", inputs, exc.result, EXIT_FAIL)
    return _complex_output("leval", inputs, res)


def cmd_ldirect(args) -> Output:
    spec = _series_spec(args)
    s = complex(args.s_re, args.s_im)
    res = l_direct(spec, s, args.terms)
    return _complex_output("ldirect", {"s": {"re": s.real, "im": s.imag}, "terms": args.terms, "poly": spec.P.to_text()}, res)


def cmd_catalog(args) -> Output:
    entries = [e.to_dict() for e in catalog()]
    plain = [
        f"{e['id']}: params ({', '.join(e['params'])}), weight [{e['weight']}], subst [{e['subst']}], "
        f"shift {e['shift']}, normalizer {e['normalizer']}; target {e['target']}"
        for e in entries
    ]
    rows = [[e["id"], " ".join(e["params"]), e["weight"], e["subst"], e["shift"], e["normalizer"], e["target"]] for e in entries]
    return Output(
        "catalog", {}, entries,
        table=(["id", "params", "weight", "subst", "shift", "normalizer", "target"], rows),
        plain=plain,
    )


# -- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    default_fmt = os.environ.get("RB_DEFAULT_FORMAT", "plain").lower()
    if default_fmt not in FORMATS:
        default_fmt = "plain"
    common.add_argument("--format", choices=FORMATS, default=default_fmt)
    common.add_argument("--decimal-digits", type=_positive, default=None, metavar="K",
                        help="render rationals as K-digit decimals (plain output only)")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--params", help="alpha,beta,gamma,delta as rationals, e.g. 0,-1/2,0,0")
    family.add_argument("--theorem", help="take parameters and shift from a catalog entry (1-5)")
    family.add_argument("--shift", type=_rat, default=None, help="family y -> R_n(y + shift)")

    lpoly = argparse.ArgumentParser(add_help=False)
    lpoly.add_argument("--poly", type=_poly, default=None,
                       help="base polynomial, coefficients lowest degree first (default 1,3/2,1/2)")

    parser = argparse.ArgumentParser(prog="rbmoments", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="values of R+ or R-")
    p.add_argument("--kind", default="rplus", choices=["rplus", "rminus"])
    p.add_argument("--count", type=_nonneg, default=10)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("psi", parents=[common], help="apply psi to a polynomial")
    p.add_argument("--poly", type=_poly, required=True)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("verify", parents=[common], help="check the moment theorems")
    p.add_argument("--theorem", default="all", help="all, or comma-separated ids 1-5")
    p.add_argument("--depth", type=_positive, default=40)
    p.add_argument("--target-kind", choices=["rplus", "rminus"], default=None,
                   help="compare against this sequence instead of the theorem's own")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ushift", parents=[common], help="check the u-shifted moment family")
    p.add_argument("--u", type=_rat, required=True)
    p.add_argument("--depth", type=_positive, default=12)
    p.set_defaults(func=cmd_ushift)

    p = sub.add_parser("moments", parents=[common, family], help="Favard moments of a Racah family")
    p.add_argument("--count", type=_nonneg, default=20)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("jacobi", parents=[common, family], help="three-term recurrence coefficients")
    p.add_argument("--count", type=_nonneg, default=10)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("hankel", parents=[common, family], help="Hankel determinants Delta_1..Delta_size")
    p.add_argument("--size", type=_nonneg, default=10)
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("lvalue", parents=[common, lpoly], help="exact L_P(1 - n)")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_lvalue)

    p = sub.add_parser("leval", parents=[common, lpoly], help="L_P(s) by the continuation series")
    p.add_argument("--s-re", type=float, required=True)
    p.add_argument("--s-im", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-terms", type=_positive, default=10**7)
    p.set_defaults(func=cmd_leval)

    p = sub.add_parser("ldirect", parents=[common, lpoly], help="L_P(s) by direct partial sums, Re(s) > 1")
    p.add_argument("--s-re", type=float, required=True)
    p.add_argument("--s-im", type=float, default=0.0)
    p.add_argument("--terms", type=_positive, default=10**6)
    p.set_defaults(func=cmd_ldirect)

    p = sub.add_parser("catalog", parents=[common], help="list the five theorems")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except (InadmissibleParameters, QuasiDefiniteError) as exc:
        print(f"error: inadmissible parameters: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except (UsageError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(out, args.format, args.decimal_digits))
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
