"""Command-line entry point.

Exit status is 0 when every requested verification passes, 1 when one fails and 2 for
usage errors or violated preconditions. JSON output carries ``"schema": "1"``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .combinatorics import Partition, dim_gl, dim_sym, hook_product
from .polynomial import RationalPolynomial
from .schurweyl import verify_schur_weyl
from .shifted_schur import NotInSpanError, SingularEvaluationError, char_ratio, expand_in_sstar_basis, sigma_polynomial
from .shifted_schur import sstar_det_at, sstar_eval
from .suite import SuiteConfig, run_suite
from .symgroup import format_rational
from .ugln import hc_eigenvalue, quantum_immanant
from .weyl import verify_higher_capelli

SCHEMA = "1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def parse_shape(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"invalid shape {text!r}: {exc}") from None


def parse_point(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid point {text!r}") from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {v}")
    return v


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=2))
    else:
        print(text)


def cmd_immanant(args) -> int:
    mu = parse_shape(args.shape)
    xi = quantum_immanant(mu, args.n, normalized=args.normalized)
    _emit(
        args,
        {"command": "immanant", "shape": str(mu), "n": args.n, "normalized": args.normalized, "element": xi.to_json()},
        xi.to_text(),
    )
    return 0


def cmd_verify_capelli(args) -> int:
    mu = parse_shape(args.shape)
    if len(mu) > args.n:
        raise UsageError(f"shape {mu} has more than n={args.n} rows")
    report = verify_higher_capelli(mu, args.n, args.m)
    verdict = "pass" if report.equal else "fail"
    text = f"{verdict}: L(S_{mu}) vs Delta_{mu} on {args.n}x{args.m} ({report.lhs_terms} vs {report.rhs_terms} terms)"
    if report.first_discrepancy:
        text += f"\nfirst discrepancy: {report.first_discrepancy}"
    _emit(args, {"command": "verify capelli", "report": report.to_json()}, text)
    return 0 if report.equal else 1


def cmd_verify_schur_weyl(args) -> int:
    mu = parse_shape(args.shape)
    report = verify_schur_weyl(mu, args.n, args.K, allow_large=args.allow_large)
    verdict = "pass" if report.equal else "fail"
    text = f"{verdict}: tau(S_{mu}) vs sigma(Ind chi)/(K-k)! on dimension {report.dimension}"
    if report.first_discrepancy:
        text += f"\nfirst discrepancy: {report.first_discrepancy}"
    _emit(args, {"command": "verify schur-weyl", "report": report.to_json()}, text)
    return 0 if report.equal else 1


def cmd_verify_suite(args) -> int:
    cfg = SuiteConfig().capped(args.max_weight, args.max_n)
    results = run_suite(cfg)
    ok = all(r.passed for r in results)
    lines = [r.line(args.timings) for r in results]
    for r in results:
        lines += [f"    {f}" for f in r.failures]
    lines.append("all criteria pass" if ok else "some criteria FAIL")
    _emit(
        args,
        {"command": "verify suite", "passed": ok, "criteria": [r.to_json(args.timings) for r in results]},
        "\n".join(lines),
    )
    return 0 if ok else 1


def cmd_sstar_eval(args) -> int:
    mu = parse_shape(args.shape)
    pt = parse_point(args.at)
    if args.route == "sigma":
        value = sstar_eval(mu, pt)
    elif args.route == "det":
        value = sstar_det_at(mu, pt)
    else:
        n = max(len(mu), len(pt), 1)
        value = hc_eigenvalue(quantum_immanant(mu, n), pt + [Fraction(0)] * (n - len(pt)))
    text = format_rational(value)
    _emit(
        args,
        {"command": "sstar eval", "shape": str(mu), "at": [format_rational(x) for x in pt], "route": args.route, "value": text},
        text,
    )
    return 0


def cmd_sstar_poly(args) -> int:
    mu = parse_shape(args.shape)
    if len(mu) > args.n:
        raise UsageError(f"shape {mu} has more than n={args.n} rows")
    p = sigma_polynomial(mu, args.n)
    _emit(args, {"command": "sstar poly", "shape": str(mu), "polynomial": p.to_json()}, p.to_text())
    return 0


def cmd_expand(args) -> int:
    try:
        text = Path(args.poly).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.poly}: {exc}") from None
    try:
        f = RationalPolynomial.parse(text.strip(), args.n)
    except Exception as exc:
        raise UsageError(f"cannot parse polynomial: {exc}") from None
    coeffs = expand_in_sstar_basis(f, args.max_degree)
    items = sorted(coeffs.items(), key=lambda kv: (-kv[0].weight, tuple(-p for p in kv[0].parts)))
    body = "\n".join(f"{format_rational(c)} * s*[{lam}]" for lam, c in items) or "0"
    _emit(
        args,
        {"command": "expand", "n": args.n, "terms": [{"shape": str(lam), "coeff": format_rational(c)} for lam, c in items]},
        body,
    )
    return 0


def cmd_char_ratio(args) -> int:
    lam, mu = parse_shape(args.lambda_), parse_shape(args.mu)
    value = char_ratio(lam, mu)
    text = format_rational(value)
    _emit(args, {"command": "char-ratio", "lambda": str(lam), "mu": str(mu), "value": text}, text)
    return 0


def cmd_dims(args) -> int:
    mu = parse_shape(args.shape)
    if len(mu) > args.n:
        raise UsageError(f"shape {mu} has more than n={args.n} rows")
    d = {"dim_sym": dim_sym(mu), "dim_gl": dim_gl(args.n, mu), "H": hook_product(mu)}
    _emit(
        args,
        {"command": "dims", "shape": str(mu), "n": args.n, **d},
        ", ".join(f"{k}={v}" for k, v in d.items()),
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = _Parser(prog="capelli", description="Quantum immanants, shifted Schur functions and Capelli identities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("immanant", parents=[common], help="print the PBW form of S_mu")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--normalized", action="store_true")
    p.set_defaults(func=cmd_immanant)

    verify = sub.add_parser("verify", help="verify an identity")
    vsub = verify.add_subparsers(dest="target", required=True, parser_class=_Parser)
    p = vsub.add_parser("capelli", parents=[common])
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.set_defaults(func=cmd_verify_capelli)
    p = vsub.add_parser("schur-weyl", parents=[common])
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--K", type=_positive, required=True)
    p.add_argument("--allow-large", action="store_true", help="lift the n^K <= 81 cap")
    p.set_defaults(func=cmd_verify_schur_weyl)
    p = vsub.add_parser("suite", parents=[common])
    p.add_argument("--max-weight", type=_positive, default=None)
    p.add_argument("--max-n", type=_positive, default=None)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_verify_suite)

    sstar = sub.add_parser("sstar", help="shifted Schur polynomials")
    ssub = sstar.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = ssub.add_parser("eval", parents=[common])
    p.add_argument("--shape", required=True)
    p.add_argument("--at", required=True, help="comma list of rationals, e.g. 3,5/2,0")
    p.add_argument("--route", choices=["det", "sigma", "hc"], default="sigma")
    p.set_defaults(func=cmd_sstar_eval)
    p = ssub.add_parser("poly", parents=[common])
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_sstar_poly)

    p = sub.add_parser("expand", parents=[common], help="expand a polynomial in the s* basis")
    p.add_argument("--poly", required=True, help="file holding an expression in x1..xn")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("char-ratio", parents=[common], help="normalized character dim(lam/mu)/dim(lam)")
    p.add_argument("--lambda", dest="lambda_", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_char_ratio)

    p = sub.add_parser("dims", parents=[common], help="dimensions and hook product")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_dims)
    return parser


def _wants_json(argv: Sequence[str]) -> bool:
    return any(a == "--format=json" for a in argv) or any(
        a == "--format" and b == "json" for a, b in zip(argv, argv[1:])
    )


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, ValueError, ArithmeticError) as exc:
        kind = {
            UsageError: "usage",
            NotInSpanError: "not_in_span",
            SingularEvaluationError: "singular_point",
        }.get(type(exc), "precondition")
        if _wants_json(argv):
            print(json.dumps({"schema": SCHEMA, "error": {"kind": kind, "message": str(exc)}}, sort_keys=True, indent=2))
        else:
            print(f"error ({kind}): {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
