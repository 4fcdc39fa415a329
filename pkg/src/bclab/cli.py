"""``bclab`` command line: thin JSON adapters over the library."""

import argparse
import json
import sys

from . import cstar, hardy, io, operators, verify
from .core import BicomplexError, BicomplexNumber, HyperbolicNumber, euclidean_norm, hyperbolic_norm

SCHEMAS = {
    "decompose": "decompose.schema.json",
    "norm": "norm.schema.json",
    "kernel": "kernel.schema.json",
    "compose": "compose.schema.json",
    "bounds": "bounds.schema.json",
    "quotient": "quotient.schema.json",
    "verify": "verify.schema.json",
    "hsup": "hsup.schema.json",
    "verify-line": "verify-line.schema.json",
}

EPILOG = """\
Every command prints one JSON document on stdout.  Output schemas ship with
the package under bclab/schemas/ ({files}).

Bicomplex literals: JSON {{"cartesian":{{"z":[re,im],"w":[re,im]}}}} or
{{"idempotent":{{"z1":..,"z2":..}}}}, a complex number such as 0.3, 2i, 1-2i or
[re,im], or the shorthand e1*a+e2*b (parenthesise signed coefficients:
e1*(1-2i)+e2*3).  Arguments expecting JSON also accept @path to read a file.

Exit status: 0 success, 1 computation error or failing verify suite,
2 usage error.  BCLAB_DEFAULT_N sets the default truncation degree (256).
"""


class UsageError(Exception):
    pass


def _read_json(text):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(text)


def _bc(text, what):
    try:
        return io.parse_bicomplex(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{what}: {exc}") from None


def _cplx(text, what):
    try:
        return io.parse_complex(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{what}: {exc}") from None


def _json_arg(text, what, decode):
    try:
        return decode(_read_json(text))
    except (ValueError, KeyError, TypeError, OSError) as exc:
        raise UsageError(f"{what}: {exc}") from None


def _h(a):
    return [a.a1, a.a2]


def cmd_decompose(args):
    cart = args.z is not None or args.w is not None
    idem = args.z1 is not None or args.z2 is not None
    if cart == idem:
        raise UsageError("give either --z/--w or --z1/--z2")
    if cart:
        Z = BicomplexNumber(_cplx(args.z or "0", "--z"), _cplx(args.w or "0", "--w"))
        return io.bc_to_json(Z, "idempotent")
    Z = BicomplexNumber.from_idempotent(_cplx(args.z1 or "0", "--z1"), _cplx(args.z2 or "0", "--z2"))
    return io.bc_to_json(Z, "cartesian")


def cmd_norm(args):
    if (args.bc is None) == (args.matrix is None):
        raise UsageError("give exactly one of --bc or --matrix")
    if args.bc is not None:
        Z = _bc(args.bc, "--bc")
        return {"kind": "bicomplex", "d_norm": _h(hyperbolic_norm(Z)), "real_norm": euclidean_norm(Z)}
    A = _json_arg(args.matrix, "--matrix", io.matrix_from_json)
    return {"kind": "matrix", "d_norm": _h(cstar.d_norm(A)), "real_norm": cstar.real_norm(A)}


def cmd_kernel(args):
    W = _bc(args.w, "--w")
    Z = _bc(args.z, "--z")
    N = hardy.default_truncation() if args.series is None else args.series
    closed = hardy.kernel_closed(args.space, W, Z)
    series = hardy.evaluate(hardy.kernel(args.space, W, N), Z)
    d = closed - series
    return {
        "space": args.space,
        "N": N,
        "closed": io.bc_to_json(closed),
        "series": io.bc_to_json(series),
        "difference": [abs(d.z1), abs(d.z2)],
    }


def cmd_compose(args):
    phi = _json_arg(args.phi, "--phi", io.phi_from_json)
    f = _json_arg(args.f, "--f", io.series_from_json)
    N = hardy.default_truncation() if args.degree is None else args.degree
    return io.series_to_json(operators.compose_series(f, phi, N))


def cmd_bounds(args):
    phi = _json_arg(args.phi, "--phi", io.phi_from_json)
    N = 128 if args.degree is None else args.degree
    L, U = operators.cor37_bounds(phi)
    out = {
        "N": N,
        "lower": _h(L),
        "upper": _h(U),
        "estimate": _h(operators.estimate_norm(phi, hardy.HARDY, N)),
    }
    if isinstance(phi, operators.DiscAutomorphism):
        sl, su = operators.thm36_bounds(phi)
        out["factor_lower"] = _h(sl)
        out["factor_upper"] = _h(su)
    return out


def cmd_quotient(args):
    Z = _bc(args.z, "--z")
    out = {"ideal": args.ideal, "norm": _h(cstar.quotient_norm(Z, args.ideal))}
    if args.oracle:
        out["oracle"] = _h(cstar.quotient_norm_bruteforce(Z, args.ideal))
    return out


def cmd_hsup(args):
    f = _json_arg(args.f, "--f", io.series_from_json)
    try:
        r = json.loads(args.r)
    except ValueError:
        raise UsageError("--r: expected a number or [r1, r2]") from None
    r = HyperbolicNumber(*r) if isinstance(r, list) else HyperbolicNumber(r, r)
    if not (r.is_nonneg() and r.a1 < 1 and r.a2 < 1):
        raise UsageError("--r must lie in [0, 1) componentwise")
    sup = hardy.sup_on_polydisc(f, r, args.radial, args.angular)
    return {"estimate": True, "sup": _h(sup), "grid": {"radial": args.radial, "angular": args.angular}}


def cmd_verify(args):
    selection = args.suite
    if args.group:
        selection = args.group if selection == "all" else f"{args.group},{selection}"
    config = verify.SuiteConfig(seed=args.seed, samples=args.samples, truncation=args.truncation, dim=args.n)
    try:
        names = verify.resolve_selection(selection)
    except verify.UnknownPropertyError as exc:
        raise UsageError(f"unknown property {exc.args[0]!r}") from None
    if args.tol is not None:
        config.tol = {name: args.tol for name in names}
    reports = verify.run_suite(config, names)
    doc = verify.report_document(reports, config)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(io.dumps(doc) + "\n")
    if args.lines:
        for r in reports:
            print(io.dumps({"property": r.name, "max_residual": _h(r.max_residual), "pass": r.passed}))
        return None, 0 if doc["pass"] else 1
    return doc, 0 if doc["pass"] else 1


def build_parser():
    files = ", ".join(sorted(SCHEMAS.values()))
    p = argparse.ArgumentParser(
        prog="bclab",
        description="Bicomplex numbers, D-normed C*-algebras, weighted Hardy spaces and composition operators.",
        epilog=EPILOG.format(files=files),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help_text):
        s = sub.add_parser(name, help=help_text, description=f"{help_text}  Output schema: {SCHEMAS[name]}.")
        s.set_defaults(func=fn)
        return s

    s = add("decompose", cmd_decompose, "Convert between cartesian (z, w) and idempotent (z1, z2) form.")
    s.add_argument("--z")
    s.add_argument("--w")
    s.add_argument("--z1")
    s.add_argument("--z2")

    s = add("norm", cmd_norm, "D-valued and real norm of a bicomplex number or matrix.")
    s.add_argument("--bc", help="bicomplex literal")
    s.add_argument("--matrix", help='matrix JSON {"n", "A1", "A2"} or @file')

    s = add("kernel", cmd_kernel, "Reproducing kernel K_W(Z): closed form vs truncated series.")
    s.add_argument("--space", required=True, choices=["hardy", "bergman", "dirichlet"])
    s.add_argument("--w", required=True)
    s.add_argument("--z", required=True)
    s.add_argument("--series", type=int, metavar="N", help="truncation degree (default BCLAB_DEFAULT_N or 256)")

    s = add("compose", cmd_compose, "Coefficients of f o Phi truncated to a degree.")
    s.add_argument("--phi", required=True, help='{"automorphism": {"lambda", "w"}} or {"coeffs": [...]}')
    s.add_argument("--f", required=True, help='{"weights", "coeffs"}')
    s.add_argument("--degree", type=int, metavar="N")

    s = add("bounds", cmd_bounds, "Norm bracket of C_Phi and the truncated-matrix estimate.")
    s.add_argument("--phi", required=True)
    s.add_argument("--degree", type=int, metavar="N", help="matrix truncation (default 128)")

    s = add("quotient", cmd_quotient, "Quotient norm |Z + I|_k modulo a maximal ideal.")
    s.add_argument("--ideal", required=True, choices=["I1", "I2"])
    s.add_argument("--z", required=True)
    s.add_argument("--oracle", action="store_true", help="also report the brute-force infimum")

    s = add("verify", cmd_verify, "Run the seeded property suite.")
    s.add_argument("group", nargs="?", choices=list(verify.GROUPS), help="restrict to one group")
    s.add_argument("--suite", default="all", help="all, or comma-separated property or group names")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int)
    s.add_argument("--tol", type=float, help="tolerance applied to every selected property")
    s.add_argument("--n", type=int, default=5, help="matrix size for C*-algebra properties")
    s.add_argument("--truncation", type=int)
    s.add_argument("--json", metavar="PATH", help="also write the report to PATH")
    s.add_argument("--lines", action="store_true", help="one JSON line per property instead of one document")

    s = add("hsup", cmd_hsup, "Grid estimate (not a bound) of sup |f(Z)|_k on a polydisc.")
    s.add_argument("--f", required=True)
    s.add_argument("--r", required=True, help="radius: number or [r1, r2]")
    s.add_argument("--radial", type=int, default=16)
    s.add_argument("--angular", type=int, default=64)
    return p


_COMPUTE_ERRORS = (
    BicomplexError,
    ZeroDivisionError,
    ArithmeticError,
    operators.NotSelfMapError,
    cstar.SingularError,
    cstar.NotUnitaryError,
    hardy.WeightMismatchError,
)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"bclab {args.command}: {exc}", file=sys.stderr)
        return 2
    except _COMPUTE_ERRORS as exc:
        print(f"bclab {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"bclab {args.command}: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    if result is not None:
        print(io.dumps(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
