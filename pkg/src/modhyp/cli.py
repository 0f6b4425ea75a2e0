"""Command-line front end.

Exit codes: 0 success (including print discrepancies whose internal checks
hold), 2 an identity failed or routes disagree, 3 parse or usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .eisenstein import CuspLabel, alpha_table_csv, cusp_to_vector, eis2_difference
from .errors import ModhypError, UnknownObject
from .exactnum import format_scalar
from .mlde import frobenius_solve_mlde
from .opparse import parse_mlde
from .qseries import eisenstein_level1, eta_power, hauptmodul_suite
from .verify import FAILED, REGISTRY, verify
from .vvmf import minimal_vvmf, supersingular_polynomial, supersingular_polynomial_full

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _series_csv(s) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["exp", "coeff"])
    for e, c in s.terms():
        w.writerow([str(e), format_scalar(c)])
    return buf.getvalue()


def _emit_series(s, fmt: str, var: str = "q") -> str:
    if fmt == "json":
        return json.dumps(s.to_record(), indent=2)
    if fmt == "csv":
        return _series_csv(s).rstrip("\n")
    return s.format(var)


def expand_object(words: list, prec: int):
    """The named series with ``prec`` terms counted from its valuation."""
    name = words[0]
    p = Fraction(prec)
    if name == "eisenstein":
        if len(words) != 4:
            raise UsageError("usage: expand eisenstein N P Q")
        N = int(words[1])
        P, Q = (CuspLabel.parse(N, w) for w in words[2:])
        return eis2_difference(N, P, Q, p)
    if len(words) != 1:
        raise UnknownObject(" ".join(words))
    if name in ("E2", "E4", "E6"):
        return eisenstein_level1(int(name[1]), p)
    if name == "eta" or name.startswith("eta^"):
        t = 1 if name == "eta" else int(name[4:])
        return eta_power(t, Fraction(t, 24) + p)
    if name in ("delta", "Delta"):
        return hauptmodul_suite(p + 1).delta
    if name == "j":
        return hauptmodul_suite(p - 1).j
    if name == "K":
        return hauptmodul_suite(p + 1).K
    if name == "A":
        return hauptmodul_suite(p).A
    raise UnknownObject(name)


def cmd_expand(args) -> int:
    s = expand_object(args.object, args.prec)
    print(_emit_series(s, args.format))
    return EXIT_OK


def cmd_solve(args) -> int:
    m = parse_mlde(args.operator, args.weight)
    r = args.exponent
    s = frobenius_solve_mlde(m, r, r + args.prec)
    print(_emit_series(s, args.format))
    return EXIT_OK


def cmd_vvmf(args) -> int:
    exps = tuple(args.exponents)
    if len(exps) != args.dim:
        raise UsageError(f"expected {args.dim} exponents, got {len(exps)}")
    prec = Fraction(args.prec) + max(exps)
    routes = ["hyp", "frobenius"] if args.route == "both" else [args.route]
    results = [minimal_vvmf(exps, prec, r) for r in routes]
    v = results[0]
    agree = None
    if len(results) == 2:
        agree = all(a.agrees_with(b) for a, b in zip(results[0].components, results[1].components))
    if args.format == "json":
        rec = v.to_record()
        if agree is not None:
            rec["routes_agree"] = agree
        print(json.dumps(rec, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["component", "exp", "coeff"])
        for i, comp in enumerate(v.components, 1):
            for e, c in comp.terms():
                w.writerow([i, str(e), format_scalar(c)])
        print(buf.getvalue().rstrip("\n"))
    else:
        print(f"weight: {v.weight}")
        print(f"exponents: {', '.join(str(r) for r in v.exponents)}")
        print(f"mlde: {v.mlde}")
        for i, comp in enumerate(v.components, 1):
            print(f"f{i} = {comp.format()}")
        if agree is not None:
            print(f"routes agree: {'yes' if agree else 'NO'}")
    return EXIT_OK if agree in (None, True) else EXIT_FAILED


def cmd_eisenstein(args) -> int:
    N = args.level
    P, Q = CuspLabel.parse(N, args.P), CuspLabel.parse(N, args.Q)
    if args.format == "csv":
        print(alpha_table_csv(N, [cusp_to_vector(P), cusp_to_vector(Q)],
                              int(args.prec) * N).rstrip("\n"))
        return EXIT_OK
    s = eis2_difference(N, P, Q, args.prec)
    print(_emit_series(s, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = sorted(REGISTRY) if args.identity == "all" else [args.identity]
    reports = [verify(n, args.prec) for n in names]
    if args.format == "json":
        out = [r.to_record() for r in reports]
        print(json.dumps(out[0] if len(out) == 1 else out, indent=2))
    else:
        for r in reports:
            line = f"{r.identity_name}: {r.status} (precision {r.precision_used})"
            if r.witness is not None:
                e, got, want = r.witness
                line += (f"; first difference at {e}: computed {format_scalar(got)},"
                         f" expected {format_scalar(want)}")
            print(line)
            if args.verbose:
                for d in r.details:
                    print(f"  {d}")
    return EXIT_FAILED if any(r.status == FAILED for r in reports) else EXIT_OK


def cmd_sspoly(args) -> int:
    f = (supersingular_polynomial_full if args.full else supersingular_polynomial)(args.p)
    if args.format == "json":
        print(json.dumps({"p": args.p, "coefficients": f}))
        return EXIT_OK
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "" if i == 0 else ("j" if i == 1 else f"j^{i}")
        terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
    print(" + ".join(terms) + f"  (mod {args.p})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="modhyp", description="Exact q-series, MLDEs and hypergeometric vvmfs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("text", "json", "csv")):
        sp.add_argument("--prec", type=int, default=30, help="number of q-terms (default 30)")
        sp.add_argument("--format", choices=formats, default="text")

    sp = sub.add_parser("expand", help="print a q-expansion")
    sp.add_argument("object", nargs="+",
                    help="E2, E4, E6, eta, eta^t, delta, j, K, A, or 'eisenstein N P Q'")
    common(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("solve", help="Frobenius solution of an MLDE")
    sp.add_argument("operator", help="e.g. 'D^2 - (1/18)*E4'")
    sp.add_argument("exponent", type=_fraction)
    sp.add_argument("--weight", type=int, default=2, help="weight the operator acts on")
    common(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("vvmf", help="minimal-weight vvmf from exponents")
    sp.add_argument("dim", type=int, choices=(2, 3))
    sp.add_argument("exponents", nargs="+", type=_fraction)
    sp.add_argument("--route", choices=("hyp", "frobenius", "both"), default="hyp")
    common(sp)
    sp.set_defaults(func=cmd_vvmf)

    sp = sub.add_parser("eisenstein", help="weight-2 Eisenstein difference G_P - G_Q")
    sp.add_argument("level", type=int)
    sp.add_argument("P")
    sp.add_argument("Q")
    common(sp)
    sp.set_defaults(func=cmd_eisenstein)

    sp = sub.add_parser("verify", help="check a registered identity")
    sp.add_argument("identity", help="identity name or 'all'")
    sp.add_argument("-v", "--verbose", action="store_true")
    common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("ss-poly", help="supersingular polynomial mod p")
    sp.add_argument("p", type=int)
    sp.add_argument("--full", action="store_true",
                    help="include the factors at j = 0 and j = 1728")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_sspoly)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ModhypError, UsageError, ValueError, KeyError, ZeroDivisionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"modhyp: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
