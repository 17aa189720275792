"""Command-line entry point.

Exit codes: 0 when every reported check passes, 1 when a verification case
fails, 2 for usage or domain errors (message on stderr).  Configuration is
taken from flags only.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import padic_q as pq
from . import series_eval as se
from . import special_numbers as sn
from . import zeta_values as zv
from .core_arith import format_rational, parse_rational
from .errors import EulerZetaError
from .verify import SUITES, VerificationReport, VerifyConfig, run_suite

__all__ = ["main", "run", "build_parser"]

FORMATS = ("table", "json", "tsv")
EVAL_FUNCS = {
    "zeta": lambda s, a, bits: se.hurwitz_em(s, a, bits) if a != 1 else se.zeta_em(s, bits),
    "hurwitz": se.hurwitz_em,
    "eta": lambda s, a, bits: se.eta_accel(s, bits),
    "eulerzeta": lambda s, a, bits: se.hurwitz_euler_eval(s, a, bits) if a != 1 else se.euler_zeta_eval(s, bits),
    "beta": lambda s, a, bits: se.dirichlet_beta_eval(s, bits),
}


class _UsageExit(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # keep argparse's message but let run() decide the exit path
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise _UsageExit(f"{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return n


def _prime_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of primes, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS so a flag given before the subcommand is not reset by the subparser
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)

    parser = _Parser(prog="eulerzeta", description="Bernoulli/Euler numbers, zeta values and identity checks.")
    parser.add_argument("--format", choices=FORMATS, default="table")
    parser.add_argument("--out", metavar="FILE", default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("numbers", parents=[common], help="tabulate B_n, E*_n or E_n")
    p.add_argument("--kind", choices=[k.value for k in sn.NumberKind], required=True)
    p.add_argument("--max", type=_positive_int, required=True, dest="max_index")

    p = sub.add_parser("polys", parents=[common], help="first-kind Euler polynomials E*_k(x), k <= n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--x", type=parse_rational, required=True)

    p = sub.add_parser("zeta", parents=[common], help="closed-form special values")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--even", type=int, metavar="N", help="zeta(2N)")
    g.add_argument("--neg", type=int, metavar="N", help="zeta(-N)")
    g.add_argument("--beta-odd", type=int, metavar="N", help="beta(2N+1)")
    g.add_argument("--lambda", type=int, metavar="N", dest="lambda_", help="sum over odd m of m^(-2N)")
    g.add_argument("--euler-even", type=int, metavar="N", help="zeta_E(2N)")

    p = sub.add_parser("eval", parents=[common], help="numeric evaluation")
    p.add_argument("--fn", choices=sorted(EVAL_FUNCS), required=True)
    p.add_argument("--s", type=parse_rational, required=True)
    p.add_argument("--a", type=parse_rational, default=Fraction(1))
    p.add_argument("--bits", type=int, default=256)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    p.add_argument("--max-index", type=int, default=VerifyConfig.max_index)
    p.add_argument("--bits", type=int, default=VerifyConfig.precision_bits)
    p.add_argument("--p", type=_prime_list, default=VerifyConfig.primes, dest="primes")
    p.add_argument("--depth", type=int, default=VerifyConfig.depth)

    p = sub.add_parser("padic", parents=[common], help="a single p-adic moment check")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--moment", type=_positive_int, required=True)
    p.add_argument("--measure", choices=("fermionic", "volkenborn"), required=True)

    p = sub.add_parser("q", parents=[common], help="Carlitz q-Bernoulli number beta_(m,q)")
    p.add_argument("--q", type=parse_rational, required=True)
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--bits", type=int, default=256)
    return parser


# --------------------------------------------------------------------------
# rendering


def _render_rows(fmt: str, header: Sequence[str], rows: list[Sequence[str]], json_obj) -> str:
    if fmt == "json":
        return json.dumps(json_obj, indent=2, sort_keys=True) + "\n"
    if fmt == "tsv":
        return "\n".join("\t".join(r) for r in [header, *rows]) + "\n"
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _render_report(fmt: str, report: VerificationReport) -> str:
    return {"json": report.to_json, "tsv": report.to_tsv, "table": report.to_table}[fmt]()


# --------------------------------------------------------------------------
# subcommands; each returns (text, exit code)


def _cmd_numbers(args) -> tuple[str, int]:
    table = sn.number_table(args.kind, args.max_index)
    values = [format_rational(v) for v in table.values]
    rows = [(str(n), v) for n, v in enumerate(values)]
    return _render_rows(args.format, ("n", "value"), rows, values), 0


def _cmd_polys(args) -> tuple[str, int]:
    values = [format_rational(sn.euler_poly(k, args.x)) for k in range(args.n + 1)]
    rows = [(str(k), v) for k, v in enumerate(values)]
    obj = {"x": format_rational(args.x), "values": values}
    return _render_rows(args.format, ("k", f"E*_k({format_rational(args.x)})"), rows, obj), 0


def _cmd_zeta(args) -> tuple[str, int]:
    if args.even is not None:
        name, n, v = "zeta_even", args.even, zv.zeta_even(args.even)
    elif args.neg is not None:
        name, n, v = "zeta_neg", args.neg, format_rational(zv.zeta_neg(args.neg))
    elif args.beta_odd is not None:
        name, n, v = "beta_odd", args.beta_odd, zv.beta_odd(args.beta_odd)
    elif args.lambda_ is not None:
        name, n, v = "lambda_even", args.lambda_, zv.lambda_even(args.lambda_)
    else:
        name, n, v = "euler_zeta_even", args.euler_even, zv.euler_zeta_even(args.euler_even)
    text = str(v)
    return _render_rows(args.format, ("function", "n", "value"), [(name, str(n), text)],
                        {"function": name, "n": n, "value": text}), 0  # fmt: skip


def _cmd_eval(args) -> tuple[str, int]:
    v = EVAL_FUNCS[args.fn](args.s, args.a, args.bits).to_decimal()
    s, a = format_rational(args.s), format_rational(args.a)
    obj = {"fn": args.fn, "s": s, "a": a, "bits": args.bits, "value": v}
    return _render_rows(args.format, ("fn", "s", "a", "bits", "value"), [(args.fn, s, a, str(args.bits), v)], obj), 0


def _cmd_verify(args) -> tuple[str, int]:
    cfg = VerifyConfig(args.bits, args.max_index, args.primes, args.depth)
    if cfg.precision_bits < 64:
        raise EulerZetaError("--bits must be at least 64")
    if cfg.max_index < 1 or cfg.depth < 1:
        raise EulerZetaError("--max-index and --depth must be positive")
    for p in cfg.primes:
        pq.PadicInt(p, 1, 0)  # validates primality
    report = run_suite(args.suite, cfg)
    return _render_report(args.format, report), 0 if report.ok else 1


def _cmd_padic(args) -> tuple[str, int]:
    p, N, n = args.p, args.depth, args.moment
    if args.measure == "fermionic":
        s = pq.fermionic_sum(n, p, N)
        target = sn.euler_first(n)
        v, _ = (s - pq.padic_of_rational(target, p, N)).valuation()
        value, required = str(s.lift()), N
    else:
        r = pq.volkenborn_riemann_sum(n, p, N)
        target = sn.bernoulli(n)
        v = pq.valuation(r - target, p)
        value, required = format_rational(r), pq.volkenborn_depth(n, p, N)
    ok = v >= required
    vs = "inf" if v == float("inf") else str(v)
    obj = {"measure": args.measure, "p": p, "depth": N, "moment": n, "sum": value,
           "target": format_rational(target), "valuation": vs, "required": required, "pass": ok}  # fmt: skip
    row = (args.measure, str(p), str(N), str(n), value, format_rational(target), vs, str(required), str(ok).lower())
    header = ("measure", "p", "depth", "moment", "sum", "target", "valuation", "required", "pass")
    return _render_rows(args.format, header, [row], obj), 0 if ok else 1


def _cmd_q(args) -> tuple[str, int]:
    v = pq.carlitz_q_bernoulli(args.m, args.q, args.bits).to_decimal()
    q = format_rational(args.q)
    obj = {"q": q, "m": args.m, "bits": args.bits, "beta": v}
    return _render_rows(args.format, ("q", "m", "bits", "beta"), [(q, str(args.m), str(args.bits), v)], obj), 0


COMMANDS = {
    "numbers": _cmd_numbers,
    "polys": _cmd_polys,
    "zeta": _cmd_zeta,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "padic": _cmd_padic,
    "q": _cmd_q,
}


def run(argv: Sequence[str]) -> int:
    """Parse ``argv``, execute, write the output, and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageExit as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except (EulerZetaError, ValueError, ArithmeticError) as exc:
        print(f"eulerzeta {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
