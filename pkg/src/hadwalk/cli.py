"""Command-line frontend.

Subcommands: simulate, return-prob, xi, ellipk, genfun, classical, watson,
verify.  Every command honors --format json|csv|plain; exact values are
always emitted as "numerator/2^exponent" strings so nothing is rounded on
the way out.  Exit codes: 0 success, 1 failed check, 2 usage/domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import classical, genfun, pathsum, specfun, verify, walk
from .classical import QuadratureConvergenceError
from .exactnum import DyadicRational


def _fmt_float(value: float, precision: int) -> str:
    return f"{value:.{precision}g}"


class Emitter:
    """Renders one tabular payload in the selected format."""

    def __init__(self, fmt: str, precision: int) -> None:
        self.fmt = fmt
        self.precision = precision

    def table(self, columns: list[str], rows: list[list], json_doc=None) -> None:
        if self.fmt == "json":
            doc = json_doc if json_doc is not None else {
                "columns": columns,
                "rows": rows,
            }
            print(json.dumps(doc))
        elif self.fmt == "csv":
            writer = csv.writer(sys.stdout, lineterminator="\n")
            writer.writerow(columns)
            for row in rows:
                writer.writerow(["" if v is None else v for v in row])
        else:
            cells = [["" if v is None else str(v) for v in row] for row in rows]
            widths = [
                max(len(c), *(len(r[i]) for r in cells)) if cells else len(c)
                for i, c in enumerate(columns)
            ]
            print("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
            for row in cells:
                print("  ".join(v.ljust(w) for v, w in zip(row, widths)))

    def fl(self, value: float) -> str:
        return _fmt_float(value, self.precision)


def _cmd_simulate(args, em: Emitter) -> int:
    if args.coin == "hadamard":
        coin = walk.CoinMatrix.hadamard()
    else:
        if args.entries is None:
            raise ValueError("--coin custom requires --entries a,b,c,d")
        parts = [complex(p.strip()) for p in args.entries.split(",")]
        if len(parts) != 4:
            raise ValueError("--entries needs exactly four complex numbers")
        coin = walk.CoinMatrix.unitary(*parts)
    psi = walk.evolve(walk.QubitState.symmetric(), coin, args.time)

    columns = ["position", "probability_exact", "probability_float"]
    rows: list[list] = []
    entries = []
    if coin.is_exact:
        dist = walk.distribution(psi)
        for x in sorted(dist.probs):
            p = dist.probs[x]
            rows.append([x, str(p), em.fl(float(p))])
            entries.append(
                {"position": x, "probability_exact": str(p), "probability_float": float(p)}
            )
    else:
        for x, p in sorted(walk.distribution(psi).items()):
            rows.append([x, None, em.fl(p)])
            entries.append(
                {"position": x, "probability_exact": None, "probability_float": p}
            )
    doc = {"time": args.time, "coin": args.coin, "probabilities": entries}
    em.table(columns, rows, json_doc=doc)
    return 0


_METHOD_HYPOTHESES = {
    "direct": lambda n: True,
    "xi": lambda n: n >= 2 and n % 2 == 0,
    "prop1": lambda n: n % 2 == 0,
    "closed": lambda n: n >= 4 and n % 2 == 0,
}


def _return_prob_by(method: str, n: int) -> DyadicRational:
    if method == "direct":
        return walk.return_probability_direct(n)
    if method == "xi":
        return pathsum.return_probability_paths(n // 2)
    if method == "prop1":
        return genfun.p0_legendre(n // 2)
    if method == "closed":
        return genfun.p0_closed(n // 4 if n % 4 == 0 else (n - 2) // 4)
    raise ValueError(f"unknown method {method!r}")


def _cmd_return_prob(args, em: Emitter) -> int:
    n = args.time
    if args.method == "all":
        methods = [m for m, ok in _METHOD_HYPOTHESES.items() if ok(n)]
    else:
        methods = [args.method]
        if not _METHOD_HYPOTHESES[args.method](n):
            raise ValueError(
                f"method {args.method!r} does not cover time {n}: "
                "xi needs even n >= 2, prop1 even n, closed even n >= 4"
            )
    values = {m: _return_prob_by(m, n) for m in methods}
    if args.method == "all" and len(set(values.values())) > 1:
        print(f"method disagreement at time {n}: {values}", file=sys.stderr)
        return 1

    columns = ["method", "time", "probability_exact", "probability_decimal"]
    rows = [[m, n, str(v), v.to_decimal_string()] for m, v in values.items()]
    doc = {
        "time": n,
        "values": [
            {"method": m, "exact": str(v), "float": float(v)} for m, v in values.items()
        ],
        "all_equal": len(set(values.values())) == 1,
    }
    em.table(columns, rows, json_doc=doc)
    return 0


def _cmd_xi(args, em: Emitter) -> int:
    vec = pathsum.path_sum_dp(pathsum.StepPair(args.l, args.m), walk.CoinMatrix.hadamard())
    assert isinstance(vec, pathsum.PQRSVector)
    floats = vec.to_complex()
    names = ("p", "q", "r", "s")
    cores = (vec.p, vec.q, vec.r, vec.s)
    columns = ["coefficient", "core_re", "core_im", "sqrt2_exponent", "float_re", "float_im"]
    rows = [
        [name, str(g.re), str(g.im), vec.scale_exp, em.fl(f.real), em.fl(f.imag)]
        for name, g, f in zip(names, cores, floats)
    ]
    doc = {
        "l": args.l,
        "m": args.m,
        "sqrt2_exponent": vec.scale_exp,
        "coefficients": {
            name: {"re": str(g.re), "im": str(g.im)} for name, g in zip(names, cores)
        },
        "floats": {name: [f.real, f.imag] for name, f in zip(names, floats)},
    }
    em.table(columns, rows, json_doc=doc)
    return 0


def _cmd_ellipk(args, em: Emitter) -> int:
    if args.method == "agm":
        value = specfun.elliptic_k_agm(args.k)
    else:
        value = specfun.elliptic_k_series(args.k, args.terms)
    text = f"{value:.17g}"
    doc = {"k": args.k, "method": args.method, "value": value}
    if args.method == "series":
        doc["terms"] = args.terms
    em.table(["k", "method", "value"], [[args.k, args.method, text]], json_doc=doc)
    return 0


def _cmd_genfun(args, em: Emitter) -> int:
    if args.sweep is not None:
        start, stop, count = args.sweep
        columns = ["z", "lhs_partial", "rhs_closed"]
        rows = []
        points = []
        for i in range(count):
            z = start + (stop - start) * i / max(count - 1, 1)
            point = genfun.gf_point(z, args.truncate)
            rows.append([em.fl(z), em.fl(point.lhs_partial), em.fl(point.rhs_closed)])
            points.append(
                {"z": z, "lhs_partial": point.lhs_partial, "rhs_closed": point.rhs_closed}
            )
        em.table(columns, rows, json_doc={"sweep": points})
        return 0
    if args.z is None:
        raise ValueError("genfun requires --z or --sweep")
    point = genfun.gf_point(args.z, args.truncate)
    doc = {
        "z": point.z,
        "lhs_partial": point.lhs_partial,
        "rhs_closed": point.rhs_closed,
        "truncation": point.truncation,
        "tail_bound": point.tail_bound,
        "abs_diff": point.abs_diff,
    }
    em.table(
        list(doc.keys()),
        [[em.fl(point.z), em.fl(point.lhs_partial), em.fl(point.rhs_closed),
          point.truncation, em.fl(point.tail_bound), em.fl(point.abs_diff)]],
        json_doc=doc,
    )
    return 0


def _cmd_classical(args, em: Emitter) -> int:
    if (args.time is None) == (args.gf is None):
        raise ValueError("classical requires exactly one of --time or --gf")
    if args.time is not None:
        p = classical.rw_return_prob(args.dim, args.time)
        doc = {
            "dim": args.dim,
            "time": args.time,
            "probability_exact": f"{p.numerator}/{p.denominator}",
            "probability_float": float(p),
        }
        em.table(
            ["dim", "time", "probability_exact", "probability_float"],
            [[args.dim, args.time, f"{p.numerator}/{p.denominator}", em.fl(float(p))]],
            json_doc=doc,
        )
    else:
        value = classical.rw_gf(args.dim, args.gf)
        doc = {"dim": args.dim, "z": args.gf, "value": value}
        em.table(["dim", "z", "value"], [[args.dim, args.gf, em.fl(value)]], json_doc=doc)
    return 0


def _cmd_watson(args, em: Emitter) -> int:
    result = classical.watson_return_prob(args.tol)
    doc = {
        "g_quadrature": result.g_quadrature,
        "g_closed": result.g_closed,
        "f_return": result.f_return,
        "quadrature_error_estimate": result.quadrature_error_estimate,
    }
    em.table(
        list(doc.keys()),
        [[em.fl(result.g_quadrature), em.fl(result.g_closed),
          em.fl(result.f_return), em.fl(result.quadrature_error_estimate)]],
        json_doc=doc,
    )
    return 0


def _cmd_verify(args, em: Emitter) -> int:
    report = verify.run_verify(args.scope)
    columns = ["status", "name", "expected", "actual", "tolerance"]
    rows = [
        ["PASS" if c.passed else "FAIL", c.name, c.expected, c.actual, c.tolerance]
        for c in report.checks
    ]
    doc = {
        "scope": report.scope,
        "passed": report.passed,
        "checks": [
            {
                "name": c.name,
                "status": "pass" if c.passed else "fail",
                "expected": c.expected,
                "actual": c.actual,
                "tolerance": c.tolerance,
            }
            for c in report.checks
        ],
    }
    em.table(columns, rows, json_doc=doc)
    return 0 if report.passed else 1


def _parse_sweep(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("sweep must be start:stop:count")
    start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1:
        raise argparse.ArgumentTypeError("sweep count must be positive")
    return start, stop, count


def _output_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # attached twice (root and subcommand) so the flags work in either
    # position; the subcommand copy must not clobber root values with
    # its own defaults, hence SUPPRESS
    default_format = argparse.SUPPRESS if suppress else "plain"
    default_precision = argparse.SUPPRESS if suppress else 15
    parser.add_argument("--format", choices=("json", "csv", "plain"),
                        default=default_format)
    parser.add_argument("--precision", type=int, default=default_precision,
                        help="decimal display digits for floats (default 15)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadwalk",
        description="Exact Hadamard-walk return probabilities, their "
        "elliptic-integral generating function, and classical comparanda.",
    )
    _output_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _output_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", parents=[common],
                       help="position distribution at a given time")
    p.add_argument("-n", "--time", type=int, required=True)
    p.add_argument("--coin", choices=("hadamard", "custom"), default="hadamard")
    p.add_argument("--entries", help="custom coin entries a,b,c,d (complex, j-notation)")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("return-prob", parents=[common],
                       help="exact return probability by each method")
    p.add_argument("-n", "--time", type=int, required=True)
    p.add_argument("--method", choices=("direct", "xi", "prop1", "closed", "all"),
                   default="all")
    p.set_defaults(handler=_cmd_return_prob)

    p = sub.add_parser("xi", parents=[common],
                       help="path-sum coefficients for l left / m right steps")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_cmd_xi)

    p = sub.add_parser("ellipk", parents=[common],
                       help="complete elliptic integral K(k)")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--method", choices=("agm", "series"), default="agm")
    p.add_argument("--terms", type=int, default=64)
    p.set_defaults(handler=_cmd_ellipk)

    p = sub.add_parser("genfun", parents=[common],
                       help="generating-function identity at z")
    p.add_argument("--z", type=float)
    p.add_argument("--truncate", type=int)
    p.add_argument("--sweep", type=_parse_sweep, metavar="START:STOP:COUNT")
    p.set_defaults(handler=_cmd_genfun)

    p = sub.add_parser("classical", parents=[common],
                       help="classical random-walk values")
    p.add_argument("--dim", type=int, choices=(1, 2), required=True)
    p.add_argument("--time", type=int)
    p.add_argument("--gf", type=float, metavar="Z")
    p.set_defaults(handler=_cmd_classical)

    p = sub.add_parser("watson", parents=[common],
                       help="3d return constant by quadrature and closed form")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(handler=_cmd_watson)

    p = sub.add_parser("verify", parents=[common],
                       help="cross-oracle verification suite")
    p.add_argument("--scope", choices=("fast", "full"), default="fast")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    em = Emitter(args.format, args.precision)
    try:
        return args.handler(args, em)
    except QuadratureConvergenceError as exc:
        print(f"error: {exc} (best estimate {exc.best_estimate!r})", file=sys.stderr)
        return 1
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
