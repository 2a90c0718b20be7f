"""Command-line front end: point evaluation, verification, benchmarking.

Exit codes: 0 ok, 1 verification failure, 2 no convergence, 3 domain error,
64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateRationalPoint,
    DomainError,
    NoConvergence,
    OrderOutOfRange,
    PoleError,
    SingularAtOrigin,
)
from .mordell import MordellArgs, phi_quadrature, transform_rhs_result
from .numeric_core import QuadratureConfig
from .pcf import pcf_u_batch
from .riemann_siegel import EvalReport, zeta
from .verification import run_checks

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_NO_CONVERGENCE = 2
EXIT_DOMAIN = 3
EXIT_USAGE = 64

_BENCH_COLUMNS = [
    "tau_re",
    "tau_im",
    "nodes_direct",
    "nodes_transformed",
    "time_direct_ns",
    "time_transformed_ns",
    "agree_rel",
]

def parse_complex(text: str) -> complex:
    """Parse the CLI complex literal grammar: "2", "3i", "1.5-0.2i"."""
    cleaned = text.strip().replace("i", "j")
    if not cleaned or not re.fullmatch(r"[0-9eEjJ+.\-]+", cleaned):
        raise ValueError(f"cannot parse complex literal {text!r}")
    try:
        value = complex(cleaned)
    except ValueError:
        raise ValueError(f"cannot parse complex literal {text!r}") from None
    return value


@dataclass
class RunConfig:
    command: str
    tol: float = 1e-9
    method: str = "classical"
    output_format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if not 1e-13 <= self.tol <= 1e-3:
            raise ValueError("tol must lie in [1e-13, 1e-3]")

    def quadrature(self) -> QuadratureConfig:
        return QuadratureConfig(rel_tol=self.tol, abs_tol=min(1e-14, self.tol))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="siegelzeta", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p.add_argument("--seed", type=int, default=0)

    p_zeta = sub.add_parser("zeta", help="evaluate zeta(s)")
    p_zeta.add_argument("--s", required=True)
    p_zeta.add_argument("--method", choices=["classical", "pcf"], default="classical")
    common(p_zeta)

    p_pcf = sub.add_parser("pcf", help="evaluate U(a, z)")
    p_pcf.add_argument("--a", required=True)
    p_pcf.add_argument("--z", required=True)
    common(p_pcf)

    p_mor = sub.add_parser("mordell", help="evaluate Phi(x, tau)")
    p_mor.add_argument("--x", required=True)
    p_mor.add_argument("--tau", required=True)
    p_mor.add_argument(
        "--method", choices=["direct", "transformed"], default="direct"
    )
    common(p_mor)

    p_ver = sub.add_parser("verify", help="run the identity-verification suites")
    p_ver.add_argument("--only", default=None, help="substring filter on check names")
    p_ver.add_argument("--tol", type=float, default=None,
                       help="override every check tolerance")
    p_ver.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p_ver.add_argument("--seed", type=int, default=0)

    p_bench = sub.add_parser("bench", help="direct vs transformed Mordell benchmark")
    p_bench.add_argument(
        "--taus", default="1,0.3,0.1,0.03,0.01",
        help="comma-separated tau grid (complex literals)",
    )
    p_bench.add_argument("--repeats", type=int, default=5)
    common(p_bench)
    return parser


def _print_report(report: EvalReport, fmt: str) -> None:
    d = report.to_dict()
    if fmt == "json":
        print(json.dumps(d))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(d))
        writer.writeheader()
        writer.writerow(d)
        sys.stdout.write(buf.getvalue())
    else:
        print(f"value  = {d['re']:.12g} + {d['im']:.12g}i")
        print(f"abs_err = {d['abs_err']:.3g}   nodes = {d['nodes']}   "
              f"method = {d['method']}   converged = {d['converged']}")


def _cmd_zeta(args) -> int:
    run = RunConfig("zeta", tol=args.tol, method=args.method,
                    output_format=args.format, seed=args.seed)
    s = parse_complex(args.s)
    report = zeta(s, run.quadrature(), method=run.method)
    _print_report(report, run.output_format)
    return EXIT_OK


def _cmd_pcf(args) -> int:
    run = RunConfig("pcf", tol=args.tol, output_format=args.format, seed=args.seed)
    a = parse_complex(args.a)
    z = parse_complex(args.z)
    vals, nodes = pcf_u_batch(a, np.array([z]), run.quadrature())
    report = EvalReport(complex(vals[0]), run.tol * abs(vals[0]), "pcf", nodes)
    _print_report(report, run.output_format)
    return EXIT_OK


def _cmd_mordell(args) -> int:
    run = RunConfig("mordell", tol=args.tol, method=args.method,
                    output_format=args.format, seed=args.seed)
    margs = MordellArgs(parse_complex(args.x), parse_complex(args.tau))
    if args.method == "transformed":
        res = transform_rhs_result(margs, run.quadrature())
        tag = "transformed"
    else:
        res = phi_quadrature(margs, run.quadrature())
        tag = "direct"
    if not res.converged:
        raise NoConvergence("Mordell quadrature did not converge", result=res)
    report = EvalReport(res.value, res.abs_error_estimate, tag, res.nodes_used)
    _print_report(report, run.output_format)
    return EXIT_OK


def _cmd_verify(args) -> int:
    rows = run_checks(only=args.only, tol_override=args.tol, seed=args.seed)
    if args.format == "json":
        print(json.dumps([row.__dict__ for row in rows]))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["name", "max_residual", "tolerance", "passed"])
        for row in rows:
            writer.writerow([row.name, row.max_residual, row.tolerance, row.passed])
    else:
        width = max((len(r.name) for r in rows), default=10)
        for row in rows:
            status = "pass" if row.passed else "FAIL"
            print(f"{row.name:<{width}}  {row.max_residual:10.3e}  "
                  f"<= {row.tolerance:8.1e}  {status}")
    return EXIT_OK if all(r.passed for r in rows) else EXIT_VERIFY_FAIL


def _median_time_ns(fn, repeats: int):
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.monotonic_ns()
        result = fn()
        times.append(time.monotonic_ns() - t0)
    times.sort()
    return times[len(times) // 2], result


def _cmd_bench(args) -> int:
    run = RunConfig("bench", tol=args.tol, output_format=args.format, seed=args.seed)
    cfg = run.quadrature()
    taus = [parse_complex(t) for t in args.taus.split(",") if t.strip()]
    rows = []
    for tau in taus:
        margs = MordellArgs(0.0, tau)
        t_dir, direct = _median_time_ns(
            lambda: phi_quadrature(margs, cfg, crossing=0.5), args.repeats
        )
        t_tr, trans = _median_time_ns(
            lambda: transform_rhs_result(margs, cfg), args.repeats
        )
        if not (direct.converged and trans.converged):
            raise NoConvergence(f"benchmark route failed to converge at tau = {tau}")
        agree = abs(direct.value - trans.value) / (1.0 + abs(direct.value))
        rows.append(
            dict(
                zip(
                    _BENCH_COLUMNS,
                    [tau.real, tau.imag, direct.nodes_used, trans.nodes_used,
                     t_dir, t_tr, agree],
                )
            )
        )
    if run.output_format == "json":
        print(json.dumps(rows))
    else:
        # the CSV layout is the contract; text mode prints the same table
        writer = csv.DictWriter(sys.stdout, fieldnames=_BENCH_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    return EXIT_OK


_DISPATCH = {
    "zeta": _cmd_zeta,
    "pcf": _cmd_pcf,
    "mordell": _cmd_mordell,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoConvergence as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (DomainError, PoleError, OrderOutOfRange, SingularAtOrigin,
            DegenerateRationalPoint) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
