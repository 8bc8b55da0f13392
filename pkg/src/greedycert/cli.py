"""Command-line front end: solve, oracle-verify, coverage-sweep, check-instance."""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .bounds import BoundReport, bound_report
from .coverage import (
    CoverageConfig,
    GridGeometry,
    coverage_matroid,
    coverage_objective,
    load_raster,
)
from .errors import (
    DegenerateInstanceError,
    EnumerationCapError,
    FeasibilityError,
    InstanceFormatError,
)
from .greedy import GreedyTrace, run_greedy
from .instances import Instance, load_instance, random_coverage_instance
from .oracle import DEFAULT_CAP, verify_instance
from .valuations import check_submodular_monotone

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_IO = 4

SWEEP_COLUMNS = (
    "lambda", "delta", "K", "f_greedy", "S", "R", "B",
    "alpha", "alpha_G", "bound_new", "bound_cc", "bound_classical",
)

REPORT_COLUMNS = SWEEP_COLUMNS[2:]


@dataclass(frozen=True)
class SweepRow:
    """One line of the decay-rate sweep; `decay` lands in the CSV's lambda column."""

    decay: float
    delta: float
    sensors: int
    report: BoundReport

    def values(self) -> tuple:
        r = self.report
        return (self.decay, self.delta, self.sensors, r.f_greedy, r.S, r.R, r.B,
                r.alpha, r.alpha_G, r.bound_new, r.bound_cc, r.bound_classical)


def fmt(value) -> str:
    """CSV cell: 10 significant digits for floats, plain repr for ints."""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.10g}"


def sweep_csv(rows: list[SweepRow]) -> str:
    lines = [",".join(SWEEP_COLUMNS)]
    lines.extend(",".join(fmt(v) for v in row.values()) for row in rows)
    return "\n".join(lines) + "\n"


def lambda_grid(lo: float, hi: float, steps: int) -> list[float]:
    if lo <= 0 or hi < lo or steps < 1:
        raise ValueError("need 0 < lambda-min <= lambda-max and at least one step")
    if steps == 1:
        return [lo]
    return [float(v) for v in np.logspace(math.log10(lo), math.log10(hi), steps)]


def worker_count() -> int:
    raw = os.environ.get("GREEDY_CERT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_sweep(cfg: CoverageConfig, lambdas: list[float]) -> list[SweepRow]:
    """Greedy + certificate per decay rate; rows come back in the given order."""
    geometry = GridGeometry.build(cfg.width, cfg.height, cfg.delta)
    matroid = coverage_matroid(cfg)

    def one(decay: float) -> SweepRow:
        local = replace(cfg, decay=decay)
        objective = coverage_objective(local, geometry)
        trace = run_greedy(objective, matroid, cfg.sensors)
        return SweepRow(decay=decay, delta=cfg.delta, sensors=cfg.sensors,
                        report=bound_report(trace, objective, matroid))

    workers = worker_count()
    if workers == 1:
        return [one(lam) for lam in lambdas]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, lambdas))


def format_trace(trace: GreedyTrace) -> str:
    lines = ["greedy trace:"]
    for i, (action, inc) in enumerate(zip(trace.chosen, trace.increments), start=1):
        lines.append(f"  step {i}: action {action}  gain {inc:.10g}  f so far {trace.prefix_values[i]:.10g}")
    return "\n".join(lines)


def format_report(report: BoundReport) -> str:
    k = len(report.alphas)
    lines = [
        "certificate:",
        f"  f(greedy)              {report.f_greedy:.10g}",
        f"  alpha_i                {', '.join(f'{a:.6g}' for a in report.alphas)}",
        f"  alpha / alpha_G        {report.alpha:.10g} / {report.alpha_G:.10g}",
        f"  S (curvature sum)      {report.S:.10g}",
        f"  R (top-{k} empty gains) {report.R:.10g}  via actions {list(report.r_actions)}",
        f"  B = min(S, R)          {report.B:.10g}",
        f"  bound f(greedy)/B      {report.bound_new:.10g}",
        f"  greedy-curvature bound {report.bound_cc:.10g}",
        f"  classical baseline     {report.bound_classical:.10g}",
    ]
    if report.vacuous_alpha_steps:
        lines.append(f"  note: no positive-gain candidates at steps {list(report.vacuous_alpha_steps)}")
    return "\n".join(lines)


def report_csv(report: BoundReport, steps: int) -> str:
    values = (steps, report.f_greedy, report.S, report.R, report.B, report.alpha,
              report.alpha_G, report.bound_new, report.bound_cc, report.bound_classical)
    return ",".join(REPORT_COLUMNS) + "\n" + ",".join(fmt(v) for v in values) + "\n"


def _solve(args) -> int:
    instance = load_instance(args.instance)
    steps = args.K if args.K is not None else instance.matroid.rank
    if steps > instance.matroid.rank:
        raise FeasibilityError(f"rank exceeded: K={steps} > rank {instance.matroid.rank}")
    trace = run_greedy(instance.valuation, instance.matroid, steps)
    report = bound_report(trace, instance.valuation, instance.matroid)
    print(f"instance: {instance.name or args.instance}")
    print(format_trace(trace))
    print(format_report(report))
    if args.csv:
        _write_text(args.csv, report_csv(report, steps))
    return EXIT_OK


def _verdict_line(name: str, record) -> str:
    status = "PASS" if record.passed else "FAIL"
    failing = [k for k, v in record.checks.items() if not v]
    extra = f"  failing: {failing}" if failing else ""
    return (
        f"{status}  {name}: greedy {record.greedy_value:.10g}  opt {record.opt_value:.10g}  "
        f"ratio {record.true_ratio:.6g}  bound_new {record.report.bound_new:.6g}  "
        f"bound_cc {record.report.bound_cc:.6g}  B {record.report.B:.6g}{extra}"
    )


def _oracle_verify(args) -> int:
    records = []
    if args.fuzz is not None:
        seed, count = args.fuzz
        for i in range(count):
            inst = random_coverage_instance(seed + i)
            records.append((inst.name, verify_instance(inst.valuation, inst.matroid, cap=args.cap)))
    else:
        if args.instance is None:
            print("oracle-verify needs an instance file or --fuzz SEED COUNT", file=sys.stderr)
            return EXIT_INPUT
        inst = load_instance(args.instance)
        steps = args.K if args.K is not None else inst.matroid.rank
        records.append((inst.name, verify_instance(inst.valuation, inst.matroid, steps, cap=args.cap)))
    for name, record in records:
        print(_verdict_line(name, record))
    failed = sum(not record.passed for _, record in records)
    print(f"{len(records) - failed}/{len(records)} instances passed")
    return EXIT_OK if failed == 0 else 1


def _coverage_sweep(args) -> int:
    raster = None
    mass = args.mass
    if mass.startswith("raster:"):
        path = mass.split(":", 1)[1]
        try:
            raster = load_raster(path, args.width, args.height)
        except OSError as exc:
            print(f"cannot read raster: {exc}", file=sys.stderr)
            return EXIT_IO
        mass = "raster"
    elif mass == "linear":
        mass = "linear_corner"
    cfg = CoverageConfig(width=args.width, height=args.height, sensors=args.K,
                         delta=args.delta, mass=mass, raster=raster)
    lambdas = lambda_grid(args.lambda_min, args.lambda_max, args.lambda_steps)
    rows = run_sweep(cfg, lambdas)
    _write_text(args.out, sweep_csv(rows))
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def _check_instance(args) -> int:
    instance = load_instance(args.instance)
    n_samples = None if args.exhaustive else args.samples
    report = check_submodular_monotone(instance.valuation, instance.matroid,
                                       n_samples=n_samples, seed=args.seed, cap=args.cap)
    print(f"instance: {instance.name or args.instance}")
    print(f"monotone pairs checked: {report.monotone_checked}, violations: {len(report.monotone_violations)}")
    print(f"diminishing-returns triples checked: {report.dimret_checked}, "
          f"violations: {len(report.dimret_violations)}")
    for a, b, fa, fb in report.monotone_violations[:5]:
        print(f"  monotone violation: f{a} = {fa:.10g} > f{b} = {fb:.10g}")
    for a, b, act, ga, gb in report.dimret_violations[:5]:
        print(f"  diminishing-returns violation at action {act}: gain{a} = {ga:.10g} < gain{b} = {gb:.10g}")
    return EXIT_OK if report.ok else 1


def _write_text(path, text: str):
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(str(exc)) from exc


class _IOFailure(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greedy-cert",
        description="Greedy maximization with per-instance performance-bound certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run greedy + bounds on an instance file")
    p.add_argument("instance")
    p.add_argument("--K", type=int, default=None, help="greedy steps (default: matroid rank)")
    p.add_argument("--csv", default=None, help="also write the certificate as one CSV row")
    p.set_defaults(func=_solve)

    p = sub.add_parser("oracle-verify", help="check the certificate chain against brute force")
    p.add_argument("instance", nargs="?", default=None)
    p.add_argument("--K", type=int, default=None)
    p.add_argument("--fuzz", nargs=2, type=int, metavar=("SEED", "COUNT"), default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_oracle_verify)

    p = sub.add_parser("coverage-sweep", help="decay-rate sweep of the sensor-coverage benchmark")
    p.add_argument("--width", type=int, default=60)
    p.add_argument("--height", type=int, default=50)
    p.add_argument("--K", type=int, default=10)
    p.add_argument("--delta", type=float, default=15.0)
    p.add_argument("--lambda-min", type=float, default=0.01)
    p.add_argument("--lambda-max", type=float, default=2.0)
    p.add_argument("--lambda-steps", type=int, default=21)
    p.add_argument("--mass", default="linear", help="linear | uniform | raster:PATH")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_coverage_sweep)

    p = sub.add_parser("check-instance", help="monotonicity / diminishing-returns check")
    p.add_argument("instance")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=2_000_000)
    p.set_defaults(func=_check_instance)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceFormatError, FeasibilityError, DegenerateInstanceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except _IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
