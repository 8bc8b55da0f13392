"""Acceptance suite: one test per shipped guarantee, each printing a pass line.

Tolerances are fixed here and nowhere else: 1e-9 for inequality chains,
1e-12 for the golden certificate ratios.
"""

import json
import math
import random
import time
from pathlib import Path

import pytest

from greedycert.cli import lambda_grid, main, run_sweep, sweep_csv
from greedycert.coverage import CoverageConfig, coverage_benchmark_instance
from greedycert.instances import (
    dominated_singleton_instance,
    overlap_cycle_instance,
    random_coverage_instance,
    random_set_matroid,
    random_submodular_table,
)
from greedycert.matroids import check_string_matroid_axioms
from greedycert.oracle import verify_instance
from greedycert.valuations import check_submodular_monotone, string_extension

TOL = 1e-9
GOLDEN_TOL = 1e-12
REPO = Path(__file__).resolve().parent.parent
BENCH_CONFIG = REPO / "benchmarks" / "coverage_60x50.json"


def test_certificate_chain_on_200_fuzz_instances():
    start = time.perf_counter()
    for i in range(200):
        sizes = random.Random(9000 + i)
        universe = sizes.randint(2, 8)
        n_sets = sizes.randint(2, 8)
        k = sizes.randint(1, min(4, n_sets))
        inst = random_coverage_instance(9000 + i, n_sets=n_sets,
                                        universe_size=universe, rank=k)
        rec = verify_instance(inst.valuation, inst.matroid)
        rep = rec.report
        assert rec.greedy_value / rec.opt_value >= rep.bound_new - TOL, inst.name
        assert rep.bound_new >= rep.bound_cc - TOL, inst.name
        assert rec.opt_value <= rep.B + TOL, inst.name
        assert rep.B == min(rep.S, rep.R), inst.name
        assert rep.B <= k * rec.trace.increments[0] + TOL, inst.name
        assert rec.passed, (inst.name, rec.checks)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"fuzz suite took {elapsed:.1f}s"
    print(f"\nPASS: certificate chain held on 200 fuzz instances in {elapsed:.1f}s")


def test_golden_dominated_singleton_certificate():
    inst = dominated_singleton_instance()
    rec = verify_instance(inst.valuation, inst.matroid)
    rep = rec.report
    assert rec.greedy_value == 8.0
    assert rep.alpha == 0.0
    assert math.isinf(rep.S)
    assert rep.R == 11.0
    assert rep.B == 11.0
    assert rep.bound_new == pytest.approx(8 / 11, abs=GOLDEN_TOL)
    assert rep.bound_cc == 0.5
    assert rep.bound_new > rep.bound_cc  # strictly better when alpha vanishes
    print("\nPASS: dominated-singleton golden certificate (8/11 vs 0.5)")


def test_golden_overlap_cycle_certificate():
    inst = overlap_cycle_instance()
    rec = verify_instance(inst.valuation, inst.matroid)
    assert rec.report.B == 4.0
    assert rec.report.bound_new == 0.75
    assert rec.report.bound_cc == 0.75
    assert rec.opt_value == 3.0
    print("\nPASS: overlap-cycle golden certificate (B=4, bounds 0.75, optimum 3)")


def test_translation_layer_on_50_random_set_matroids():
    for seed in range(50):
        matroid = random_set_matroid(seed, ground_size=6, max_rank=3)
        axioms = check_string_matroid_axioms(matroid)
        assert axioms.ok, (seed, axioms)
        table = random_submodular_table(seed, matroid)
        report = check_submodular_monotone(string_extension(table), matroid)
        assert report.ok, (seed, report.monotone_violations, report.dimret_violations)
        assert report.monotone_checked > 0 and report.dimret_checked > 0
    print("\nPASS: 50 induced string matroids satisfy the axioms; "
          "string extensions stay monotone submodular")


def test_full_scale_coverage_benchmark():
    doc = json.loads(BENCH_CONFIG.read_text())
    cfg = CoverageConfig(width=doc["width"], height=doc["height"], sensors=doc["K"],
                         delta=doc["delta"])
    lambdas = lambda_grid(doc["lambda_min"], doc["lambda_max"], doc["lambda_steps"])
    start = time.perf_counter()
    rows = run_sweep(cfg, lambdas)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"benchmark sweep took {elapsed:.1f}s"
    assert len(rows) == doc["lambda_steps"]
    for row in rows:
        assert row.report.bound_new >= row.report.bound_cc - TOL
    ref = 1.0 - math.exp(-1.0)
    crossing = [row.decay for row in rows
                if row.report.bound_new > ref and row.report.bound_cc < ref]
    assert crossing, "no decay rate separates the two bounds around 1 - 1/e"
    print(f"\nPASS: 60x50 K=10 sweep in {elapsed:.1f}s; bound separation at "
          f"lambda={[round(v, 3) for v in crossing]}")


def test_coverage_submodularity_spot_check():
    cfg = CoverageConfig(width=20, height=15, sensors=5, delta=5.0, decay=0.25)
    inst = coverage_benchmark_instance(cfg)
    report = check_submodular_monotone(inst.valuation, inst.matroid,
                                       n_samples=10_000, seed=2024, tol=TOL)
    assert report.dimret_checked == 10_000
    assert not report.monotone_violations, report.monotone_violations[:3]
    assert not report.dimret_violations, report.dimret_violations[:3]
    print("\nPASS: 10^4 sampled triples on 20x15 K=5 show no violations beyond 1e-9")


def test_sweep_runs_are_byte_identical(tmp_path):
    args = [
        "coverage-sweep", "--width", "20", "--height", "15", "--K", "5",
        "--delta", "5.0", "--lambda-steps", "7", "--out",
    ]
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + [str(first)]) == 0
    assert main(args + [str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    print("\nPASS: repeated sweeps with identical flags are byte-identical")
