"""Exhaustive optimum search and the end-to-end certificate verifier."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product

from .bounds import BoundReport, bound_report
from .errors import EnumerationCapError, FeasibilityError
from .greedy import GreedyTrace, run_greedy
from .matroids import SetStringMatroid
from .strings import ActionSeq
from .valuations import EPS, Valuation

DEFAULT_CAP = 10_000_000

# Winners are collected by exact float equality: genuinely tied configurations
# evaluate through the same arithmetic, near-ties are not ties.
_TIE = 0.0


@dataclass(frozen=True)
class OracleResult:
    best_value: float
    best_strings: tuple[ActionSeq, ...]
    enumerated_count: int


def brute_force_opt(f: Valuation, m, steps: int | None = None, cap: int = DEFAULT_CAP) -> OracleResult:
    """Exact maximum of f over feasible strings of length <= steps.

    Set-backed matroids are enumerated at the item-set level (values depend
    only on the item set) and winners are reported in ascending-id order;
    uniform string matroids are enumerated string by string.
    """
    k = m.rank if steps is None else int(steps)
    if k < 0:
        raise ValueError("steps must be non-negative")
    if k > m.rank:
        raise FeasibilityError(f"requested length {k} exceeds the matroid rank {m.rank}")

    if isinstance(m, SetStringMatroid):
        candidates = sum(math.comb(m.ground_size, size) for size in range(k + 1))
        if candidates > cap:
            raise EnumerationCapError(
                f"{candidates} candidate sets exceed cap {cap}; shrink the instance or raise the cap"
            )
        pool = (
            seq
            for size in range(k + 1)
            for seq in combinations(range(m.ground_size), size)
            if m.is_independent(seq)
        )
    else:
        candidates = sum(m.action_count**length for length in range(k + 1))
        if candidates > cap:
            raise EnumerationCapError(
                f"{candidates} candidate strings exceed cap {cap}; shrink the instance or raise the cap"
            )
        pool = (
            seq
            for length in range(k + 1)
            for seq in product(m.actions, repeat=length)
            if m.is_feasible(seq)
        )

    best = -math.inf
    winners: list[ActionSeq] = []
    count = 0
    for seq in pool:
        count += 1
        value = f(seq)
        if value > best + _TIE:
            best = value
            winners = [seq]
        elif value >= best - _TIE:
            winners.append(seq)
    return OracleResult(best_value=best, best_strings=tuple(winners), enumerated_count=count)


@dataclass(frozen=True)
class VerificationRecord:
    """All numbers of one greedy-vs-oracle comparison plus per-inequality verdicts."""

    greedy_value: float
    opt_value: float
    true_ratio: float
    trace: GreedyTrace
    report: BoundReport
    oracle: OracleResult
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_instance(f: Valuation, m, steps: int | None = None, cap: int = DEFAULT_CAP,
                    tol: float = EPS) -> VerificationRecord:
    """Run greedy, bounds and the brute-force oracle, then check the whole chain:

    greedy <= optimum <= B <= K * (first greedy gain), and
    greedy/optimum >= bound_new >= bound_cc.
    """
    trace = run_greedy(f, m, steps)
    report = bound_report(trace, f, m, tol=tol)
    oracle = brute_force_opt(f, m, steps, cap=cap)
    k = len(trace.chosen)
    opt = oracle.best_value
    ratio = trace.value / opt
    checks = {
        "greedy_le_opt": trace.value <= opt + tol,
        "opt_le_B": opt <= report.B + tol,
        "B_le_crude": report.B <= k * trace.increments[0] + tol,
        "ratio_ge_bound_new": ratio >= report.bound_new - tol,
        "bound_new_ge_bound_cc": report.bound_new >= report.bound_cc - tol,
    }
    return VerificationRecord(
        greedy_value=trace.value,
        opt_value=opt,
        true_ratio=ratio,
        trace=trace,
        report=report,
        oracle=oracle,
        checks=checks,
    )
