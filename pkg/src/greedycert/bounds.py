"""Performance-bound certificates computed from a greedy trace.

Three lower bounds on the greedy-to-optimal ratio are reported:

* ``bound_new``: f(G_K) / B, where B = min(S, R) is a computable upper bound
  on the optimal value (S is the curvature-weighted greedy sum, R the sum of
  the K largest empty-string gains seeded with the first greedy pick);
* ``bound_cc``: the greedy-curvature bound 1/K + alpha (K-1)/K;
* ``bound_classical``: 1 - 1/e on uniform matroids, 1/2 otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInstanceError
from .greedy import GreedyTrace
from .valuations import EPS


@dataclass(frozen=True)
class BoundReport:
    alphas: tuple[float, ...]
    alpha: float
    alpha_G: float
    S: float
    R: float
    r_actions: tuple[int, ...]
    B: float
    f_greedy: float
    bound_new: float
    bound_cc: float
    bound_classical: float
    vacuous_alpha_steps: tuple[int, ...] = ()  # 1-based steps with no positive-empty-gain candidate


def compute_alphas(trace: GreedyTrace, tol: float = EPS) -> list[float]:
    """Per-step minimum of gain-now over gain-at-empty across candidates.

    Only candidates with empty-string gain above ``tol`` enter the minimum;
    ratios are clamped to [0, 1] against floating-point noise. A step with no
    such candidate contributes the vacuous minimum 1.0.
    """
    alphas = []
    for scan in trace.candidates:
        mask = scan.empty_gains > tol
        if not mask.any():
            alphas.append(1.0)
            continue
        ratios = scan.gains[mask] / scan.empty_gains[mask]
        alphas.append(float(np.clip(ratios, 0.0, 1.0).min()))
    return alphas


def compute_S(trace: GreedyTrace, alphas: list[float], tol: float = EPS) -> float:
    """Curvature-weighted greedy sum; +inf when the smallest alpha vanishes."""
    if min(alphas) <= tol:
        return math.inf
    return float(sum(inc / a for inc, a in zip(trace.increments, alphas)))


def compute_R(trace: GreedyTrace, f, m) -> tuple[float, tuple[int, ...]]:
    """Sum of the K largest empty-string gains over distinct actions, seeded with g_1.

    Ties go to the smallest action id. Raises ValueError when the instance
    has fewer than K distinct actions to draw from.
    """
    table: dict[int, float] = {}
    for scan in trace.candidates:
        table.update(zip(scan.actions.tolist(), scan.empty_gains.tolist()))
    for a in m.feasible_actions(()):
        if a not in table:
            table[a] = float(f.gains((), [a])[0])

    k = len(trace.chosen)
    if len(table) < k:
        raise ValueError(f"need {k} distinct actions but the instance offers {len(table)}")
    picks = [trace.chosen[0]]
    rest = sorted((a for a in table if a != picks[0]), key=lambda a: (-table[a], a))
    picks.extend(rest[: k - 1])
    return float(sum(table[a] for a in picks)), tuple(picks)


def compute_B(S: float, R: float, tol: float = EPS) -> float:
    """Best of the two upper bounds on the optimal value."""
    if math.isinf(S) and R <= tol:
        raise DegenerateInstanceError("no finite upper bound: S is infinite and R is not positive")
    return min(S, R)


def bound_report(trace: GreedyTrace, f, m, tol: float = EPS) -> BoundReport:
    """Assemble the full certificate for a completed greedy run."""
    k = len(trace.chosen)
    if k == 0:
        raise ValueError("bounds need at least one greedy step")
    alphas = compute_alphas(trace, tol)
    alpha = min(alphas)
    S = compute_S(trace, alphas, tol)
    R, r_actions = compute_R(trace, f, m)
    B = compute_B(S, R, tol)
    f_greedy = trace.value
    if B <= tol:
        raise DegenerateInstanceError("no positive marginal gain anywhere; cannot certify a ratio")
    vacuous = tuple(
        i + 1 for i, scan in enumerate(trace.candidates) if not (scan.empty_gains > tol).any()
    )
    return BoundReport(
        alphas=tuple(alphas),
        alpha=alpha,
        alpha_G=1.0 - alpha,
        S=S,
        R=R,
        r_actions=r_actions,
        B=B,
        f_greedy=f_greedy,
        bound_new=f_greedy / B,
        bound_cc=1.0 / k + alpha * (k - 1) / k,
        bound_classical=1.0 - math.exp(-1.0) if m.is_uniform else 0.5,
        vacuous_alpha_steps=vacuous,
    )
