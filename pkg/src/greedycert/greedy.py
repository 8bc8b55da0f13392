"""The greedy string builder and its full per-step trace."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FeasibilityError
from .strings import ActionSeq
from .valuations import Valuation


@dataclass(frozen=True)
class StepScan:
    """Feasible candidates at one greedy step, with marginal gains here and at the empty string."""

    actions: np.ndarray      # ascending action ids
    gains: np.ndarray        # gain of each action appended to the current prefix
    empty_gains: np.ndarray  # gain of the same action appended to the empty string


@dataclass(frozen=True)
class GreedyTrace:
    chosen: ActionSeq
    increments: tuple[float, ...]
    candidates: tuple[StepScan, ...]
    prefix_values: tuple[float, ...]  # telescoped: prefix_values[i] == sum(increments[:i])

    @property
    def value(self) -> float:
        return self.prefix_values[-1]


def run_greedy(f: Valuation, m, steps: int | None = None) -> GreedyTrace:
    """Build the greedy string of the given length (matroid rank by default).

    At each step every feasible action's marginal gain is evaluated and the
    best is appended, ties broken toward the smallest action id. Raises
    FeasibilityError if steps exceeds the matroid rank or no feasible action
    exists before the final step.
    """
    k = m.rank if steps is None else int(steps)
    if k < 0:
        raise ValueError("steps must be non-negative")
    if k > m.rank:
        raise FeasibilityError(f"requested {k} steps but the matroid rank is {m.rank}")

    empty_gain: dict[int, float] = {}
    prefix: ActionSeq = ()
    scans: list[StepScan] = []
    increments: list[float] = []
    prefix_values = [0.0]

    for step in range(1, k + 1):
        candidates = m.feasible_actions(prefix)
        if not candidates:
            raise FeasibilityError(f"no feasible action at step {step} (prefix {prefix!r})")
        actions = np.asarray(candidates, dtype=np.int64)
        gains = np.asarray(f.gains(prefix, actions), dtype=float)
        if step == 1:
            empty_gain.update(zip(actions.tolist(), gains.tolist()))
        missing = [a for a in actions.tolist() if a not in empty_gain]
        if missing:
            empty_gain.update(zip(missing, (float(g) for g in f.gains((), missing))))
        empty = np.asarray([empty_gain[a] for a in actions.tolist()], dtype=float)

        best = int(np.argmax(gains))  # first maximum: smallest id wins ties
        scans.append(StepScan(actions=actions, gains=gains, empty_gains=empty))
        increments.append(float(gains[best]))
        prefix_values.append(prefix_values[-1] + float(gains[best]))
        prefix = prefix + (int(actions[best]),)

    return GreedyTrace(
        chosen=prefix,
        increments=tuple(increments),
        candidates=tuple(scans),
        prefix_values=tuple(prefix_values),
    )
