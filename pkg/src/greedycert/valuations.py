"""Valuation oracles on action strings, discrete derivatives, and submodularity checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .errors import FeasibilityError
from .matroids import SetStringMatroid, UniformStringMatroid, enumerate_feasible_strings
from .strings import ActionSeq, concat

EPS = 1e-9


class Valuation:
    """Deterministic objective over action strings, normalized to value 0 at the empty string.

    The raw callable is evaluated once at the empty string and every reported
    value is ``raw(seq) - raw(())``; the offset is kept in ``raw_empty_value``
    for audit. Subclasses may override :meth:`gains` with a faster incremental
    path; the contract is ``gains(prefix, actions)[i] == value(prefix + (a_i,))
    - value(prefix)``.
    """

    def __init__(self, raw: Callable[[ActionSeq], float], name: str = ""):
        self._raw = raw
        self.name = name
        self.raw_empty_value = float(raw(()))

    def __call__(self, seq: ActionSeq) -> float:
        return float(self._raw(tuple(seq))) - self.raw_empty_value

    def gains(self, prefix: ActionSeq, actions: Sequence[int]) -> list[float]:
        """Marginal gains of each action appended to the prefix."""
        prefix = tuple(prefix)
        base = self(prefix)
        return [self(prefix + (int(a),)) - base for a in actions]


def rho(f: Valuation, m, seq: ActionSeq, action: int) -> float:
    """Discrete derivative f(seq + action) - f(seq); the action must be feasible at seq."""
    seq = tuple(seq)
    if action not in m.feasible_actions(seq):
        raise FeasibilityError(f"action {action} is not feasible at {seq!r}")
    return f(concat(seq, (action,))) - f(seq)


class WeightedCoverage:
    """Set function: total weight of universe elements covered by the chosen sets."""

    def __init__(self, universe_weights: Sequence[float], sets: Sequence[Iterable[int]]):
        self.universe_weights = tuple(float(w) for w in universe_weights)
        if any(w < 0 for w in self.universe_weights):
            raise ValueError("universe weights must be non-negative")
        self.sets = tuple(frozenset(int(u) for u in s) for s in sets)
        n = len(self.universe_weights)
        for i, s in enumerate(self.sets):
            if any(not 0 <= u < n for u in s):
                raise ValueError(f"set {i} references elements outside the universe")

    @property
    def n_actions(self) -> int:
        return len(self.sets)

    def __call__(self, items: Iterable[int]) -> float:
        covered: set[int] = set()
        for i in items:
            covered |= self.sets[i]
        return sum(self.universe_weights[u] for u in covered)


class TabulatedSetFunction:
    """Set function given by an explicit table keyed by item set."""

    def __init__(self, values: Mapping):
        self._table = {frozenset(int(i) for i in k): float(v) for k, v in values.items()}

    def __call__(self, items: Iterable[int]) -> float:
        key = frozenset(int(i) for i in items)
        try:
            return self._table[key]
        except KeyError:
            raise ValueError(f"set {sorted(key)} is not tabulated") from None

    def items(self):
        return self._table.items()


def string_extension(set_function: Callable[[frozenset], float], name: str = "") -> Valuation:
    """Lift a set function to strings; the value depends only on the string's item set.

    Strings that permute or repeat the same items are therefore worth the same.
    """
    return Valuation(lambda seq: set_function(frozenset(seq)), name=name)


@dataclass
class SubmodularityReport:
    """Violations of forward monotonicity and diminishing returns found by a check."""

    monotone_checked: int = 0
    dimret_checked: int = 0
    monotone_violations: list = field(default_factory=list)  # (prefix, string, f(prefix), f(string))
    dimret_violations: list = field(default_factory=list)    # (prefix, string, action, gain_short, gain_long)

    @property
    def ok(self) -> bool:
        return not (self.monotone_violations or self.dimret_violations)


def _random_feasible_string(m, rng: random.Random, max_len: int) -> ActionSeq:
    if isinstance(m, SetStringMatroid) and m.is_uniform:
        return tuple(rng.sample(range(m.ground_size), max_len))
    if isinstance(m, UniformStringMatroid):
        return tuple(rng.choices(range(m.action_count), k=max_len))
    seq: ActionSeq = ()
    for _ in range(max_len):
        options = m.feasible_actions(seq)
        if not options:
            break
        seq = seq + (rng.choice(options),)
    return seq


def _random_common_action(m, short: ActionSeq, long: ActionSeq, rng: random.Random) -> int | None:
    """An action feasible at both strings, or None if there is none."""
    if isinstance(m, UniformStringMatroid):
        return rng.randrange(m.action_count)
    if isinstance(m, SetStringMatroid) and m.is_uniform:
        taken = set(long)
        if len(taken) >= m.ground_size:
            return None
        while True:
            a = rng.randrange(m.ground_size)
            if a not in taken:
                return a
    common = sorted(set(m.feasible_actions(short)) & set(m.feasible_actions(long)))
    return rng.choice(common) if common else None


def check_submodular_monotone(
    f: Valuation,
    m,
    n_samples: int | None = None,
    seed: int = 0,
    tol: float = EPS,
    cap: int = 2_000_000,
) -> SubmodularityReport:
    """Check forward monotonicity and diminishing returns along the prefix order.

    With ``n_samples=None`` every feasible (prefix, string, action) triple is
    checked; otherwise ``n_samples`` random triples are drawn (seeded). A
    violation is recorded when an inequality fails by more than ``tol``.
    """
    report = SubmodularityReport()

    def check_monotone(a: ActionSeq, b: ActionSeq):
        fa, fb = f(a), f(b)
        report.monotone_checked += 1
        if fa > fb + tol:
            report.monotone_violations.append((a, b, fa, fb))

    def check_dimret(a: ActionSeq, b: ActionSeq, act: int):
        ga = f.gains(a, [act])[0]
        gb = f.gains(b, [act])[0]
        report.dimret_checked += 1
        if ga < gb - tol:
            report.dimret_violations.append((a, b, act, ga, gb))

    if n_samples is None:
        feasible = enumerate_feasible_strings(m, cap)
        for b in feasible:
            ext_b = set(m.feasible_actions(b))
            for cut in range(len(b)):
                a = b[:cut]
                if not m.is_feasible(a):
                    continue
                check_monotone(a, b)
                for act in sorted(ext_b & set(m.feasible_actions(a))):
                    check_dimret(a, b, act)
        return report

    rng = random.Random(seed)
    attempts = 0
    while report.dimret_checked < n_samples and attempts < 20 * n_samples:
        attempts += 1
        length = rng.randint(0, max(m.rank - 1, 0))
        b = _random_feasible_string(m, rng, length)
        a = b[: rng.randint(0, len(b))]
        if a != b:
            check_monotone(a, b)
        act = _random_common_action(m, a, b, rng)
        if act is not None:
            check_dimret(a, b, act)
    return report
