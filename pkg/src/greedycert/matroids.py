"""Finite-rank string matroids: the uniform family and families induced by set matroids.

Both classes expose the same surface: ``rank``, ``actions``, ``is_feasible``
and ``feasible_actions``. Feasible strings never exceed ``rank`` in length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from .errors import EnumerationCapError, FeasibilityError
from .strings import ActionSeq

DEFAULT_ENUM_CAP = 10_000_000


class UniformStringMatroid:
    """Every string of length <= rank over the alphabet is feasible; repetition allowed."""

    is_uniform = True
    allows_repetition = True

    def __init__(self, action_count: int, rank: int):
        if action_count < 1:
            raise ValueError("action_count must be positive")
        if rank < 1:
            raise ValueError("rank must be positive")
        self.action_count = int(action_count)
        self.rank = int(rank)

    @property
    def actions(self) -> range:
        return range(self.action_count)

    def is_feasible(self, seq: ActionSeq) -> bool:
        return len(seq) <= self.rank and all(0 <= a < self.action_count for a in seq)

    def feasible_actions(self, prefix: ActionSeq) -> list[int]:
        """Actions extending the prefix; empty once the prefix reaches full rank."""
        if not self.is_feasible(prefix):
            raise FeasibilityError(f"prefix {prefix!r} is not feasible in this matroid")
        if len(prefix) == self.rank:
            return []
        return list(range(self.action_count))

    def __repr__(self) -> str:
        return f"UniformStringMatroid(action_count={self.action_count}, rank={self.rank})"


class SetStringMatroid:
    """Strings with pairwise distinct items whose item set is independent in a set matroid.

    The independence structure is one of:
      * ``None`` (default): the uniform set matroid, all item sets of size <= rank;
      * an explicit enumeration of the independent family;
      * a membership oracle ``callable(frozenset) -> bool``.

    A string is feasible iff its items are pairwise distinct and their set is
    independent; the value of any set-derived valuation then depends only on
    that item set.
    """

    allows_repetition = False

    def __init__(
        self,
        ground_size: int,
        rank: int,
        independent: Iterable[Iterable[int]] | Callable[[frozenset], bool] | None = None,
    ):
        if ground_size < 1:
            raise ValueError("ground_size must be positive")
        if rank < 1:
            raise ValueError("rank must be positive")
        self.ground_size = int(ground_size)
        self.rank = int(rank)
        self._oracle: Callable[[frozenset], bool] | None = None
        self._family: frozenset[frozenset[int]] | None = None
        if independent is None:
            self.is_uniform = True
        elif callable(independent):
            self.is_uniform = False
            self._oracle = independent
        else:
            self.is_uniform = False
            family = {frozenset(int(i) for i in s) for s in independent}
            family.add(frozenset())
            for s in family:
                if len(s) > self.rank:
                    raise ValueError(f"independent set {sorted(s)} exceeds rank {self.rank}")
                if any(not 0 <= i < self.ground_size for i in s):
                    raise ValueError(f"independent set {sorted(s)} leaves the ground set")
            self._family = frozenset(family)

    @property
    def actions(self) -> range:
        return range(self.ground_size)

    def is_independent(self, items: Iterable[int]) -> bool:
        s = frozenset(int(i) for i in items)
        if len(s) > self.rank or any(not 0 <= i < self.ground_size for i in s):
            return False
        if self._family is not None:
            return s in self._family
        if self._oracle is not None:
            return bool(self._oracle(s))
        return True

    def is_feasible(self, seq: ActionSeq) -> bool:
        if len(set(seq)) != len(seq):
            return False
        return self.is_independent(seq)

    def feasible_actions(self, prefix: ActionSeq) -> list[int]:
        if not self.is_feasible(prefix):
            raise FeasibilityError(f"prefix {prefix!r} is not feasible in this matroid")
        if len(prefix) == self.rank:
            return []
        base = set(prefix)
        if self.is_uniform:
            return [a for a in self.actions if a not in base]
        return [a for a in self.actions if a not in base and self.is_independent(base | {a})]

    def __repr__(self) -> str:
        kind = "uniform" if self.is_uniform else ("explicit" if self._family else "oracle")
        return f"SetStringMatroid(ground_size={self.ground_size}, rank={self.rank}, {kind})"


def enumerate_feasible_strings(m, cap: int = DEFAULT_ENUM_CAP) -> list[ActionSeq]:
    """All feasible strings of the matroid, by full product enumeration.

    Every string over the alphabet up to length ``rank`` is tested with
    ``is_feasible``, so the result is honest even for families that break the
    matroid axioms (enumeration does not assume prefix closure).
    """
    n = len(m.actions)
    total = sum(n**length for length in range(m.rank + 1))
    if total > cap:
        raise EnumerationCapError(
            f"{total} candidate strings exceed cap {cap}; shrink the instance or raise the cap"
        )
    out: list[ActionSeq] = []
    for length in range(m.rank + 1):
        for seq in product(m.actions, repeat=length):
            if m.is_feasible(seq):
                out.append(seq)
    return out


@dataclass
class MatroidAxiomReport:
    """Outcome of exhaustively checking the three string-matroid axioms."""

    n_strings: int
    rank_violations: list = field(default_factory=list)      # feasible basis extended past rank
    prefix_violations: list = field(default_factory=list)    # (string, infeasible prefix)
    exchange_violations: list = field(default_factory=list)  # (short, long) with no valid extension

    @property
    def ok(self) -> bool:
        return not (self.rank_violations or self.prefix_violations or self.exchange_violations)


def check_string_matroid_axioms(m, cap: int = DEFAULT_ENUM_CAP) -> MatroidAxiomReport:
    """Exhaustively verify rank cap, prefix closure and the exchange axiom."""
    feasible = enumerate_feasible_strings(m, cap)
    report = MatroidAxiomReport(n_strings=len(feasible))

    for seq in feasible:
        if len(seq) == m.rank:
            for a in m.actions:
                if m.is_feasible(seq + (a,)):
                    report.rank_violations.append((seq, a))
        for cut in range(len(seq)):
            prefix = seq[:cut]
            if not m.is_feasible(prefix):
                report.prefix_violations.append((seq, prefix))

    by_length: dict[int, list[ActionSeq]] = {}
    for seq in feasible:
        by_length.setdefault(len(seq), []).append(seq)
    for length, shorts in by_length.items():
        longs = by_length.get(length + 1, [])
        for short in shorts:
            for long in longs:
                if not any(m.is_feasible(short + (a,)) for a in set(long)):
                    report.exchange_violations.append((short, long))
    return report
