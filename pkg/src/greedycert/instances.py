"""Instance constructors, random generators for fuzzing, and the JSON file loader."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .errors import InstanceFormatError
from .matroids import SetStringMatroid, UniformStringMatroid
from .valuations import TabulatedSetFunction, Valuation, WeightedCoverage, string_extension


@dataclass
class Instance:
    """A valuation oracle together with the matroid it is constrained by."""

    valuation: Valuation
    matroid: UniformStringMatroid | SetStringMatroid
    name: str = ""
    meta: dict = field(default_factory=dict)


def coverage_instance(universe_weights, sets, rank: int, name: str = "") -> Instance:
    """Weighted-coverage instance on the uniform set matroid of the given rank."""
    cov = WeightedCoverage(universe_weights, sets)
    matroid = SetStringMatroid(cov.n_actions, rank)
    return Instance(string_extension(cov, name=name), matroid, name=name,
                    meta={"universe_weights": list(universe_weights), "sets": [sorted(s) for s in cov.sets]})


def overlap_cycle_instance() -> Instance:
    """Three unit-weight elements covered pairwise by three sets; every pair of sets is optimal."""
    return coverage_instance([1, 1, 1], [[0, 1], [1, 2], [0, 2]], rank=2, name="overlap-cycle")


def dominated_singleton_instance() -> Instance:
    """A set nested inside a bigger one, forcing a zero curvature ratio at step two."""
    return coverage_instance([4, 2, 1, 1], [[0], [0, 1, 2], [3]], rank=2, name="dominated-singleton")


def random_coverage_instance(seed: int, n_sets: int = 6, universe_size: int = 6,
                             rank: int = 3, max_weight: int = 10) -> Instance:
    """Seed-deterministic weighted-coverage instance for fuzzing.

    Individual sets may be empty (zero-gain actions exercise the curvature
    filtering) but at least one set is guaranteed to cover something.
    """
    if rank > n_sets:
        raise ValueError("rank cannot exceed the number of sets")
    rng = random.Random(seed)
    weights = [rng.randint(1, max_weight) for _ in range(universe_size)]
    sets = [[u for u in range(universe_size) if rng.random() < 0.4] for _ in range(n_sets)]
    if all(not s for s in sets):
        sets[rng.randrange(n_sets)] = [rng.randrange(universe_size)]
    return coverage_instance(weights, sets, rank=rank, name=f"random-coverage-{seed}")


def random_set_matroid(seed: int, ground_size: int = 6, max_rank: int = 3) -> SetStringMatroid:
    """Seed-deterministic explicit set matroid: uniform, partition, or binary-linear.

    All three families genuinely satisfy the set-matroid axioms (truncation by
    a global rank cap preserves them), so the induced string matroid must pass
    the string axioms as well. The declared rank is the actual maximum
    independent-set size.
    """
    rng = random.Random(seed)
    kind = rng.choice(["uniform", "partition", "binary_linear"])

    if kind == "uniform":
        independent = lambda s: True  # noqa: E731
    elif kind == "partition":
        ids = list(range(ground_size))
        rng.shuffle(ids)
        n_blocks = rng.randint(2, 3)
        blocks = [set(ids[b::n_blocks]) for b in range(n_blocks)]
        caps = [rng.randint(1, 2) for _ in blocks]

        def independent(s, blocks=blocks, caps=caps):
            return all(len(s & block) <= cap for block, cap in zip(blocks, caps))
    else:
        dim = rng.randint(2, 4)
        vectors = [rng.randint(1, 2**dim - 1) for _ in range(ground_size)]

        def independent(s, vectors=vectors):
            basis: list[int] = []
            for i in sorted(s):
                v = vectors[i]
                for b in basis:
                    v = min(v, v ^ b)
                if v == 0:
                    return False
                basis.append(v)
            return True

    family = [
        set(c)
        for size in range(max_rank + 1)
        for c in combinations(range(ground_size), size)
        if independent(set(c))
    ]
    rank = max(len(s) for s in family)
    return SetStringMatroid(ground_size, rank, family)


def random_submodular_table(seed: int, matroid: SetStringMatroid) -> TabulatedSetFunction:
    """Monotone set-submodular function tabulated on the matroid's independent family.

    Draws either a random weighted coverage or a concave power of a random
    modular function; both are submodular on every subfamily.
    """
    if matroid._family is None:
        raise ValueError("needs an explicit independent family to tabulate over")
    rng = random.Random(seed)
    if rng.random() < 0.5:
        universe = rng.randint(3, 8)
        weights = [rng.randint(1, 10) for _ in range(universe)]
        element_sets = [
            frozenset(u for u in range(universe) if rng.random() < 0.5)
            for _ in range(matroid.ground_size)
        ]

        def value(s):
            covered = frozenset().union(*(element_sets[i] for i in s)) if s else frozenset()
            return float(sum(weights[u] for u in covered))
    else:
        weights = [rng.uniform(0.1, 2.0) for _ in range(matroid.ground_size)]
        power = rng.choice([0.5, 0.7, 1.0])

        def value(s):
            return float(sum(weights[i] for i in s) ** power) if s else 0.0

    return TabulatedSetFunction({s: value(s) for s in matroid._family})


# --- JSON instance files ---------------------------------------------------
#
# { "matroid":  {"type": "uniform_set" | "explicit_set" | "uniform_string",
#                "rank": K, ...},
#   "function": {"type": "weighted_coverage", "universe_weights": [...],
#                "sets": [[...], ...]}
#             | {"type": "table", "values": {"0,2": 3.0, "": 0.0, ...}} }
#
# Table keys are comma-separated sorted ids ("" is the empty set). Set-derived
# valuations always go through the string extension, so values depend only on
# the item set of a string.


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise InstanceFormatError(f"missing field '{key}' in {where}")
    return doc[key]


def _parse_table_key(key: str) -> frozenset[int]:
    key = key.strip()
    if not key:
        return frozenset()
    try:
        return frozenset(int(part) for part in key.split(","))
    except ValueError:
        raise InstanceFormatError(f"bad table key {key!r}; expected comma-separated ids") from None


def parse_instance(doc: dict, name: str = "") -> Instance:
    """Build an Instance from a decoded instance document."""
    if not isinstance(doc, dict):
        raise InstanceFormatError("instance document must be a JSON object")
    mat = _require(doc, "matroid", "instance")
    fun = _require(doc, "function", "instance")

    fun_type = _require(fun, "type", "function")
    if fun_type == "weighted_coverage":
        weights = _require(fun, "universe_weights", "function")
        sets = _require(fun, "sets", "function")
        try:
            set_function = WeightedCoverage(weights, sets)
        except (ValueError, TypeError) as exc:
            raise InstanceFormatError(f"bad weighted_coverage function: {exc}") from exc
        n_actions = set_function.n_actions
    elif fun_type == "table":
        values = _require(fun, "values", "function")
        if not isinstance(values, dict):
            raise InstanceFormatError("table 'values' must be an object")
        table = {_parse_table_key(k): v for k, v in values.items()}
        try:
            set_function = TabulatedSetFunction(table)
        except (ValueError, TypeError) as exc:
            raise InstanceFormatError(f"bad table function: {exc}") from exc
        n_actions = max((max(s) + 1 for s in table if s), default=0)
    else:
        raise InstanceFormatError(f"unknown function type {fun_type!r}")

    mat_type = _require(mat, "type", "matroid")
    rank = _require(mat, "rank", "matroid")
    if not isinstance(rank, int) or rank < 1:
        raise InstanceFormatError("matroid rank must be a positive integer")
    try:
        if mat_type == "uniform_set":
            ground = mat.get("ground_size", n_actions)
            matroid = SetStringMatroid(ground, rank)
        elif mat_type == "explicit_set":
            ground = _require(mat, "ground_size", "matroid")
            independent = _require(mat, "independent", "matroid")
            matroid = SetStringMatroid(ground, rank, independent)
        elif mat_type == "uniform_string":
            count = mat.get("action_count", n_actions)
            matroid = UniformStringMatroid(count, rank)
        else:
            raise InstanceFormatError(f"unknown matroid type {mat_type!r}")
    except (ValueError, TypeError) as exc:
        if isinstance(exc, InstanceFormatError):
            raise
        raise InstanceFormatError(f"bad matroid: {exc}") from exc

    if fun_type == "weighted_coverage" and len(matroid.actions) < n_actions:
        raise InstanceFormatError(
            f"function defines {n_actions} actions but the matroid only admits {len(matroid.actions)}"
        )
    label = name or doc.get("name", "")
    return Instance(string_extension(set_function, name=label), matroid, name=label, meta={"doc": doc})


def load_instance(path) -> Instance:
    """Load an instance file; raises InstanceFormatError on malformed input."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return parse_instance(doc, name=path.stem)
