"""Discrete sensor-coverage benchmark on a rectangular lattice.

Sensors sit on integer lattice points (x, y), x in 1..width, y in 1..height.
A sensor at s detects an event at x with probability exp(-decay * dist(x, s))
inside its sensing radius, 0 outside; sensors detect independently. The
objective is the expected detected event mass over the whole lattice. Placing
a second sensor on an occupied point adds nothing (values depend only on the
set of occupied points), which matches the distinct-positions matroid the
benchmark runs under.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .instances import Instance
from .matroids import SetStringMatroid
from .valuations import Valuation

MASS_MODES = ("linear_corner", "uniform", "raster")


@dataclass(frozen=True)
class CoverageConfig:
    width: int = 60
    height: int = 50
    sensors: int = 10
    delta: float = 15.0
    decay: float = 1.0
    mass: str = "linear_corner"
    raster: tuple[tuple[float, ...], ...] | None = None  # height rows x width columns

    def __post_init__(self):
        if self.width < 1 or self.height < 1 or self.sensors < 1:
            raise ValueError("width, height and sensors must all be at least 1")
        if self.delta <= 0:
            raise ValueError("sensing radius delta must be positive")
        if self.decay < 0:
            raise ValueError("decay rate must be non-negative")
        if self.mass not in MASS_MODES:
            raise ValueError(f"mass mode must be one of {MASS_MODES}")
        if self.mass == "raster":
            if self.raster is None:
                raise ValueError("raster mass mode needs a raster grid")
            if len(self.raster) != self.height or any(len(row) != self.width for row in self.raster):
                raise ValueError(f"raster must be {self.height} rows x {self.width} columns")
            if any(v < 0 for row in self.raster for v in row):
                raise ValueError("raster mass values must be non-negative")

    @property
    def n_points(self) -> int:
        return self.width * self.height


def point_id(cfg: CoverageConfig, x: int, y: int) -> int:
    return (y - 1) * cfg.width + (x - 1)


def point_xy(cfg: CoverageConfig, pid: int) -> tuple[int, int]:
    return pid % cfg.width + 1, pid // cfg.width + 1


def _on_lattice(cfg: CoverageConfig, point) -> bool:
    x, y = point
    return 1 <= x <= cfg.width and 1 <= y <= cfg.height


def event_mass(cfg: CoverageConfig, point: tuple[int, int]) -> float:
    """Relative event likelihood at a lattice point."""
    if not _on_lattice(cfg, point):
        raise ValueError(f"point {point} is outside the {cfg.width}x{cfg.height} lattice")
    x, y = point
    if cfg.mass == "linear_corner":
        return (x + y) / (cfg.width + cfg.height)
    if cfg.mass == "uniform":
        return 1.0
    return float(cfg.raster[y - 1][x - 1])


def detection_prob(cfg: CoverageConfig, point: tuple[int, int], sensor: tuple[int, int]) -> float:
    """Probability that a sensor at `sensor` detects an event at `point`."""
    d = math.dist(point, sensor)
    return math.exp(-cfg.decay * d) if d <= cfg.delta else 0.0


@dataclass(frozen=True)
class GridGeometry:
    """Visibility structure of a lattice: which points each sensor position sees, and how far."""

    width: int
    height: int
    delta: float
    indptr: np.ndarray    # action a sees flat slice indptr[a]:indptr[a+1]
    point_ids: np.ndarray
    dists: np.ndarray
    rows: np.ndarray      # action id repeated per visible point, for bincount reductions

    @classmethod
    def build(cls, width: int, height: int, delta: float) -> "GridGeometry":
        xs = np.arange(width, dtype=float) + 1.0
        ys = np.arange(height, dtype=float) + 1.0
        gx, gy = np.meshgrid(xs, ys)           # row y-1, column x-1
        coords = np.column_stack([gx.ravel(), gy.ravel()])
        d2 = (
            (coords[:, None, 0] - coords[None, :, 0]) ** 2
            + (coords[:, None, 1] - coords[None, :, 1]) ** 2
        )
        visible = d2 <= delta * delta + 1e-12
        counts = visible.sum(axis=1)
        indptr = np.zeros(len(coords) + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        rows, cols = np.nonzero(visible)
        return cls(
            width=width,
            height=height,
            delta=delta,
            indptr=indptr,
            point_ids=cols.astype(np.int64),
            dists=np.sqrt(d2[rows, cols]),
            rows=rows.astype(np.int64),
        )


def mass_vector(cfg: CoverageConfig) -> np.ndarray:
    """Event mass of every lattice point, indexed by point id."""
    if cfg.mass == "linear_corner":
        xs = np.arange(cfg.width, dtype=float) + 1.0
        ys = np.arange(cfg.height, dtype=float) + 1.0
        return ((xs[None, :] + ys[:, None]) / (cfg.width + cfg.height)).ravel()
    if cfg.mass == "uniform":
        return np.ones(cfg.n_points)
    return np.asarray(cfg.raster, dtype=float).ravel()


class SensorObjective(Valuation):
    """Expected detected event mass of a placement string; duplicates add nothing."""

    def __init__(self, cfg: CoverageConfig, geometry: GridGeometry | None = None):
        if geometry is None:
            geometry = GridGeometry.build(cfg.width, cfg.height, cfg.delta)
        elif (geometry.width, geometry.height, geometry.delta) != (cfg.width, cfg.height, cfg.delta):
            raise ValueError("geometry was built for a different lattice")
        self.cfg = cfg
        self._geom = geometry
        self._mass = mass_vector(cfg)
        self._probs = np.exp(-cfg.decay * geometry.dists)
        super().__init__(self._expected_mass, name=f"sensor-coverage-{cfg.width}x{cfg.height}")

    @property
    def total_mass(self) -> float:
        return float(self._mass.sum())

    def _slice(self, action: int) -> slice:
        return slice(self._geom.indptr[action], self._geom.indptr[action + 1])

    def _survival(self, placed) -> np.ndarray:
        """Per-point probability that no placed sensor detects an event there."""
        surv = np.ones(self.cfg.n_points)
        for s in dict.fromkeys(int(a) for a in placed):  # dedupe, order irrelevant
            sl = self._slice(s)
            surv[self._geom.point_ids[sl]] *= 1.0 - self._probs[sl]
        return surv

    def _expected_mass(self, seq) -> float:
        return float(self._mass @ (1.0 - self._survival(seq)))

    def gains(self, prefix, actions) -> list[float]:
        remaining = self._mass * self._survival(prefix)
        occupied = set(int(a) for a in prefix)
        acts = [int(a) for a in actions]
        if len(acts) > self.cfg.n_points // 8:
            contrib = self._probs * remaining[self._geom.point_ids]
            all_gains = np.bincount(self._geom.rows, weights=contrib, minlength=self.cfg.n_points)
            return [0.0 if a in occupied else float(all_gains[a]) for a in acts]
        out = []
        for a in acts:
            if a in occupied:
                out.append(0.0)
                continue
            sl = self._slice(a)
            out.append(float(self._probs[sl] @ remaining[self._geom.point_ids[sl]]))
        return out


def coverage_objective(cfg: CoverageConfig, geometry: GridGeometry | None = None) -> SensorObjective:
    return SensorObjective(cfg, geometry)


def coverage_matroid(cfg: CoverageConfig) -> SetStringMatroid:
    """Distinct lattice positions, at most `sensors` of them: the uniform set matroid."""
    return SetStringMatroid(cfg.n_points, cfg.sensors)


def coverage_benchmark_instance(cfg: CoverageConfig, geometry: GridGeometry | None = None) -> Instance:
    obj = coverage_objective(cfg, geometry)
    return Instance(obj, coverage_matroid(cfg), name=obj.name, meta={"config": cfg})


def load_raster(path, width: int, height: int) -> tuple[tuple[float, ...], ...]:
    """Read a raster mass grid from CSV: height rows by width columns, row r is y = r + 1."""
    rows: list[tuple[float, ...]] = []
    with open(path, newline="") as fh:
        for line_no, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                rows.append(tuple(float(cell) for cell in row))
            except ValueError:
                raise ValueError(f"{path}: line {line_no}: raster cells must be numbers") from None
    if len(rows) != height or any(len(r) != width for r in rows):
        raise ValueError(f"{path}: raster must be {height} rows x {width} columns")
    return tuple(rows)
