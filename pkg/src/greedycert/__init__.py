"""Greedy maximization on string matroids with per-instance performance-bound certificates."""

from .bounds import BoundReport, bound_report, compute_alphas, compute_B, compute_R, compute_S
from .coverage import (
    CoverageConfig,
    GridGeometry,
    SensorObjective,
    coverage_benchmark_instance,
    coverage_matroid,
    coverage_objective,
    detection_prob,
    event_mass,
    load_raster,
    mass_vector,
)
from .errors import (
    DegenerateInstanceError,
    EnumerationCapError,
    FeasibilityError,
    GreedyCertError,
    InstanceFormatError,
)
from .greedy import GreedyTrace, StepScan, run_greedy
from .instances import (
    Instance,
    coverage_instance,
    dominated_singleton_instance,
    load_instance,
    overlap_cycle_instance,
    parse_instance,
    random_coverage_instance,
    random_set_matroid,
    random_submodular_table,
)
from .matroids import (
    MatroidAxiomReport,
    SetStringMatroid,
    UniformStringMatroid,
    check_string_matroid_axioms,
    enumerate_feasible_strings,
)
from .oracle import OracleResult, VerificationRecord, brute_force_opt, verify_instance
from .strings import ActionSeq, as_string, concat, is_prefix
from .valuations import (
    EPS,
    SubmodularityReport,
    TabulatedSetFunction,
    Valuation,
    WeightedCoverage,
    check_submodular_monotone,
    rho,
    string_extension,
)
