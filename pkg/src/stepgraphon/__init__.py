"""Spectral top and bipartiteness ratio of step-function graphons.

The package computes the largest point of the normalized Laplacian
spectrum of a step graphon, the bipartiteness ratio over signed cell
partitions, and checks the two-sided inequality tying them together,
both for graphons on a grid and for weighted graphs embedded as step
kernels.
"""

from .bipartite import (
    RatioReport,
    beta_exhaustive,
    beta_graph_exact,
    beta_partition,
    beta_tilde,
    beta_wg_search,
    doubling_partition,
    mixing_sequence,
    rounding_sweep,
    signed_indicator,
    sweep_integral_check,
    threshold_rounding,
)
from .core import (
    FractionalBipartition,
    Graphon,
    SignedPartition,
    WeightedGraph,
    associated_graphon,
    build_graph,
    build_graphon,
    constant_graphon,
    degree,
    eta_mass,
    graph_from_dict,
    graph_is_connected,
    graphon_from_dict,
    is_bipartite_graphon,
    is_connected,
    sbm_graphon,
    separable_graphon,
)
from .errors import (
    AsymmetryTooLargeError,
    BadParametersError,
    BlockBoundaryMisalignedError,
    DegreeFloorViolatedError,
    EmptyPartitionError,
    GridMisalignedError,
    IoError,
    LengthMismatchError,
    NoConvergenceError,
    NonSquareError,
    NotConnectedError,
    NotLooplessError,
    OutOfRangeError,
    ParseError,
    SizeTooLargeError,
    StepGraphonError,
    TooLargeError,
    ZeroFractionalMassError,
    ZeroFunctionError,
)
from .spectral import (
    GridFunction,
    SpectralResult,
    antidirichlet,
    dirichlet,
    inner_v,
    jacobi_symmetric_eigs,
    lambda_max,
    lambda_max_graph,
    rayleigh,
)
from .verify import (
    CheckResult,
    VerificationReport,
    bipartite_equivalence,
    verify_graph_correspondence,
    verify_graphon,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetryTooLargeError",
    "BadParametersError",
    "BlockBoundaryMisalignedError",
    "CheckResult",
    "DegreeFloorViolatedError",
    "EmptyPartitionError",
    "FractionalBipartition",
    "Graphon",
    "GridFunction",
    "GridMisalignedError",
    "IoError",
    "LengthMismatchError",
    "NoConvergenceError",
    "NonSquareError",
    "NotConnectedError",
    "NotLooplessError",
    "OutOfRangeError",
    "ParseError",
    "RatioReport",
    "SignedPartition",
    "SizeTooLargeError",
    "SpectralResult",
    "StepGraphonError",
    "TooLargeError",
    "VerificationReport",
    "WeightedGraph",
    "ZeroFractionalMassError",
    "ZeroFunctionError",
    "antidirichlet",
    "associated_graphon",
    "beta_exhaustive",
    "beta_graph_exact",
    "beta_partition",
    "beta_tilde",
    "beta_wg_search",
    "bipartite_equivalence",
    "build_graph",
    "build_graphon",
    "constant_graphon",
    "degree",
    "dirichlet",
    "doubling_partition",
    "eta_mass",
    "graph_from_dict",
    "graph_is_connected",
    "graphon_from_dict",
    "inner_v",
    "is_bipartite_graphon",
    "is_connected",
    "jacobi_symmetric_eigs",
    "lambda_max",
    "lambda_max_graph",
    "mixing_sequence",
    "rayleigh",
    "rounding_sweep",
    "sbm_graphon",
    "separable_graphon",
    "signed_indicator",
    "sweep_integral_check",
    "threshold_rounding",
    "verify_graph_correspondence",
    "verify_graphon",
]
