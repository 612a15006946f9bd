"""Step-function graphons on the uniform grid and weighted graphs.

A graphon is stored as a symmetric m x m kernel whose entry (i, j) is the
constant value of W on the cell P_i x P_j, with P_i = [i/m, (i+1)/m).  Every
integral of a step function against such a kernel is a finite sum, so the
mass and degree computations below are exact up to float rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AsymmetryTooLargeError,
    BadParametersError,
    BlockBoundaryMisalignedError,
    EmptyPartitionError,
    LengthMismatchError,
    NonSquareError,
    OutOfRangeError,
    ZeroFractionalMassError,
)

SYMMETRY_TOL = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _validated_symmetric_matrix(matrix, tol: float = SYMMETRY_TOL) -> np.ndarray:
    """Validate a square [0,1] matrix and return its exact symmetrization."""
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquareError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise BadParametersError("matrix must have at least one row")
    if not np.all(np.isfinite(a)):
        raise OutOfRangeError("matrix entries must be finite")
    if float(a.min()) < 0.0 or float(a.max()) > 1.0:
        raise OutOfRangeError("matrix entries must lie in [0, 1]")
    gap = float(np.abs(a - a.T).max())
    if gap > tol:
        raise AsymmetryTooLargeError(
            f"asymmetry {gap:.3e} exceeds tolerance {tol:.1e}"
        )
    return _frozen((a + a.T) / 2.0)


@dataclass(frozen=True, eq=False)
class Graphon:
    """Step-function graphon: cell-constant symmetric kernel on [0,1]^2."""

    m: int
    kernel: np.ndarray

    def __repr__(self) -> str:
        return f"Graphon(m={self.m})"


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Weighted graph on n >= 2 vertices with symmetric weights in [0,1]."""

    n: int
    weights: np.ndarray
    loopless: bool

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, loopless={self.loopless})"


@dataclass(frozen=True)
class SignedPartition:
    """Disjoint cell-index sets (left, right) with nonempty union."""

    left: frozenset[int]
    right: frozenset[int]

    def __init__(self, left: Iterable[int], right: Iterable[int]):
        left_set = frozenset(int(i) for i in left)
        right_set = frozenset(int(i) for i in right)
        if any(i < 0 for i in left_set) or any(i < 0 for i in right_set):
            raise OutOfRangeError("cell indices must be nonnegative")
        if left_set & right_set:
            raise BadParametersError("left and right sets must be disjoint")
        if not (left_set | right_set):
            raise EmptyPartitionError("left and right sets are both empty")
        object.__setattr__(self, "left", left_set)
        object.__setattr__(self, "right", right_set)

    def support(self) -> frozenset[int]:
        return self.left | self.right

    def as_dict(self) -> dict:
        return {"left": sorted(self.left), "right": sorted(self.right)}


@dataclass(frozen=True, eq=False)
class FractionalBipartition:
    """Vectors alpha, gamma in [0,1]^n with alpha + gamma <= 1, not all zero."""

    alpha: np.ndarray
    gamma: np.ndarray

    def __init__(self, alpha, gamma):
        a = np.asarray(alpha, dtype=np.float64)
        g = np.asarray(gamma, dtype=np.float64)
        if a.ndim != 1 or g.ndim != 1 or a.shape != g.shape:
            raise LengthMismatchError("alpha and gamma must be vectors of equal length")
        for v in (a, g):
            if not np.all(np.isfinite(v)) or float(v.min()) < 0.0 or float(v.max()) > 1.0:
                raise OutOfRangeError("alpha and gamma entries must lie in [0, 1]")
        if float((a + g).max()) > 1.0 + 1e-12:
            raise OutOfRangeError("alpha[i] + gamma[i] must not exceed 1")
        if float((a + g).sum()) <= 0.0:
            raise ZeroFractionalMassError("alpha + gamma must not be identically zero")
        object.__setattr__(self, "alpha", _frozen(a.copy()))
        object.__setattr__(self, "gamma", _frozen(g.copy()))


def build_graphon(kernel) -> Graphon:
    """Validate a kernel matrix and return the step graphon it defines.

    Inputs asymmetric by at most 1e-12 are symmetrized by averaging; larger
    asymmetry signals a logical error rather than serialization rounding.
    """
    sym = _validated_symmetric_matrix(kernel)
    return Graphon(m=sym.shape[0], kernel=sym)


def build_graph(weights) -> WeightedGraph:
    """Validate a weight matrix and return the weighted graph it defines."""
    sym = _validated_symmetric_matrix(weights)
    n = sym.shape[0]
    if n < 2:
        raise BadParametersError("a weighted graph needs at least 2 vertices")
    loopless = bool(np.all(np.diag(sym) == 0.0))
    return WeightedGraph(n=n, weights=sym, loopless=loopless)


def associated_graphon(graph: WeightedGraph, k: int = 1) -> Graphon:
    """Embed a graph as a step graphon, k grid cells per vertex.

    Cell (a, b) of the result carries weight w[floor(a/k)][floor(b/k)], so
    the kernel is the exact step function W_G on the refined grid.
    """
    if k < 1:
        raise BadParametersError("cells-per-vertex k must be >= 1")
    kernel = np.repeat(np.repeat(graph.weights, k, axis=0), k, axis=1)
    return Graphon(m=k * graph.n, kernel=_frozen(kernel))


def constant_graphon(c: float, m: int) -> Graphon:
    """Graphon identically equal to c."""
    if m < 1:
        raise BadParametersError("resolution m must be >= 1")
    if not (0.0 <= c <= 1.0):
        raise OutOfRangeError("constant value must lie in [0, 1]")
    return Graphon(m=m, kernel=_frozen(np.full((m, m), float(c))))


def sbm_graphon(block_sizes: Sequence[float], block_matrix, m: int) -> Graphon:
    """Stochastic-block-model kernel: constant on block rectangles.

    Block proportions must land exactly on grid cell boundaries so that the
    kernel is cell-constant without averaging artifacts.
    """
    if m < 1:
        raise BadParametersError("resolution m must be >= 1")
    sizes = np.asarray(block_sizes, dtype=np.float64)
    if sizes.ndim != 1 or sizes.size == 0 or float(sizes.min()) <= 0.0:
        raise BadParametersError("block sizes must be positive proportions")
    if abs(float(sizes.sum()) - 1.0) > 1e-9:
        raise BadParametersError("block sizes must sum to 1")
    blocks = _validated_symmetric_matrix(block_matrix)
    if blocks.shape[0] != sizes.size:
        raise BadParametersError("block matrix size must match the number of blocks")
    bounds = np.cumsum(sizes) * m
    cuts = [0]
    for b in bounds:
        if abs(b - round(b)) > 1e-9:
            raise BlockBoundaryMisalignedError(
                f"block boundary at {b / m:.6g} does not align with the {m}-cell grid"
            )
        cuts.append(int(round(b)))
    labels = np.empty(m, dtype=np.intp)
    for block, (lo, hi) in enumerate(zip(cuts[:-1], cuts[1:])):
        if hi <= lo:
            raise BlockBoundaryMisalignedError(
                f"block {block} covers no grid cell at resolution {m}"
            )
        labels[lo:hi] = block
    return Graphon(m=m, kernel=_frozen(blocks[np.ix_(labels, labels)].copy()))


def separable_graphon(m: int) -> Graphon:
    """Cell average of W(x,y) = x*y: kernel[i][j] = xbar_i * xbar_j.

    The average of x over P_i is (i + 1/2)/m, so the cell average of the
    product is the product of the averages.
    """
    if m < 1:
        raise BadParametersError("resolution m must be >= 1")
    xbar = (np.arange(m, dtype=np.float64) + 0.5) / m
    return Graphon(m=m, kernel=_frozen(np.outer(xbar, xbar)))


def graphon_from_dict(data: dict, m: int | None = None) -> Graphon:
    """Build a graphon from its JSON dictionary form.

    Families "constant", "sbm" and "separable" are built at resolution m;
    family "grid" carries its own kernel and ignores m.
    """
    if not isinstance(data, dict) or "family" not in data:
        raise BadParametersError('graphon input needs a "family" key')
    family = data["family"]
    if family == "grid":
        if "kernel" not in data:
            raise BadParametersError('family "grid" needs a "kernel" matrix')
        return build_graphon(data["kernel"])
    if m is None or m < 1:
        raise BadParametersError("families other than grid need a resolution m >= 1")
    if family == "constant":
        if "c" not in data:
            raise BadParametersError('family "constant" needs a value "c"')
        return constant_graphon(float(data["c"]), m)
    if family == "sbm":
        missing = {"block_sizes", "block_matrix"} - set(data)
        if missing:
            raise BadParametersError(f'family "sbm" needs {sorted(missing)}')
        return sbm_graphon(data["block_sizes"], data["block_matrix"], m)
    if family == "separable":
        return separable_graphon(m)
    raise BadParametersError(f"unknown graphon family {family!r}")


def graph_from_dict(data: dict) -> WeightedGraph:
    """Build a weighted graph from its JSON dictionary form."""
    if not isinstance(data, dict) or "weights" not in data:
        raise BadParametersError('graph input needs a "weights" matrix')
    graph = build_graph(data["weights"])
    if "n" in data and int(data["n"]) != graph.n:
        raise BadParametersError(
            f'declared vertex count {data["n"]} does not match the {graph.n}x{graph.n} matrix'
        )
    return graph


def degree(graphon: Graphon):
    """Cell degrees d[i] = (1/m) sum_j kernel[i][j], exact for step kernels."""
    from .spectral import GridFunction

    return GridFunction(values=_frozen(graphon.kernel.mean(axis=1)))


def _cell_indices(graphon: Graphon, cells: Iterable[int]) -> np.ndarray:
    idx = np.unique(np.asarray(list(cells), dtype=np.intp))
    if idx.size and (idx[0] < 0 or idx[-1] >= graphon.m):
        raise OutOfRangeError(f"cell index out of range for m={graphon.m}")
    return idx


def eta_mass(graphon: Graphon, a: Iterable[int], b: Iterable[int]) -> float:
    """Kernel mass of the box A x B: (1/m^2) sum over A x B of the kernel."""
    ia = _cell_indices(graphon, a)
    ib = _cell_indices(graphon, b)
    if ia.size == 0 or ib.size == 0:
        return 0.0
    return float(graphon.kernel[np.ix_(ia, ib)].sum()) / (graphon.m * graphon.m)


def _bfs_reach(adjacency: np.ndarray, start: int) -> np.ndarray:
    n = adjacency.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[start] = True
    frontier = [start]
    while frontier:
        nxt = []
        for i in frontier:
            for j in np.flatnonzero(adjacency[i]):
                if not seen[j]:
                    seen[j] = True
                    nxt.append(int(j))
        frontier = nxt
    return seen


def is_connected(graphon: Graphon) -> bool:
    """Whether every cell has positive degree and the support graph is connected.

    For step graphons this matches the measure-level definition: any set that
    splits a positive-degree cell already has positive crossing mass, so only
    cell-aligned cuts can disconnect.
    """
    support = graphon.kernel > 0.0
    if not np.all(support.any(axis=1)):
        return False
    if graphon.m == 1:
        return bool(support[0, 0])
    return bool(_bfs_reach(support, 0).all())


def graph_is_connected(graph: WeightedGraph) -> bool:
    """Whether positive-weight edges span all vertices."""
    return bool(_bfs_reach(graph.weights > 0.0, 0).all())


def is_bipartite_graphon(graphon: Graphon) -> tuple[bool, SignedPartition | None]:
    """Whether the kernel support admits a proper 2-coloring of the cells.

    Any positive diagonal entry is a self-loop and forces False.  On success
    the witness assigns every cell to one side, isolated cells to the left.
    """
    if np.any(np.diag(graphon.kernel) > 0.0):
        return False, None
    support = graphon.kernel > 0.0
    m = graphon.m
    color = np.full(m, -1, dtype=np.int8)
    for start in range(m):
        if color[start] >= 0:
            continue
        color[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for i in frontier:
                for j in np.flatnonzero(support[i]):
                    if color[j] < 0:
                        color[j] = 1 - color[i]
                        nxt.append(int(j))
                    elif color[j] == color[i]:
                        return False, None
            frontier = nxt
    witness = SignedPartition(
        left=np.flatnonzero(color == 0), right=np.flatnonzero(color == 1)
    )
    return True, witness
