"""Inner products, Dirichlet forms, and the top of the graphon spectrum.

All operators act on step functions through their cell values.  The
symmetrized Laplacian of a kernel is Delta = I - K_hat with
K_hat[i][j] = kernel[i][j] / (m sqrt(d[i] d[j])), whose spectrum lies in
[0, 2]; the full graphon Laplacian additionally acts as the identity on
the complement of the step functions, which is where the max-with-1 rule
below comes from.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import Graphon, WeightedGraph, _frozen, graph_is_connected, is_connected
from .errors import (
    LengthMismatchError,
    NoConvergenceError,
    NotConnectedError,
    SizeTooLargeError,
    ZeroFunctionError,
)

JACOBI_MAX_SIZE = 512
DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10**6
DEFAULT_SEED = 42


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Real-valued step function given by its value on each grid cell."""

    values: np.ndarray

    def __init__(self, values):
        v = np.asarray(values, dtype=np.float64)
        if v.ndim != 1:
            raise LengthMismatchError("a grid function is a flat vector of cell values")
        object.__setattr__(self, "values", _frozen(v.copy()))

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """Top-of-spectrum value with its witness and convergence data.

    eigenfunction is None when the top of the spectrum is the constant 1
    contributed by the complement of the step functions, in which case no
    step-function witness exists.
    """

    lambda_max: float
    eigenfunction: GridFunction | None
    residual: float
    iterations: int
    method: str


def _values(f, m: int) -> np.ndarray:
    v = f.values if isinstance(f, GridFunction) else np.asarray(f, dtype=np.float64)
    if v.ndim != 1 or v.size != m:
        raise LengthMismatchError(f"expected {m} cell values, got shape {v.shape}")
    return v


def inner_v(graphon: Graphon, f, g) -> float:
    """Degree-weighted inner product (1/m) sum_i f[i] g[i] d[i]."""
    fv = _values(f, graphon.m)
    gv = _values(g, graphon.m)
    d = graphon.kernel.mean(axis=1)
    return float(np.dot(fv * gv, d)) / graphon.m


def dirichlet(graphon: Graphon, f) -> float:
    """Energy (1/(2 m^2)) sum_{i,j} (f[i] - f[j])^2 kernel[i][j]."""
    fv = _values(f, graphon.m)
    diff = fv[:, None] - fv[None, :]
    return float(np.sum(diff * diff * graphon.kernel)) / (2.0 * graphon.m * graphon.m)


def antidirichlet(graphon: Graphon, f) -> float:
    """Folded energy (1/m^2) sum_{i,j} (f[i] + f[j])^2 kernel[i][j]."""
    fv = _values(f, graphon.m)
    total = fv[:, None] + fv[None, :]
    return float(np.sum(total * total * graphon.kernel)) / (graphon.m * graphon.m)


def rayleigh(graphon: Graphon, f) -> float:
    """Rayleigh quotient dirichlet(f) / inner_v(f, f)."""
    denom = inner_v(graphon, f, f)
    if denom <= 0.0:
        raise ZeroFunctionError("Rayleigh quotient needs inner_v(f, f) > 0")
    return dirichlet(graphon, f) / denom


def jacobi_symmetric_eigs(matrix) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi."""
    a = np.asarray(matrix, dtype=np.float64)
    if a.shape[0] > JACOBI_MAX_SIZE:
        raise SizeTooLargeError(
            f"dense Jacobi supports size <= {JACOBI_MAX_SIZE}, got {a.shape[0]}"
        )
    w, _, _ = _kernels.jacobi_eigh(a)
    return w


def power_iteration(
    matrix: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int = DEFAULT_SEED,
    track_quotients: bool = False,
):
    """Dominant eigenpair of a symmetric PSD matrix by power iteration.

    Starts from a seeded pseudo-random unit vector; converges when the
    residual ||A g - q g|| drops to tol, q being the Rayleigh quotient.
    Returns (q, g, iterations, residual) plus the quotient history when
    track_quotients is set.
    """
    n = matrix.shape[0]
    rng = np.random.default_rng(seed)
    g = rng.standard_normal(n)
    g /= np.linalg.norm(g)
    history: list[float] = []
    for iteration in range(1, max_iter + 1):
        h = matrix @ g
        q = float(np.dot(g, h))
        residual = float(np.linalg.norm(h - q * g))
        if track_quotients:
            history.append(q)
        if residual <= tol:
            result = (q, g, iteration, residual)
            return result + (history,) if track_quotients else result
        norm_h = np.linalg.norm(h)
        if norm_h == 0.0:
            raise NoConvergenceError("power iteration collapsed to the zero vector")
        g = h / norm_h
    raise NoConvergenceError(
        f"power iteration residual above {tol:.1e} after {max_iter} iterations"
    )


def _sym_laplacian(graphon: Graphon) -> np.ndarray:
    d = graphon.kernel.mean(axis=1)
    k_hat = graphon.kernel / (graphon.m * np.sqrt(np.outer(d, d)))
    return np.eye(graphon.m) - k_hat


def _fix_sign(g: np.ndarray) -> np.ndarray:
    lead = int(np.argmax(np.abs(g)))
    return -g if g[lead] < 0.0 else g


def _top_eigpair(delta: np.ndarray, method: str, tol, max_iter, seed):
    n = delta.shape[0]
    if method not in ("auto", "jacobi", "power"):
        raise BadParametersError(f"unknown eigensolver method {method!r}")
    if method == "auto":
        method = "jacobi" if n <= JACOBI_MAX_SIZE else "power"
    if method == "jacobi":
        if n > JACOBI_MAX_SIZE:
            raise SizeTooLargeError(f"direct solver capped at {JACOBI_MAX_SIZE}, got {n}")
        w, vecs, sweeps = _kernels.jacobi_eigh(delta)
        return float(w[-1]), vecs[:, -1], int(sweeps), "jacobi"
    top, g, iterations, _ = power_iteration(delta, tol=tol, max_iter=max_iter, seed=seed)
    return top, g, iterations, "power"


def lambda_max(
    graphon: Graphon,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int = DEFAULT_SEED,
    method: str = "auto",
) -> SpectralResult:
    """Top of the spectrum of the graphon Laplacian.

    The m x m symmetrized Laplacian captures the action on step functions;
    functions with zero cell means are mapped to themselves, contributing a
    Rayleigh value of exactly 1, hence the result is the matrix top eigenvalue
    capped below by 1.  When 1 wins, no step-function eigenfunction exists and
    the eigenfunction field is None.

    Dense Jacobi for m <= 512, power iteration beyond; method overrides the
    size-based choice.
    """
    if not is_connected(graphon):
        raise NotConnectedError("lambda_max needs a connected graphon")
    m = graphon.m
    if m == 1:
        return SpectralResult(
            lambda_max=1.0, eigenfunction=None, residual=0.0, iterations=0, method="jacobi"
        )
    delta = _sym_laplacian(graphon)
    top, g, iterations, method = _top_eigpair(delta, method, tol, max_iter, seed)
    if top < 1.0:
        return SpectralResult(
            lambda_max=1.0, eigenfunction=None, residual=0.0, iterations=iterations, method=method
        )
    g = _fix_sign(np.asarray(g, dtype=np.float64))
    g = g / np.linalg.norm(g)
    residual = float(np.linalg.norm(delta @ g - top * g))
    d = graphon.kernel.mean(axis=1)
    f = np.sqrt(m) * g / np.sqrt(d)
    return SpectralResult(
        lambda_max=top,
        eigenfunction=GridFunction(f),
        residual=residual,
        iterations=iterations,
        method=method,
    )


def lambda_max_graph(
    graph: WeightedGraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int = DEFAULT_SEED,
    method: str = "auto",
) -> SpectralResult:
    """Largest eigenvalue of the normalized graph Laplacian I - D^{-1/2} w D^{-1/2}.

    The graph spectrum is exactly the n matrix eigenvalues, so no cap at 1
    applies.  The eigenvector is mapped back by dividing by sqrt(vol(i)).
    """
    if not graph_is_connected(graph):
        raise NotConnectedError("lambda_max_graph needs a connected graph")
    vol = graph.weights.sum(axis=1)
    delta = np.eye(graph.n) - graph.weights / np.sqrt(np.outer(vol, vol))
    top, g, iterations, method = _top_eigpair(delta, method, tol, max_iter, seed)
    g = _fix_sign(np.asarray(g, dtype=np.float64))
    g = g / np.linalg.norm(g)
    residual = float(np.linalg.norm(delta @ g - top * g))
    f = g / np.sqrt(vol)
    return SpectralResult(
        lambda_max=top,
        eigenfunction=GridFunction(f),
        residual=residual,
        iterations=iterations,
        method=method,
    )
