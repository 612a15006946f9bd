"""Vectorized NumPy implementations of the hot kernels.

Interface mirror of the compiled module: cyclic Jacobi eigendecomposition
and the ternary partition enumeration.  Selected automatically when the
extension is unavailable.
"""

from __future__ import annotations

import numpy as np

from ..errors import NoConvergenceError

BACKEND = "python"

JACOBI_RTOL = 1e-13
MAX_SWEEPS = 60


def _offdiag_norm(a: np.ndarray) -> float:
    # sum off-diagonal squares directly: subtracting the diagonal mass from
    # the total cancels catastrophically once the matrix is nearly diagonal
    squares = a * a
    np.fill_diagonal(squares, 0.0)
    return float(np.sqrt(squares.sum()))


def jacobi_eigh(matrix) -> tuple[np.ndarray, np.ndarray, int]:
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.

    Rotates until the off-diagonal Frobenius mass is at most 1e-13 times the
    Frobenius norm of the input.  Returns (eigenvalues ascending, matching
    eigenvector columns, sweep count).
    """
    a = np.array(matrix, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n, dtype=np.float64)
    norm = float(np.linalg.norm(a))
    if n == 1 or norm == 0.0:
        order = np.argsort(np.diag(a), kind="stable")
        return np.diag(a)[order].copy(), v[:, order].copy(), 0
    target = JACOBI_RTOL * norm
    # rotations below this floor cannot keep the off-diagonal mass above target
    floor = target / (n * n)
    sweeps = 0
    while _offdiag_norm(a) > target:
        if sweeps >= MAX_SWEEPS:
            raise NoConvergenceError(
                f"Jacobi sweeps did not reach off-diagonal target after {MAX_SWEEPS} sweeps"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= floor:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order].copy(), sweeps


_POW3 = 3 ** np.arange(21, dtype=np.int64)


def _partition_key(digits: np.ndarray) -> tuple[tuple[int, ...], tuple[int, ...]]:
    left = tuple(int(i) for i in np.flatnonzero(digits == 1))
    right = tuple(int(i) for i in np.flatnonzero(digits == 2))
    return left, right


def ternary_min_ratio(matrix) -> tuple[float, tuple[int, ...], tuple[int, ...]]:
    """Minimize the uncut-mass ratio over all 3^m - 1 signed cell assignments.

    Each cell goes left, right, or out.  The ratio is
    [2 e(L,L) + 2 e(R,R) + e(S, S^c)] / (2 e(S, V)) with S = L u R and
    e(A,B) the weight mass of A x B.  Every row of `matrix` must have
    positive sum (connected input) so the denominator never vanishes.
    Ties are broken by the lexicographically smallest (left, right) pair
    of sorted index tuples.
    """
    k = np.ascontiguousarray(matrix, dtype=np.float64)
    m = k.shape[0]
    total = 3**m
    row_sums = k.sum(axis=1)
    best_val = np.inf
    best_key: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    chunk = 3 ** min(m, 10)
    for start in range(1, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (codes[:, None] // _POW3[:m]) % 3
        a = (digits == 1).astype(np.float64)
        b = (digits == 2).astype(np.float64)
        ka = a @ k
        kb = b @ k
        e_ll = np.einsum("ij,ij->i", ka, a)
        e_rr = np.einsum("ij,ij->i", kb, b)
        e_sv = (a + b) @ row_sums
        e_ss = np.einsum("ij,ij->i", ka + kb, a + b)
        vals = (2.0 * e_ll + 2.0 * e_rr + (e_sv - e_ss)) / (2.0 * e_sv)
        cmin = float(vals.min())
        if cmin > best_val:
            continue
        for idx in np.flatnonzero(vals == cmin):
            key = _partition_key(digits[idx])
            if cmin < best_val or (best_key is not None and key < best_key):
                best_val = cmin
                best_key = key
    assert best_key is not None
    return best_val, best_key[0], best_key[1]
