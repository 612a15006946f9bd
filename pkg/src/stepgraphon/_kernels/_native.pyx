# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: cyclic Jacobi eigendecomposition and the ternary
partition enumeration.  Interface mirror of the fallback module."""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

from stepgraphon.errors import NoConvergenceError, TooLargeError

cnp.import_array()

BACKEND = "native"

JACOBI_RTOL = 1e-13
MAX_SWEEPS = 60


cdef double _offdiag_norm(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j] * a[i, j]
    return sqrt(acc)


def jacobi_eigh(matrix):
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.

    Returns (eigenvalues ascending, matching eigenvector columns, sweep
    count); converges when the off-diagonal Frobenius mass is at most 1e-13
    times the input norm.
    """
    a_arr = np.array(matrix, dtype=np.float64, order="C")
    cdef Py_ssize_t n = a_arr.shape[0]
    v_arr = np.eye(n, dtype=np.float64)
    cdef double[:, ::1] a = a_arr
    cdef double[:, ::1] v = v_arr
    cdef double norm = float(np.linalg.norm(a_arr))
    if n == 1 or norm == 0.0:
        w = np.diag(a_arr).copy()
        order = np.argsort(w, kind="stable")
        return w[order], v_arr[:, order].copy(), 0
    cdef double target = JACOBI_RTOL * norm
    cdef double floor = target / (n * n)
    cdef Py_ssize_t sweeps = 0, p, q, r
    cdef double apq, theta, t, c, s, xp, xq
    while _offdiag_norm(a, n) > target:
        if sweeps >= MAX_SWEEPS:
            raise NoConvergenceError(
                f"Jacobi sweeps did not reach off-diagonal target after {MAX_SWEEPS} sweeps"
            )
        with nogil:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if fabs(apq) <= floor:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if theta == 0.0:
                        t = 1.0
                    elif theta > 0.0:
                        t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                    else:
                        t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for r in range(n):
                        xp = a[p, r]
                        xq = a[q, r]
                        a[p, r] = c * xp - s * xq
                        a[q, r] = s * xp + c * xq
                    for r in range(n):
                        xp = a[r, p]
                        xq = a[r, q]
                        a[r, p] = c * xp - s * xq
                        a[r, q] = s * xp + c * xq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    for r in range(n):
                        xp = v[r, p]
                        xq = v[r, q]
                        v[r, p] = c * xp - s * xq
                        v[r, q] = s * xp + c * xq
        sweeps += 1
    w = np.diag(a_arr).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v_arr[:, order].copy(), sweeps


cdef int _side_less(cnp.int8_t* x, cnp.int8_t* y, Py_ssize_t m, cnp.int8_t side) noexcept nogil:
    # compares the ascending index sequences {i : x[i] == side} and
    # {i : y[i] == side}; -1 / 0 / 1 like a three-way comparison
    cdef Py_ssize_t i = 0, j = 0
    while True:
        while i < m and x[i] != side:
            i += 1
        while j < m and y[j] != side:
            j += 1
        if i == m and j == m:
            return 0
        if i == m:
            return -1
        if j == m:
            return 1
        if i < j:
            return -1
        if i > j:
            return 1
        i += 1
        j += 1


cdef int _key_less(cnp.int8_t* x, cnp.int8_t* y, Py_ssize_t m) noexcept nogil:
    cdef int c = _side_less(x, y, m, 1)
    if c != 0:
        return c < 0
    return _side_less(x, y, m, 2) < 0


def ternary_min_ratio(matrix):
    """Minimize the uncut-mass ratio over all 3^m - 1 signed cell assignments.

    Same contract as the fallback: every row of `matrix` must have positive
    sum; ties go to the lexicographically smallest (left, right) index pair.
    """
    k_arr = np.ascontiguousarray(matrix, dtype=np.float64)
    cdef Py_ssize_t m = k_arr.shape[0]
    if m > 18:
        raise TooLargeError(f"{m} cells means 3^{m} assignments; refusing beyond 18")
    cdef const double[:, ::1] k = k_arr
    cdef long long total = 1
    cdef Py_ssize_t i, j
    for i in range(m):
        total *= 3
    cdef cnp.int8_t digits[20]
    cdef cnp.int8_t best_digits[20]
    for i in range(m):
        digits[i] = 0
        best_digits[i] = 0
    cdef double best_val = 0.0
    cdef int have_best = 0
    cdef long long code
    cdef double num, den, w, val
    cdef cnp.int8_t di
    with nogil:
        for code in range(1, total):
            i = 0
            while digits[i] == 2:
                digits[i] = 0
                i += 1
            digits[i] += 1
            num = 0.0
            den = 0.0
            for i in range(m):
                di = digits[i]
                if di == 0:
                    continue
                for j in range(m):
                    w = k[i, j]
                    den += w
                    if digits[j] == 0:
                        num += w
                    elif digits[j] == di:
                        num += 2.0 * w
            val = num / (2.0 * den)
            if (not have_best) or val < best_val or (
                val == best_val and _key_less(digits, best_digits, m)
            ):
                best_val = val
                for i in range(m):
                    best_digits[i] = digits[i]
                have_best = 1
    left = tuple(i for i in range(m) if best_digits[i] == 1)
    right = tuple(i for i in range(m) if best_digits[i] == 2)
    return best_val, left, right
