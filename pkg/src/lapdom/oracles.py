"""Floating-point ground truth: dense Laplacians and a Jacobi eigensolver.

Nothing here shares code with the exact counting engine; the two are meant to
be compared against each other.
"""

from __future__ import annotations

from typing import Optional, Sequence

import math

import numpy as np

try:
    from numba import njit

    _jit = njit(cache=True)
except ImportError:  # pragma: no cover - plain Python fallback, same algorithm
    def _jit(fn):
        return fn

from .errors import NoConvergence, TooLarge
from .tree import Tree

MAX_DENSE_N = 512
_TINY = np.finfo(float).tiny


def laplacian(t: Tree) -> np.ndarray:
    if t.n > MAX_DENSE_N:
        raise TooLarge(f"dense oracle is capped at n = {MAX_DENSE_N}, got {t.n}")
    m = np.zeros((t.n, t.n))
    for u, v in t.edges:
        m[u, v] = m[v, u] = -1.0
        m[u, u] += 1.0
        m[v, v] += 1.0
    return m


def off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


@_jit
def _sweep(a):
    """One cyclic-by-row sweep of Jacobi rotations, in place."""
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if abs(apq) <= _TINY:
                continue
            tau = (a[q, q] - a[p, p]) / (2.0 * apq)
            if abs(tau) > 1e150:
                t = 0.5 / tau
            else:
                sign = 1.0 if tau >= 0 else -1.0
                t = sign / (abs(tau) + math.sqrt(1.0 + tau * tau))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            for k in range(n):
                akp = a[k, p]
                akq = a[k, q]
                a[k, p] = c * akp - s * akq
                a[k, q] = s * akp + c * akq
            for k in range(n):
                apk = a[p, k]
                aqk = a[q, k]
                a[p, k] = c * apk - s * aqk
                a[q, k] = s * apk + c * aqk
            a[p, q] = 0.0
            a[q, p] = 0.0


def jacobi_eigenvalues(m: np.ndarray, tol: float = 1e-10, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps the upper triangle row by row, zeroing each off-diagonal entry
    with a plane rotation, until the off-diagonal Frobenius norm drops below
    ``tol``.  Returned in ascending order.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    if tol <= 0:
        raise ValueError("tol must be positive")
    for _ in range(max_sweeps):
        if off_norm(a) < tol:
            return sorted(float(x) for x in np.diag(a))
        _sweep(a)
    if off_norm(a) < tol:
        return sorted(float(x) for x in np.diag(a))
    raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {off_norm(a):.3e})")


def tree_spectrum(t: Tree, tol: float = 1e-10) -> list[float]:
    return jacobi_eigenvalues(laplacian(t), tol)


def interval_count_numeric(
    eigs: Sequence[float], a: float, b: float, guard: float = 1e-6
) -> Optional[int]:
    """Count eigenvalues in ``[a, b)``, or ``None`` when the answer is uncertain.

    Each numeric eigenvalue is trusted only to within ``guard``, and the true
    value is known to be non-negative (Laplacian spectra).  If the window
    ``[max(x - guard, 0), x + guard]`` of any eigenvalue straddles an endpoint,
    membership cannot be decided and ``None`` is returned.
    """
    if guard <= 0:
        raise ValueError("guard must be positive")
    count = 0
    for x in eigs:
        lo, hi = max(x - guard, 0.0), x + guard
        for edge in (a, b):
            if lo < edge <= hi:
                return None
        if a <= lo and hi < b:
            count += 1
    return count
