"""Dense symmetric eigensolver and graph-spectrum quantities.

The solver is a cyclic Jacobi rotation scheme: rotations sweep the strict
upper triangle in row order until the off-diagonal Frobenius norm drops below
``tol`` times the Frobenius norm of the input. That is unconditionally stable
on symmetric matrices, has no dependencies, and at the matrix sizes this
package handles (tens of vertices) it runs in well under a millisecond.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, adjacency_matrix

__all__ = [
    "ConvergenceError",
    "DEFAULT_TOL",
    "MAX_SWEEPS",
    "Spectrum",
    "eigen_symmetric",
    "graph_index",
    "graph_spectrum",
    "min_eigenvalue",
]

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Sweep limit exhausted before the off-diagonal norm reached its target."""

    def __init__(self, off_norm: float, target: float, sweeps: int):
        super().__init__(
            f"no convergence after {sweeps} sweeps: off-diagonal norm "
            f"{off_norm:.3e} above target {target:.3e}"
        )
        self.off_norm = off_norm
        self.target = target
        self.sweeps = sweeps


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted descending, with optional orthonormal eigenvectors.

    ``eigenvectors`` (when requested) holds the k-th eigenvector in column k;
    within a degenerate eigenspace the basis is whatever the rotations
    produce, so tests should only rely on subspace-level statements.
    ``residual_bound`` is the final off-diagonal Frobenius norm, which bounds
    every eigenvalue error and each residual ``|m v - lambda v|``.
    """

    eigenvalues: np.ndarray
    residual_bound: float
    eigenvectors: np.ndarray | None = None

    @property
    def index(self) -> float:
        """Largest eigenvalue."""
        return float(self.eigenvalues[0])

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues[-1])


def eigen_symmetric(
    m,
    tol: float = DEFAULT_TOL,
    *,
    vectors: bool = False,
    max_sweeps: int = MAX_SWEEPS,
) -> Spectrum:
    """Eigendecompose a dense symmetric matrix by cyclic Jacobi rotations.

    ``tol`` is relative: sweeps stop once the off-diagonal Frobenius norm is
    at most ``tol * ||m||_F``. Raises :class:`ConvergenceError` if the sweep
    cap is hit first and ``ValueError`` for non-symmetric input.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    mat = np.asarray(m, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    if not np.array_equal(mat, mat.T):
        raise ValueError("matrix is not symmetric")

    n = mat.shape[0]
    a: list[list[float]] = mat.tolist()
    fro = math.sqrt(sum(x * x for row in a for x in row))
    target = tol * fro
    # Entries at or below `skip` cannot push the off-norm above target even if
    # every off-diagonal slot held one, so rotating on them is wasted work.
    skip = target / (2.0 * n)
    v: list[list[float]] | None = None
    if vectors:
        v = [[1.0 if i == k else 0.0 for k in range(n)] for i in range(n)]

    def off_norm() -> float:
        s2 = 0.0
        for i in range(n):
            ai = a[i]
            for j in range(i + 1, n):
                s2 += ai[j] * ai[j]
        return math.sqrt(2.0 * s2)

    off = off_norm()
    sweeps = 0
    while off > target:
        if sweeps == max_sweeps:
            raise ConvergenceError(off, target, sweeps)
        for p in range(n - 1):
            ap = a[p]
            for q in range(p + 1, n):
                apq = ap[q]
                if -skip <= apq <= skip:
                    continue
                aq = a[q]
                app = ap[p]
                aqq = aq[q]
                diff = aqq - app
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff  # tan is tiny; avoid overflow in theta**2
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap[p] = app - t * apq
                aq[q] = aqq + t * apq
                ap[q] = 0.0
                aq[p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    ai = a[i]
                    x = ai[p]
                    y = ai[q]
                    xr = c * x - s * y
                    yr = s * x + c * y
                    ai[p] = xr
                    ai[q] = yr
                    ap[i] = xr
                    aq[i] = yr
                if v is not None:
                    for vi in v:
                        x = vi[p]
                        y = vi[q]
                        vi[p] = c * x - s * y
                        vi[q] = s * x + c * y
        sweeps += 1
        off = off_norm()

    diag = [a[i][i] for i in range(n)]
    order = sorted(range(n), key=diag.__getitem__, reverse=True)
    eigenvalues = np.array([diag[k] for k in order])
    eigenvectors = None
    if v is not None:
        eigenvectors = np.array(v)[:, order]
    return Spectrum(eigenvalues, residual_bound=off, eigenvectors=eigenvectors)


def graph_spectrum(g: Graph, *, vectors: bool = False) -> Spectrum:
    """Adjacency spectrum of ``g``, eigenvalues sorted descending."""
    return eigen_symmetric(adjacency_matrix(g), vectors=vectors)


def graph_index(g: Graph) -> float:
    """Largest adjacency eigenvalue (0 for a single vertex)."""
    return graph_spectrum(g).index


def min_eigenvalue(g: Graph) -> float:
    """Smallest adjacency eigenvalue."""
    return graph_spectrum(g).min_eigenvalue
