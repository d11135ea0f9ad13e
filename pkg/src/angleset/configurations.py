"""Explicit configurations of lines with prescribed pairwise angles.

A configuration assigns to each vertex a unit vector (equivalently the rank-1
orthogonal projection onto its span) such that adjacent vertices meet at the
prescribed angle, arccos(sqrt(tau)), and non-adjacent ones are orthogonal.
Construction factors the Gram matrix through its spectral decomposition;
verification recomputes every defining relation and reports worst-case
Frobenius residuals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .admissible import PSD_TOL, TauLike, TauWeighting, gram_matrix
from .graphs import Graph
from .spectra import eigen_symmetric

__all__ = [
    "SubspaceConfiguration",
    "VERIFY_TOL",
    "VerificationReport",
    "angle_of",
    "configuration_document",
    "construct_configuration",
    "load_configuration",
    "verify_configuration",
]

VERIFY_TOL = 1e-8


def angle_of(tau: float) -> float:
    """Angle in [0, pi/2) with cos^2 equal to ``tau`` in (0, 1]."""
    tau = float(tau)
    if not 0.0 < tau <= 1.0:
        raise ValueError(f"tau must lie in (0, 1], got {tau}")
    return math.acos(math.sqrt(tau))


@dataclass(frozen=True, eq=False)
class SubspaceConfiguration:
    """One unit vector per vertex, plus the projections onto their spans.

    ``vectors`` has shape (n, ambient_dim) with row i - 1 for vertex i;
    ``projections`` holds one ambient_dim-square matrix per vertex. The
    projections are stored rather than derived so that doctored matrices can
    be fed to :func:`verify_configuration`.
    """

    ambient_dim: int
    vectors: np.ndarray
    projections: tuple[np.ndarray, ...]

    @classmethod
    def from_vectors(cls, vectors) -> "SubspaceConfiguration":
        v = np.atleast_2d(np.asarray(vectors, dtype=float))
        projections = tuple(np.outer(row, row) for row in v)
        return cls(v.shape[1], v, projections)

    @property
    def size(self) -> int:
        """Number of vertices covered."""
        return self.vectors.shape[0]


def construct_configuration(
    g: Graph, tau: TauLike, tol: float = PSD_TOL
) -> SubspaceConfiguration:
    """Build a configuration realizing ``(g, tau)`` from the Gram matrix.

    Eigendecompose the Gram matrix, drop eigenvalues at or below the rank
    threshold, and scale the surviving eigenvector rows into vectors whose
    pairwise inner products reproduce the matrix. Raises ``ValueError`` when
    the matrix is not positive semidefinite (no configuration exists).
    """
    a = gram_matrix(g, tau)
    spectrum = eigen_symmetric(a, vectors=True)
    evals = spectrum.eigenvalues
    if evals[-1] < -PSD_TOL:
        raise ValueError(
            "no configuration exists: Gram matrix has negative eigenvalue "
            f"{evals[-1]:.6e}"
        )
    keep = evals > PSD_TOL
    basis = spectrum.eigenvectors[:, keep]
    vectors = basis * np.sqrt(evals[keep])
    deviation = float(np.linalg.norm(vectors @ vectors.T - a))
    if deviation > max(tol, 1e-12):
        raise RuntimeError(
            f"Gram factorization off by {deviation:.3e}, above tolerance {tol:.1e}"
        )
    return SubspaceConfiguration.from_vectors(vectors)


@dataclass(frozen=True)
class VerificationReport:
    """Worst-case Frobenius residuals of every defining relation.

    ``idempotency`` and ``symmetry`` cover each projection on its own;
    ``braid`` covers P_i P_j P_i = tau_ij P_i over both orderings of every
    edge; ``orthogonality`` covers P_i P_j = 0 over non-adjacent pairs; and
    ``gram`` is the deviation of the vectors' Gram matrix from the target.
    """

    idempotency: float
    symmetry: float
    braid: float
    orthogonality: float
    gram: float
    tol: float

    @property
    def max_residual(self) -> float:
        return max(
            self.idempotency, self.symmetry, self.braid, self.orthogonality, self.gram
        )

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol

    def as_dict(self) -> dict:
        return {
            "idempotency": self.idempotency,
            "symmetry": self.symmetry,
            "braid": self.braid,
            "orthogonality": self.orthogonality,
            "gram": self.gram,
            "tol": self.tol,
            "passed": self.passed,
        }


def verify_configuration(
    config: SubspaceConfiguration,
    g: Graph,
    tau: TauLike,
    verify_tol: float = VERIFY_TOL,
) -> VerificationReport:
    """Recompute every relation of the configuration against ``(g, tau)``."""
    if config.size != g.n:
        raise ValueError(
            f"configuration covers {config.size} vertices, graph has {g.n}"
        )
    w = TauWeighting.of(tau)
    w.validate_for(g)
    projs = config.projections
    idem = 0.0
    sym = 0.0
    for p in projs:
        idem = max(idem, float(np.linalg.norm(p @ p - p)))
        sym = max(sym, float(np.linalg.norm(p - p.T)))
    braid = 0.0
    for i, j in g.edges:
        t = w.value(i, j)
        pi, pj = projs[i - 1], projs[j - 1]
        braid = max(braid, float(np.linalg.norm(pi @ pj @ pi - t * pi)))
        braid = max(braid, float(np.linalg.norm(pj @ pi @ pj - t * pj)))
    orth = 0.0
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            if g.has_edge(i, j):
                continue
            pi, pj = projs[i - 1], projs[j - 1]
            orth = max(orth, float(np.linalg.norm(pi @ pj)))
            orth = max(orth, float(np.linalg.norm(pj @ pi)))
    gram_dev = float(
        np.linalg.norm(config.vectors @ config.vectors.T - gram_matrix(g, tau))
    )
    return VerificationReport(idem, sym, braid, orth, gram_dev, verify_tol)


def _tau_to_json(w: TauWeighting):
    if w.constant is not None:
        return w.constant
    return [[i, j, value] for (i, j), value in sorted(w.per_edge.items())]


def _tau_from_json(data) -> TauWeighting:
    if isinstance(data, (int, float)):
        return TauWeighting(constant=float(data))
    if isinstance(data, list):
        return TauWeighting(per_edge={(int(i), int(j)): float(v) for i, j, v in data})
    raise ValueError(f"cannot read tau from {data!r}")


def configuration_document(
    config: SubspaceConfiguration,
    g: Graph,
    tau: TauLike,
    report: VerificationReport | None = None,
) -> dict:
    """JSON-ready document with the configuration, its graph and parameters."""
    doc = {
        "ambient_dim": config.ambient_dim,
        "vectors": [[float(x) for x in row] for row in config.vectors],
        "tau": _tau_to_json(TauWeighting.of(tau)),
        "graph": [[i, j] for i, j in sorted(g.edges)],
    }
    if report is not None:
        doc["report"] = report.as_dict()
    return doc


def load_configuration(doc: dict) -> tuple[SubspaceConfiguration, Graph, TauWeighting]:
    """Rebuild a configuration from its exported document.

    Projections are re-derived from the stored vectors; the graph's vertex
    count is the number of vectors.
    """
    try:
        vectors = doc["vectors"]
        tau_data = doc["tau"]
        edge_data = doc["graph"]
        ambient = int(doc["ambient_dim"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"configuration document missing field: {exc}") from None
    if not vectors:
        raise ValueError("configuration document has no vectors")
    config = SubspaceConfiguration.from_vectors(vectors)
    if config.ambient_dim != ambient:
        raise ValueError(
            f"ambient_dim {ambient} does not match vector length {config.ambient_dim}"
        )
    g = Graph.from_edges([(int(i), int(j)) for i, j in edge_data], n=config.size)
    return config, g, _tau_from_json(tau_data)
