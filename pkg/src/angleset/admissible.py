"""Existence of fixed-angle configurations via the weighted Gram matrix.

For a graph on n vertices and an edge weighting tau with values in (0, 1],
the Gram matrix has unit diagonal, sqrt(tau_ij) on edges and 0 elsewhere.
Positive semidefiniteness of that matrix is exactly realizability by unit
vectors with inner product sqrt(tau_ij) on edges and orthogonality otherwise;
for trees it decides existence of the configuration outright, and the rank
counts the dimension it lives in. The admissible parameter interval of a tree
is (0, 1/r^2] where r is the graph index; cycles get their own closed form.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Mapping, Union

import numpy as np

from .classify import classify_structure
from .graphs import Graph, is_tree
from .spectra import eigen_symmetric, graph_index

__all__ = [
    "ExistenceVerdict",
    "PSD_TOL",
    "QuarterPosition",
    "SigmaInterval",
    "TauWeighting",
    "TauLike",
    "existence",
    "gram_matrix",
    "sigma_bounds",
    "sigma_cycle",
    "sigma_tree",
    "trichotomy",
]

PSD_TOL = 1e-9


def _check_tau_value(tau: float, where: str = "") -> float:
    tau = float(tau)
    if not 0.0 < tau <= 1.0:
        suffix = f" {where}" if where else ""
        raise ValueError(f"tau{suffix} must lie in (0, 1], got {tau}")
    return tau


@dataclass(frozen=True)
class TauWeighting:
    """Assignment of an angle parameter in (0, 1] to every edge.

    Either a single constant for all edges, or a per-edge mapping keyed by
    canonical ``(i, j)`` pairs with ``i < j``. Treat instances as immutable.
    """

    constant: float | None = None
    per_edge: Mapping[tuple[int, int], float] | None = None

    def __post_init__(self) -> None:
        if (self.constant is None) == (self.per_edge is None):
            raise ValueError("give exactly one of a constant or a per-edge mapping")
        if self.constant is not None:
            _check_tau_value(self.constant)
        else:
            fixed: dict[tuple[int, int], float] = {}
            for (i, j), value in self.per_edge.items():
                e = (i, j) if i < j else (j, i)
                if e in fixed:
                    raise ValueError(f"edge {e[0]}-{e[1]} weighted twice")
                fixed[e] = _check_tau_value(value, f"on edge {e[0]}-{e[1]}")
            object.__setattr__(self, "per_edge", fixed)

    @classmethod
    def of(cls, value: "TauLike") -> "TauWeighting":
        """Coerce a raw float or an edge mapping into a weighting."""
        if isinstance(value, TauWeighting):
            return value
        if isinstance(value, Mapping):
            return cls(per_edge=value)
        return cls(constant=value)

    @property
    def is_constant(self) -> bool:
        return self.constant is not None

    def value(self, i: int, j: int) -> float:
        if self.constant is not None:
            return self.constant
        e = (i, j) if i < j else (j, i)
        try:
            return self.per_edge[e]
        except KeyError:
            raise ValueError(f"no weight for edge {e[0]}-{e[1]}") from None

    def validate_for(self, g: Graph) -> None:
        """Per-edge weightings must cover the edge set exactly."""
        if self.per_edge is None:
            return
        missing = g.edges - self.per_edge.keys()
        if missing:
            i, j = min(missing)
            raise ValueError(f"per-edge weighting misses edge {i}-{j}")
        extra = self.per_edge.keys() - g.edges
        if extra:
            i, j = min(extra)
            raise ValueError(f"per-edge weighting names non-edge {i}-{j}")


TauLike = Union[TauWeighting, float, Mapping[tuple[int, int], float]]


def gram_matrix(g: Graph, tau: TauLike) -> np.ndarray:
    """Gram matrix: unit diagonal, sqrt(tau_ij) on edges, zero elsewhere."""
    w = TauWeighting.of(tau)
    w.validate_for(g)
    a = np.eye(g.n)
    for i, j in g.edges:
        a[i - 1, j - 1] = a[j - 1, i - 1] = math.sqrt(w.value(i, j))
    return a


@dataclass(frozen=True)
class ExistenceVerdict:
    """Outcome of the semidefiniteness test.

    ``exists`` means the Gram matrix is PSD within ``psd_tol``, i.e. the
    configuration is realizable by unit vectors (for trees this is exact
    existence). ``rank`` counts eigenvalues above the tolerance: the ambient
    dimension of the minimal realization.
    """

    exists: bool
    min_eigenvalue: float
    rank: int


def existence(g: Graph, tau: TauLike, psd_tol: float = PSD_TOL) -> ExistenceVerdict:
    """Semidefiniteness verdict for the Gram matrix of ``(g, tau)``.

    For trees this decides whether a configuration with the prescribed angles
    exists. For graphs with cycles PSD remains sufficient (the explicit
    construction still goes through) but is not claimed necessary.
    """
    if psd_tol < 0.0:
        raise ValueError("psd_tol must be non-negative")
    evals = eigen_symmetric(gram_matrix(g, tau)).eigenvalues
    lam_min = float(evals[-1])
    rank = int((evals > psd_tol).sum())
    return ExistenceVerdict(lam_min >= -psd_tol, lam_min, rank)


@dataclass(frozen=True)
class SigmaInterval:
    """Admissible parameter interval ``(0, upper]``."""

    upper: float

    def __post_init__(self) -> None:
        if not 0.0 < self.upper <= 1.0:
            raise ValueError(f"interval endpoint must lie in (0, 1], got {self.upper}")

    def __contains__(self, tau: float) -> bool:
        return 0.0 < tau <= self.upper


def sigma_tree(g: Graph) -> SigmaInterval:
    """Admissible interval (0, 1/r^2] of a tree with at least one edge."""
    if not is_tree(g):
        raise ValueError("admissible-interval formula applies to trees only")
    if g.n < 2:
        raise ValueError("tree must have at least one edge")
    r = graph_index(g)
    return SigmaInterval(min(1.0, 1.0 / (r * r)))


def sigma_cycle(n: int) -> SigmaInterval:
    """Admissible interval of the cycle on ``n >= 3`` vertices.

    Equals the interval of the path on ``n - 1`` vertices: the endpoint is
    1/(4cos^2(pi/n)), strictly above 1/4. Note this is not the
    semidefiniteness threshold of the cycle's own Gram matrix, which caps at
    1/4; the two agree only on trees.
    """
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    c = math.cos(math.pi / n)
    return SigmaInterval(min(1.0, 1.0 / (4.0 * c * c)))


def sigma_bounds(n: int) -> tuple[float, float]:
    """Universal bounds ``(lower, upper)`` for the interval endpoint over all
    trees on ``n >= 2`` vertices.

    The lower bound ``1/(n-1)^2`` comes from the index never exceeding
    ``n - 1``; the upper bound ``1/(4cos^2(pi/(n+1)))`` is attained by the
    path, whose index is minimal among connected graphs.
    """
    if n < 2:
        raise ValueError(f"bounds need n >= 2, got {n}")
    if n == 2:
        # 4cos^2(pi/3) is exactly 1, but rounds just above it in floats,
        # which would push the upper bound below the lower one.
        return 1.0, 1.0
    c = math.cos(math.pi / (n + 1))
    return 1.0 / (n - 1) ** 2, min(1.0, 1.0 / (4.0 * c * c))


class QuarterPosition(enum.Enum):
    """Position of a tree's interval endpoint relative to 1/4."""

    ABOVE = "AboveQuarter"
    EQUAL = "EqualQuarter"
    BELOW = "BelowQuarter"


_CROSS_TOL = 1e-9


def trichotomy(g: Graph) -> QuarterPosition:
    """Where the endpoint of a tree's admissible interval sits relative to 1/4.

    Decided structurally: plain Dynkin shapes lie above, their tilde
    extensions exactly at, and every other tree below 1/4. The numeric
    endpoint cross-checks the structural answer.
    """
    if not is_tree(g):
        raise ValueError("trichotomy applies to trees only")
    shape = classify_structure(g).components[0]
    if shape.is_dynkin:
        position = QuarterPosition.ABOVE
    elif shape.is_extended:
        position = QuarterPosition.EQUAL
    else:
        position = QuarterPosition.BELOW
    if g.n >= 2:
        upper = sigma_tree(g).upper
        consistent = {
            QuarterPosition.ABOVE: upper > 0.25,
            QuarterPosition.EQUAL: abs(upper - 0.25) <= _CROSS_TOL,
            QuarterPosition.BELOW: upper < 0.25,
        }[position]
        if not consistent:
            raise RuntimeError(
                f"structural position {position.value} contradicts endpoint {upper!r}"
            )
    return position
