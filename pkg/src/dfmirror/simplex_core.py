"""Simplex geometry: entropy, extropy, divergences, mirror maps, KL projection.

Points are plain one-dimensional float arrays. The ``as_*`` helpers validate
and convert; they raise :class:`~dfmirror.errors.DomainError` on bad input
instead of clamping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError

SUM_TOL = 1e-12
MIN_DIM = 3


def _vector(x, what: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise DomainError(f"{what} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{what} has non-finite entries")
    return arr


def as_simplex_point(x, min_dim: int = MIN_DIM) -> np.ndarray:
    """Validate ``x`` as a point of the standard simplex.

    Entries must be nonnegative and sum to one within ``SUM_TOL``; the
    dimension must be at least ``min_dim`` (the dynamics degenerate for n = 2).
    """
    arr = _vector(x, "simplex point")
    if arr.size < min_dim:
        raise DomainError(f"simplex point needs n >= {min_dim}, got n = {arr.size}")
    if np.any(arr < 0):
        raise DomainError("simplex point has negative entries")
    if abs(arr.sum() - 1.0) > SUM_TOL:
        raise DomainError(f"simplex point sums to {arr.sum()!r}, not 1")
    return arr


def as_positive_vector(x) -> np.ndarray:
    arr = _vector(x, "positive vector")
    if arr.size == 0 or np.any(arr <= 0):
        raise DomainError("vector must have strictly positive entries")
    return arr


def is_interior(x) -> bool:
    return bool(np.all(np.asarray(x, dtype=float) > 0))


def is_vertex(x) -> bool:
    return bool(np.any(np.asarray(x, dtype=float) == 1.0))


def uniform(n: int) -> np.ndarray:
    return np.full(n, 1.0 / n)


def vertex(n: int, i: int) -> np.ndarray:
    e = np.zeros(n)
    e[i] = 1.0
    return e


def _xlogx(p: np.ndarray) -> np.ndarray:
    # 0 log 0 := 0
    out = np.zeros_like(p)
    pos = p > 0
    out[pos] = p[pos] * np.log(p[pos])
    return out


def entropy(p) -> float:
    """Shannon entropy ``-sum p log p`` of a simplex point (natural log)."""
    p = as_simplex_point(p)
    return float(-np.sum(_xlogx(p)))


def extropy(p) -> float:
    """Entropy of the complementary vector, ``H(1 - p)``.

    Zero at the vertices and largest at the barycentre.
    """
    p = as_simplex_point(p)
    return float(-np.sum(_xlogx(1.0 - p)))


def kl_divergence(p, q) -> float:
    """Kullback-Leibler divergence ``sum p_i log(p_i / q_i)`` between simplex points."""
    p = as_simplex_point(p)
    q = as_simplex_point(q)
    if p.shape != q.shape:
        raise DomainError("dimension mismatch")
    support = p > 0
    if np.any(q[support] <= 0):
        raise DomainError("q must be positive wherever p is positive")
    return float(np.sum(p[support] * np.log(p[support] / q[support])))


def generalized_kl(x, y) -> float:
    """Generalized KL divergence between positive vectors.

    ``sum x log(x/y) - sum(x - y)``; reduces to :func:`kl_divergence` when both
    arguments lie on the simplex.
    """
    x = as_positive_vector(x)
    y = as_positive_vector(y)
    if x.shape != y.shape:
        raise DomainError("dimension mismatch")
    return float(np.sum(x * np.log(x / y)) - np.sum(x - y))


@dataclass(frozen=True)
class MirrorMap:
    """A mirror map described by its behaviour.

    ``gradient`` carries primal points to dual coordinates and
    ``gradient_inverse`` brings them back. ``conjugate`` is the
    Legendre-Fenchel conjugate, whose gradient is ``gradient_inverse``.
    """

    name: str
    value: Callable[[np.ndarray], float]
    gradient: Callable[[np.ndarray], np.ndarray]
    gradient_inverse: Callable[[np.ndarray], np.ndarray]
    in_domain: Callable[[np.ndarray], bool] = lambda x: True
    conjugate: Optional[Callable[[np.ndarray], float]] = None

    def check(self, x) -> np.ndarray:
        arr = _vector(x, "mirror-map argument")
        if not self.in_domain(arr):
            raise DomainError(f"point outside the domain of mirror map {self.name!r}")
        return arr


NEGATIVE_ENTROPY = MirrorMap(
    name="negative_entropy",
    value=lambda x: float(np.sum(x * np.log(x))),
    gradient=lambda x: 1.0 + np.log(x),
    gradient_inverse=lambda mu: np.exp(mu - 1.0),
    in_domain=lambda x: bool(np.all(x > 0)),
    conjugate=lambda mu: float(np.sum(np.exp(mu - 1.0))),
)

HALF_SQUARED_NORM = MirrorMap(
    name="half_squared_norm",
    value=lambda x: 0.5 * float(np.dot(x, x)),
    gradient=lambda x: np.array(x, dtype=float),
    gradient_inverse=lambda mu: np.array(mu, dtype=float),
    conjugate=lambda mu: 0.5 * float(np.dot(mu, mu)),
)


def bregman_divergence(m: MirrorMap, x, y) -> float:
    """``psi(x) - psi(y) - <grad psi(y), x - y>`` for the mirror map ``m``."""
    x = m.check(x)
    y = m.check(y)
    if x.shape != y.shape:
        raise DomainError("dimension mismatch")
    return m.value(x) - m.value(y) - float(np.dot(m.gradient(y), x - y))


def kl_project_simplex(eta) -> np.ndarray:
    """Generalized-KL (I-)projection of a positive vector onto the simplex.

    The minimizer of ``generalized_kl(xi, eta)`` over simplex points ``xi`` is
    plain normalization, ``eta / sum(eta)``.
    """
    eta = as_positive_vector(eta)
    return eta / eta.sum()


def mirror_to_dual(x) -> np.ndarray:
    """Dual coordinates ``mu = 1 + log x`` of a positive vector."""
    return 1.0 + np.log(as_positive_vector(x))


def dual_to_primal(mu) -> np.ndarray:
    return np.exp(_vector(mu, "dual point") - 1.0)


def as_interior_point(x, min_dim: int = MIN_DIM) -> np.ndarray:
    """Validate a simplex point with every coordinate strictly positive."""
    arr = as_simplex_point(x, min_dim=min_dim)
    if np.any(arr <= 0):
        raise DomainError("point must lie in the interior of the simplex")
    return arr
