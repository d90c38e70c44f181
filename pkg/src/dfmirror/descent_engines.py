"""Three solver views of the same recursion, the I/M projections, and a grid oracle.

* entropic mirror descent: ``x <- normalize(x * exp(-h g))``
* proximal recursion: ``argmin KL(x || x_prev) + h <g, x>`` (same closed form)
* natural gradient descent in dual coordinates ``mu = 1 + log x``
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .df_dynamics import Trajectory
from .errors import DomainError, NumericRange, UnsupportedDimension
from .simplex_core import (
    NEGATIVE_ENTROPY,
    MirrorMap,
    as_interior_point,
    as_positive_vector,
    bregman_divergence,
    kl_project_simplex,
)
from .variational import subgradient

EXP_LIMIT = 700.0


@dataclass(frozen=True)
class GridSample:
    point: np.ndarray
    value: float


def _tilt(x: np.ndarray, g, h: float) -> np.ndarray:
    g = np.asarray(g, dtype=float)
    if g.shape != x.shape:
        raise DomainError("gradient has the wrong shape")
    if not h > 0:
        raise DomainError(f"step size h must be positive, got {h}")
    expo = -h * g
    if np.any(expo > EXP_LIMIT):
        raise NumericRange(f"exponent {expo.max():.6g} exceeds {EXP_LIMIT}")
    return kl_project_simplex(x * np.exp(expo))


def entropic_md_step(x, g, h: float) -> np.ndarray:
    """Mirror-descent step for the negative-entropy mirror map.

    Dual update ``y = x * exp(-h g)`` followed by the KL projection
    ``y / sum(y)``.
    """
    return _tilt(as_interior_point(x), g, float(h))


def proximal_step(x_prev, g, h: float) -> np.ndarray:
    """Solve ``argmin_x KL(x || x_prev) + h <g, x>`` over the simplex.

    The stationarity condition gives ``x ∝ x_prev * exp(-h g)``, the very
    update of :func:`entropic_md_step`.
    """
    return _tilt(as_interior_point(x_prev), g, float(h))


def md_solve(c, x0, h: float = 1.0, tol: float = 1e-12, max_iter: int = 100_000) -> Trajectory:
    """Entropic mirror descent on the canonical objective.

    The gradient is re-evaluated at every iterate, which reproduces the
    DeGroot-Friedkin iterates step for step, whatever ``h`` is.
    """
    c = as_interior_point(c)
    x = as_interior_point(x0)
    points = [x]
    step_norm = float("inf")
    converged = False
    k = 0
    while k < max_iter:
        x_new = entropic_md_step(x, subgradient(x, c, h), h)
        step_norm = float(np.max(np.abs(x_new - x)))
        points.append(x_new)
        x = x_new
        k += 1
        if step_norm < tol:
            converged = True
            break
    return Trajectory(np.array(points), converged, k, step_norm)


def natural_gradient_step(mu, c) -> np.ndarray:
    """Projected natural-gradient step on the dual manifold.

    The unprojected move lands on ``lam = log(c / (e - exp(mu)))``; the
    Bregman projection of the conjugate map then gives
    ``mu' = lam - log(sum(exp(lam - 1)))``.
    """
    mu = np.asarray(mu, dtype=float)
    c = as_interior_point(c)
    if mu.shape != c.shape or not np.all(np.isfinite(mu)):
        raise DomainError("dual point must be finite and match c")
    x = np.exp(mu - 1.0)
    if abs(x.sum() - 1.0) > 1e-9:
        raise DomainError(f"dual point maps to a vector summing to {x.sum()!r}")
    gap = np.e - np.exp(mu)
    if np.any(gap <= 0):
        raise DomainError("dual point maps to a simplex vertex")
    lam = np.log(c / gap)
    return lam - np.log(np.sum(np.exp(lam - 1.0)))


def dual_bregman_check(m: MirrorMap, x, y) -> tuple[float, float]:
    """Return ``(D_psi*(mu, lam), D_psi(y, x))`` with ``mu, lam`` the dual images of ``x, y``.

    The two numbers agree whenever ``m.conjugate`` is the conjugate of ``m``.
    """
    if m.conjugate is None:
        raise DomainError(f"mirror map {m.name!r} has no conjugate")
    x = m.check(x)
    y = m.check(y)
    mu, lam = m.gradient(x), m.gradient(y)
    dual = m.conjugate(mu) - m.conjugate(lam) - float(np.dot(m.gradient_inverse(lam), mu - lam))
    return dual, bregman_divergence(m, y, x)


def m_project_simplex(y) -> np.ndarray:
    """M-projection ``argmin_x D(y, x)`` over the simplex; it is ``y / sum(y)``."""
    y = as_positive_vector(y)
    return y / np.sum(y)


def barycentric_grid(resolution: int, interior: bool = True) -> np.ndarray:
    """Points ``(i, j, R - i - j) / R`` in lexicographic ``(i, j)`` order."""
    r = int(resolution)
    lo = 1 if interior else 0
    idx = [(i, j) for i in range(lo, r + 1) for j in range(lo, r + 1 - i) if r - i - j >= lo]
    ij = np.array(idx, dtype=float).reshape(-1, 2)
    return np.column_stack([ij[:, 0], ij[:, 1], r - ij[:, 0] - ij[:, 1]]) / r


def objective_grid(c, resolution: int = 200) -> tuple[np.ndarray, np.ndarray]:
    """Canonical objective at every interior grid node of the 2-simplex.

    Vectorized form of ``KL(x || c) + H(1 - x)``.
    """
    c = as_interior_point(c)
    if c.size != 3:
        raise UnsupportedDimension(c.size)
    if resolution < 10:
        raise DomainError("resolution must be at least 10")
    pts = barycentric_grid(resolution)
    comp = 1.0 - pts
    values = np.sum(pts * np.log(pts / c), axis=1) - np.sum(comp * np.log(comp), axis=1)
    return pts, values


def grid_minimize_oracle(c, resolution: int = 200) -> GridSample:
    """Brute-force minimizer of the canonical objective on the barycentric grid.

    Ties go to the lexicographically smallest grid index.
    """
    pts, values = objective_grid(c, resolution)
    k = int(np.argmin(values))
    return GridSample(pts[k], float(values[k]))


def proximal_grid_oracle(x_prev, g, h: float, resolution: int = 400) -> GridSample:
    """Brute-force minimizer of ``KL(x || x_prev) + h <g, x>`` on the interior grid."""
    x_prev = as_interior_point(x_prev)
    if x_prev.size != 3:
        raise UnsupportedDimension(x_prev.size)
    g = np.asarray(g, dtype=float)
    pts = barycentric_grid(resolution)
    values = np.sum(pts * np.log(pts / x_prev), axis=1) + h * pts @ g
    k = int(np.argmin(values))
    return GridSample(pts[k], float(values[k]))

