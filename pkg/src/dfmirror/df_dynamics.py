"""The DeGroot-Friedkin map ``x -> normalize(c / (1 - x))`` and its fixed points."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergedToVertex, DomainError, NoConvergence
from .simplex_core import as_interior_point, as_simplex_point, uniform

# max coordinate above this counts as convergence to a vertex
VERTEX_TOL = 1e-9
# an interior fixed point needs every c_i < 1/2; at 1/2 only vertices remain
STAR_CENTRALITY = 0.5 - 1e-12


@dataclass(frozen=True)
class Trajectory:
    """Iterates of the map, one row per point, starting with the initial state."""

    points: np.ndarray
    converged: bool
    iterations: int
    final_step_norm: float

    @property
    def final(self) -> np.ndarray:
        return self.points[-1]


def _vertex_index(x: np.ndarray):
    hits = np.flatnonzero(x == 1.0)
    return int(hits[0]) if hits.size else None


def _step(x: np.ndarray, c: np.ndarray) -> np.ndarray:
    i = _vertex_index(x)
    if i is not None:
        e = np.zeros_like(x)
        e[i] = 1.0
        return e
    y = c / (1.0 - x)
    return y / y.sum()


def df_map(x, c) -> np.ndarray:
    """One step of the DeGroot-Friedkin map.

    A vertex ``e_i`` (some coordinate exactly 1) is returned unchanged;
    otherwise the result is ``c / (1 - x)`` rescaled to unit sum.
    """
    return _step(as_simplex_point(x), as_interior_point(c))


def advance(points, c, steps: int) -> np.ndarray:
    """Apply the map ``steps`` times to one point or to each row of a batch.

    Nothing is recorded along the way, which makes this the tool for very
    long orbits (near-star networks converge sublinearly).
    """
    c = as_interior_point(c)
    x = np.array(points, dtype=float)
    single = x.ndim == 1
    x = np.atleast_2d(x)
    for row in x:
        as_simplex_point(row)
    start = x.copy()
    moving = ~np.any(x == 1.0, axis=1)
    # row-sum by matmul against ones; buffers reused to keep per-step cost low
    z = np.ascontiguousarray(x[moving])
    ones = np.ones((z.shape[1], 1))
    tot = np.empty((z.shape[0], 1))
    with np.errstate(divide="ignore", invalid="ignore"):
        for _ in range(steps):
            np.subtract(1.0, z, out=z)
            np.divide(c, z, out=z)
            np.matmul(z, ones, out=tot)
            np.divide(z, tot, out=z)
    x[moving] = z
    # a row that rounded onto a vertex mid-orbit turns into nan; redo it exactly
    for r in np.flatnonzero(~np.all(np.isfinite(x), axis=1)):
        xr = start[r]
        for _ in range(steps):
            xr = _step(xr, c)
        x[r] = xr
    return x[0] if single else x


def iterate(x0, c, tol: float = 1e-12, max_iter: int = 100_000) -> Trajectory:
    """Run the map from ``x0`` until the sup-norm step drops below ``tol``.

    Every iterate is kept. Running out of iterations is not an error; the
    trajectory comes back with ``converged=False``. A vertex start yields a
    one-point converged trajectory.
    """
    x = as_simplex_point(x0)
    c = as_interior_point(c)
    if _vertex_index(x) is not None:
        return Trajectory(x[None, :].copy(), True, 0, 0.0)
    points = [x]
    step_norm = float("inf")
    converged = False
    k = 0
    while k < max_iter:
        x_new = _step(x, c)
        step_norm = float(np.max(np.abs(x_new - x)))
        points.append(x_new)
        x = x_new
        k += 1
        if step_norm < tol:
            converged = True
            break
    return Trajectory(np.array(points), converged, k, step_norm)


def solve_fixed_point(c, tol: float = 1e-12, max_iter: int = 100_000, x0=None, full_output: bool = False):
    """Non-autocratic fixed point of the map for centrality ``c``.

    Plain iteration of the map from the barycentre (or ``x0``) until the
    sup-norm step is below ``tol``.

    Raises
    ------
    ConvergedToVertex
        If some ``c_i`` reaches 1/2 (no interior fixed point exists, the star
        case) or an iterate comes within ``VERTEX_TOL`` of a vertex.
    NoConvergence
        If ``max_iter`` steps are exhausted.

    With ``full_output=True`` returns ``(x, info)`` where ``info`` holds
    ``iterations`` and ``step_norm``.
    """
    c = as_interior_point(c)
    if c.max() >= STAR_CENTRALITY:
        raise ConvergedToVertex(int(np.argmax(c)))
    x = uniform(c.size) if x0 is None else as_interior_point(x0)
    step_norm = float("inf")
    for k in range(1, max_iter + 1):
        x_new = _step(x, c)
        step_norm = float(np.max(np.abs(x_new - x)))
        x = x_new
        if x.max() > 1.0 - VERTEX_TOL:
            raise ConvergedToVertex(int(np.argmax(x)))
        if step_norm < tol:
            if full_output:
                return x, {"iterations": k, "step_norm": step_norm}
            return x
    raise NoConvergence(max_iter, step_norm)


def c_from_xstar(x) -> np.ndarray:
    """Centrality vector whose fixed point is ``x``: ``x(1-x) / (1 - ||x||^2)``."""
    x = as_simplex_point(x)
    if np.any(x <= 0) or np.any(x >= 1):
        raise DomainError("fixed point must lie in the open simplex")
    return x * (1.0 - x) / (1.0 - np.dot(x, x))
