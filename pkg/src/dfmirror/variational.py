"""The convex objective minimized by the map, its KKT system, and the Lagrange dual.

The canonical objective is ``KL(x || c) + H(1 - x)``. The step-size form
``(canonical + n - 2) / h`` differs by an affine change that leaves the
argmin alone; both are reported.

The dual pieces (``rho``, ``h_star``, ``dual_function``) are evaluated as
closed forms. Whether the dual optimum meets the primal one is measured by
:func:`dual_scan`, not assumed.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .df_dynamics import solve_fixed_point
from .errors import DomainError
from .simplex_core import as_interior_point, extropy, kl_divergence

log = logging.getLogger("dfmirror.investigation")

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
CONCAVITY_ATOL = 1e-10


@dataclass(frozen=True)
class ObjectiveReport:
    canonical: float
    paper_scaled: float
    h: float


@dataclass(frozen=True)
class KktReport:
    nu: float
    stationarity: np.ndarray
    feasibility: float

    @property
    def max_stationarity(self) -> float:
        return float(np.max(np.abs(self.stationarity)))


@dataclass(frozen=True)
class DualScanResult:
    """Grid scan of the dual function.

    ``best_nu`` / ``best_zeta`` are the grid maximum; ``refined_nu`` /
    ``refined_zeta`` come from golden-section search between the grid
    neighbours of that maximum. ``gap`` is ``primal_value - best_zeta``.
    """

    nu_grid: np.ndarray
    zeta_values: np.ndarray
    best_nu: float
    best_zeta: float
    refined_nu: float
    refined_zeta: float
    primal_value: float
    gap: float

    def concavity_violations(self, atol: float = CONCAVITY_ATOL) -> np.ndarray:
        """Indices ``i`` where ``zeta[i] < (zeta[i-1] + zeta[i+1]) / 2 - atol``."""
        z = self.zeta_values
        mid = 0.5 * (z[:-2] + z[2:])
        return np.flatnonzero(z[1:-1] < mid - atol) + 1

    def is_concave(self, atol: float = CONCAVITY_ATOL) -> bool:
        return self.concavity_violations(atol).size == 0


def _check_h(h: float) -> float:
    h = float(h)
    if not h > 0:
        raise DomainError(f"step size h must be positive, got {h}")
    return h


def _pair(x, c):
    x = as_interior_point(x)
    c = as_interior_point(c)
    if x.shape != c.shape:
        raise DomainError("dimension mismatch")
    return x, c


def objective(x, c, h: float = 1.0) -> ObjectiveReport:
    """Evaluate ``KL(x || c) + H(1 - x)`` at an interior point, plus its scaled form."""
    x, c = _pair(x, c)
    h = _check_h(h)
    canonical = kl_divergence(x, c) + extropy(x)
    return ObjectiveReport(canonical, (canonical + x.size - 2) / h, h)


def entropy_difference_form(x, c) -> float:
    """The same canonical objective written as ``H(1 - x) - H(x) - <log c, x>``."""
    x, c = _pair(x, c)
    one_minus = 1.0 - x
    h_comp = -float(np.sum(one_minus * np.log(one_minus)))
    h_x = -float(np.sum(x * np.log(x)))
    return h_comp - h_x - float(np.dot(np.log(c), x))


def subgradient(x, c, h: float = 1.0) -> np.ndarray:
    """``(1/h) log(x (1 - x) / c)``, the gradient that turns the map into mirror descent."""
    x, c = _pair(x, c)
    h = _check_h(h)
    return np.log(x * (1.0 - x) / c) / h


def kkt_report(x, c) -> KktReport:
    """KKT residuals at ``x`` with the multiplier from ``exp(-(nu + 2)) = 1 - ||x||^2``.

    Stationarity reads ``x_i^2 - x_i + c_i exp(-(nu + 2)) = 0`` for each i;
    feasibility is ``sum(x) - 1``.
    """
    x, c = _pair(x, c)
    slack = 1.0 - float(np.dot(x, x))
    if slack <= 0:
        raise DomainError("||x||^2 must be below 1")
    nu = -2.0 - math.log(slack)
    stationarity = x * x - x + c * math.exp(-(nu + 2.0))
    return KktReport(nu, stationarity, float(np.sum(x) - 1.0))


def multiplier(x) -> float:
    """``nu = -2 - log(1 - ||x||^2)``."""
    x = np.asarray(x, dtype=float)
    return -2.0 - math.log(1.0 - float(np.dot(x, x)))


def rho(y):
    """Positive root of ``a^2 + a = exp(y - 2)``.

    Equal to ``-1/2 + sqrt(1/4 + exp(y - 2))``, computed as
    ``t / (1/2 + sqrt(1/4 + t))`` so it keeps full precision for very
    negative ``y``.
    """
    t = np.exp(np.asarray(y, dtype=float) - 2.0)
    r = t / (0.5 + np.sqrt(0.25 + t))
    return float(r) if np.ndim(r) == 0 else r


def h_star(y) -> float:
    """Closed-form conjugate ``sum_i [rho + 1 + log rho + exp(y_i - 2) / rho]``."""
    y = np.atleast_1d(np.asarray(y, dtype=float))
    r = rho(y)
    return float(np.sum(r + 1.0 + np.log(r) + np.exp(y - 2.0) / r))


def dual_function(nu: float, c) -> float:
    """``zeta(nu) = -nu - h_star(-nu + log c)``."""
    c = as_interior_point(c)
    return -float(nu) - h_star(-float(nu) + np.log(c))


def _golden_max(f, a: float, b: float, tol: float = 1e-10):
    x1 = b - GOLDEN * (b - a)
    x2 = a + GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = f(x2)
    xm = 0.5 * (a + b)
    return xm, f(xm)


def dual_scan(c, nu_min: float | None = None, nu_max: float | None = None, samples: int = 2001) -> DualScanResult:
    """Scan the dual function on a uniform grid of multipliers.

    Parameters
    ----------
    c : array_like
        Interior centrality vector.
    nu_min, nu_max : float, optional
        Bracket. Defaults to ``nu_hat -/+ 10`` where ``nu_hat`` is the
        multiplier at the solved fixed point.
    samples : int
        Number of grid points (at least 2).

    Returns
    -------
    DualScanResult
        The scan, its maximum, and the measured primal-dual gap.
    """
    c = as_interior_point(c)
    x_star = solve_fixed_point(c)
    primal = objective(x_star, c).canonical
    nu_hat = multiplier(x_star)
    lo = nu_hat - 10.0 if nu_min is None else float(nu_min)
    hi = nu_hat + 10.0 if nu_max is None else float(nu_max)
    if not lo < hi:
        raise DomainError("need nu_min < nu_max")
    if samples < 2:
        raise DomainError("need at least 2 samples")
    grid = np.linspace(lo, hi, samples)
    zeta = np.array([dual_function(nu, c) for nu in grid])
    k = int(np.argmax(zeta))
    a = grid[max(k - 1, 0)]
    b = grid[min(k + 1, samples - 1)]
    refined_nu, refined_zeta = _golden_max(lambda nu: dual_function(nu, c), a, b)
    if refined_zeta < zeta[k]:
        refined_nu, refined_zeta = float(grid[k]), float(zeta[k])
    result = DualScanResult(
        nu_grid=grid,
        zeta_values=zeta,
        best_nu=float(grid[k]),
        best_zeta=float(zeta[k]),
        refined_nu=float(refined_nu),
        refined_zeta=float(refined_zeta),
        primal_value=primal,
        gap=primal - float(zeta[k]),
    )
    log.info(
        "dual scan c=%s bracket=[%.6g, %.6g] nu_hat=%.17g best_nu=%.17g best_zeta=%.17g primal=%.17g gap=%.17g",
        np.array2string(c, precision=17), lo, hi, nu_hat, result.best_nu, result.best_zeta, primal, result.gap,
    )
    return result
