"""Cross-equivalence checks for one network, as run by ``dfmirror verify``.

The dynamics always run on the Perron vector computed from the matrix.
The certificate checks (eigenvector residual, KKT, inverse map) are made
against the *claimed* centrality, which is the same vector unless an
override is supplied; a corrupted claim therefore fails them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .descent_engines import entropic_md_step, grid_minimize_oracle, natural_gradient_step
from .df_dynamics import advance, c_from_xstar, df_map, solve_fixed_point
from .influence_net import perron_left_eigenvector
from .sampling import SplitMix64
from .simplex_core import as_interior_point, dual_to_primal, mirror_to_dual
from .variational import kkt_report, subgradient

MD_TOL = 1e-13
NGD_TOL = 1e-12
KKT_TOL = 1e-10
FEAS_TOL = 1e-12
ROUND_TRIP_TOL = 1e-8
PERM_TOL = 1e-10
EIG_TOL = 1e-12
CENTROID_TOL = 1e-10


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    detail: str


def _interior_sample(gen: SplitMix64, n: int) -> np.ndarray:
    # keep away from the boundary so the overflow guard never trips
    while True:
        x = gen.simplex_point(n)
        if x.min() > 1e-6:
            return x


def _permutation(gen: SplitMix64, n: int) -> np.ndarray:
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = gen.next_u64() % (i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return np.array(perm)


def run_verification(matrix, claimed=None, seed: int = 0, h: float = 1.0) -> list[PropertyResult]:
    a = np.asarray(matrix, dtype=float)
    n = a.shape[0]
    c = perron_left_eigenvector(a).c
    claim = c if claimed is None else as_interior_point(claimed)
    gen = SplitMix64(seed)
    results = []

    def add(name, value, tol):
        results.append(PropertyResult(name, bool(value <= tol), f"{value:.3e} <= {tol:.3g}"))

    add("eigenvector_residual", float(np.max(np.abs(claim @ a - claim))), EIG_TOL)

    worst = 0.0
    for _ in range(100):
        x = _interior_sample(gen, n)
        target = df_map(x, c)
        for step in sorted({0.1, 1.0, 10.0, float(h)}):
            y = entropic_md_step(x, subgradient(x, c, step), step)
            worst = max(worst, float(np.max(np.abs(y - target))))
    add("md_equals_df", worst, MD_TOL)

    worst = 0.0
    for _ in range(20):
        x = _interior_sample(gen, n)
        mu = mirror_to_dual(x)
        for _ in range(25):
            mu = natural_gradient_step(mu, c)
        worst = max(worst, float(np.max(np.abs(dual_to_primal(mu) - advance(x, c, 25)))))
    add("ngd_equals_df", worst, NGD_TOL)

    x_star = solve_fixed_point(c)
    add("fixed_point_residual", float(np.max(np.abs(df_map(x_star, c) - x_star))), 1e-12)
    kkt = kkt_report(x_star, claim)
    add("kkt_stationarity", kkt.max_stationarity, KKT_TOL)
    add("kkt_feasibility", abs(kkt.feasibility), FEAS_TOL)
    add("inverse_map_round_trip", float(np.max(np.abs(c_from_xstar(x_star) - claim))), ROUND_TRIP_TOL)

    worst = 0.0
    for _ in range(20):
        p = _permutation(gen, n)
        worst = max(worst, float(np.max(np.abs(solve_fixed_point(c[p]) - x_star[p]))))
    add("permutation_equivariance", worst, PERM_TOL)

    if n == 3:
        res = 400
        sample = grid_minimize_oracle(c, res)
        add("grid_oracle", float(np.max(np.abs(sample.point - x_star))), 1.0 / res)

    if np.max(np.abs(c - 1.0 / n)) <= 1e-12:
        add("centroid", float(np.max(np.abs(x_star - 1.0 / n))), CENTROID_TOL)

    return results
