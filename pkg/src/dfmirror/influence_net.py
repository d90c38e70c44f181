"""Relative interaction matrices, their digraphs, and eigenvector centrality."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    DimensionTooSmall,
    NegativeEntry,
    NoConvergence,
    NonSquare,
    NonzeroDiagonal,
    NotIrreducible,
    RowSumViolation,
    ValidationError,
)

ROW_SUM_TOL = 1e-12


@dataclass(frozen=True)
class InteractionMatrix:
    """A validated row-stochastic, zero-diagonal, irreducible matrix."""

    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)


@dataclass(frozen=True)
class CentralityVector:
    """Perron-Frobenius left eigenvector ``c`` of C together with ``||c^T C - c^T||_inf``."""

    c: np.ndarray
    residual: float = 0.0

    @property
    def n(self) -> int:
        return self.c.size

    def __array__(self, dtype=None, copy=None):
        return self.c if dtype is None else self.c.astype(dtype)


@dataclass(frozen=True)
class TopologyReport:
    irreducible: bool
    star_center: Optional[int] = None


def _edges(a: np.ndarray) -> np.ndarray:
    adj = a > 0
    np.fill_diagonal(adj, False)
    return adj


def _reaches_all(adj: np.ndarray, root: int = 0) -> bool:
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[root] = True
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in np.flatnonzero(adj[u] & ~seen):
            seen[v] = True
            queue.append(v)
    return bool(seen.all())


def is_irreducible(c_matrix) -> bool:
    """True iff the digraph of positive off-diagonal entries is strongly connected.

    One breadth-first search from node 0 on the digraph and one on its
    reverse; strongly connected iff both reach every node.
    """
    a = np.asarray(c_matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquare(a.shape)
    if a.shape[0] == 0:
        return False
    adj = _edges(a)
    return _reaches_all(adj) and _reaches_all(adj.T)


def validate_interaction_matrix(raw) -> InteractionMatrix:
    """Check every structural assumption on ``raw`` and wrap it.

    Checks run in a fixed order (shape, dimension, sign, diagonal, row sums,
    irreducibility) and the first violation is raised.
    """
    a = np.array(raw, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquare(a.shape)
    n = a.shape[0]
    if n < 3:
        raise DimensionTooSmall(n)
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix has non-finite entries")
    neg = np.argwhere(a < 0)
    if neg.size:
        i, j = (int(k) for k in neg[0])
        raise NegativeEntry(i, j, float(a[i, j]))
    diag = np.flatnonzero(np.diag(a) != 0)
    if diag.size:
        i = int(diag[0])
        raise NonzeroDiagonal(i, float(a[i, i]))
    sums = a.sum(axis=1)
    bad = np.flatnonzero(np.abs(sums - 1.0) > ROW_SUM_TOL)
    if bad.size:
        i = int(bad[0])
        raise RowSumViolation(i, float(sums[i]))
    if not is_irreducible(a):
        raise NotIrreducible()
    a.setflags(write=False)
    return InteractionMatrix(a)


def star_topology(c_matrix) -> TopologyReport:
    """Find a centre node touching every edge, if there is one.

    Candidates are scanned in index order, so with several centres the
    smallest index wins.
    """
    a = np.asarray(c_matrix, dtype=float)
    irreducible = is_irreducible(a)
    if not irreducible:
        return TopologyReport(False, None)
    adj = _edges(a)
    src, dst = np.nonzero(adj)
    for i in range(a.shape[0]):
        if np.all((src == i) | (dst == i)):
            return TopologyReport(True, i)
    return TopologyReport(True, None)


def perron_left_eigenvector(c_matrix, tol: float = 1e-14, max_iter: int = 100_000) -> CentralityVector:
    """Left Perron vector of a row-stochastic irreducible matrix.

    Parameters
    ----------
    c_matrix : InteractionMatrix or (n, n) array
        Row-stochastic, irreducible matrix.
    tol : float
        Stop once ``||c^T C - c^T||_inf <= tol``.
    max_iter : int
        Iteration budget.

    Returns
    -------
    CentralityVector
        ``c`` normalized to unit sum, with the achieved residual.

    Notes
    -----
    Power iteration runs on the lazy matrix ``(C + I) / 2``, which is
    primitive even when C is periodic (a directed cycle, say) and shares its
    left Perron vector with C. The start is the uniform vector.
    """
    a = np.asarray(c_matrix, dtype=float)
    n = a.shape[0]
    lazy = 0.5 * (a + np.eye(n))
    c = np.full(n, 1.0 / n)
    residual = float(np.max(np.abs(c @ a - c)))
    for _ in range(max_iter):
        if residual <= tol:
            return CentralityVector(c, residual)
        c = c @ lazy
        c /= c.sum()
        residual = float(np.max(np.abs(c @ a - c)))
    if residual <= tol:
        return CentralityVector(c, residual)
    raise NoConvergence(max_iter, residual)
