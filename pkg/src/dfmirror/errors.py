"""Exception hierarchy.

Node and row indices are stored 0-based on the exception object and shown
1-based in messages, matching how the networks are usually written down.
"""


class DfMirrorError(Exception):
    """Base class for every error raised by this package."""


class DomainError(DfMirrorError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class NumericRange(DfMirrorError, ArithmeticError):
    """An exponent argument would overflow double precision."""


class UnsupportedDimension(DfMirrorError, ValueError):
    def __init__(self, n, expected=3):
        self.n = n
        self.expected = expected
        super().__init__(f"dimension {n} not supported (expected n = {expected})")


class ValidationError(DfMirrorError, ValueError):
    """The interaction matrix violates a structural requirement."""


class NonSquare(ValidationError):
    def __init__(self, shape):
        self.shape = tuple(shape)
        super().__init__(f"matrix is not square: shape {self.shape}")


class DimensionTooSmall(ValidationError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"dimension n = {n} is too small (need n >= 3)")


class NegativeEntry(ValidationError):
    def __init__(self, i, j, value):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"negative entry {value!r} at row {i + 1}, column {j + 1}")


class RowSumViolation(ValidationError):
    def __init__(self, i, total):
        self.i, self.total = i, total
        super().__init__(f"row {i + 1} sums to {total!r}, not 1")


class NonzeroDiagonal(ValidationError):
    def __init__(self, i, value):
        self.i, self.value = i, value
        super().__init__(f"nonzero diagonal entry {value!r} in row {i + 1}")


class NotIrreducible(ValidationError):
    def __init__(self):
        super().__init__("associated digraph is not strongly connected")


class NoConvergence(DfMirrorError, RuntimeError):
    def __init__(self, max_iter, residual):
        self.max_iter = max_iter
        self.residual = residual
        super().__init__(
            f"no convergence after {max_iter} iterations (last residual {residual:.3e})"
        )


class ConvergedToVertex(DfMirrorError, RuntimeError):
    """The dynamics head for an autocratic vertex (star topology)."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"iteration converges to the vertex of node {index + 1}")
