"""Brute-force references kept separate from the package code paths."""

import math

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section_min(f, a, b, iters=200):
    """Golden-section search for the minimum of a unimodal scalar function."""
    x1, x2 = b - INV_PHI * (b - a), a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
        if b - a < 1e-15 * max(1.0, abs(a)):
            break
    return min(f1, f2)


def inner_conjugate(y):
    """inf_u sum_i [exp(u_i - 1) + u_i + exp(y_i - u_i - 1)], coordinate by coordinate."""
    total = 0.0
    for yi in np.atleast_1d(y):
        g = lambda u, yi=yi: math.exp(u - 1) + u + math.exp(yi - u - 1)
        total += golden_section_min(g, yi - 30, yi + 30)
    return total


def canonical_objective(x, c):
    """KL(x || c) + H(1 - x) written out directly."""
    x, c = np.asarray(x, float), np.asarray(c, float)
    return float(sum(xi * math.log(xi / ci) for xi, ci in zip(x, c)) - sum((1 - xi) * math.log(1 - xi) for xi in x))
