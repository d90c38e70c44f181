"""Platform-independent uniform sampling on the simplex.

The generator is SplitMix64: the state advances by the golden-ratio
increment ``0x9E3779B97F4A7C15`` modulo 2**64 and each output is the
finalizer

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

with all products taken modulo 2**64. The top 53 bits give a uniform
``u = ((z >> 11) + 0.5) / 2**53`` in the open interval (0, 1). A simplex
point is ``n`` unit exponentials ``-log(u)`` divided by their sum, which is
exactly Dirichlet(1, ..., 1).
"""

from __future__ import annotations

import math

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = int(seed) & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return ((self.next_u64() >> 11) + 0.5) / float(1 << 53)

    def simplex_point(self, n: int) -> np.ndarray:
        e = np.array([-math.log(self.uniform()) for _ in range(n)])
        return e / e.sum()


def simplex_starts(seed: int, count: int, n: int) -> np.ndarray:
    """``count`` uniform simplex points in dimension ``n`` from one seed."""
    gen = SplitMix64(seed)
    return np.array([gen.simplex_point(n) for _ in range(count)]).reshape(count, n)
