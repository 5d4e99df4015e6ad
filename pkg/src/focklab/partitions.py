"""Partition combinatorics: torus fixed points, Morse indices and Betti numbers
of the punctual Hilbert scheme of the affine plane.

A partition here lists the *column sums* of the fixed-point weight diagram, so
``parts[k-1]`` is the height of column ``k`` (columns are non-increasing left
to right; the transpose convention would read rows instead).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .tpoly import TPoly


@dataclass(frozen=True)
class Partition:
    """Non-increasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, each once, in reverse lexicographic order.

    n=3 gives [(3), (2,1), (1,1,1)]; n=0 gives the empty partition.
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n if n else 1)]


@lru_cache(maxsize=None)
def count_with_parts(n: int, k: int) -> int:
    """Number of partitions of n with exactly k parts."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    # strip one column: either drop a part equal to 1, or shrink every part
    return count_with_parts(n - 1, k - 1) + count_with_parts(n - k, k)


def morse_index(p: Partition) -> int:
    """Morse index of the torus potential at the fixed point of p: 2n - 2(#parts)."""
    return 2 * p.n - 2 * len(p)


def betti_c2(n: int) -> list[int]:
    """Even Betti numbers [b_0, b_2, ..., b_{2n-2}] of the n-point Hilbert
    scheme of the plane; b_{2i} counts partitions of n into n - i parts.
    Odd Betti numbers all vanish.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return [count_with_parts(n, n - i) for i in range(n)]


def poincare_c2(n: int) -> TPoly:
    """Poincare polynomial sum_i b_{2i} t^{2i} of the n-point Hilbert scheme."""
    betti = betti_c2(n)
    coeffs = [0] * (2 * n - 1)
    for i, b in enumerate(betti):
        coeffs[2 * i] = b
    return TPoly(coeffs)


def young_cells(p: Partition) -> list[tuple[int, int]]:
    """Cells (k, l) of the weight diagram of p: column k in 1..len(p), row
    l in 0..parts[k-1]-1.  Exactly n cells; column heights non-increasing.
    """
    return [(k, l) for k in range(1, len(p.parts) + 1) for l in range(p.parts[k - 1])]
