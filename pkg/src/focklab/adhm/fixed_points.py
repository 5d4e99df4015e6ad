"""Torus fixed points of the rank-one ADHM moduli: one per partition.

The basis of V is indexed by the cells (k, l) of the partition's weight
diagram.  B1 shifts k by one, B2 shifts l by one, i sends the framing
generator to the corner cell (1, 0) and j vanishes, so the complex moment map
is exactly zero and the datum is stable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..partitions import Partition, young_cells
from .data import ADHMData


@dataclass(frozen=True)
class TorusWeights:
    """Weight (k, l) of each basis vector of V, aligned with the basis order."""

    cells: tuple[tuple[int, int], ...]

    def lam(self, t1: complex, t2: complex) -> np.ndarray:
        """The compensating gauge transformation: diag(t1^k t2^l)."""
        return np.diag([t1**k * t2**l for k, l in self.cells]).astype(complex)


def fixed_point_data(p: Partition, r: int = 1) -> tuple[ADHMData, TorusWeights]:
    """The fixed-point datum of a partition, with its torus weights.

    Only r = 1 carries fixed points indexed by partitions.  The empty
    partition yields the degenerate datum with V = 0.
    """
    if r != 1:
        raise ValueError("fixed points indexed by partitions require r = 1")
    cells = sorted(young_cells(p))
    n = len(cells)
    index = {cell: a for a, cell in enumerate(cells)}
    b1 = np.zeros((n, n), dtype=complex)
    b2 = np.zeros((n, n), dtype=complex)
    i = np.zeros((n, 1), dtype=complex)
    j = np.zeros((1, n), dtype=complex)
    for (k, l), a in index.items():
        if (k + 1, l) in index:
            b1[index[(k + 1, l)], a] = 1
        if (k, l + 1) in index:
            b2[index[(k, l + 1)], a] = 1
    if n:
        i[index[(1, 0)], 0] = 1
    return ADHMData(b1, b2, i, j), TorusWeights(tuple(cells))


def equivariance_residual(
    d: ADHMData, weights: TorusWeights, t1: complex, t2: complex
) -> float:
    """How far (t1 B1, t2 B2, t1 i, t2 j) is from the gauge-compensated datum
    (lam B1 lam^-1, lam B2 lam^-1, lam i, j lam^-1); zero at a fixed point.
    """
    lam = weights.lam(t1, t2)
    lam_inv = weights.lam(1 / t1, 1 / t2)
    return max(
        float(np.linalg.norm(t1 * d.b1 - lam @ d.b1 @ lam_inv)),
        float(np.linalg.norm(t2 * d.b2 - lam @ d.b2 @ lam_inv)),
        float(np.linalg.norm(t1 * d.i - lam @ d.i)),
        float(np.linalg.norm(t2 * d.j - d.j @ lam_inv)),
    )
