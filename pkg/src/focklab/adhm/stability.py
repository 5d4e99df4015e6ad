"""Stability of ADHM data: no proper subspace of V contains the image of i
and is invariant under both B1 and B2.

The check grows the smallest invariant subspace containing Im(i) (Krylov
closure) and compares its dimension with n.  Gaussian-integer data is decided
exactly over the rationals; floating data uses an orthonormal-basis sweep with
a singular-value threshold.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .data import ADHMData

FLOAT_RANK_TOL = 1e-9


def stability_check(d: ADHMData, tol: float = FLOAT_RANK_TOL) -> bool:
    if d.n == 0:
        return True
    if d.is_integral():
        return _closure_dim_exact(d) == d.n
    return _closure_dim_float(d, tol) == d.n


# --- exact path over Q(i) -------------------------------------------------
# a complex rational is a pair (re, im) of Fractions; vectors are tuples


def _qc(z: complex):
    return (Fraction(int(round(z.real))), Fraction(int(round(z.imag))))


def _qc_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _qc_div(x, y):
    den = y[0] * y[0] + y[1] * y[1]
    return ((x[0] * y[0] + x[1] * y[1]) / den, (x[1] * y[0] - x[0] * y[1]) / den)


def _qc_sub(x, y):
    return (x[0] - y[0], x[1] - y[1])


_QC_ZERO = (Fraction(0), Fraction(0))


def _reduce_rows(rows):
    """Reduced nonzero rows of a matrix over Q(i); len(result) is the rank."""
    basis = []
    pivots = []
    for row in rows:
        row = list(row)
        for pivot_col, pivot_row in zip(pivots, basis):
            if row[pivot_col] != _QC_ZERO:
                factor = row[pivot_col]
                row = [_qc_sub(v, _qc_mul(factor, p)) for v, p in zip(row, pivot_row)]
        lead = next((c for c, v in enumerate(row) if v != _QC_ZERO), None)
        if lead is None:
            continue
        inv_pivot = row[lead]
        row = [_qc_div(v, inv_pivot) for v in row]
        basis.append(row)
        pivots.append(lead)
    return basis, pivots


def _closure_dim_exact(d: ADHMData) -> int:
    n = d.n
    b1 = [[_qc(d.b1[a, b]) for b in range(n)] for a in range(n)]
    b2 = [[_qc(d.b2[a, b]) for b in range(n)] for a in range(n)]
    vectors = [[_qc(d.i[a, c]) for a in range(n)] for c in range(d.r)]
    basis, pivots = _reduce_rows(vectors)
    while True:
        grown = False
        candidates = []
        for row in basis:
            for mat in (b1, b2):
                out = []
                for a in range(n):
                    acc = _QC_ZERO
                    for b in range(n):
                        if row[b] != _QC_ZERO and mat[a][b] != _QC_ZERO:
                            prod = _qc_mul(mat[a][b], row[b])
                            acc = (acc[0] + prod[0], acc[1] + prod[1])
                    out.append(acc)
                candidates.append(out)
        new_basis, new_pivots = _reduce_rows(basis + candidates)
        if len(new_basis) > len(basis):
            basis, pivots = new_basis, new_pivots
            grown = True
        if not grown or len(basis) == n:
            return len(basis)


# --- floating path --------------------------------------------------------


def _orth(columns: np.ndarray, threshold: float) -> np.ndarray:
    if columns.size == 0:
        return np.zeros((columns.shape[0], 0), dtype=complex)
    u, s, _ = np.linalg.svd(columns, full_matrices=False)
    return u[:, s > threshold]


def _closure_dim_float(d: ADHMData, tol: float) -> int:
    threshold = tol * d.scale()
    q = _orth(d.i, threshold)
    while True:
        candidates = np.hstack([q, d.b1 @ q, d.b2 @ q])
        grown = _orth(candidates, threshold)
        if grown.shape[1] == q.shape[1] or grown.shape[1] == d.n:
            return grown.shape[1]
        q = grown
