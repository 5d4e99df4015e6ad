"""Tangent-space dimension of the moment-map quotient and the numeric Morse
index at torus fixed points.

The quotient tangent space at a level-set point is the kernel of the combined
moment-map differential minus the gauge-orbit directions; its real dimension
is 4nr.  At a fixed point the same space carries a torus weight decomposition
computed here from the complex model ker(d mu_C) / im(gauge action), block by
weight, which gives the Morse index of the torus potential.
"""

from __future__ import annotations

import numpy as np

from ..partitions import Partition
from .data import ADHMData, frobenius, mu_complex, mu_real
from .fixed_points import fixed_point_data

DEFAULT_RANK_TOL = 1e-6


class IllConditionedRankError(RuntimeError):
    pass


class NonGenericEpsError(ValueError):
    pass


def _perturbation_basis(n, r):
    """Complex coordinates of the ADHM vector space in a fixed order."""
    coords = []
    coords += [("b1", a, b) for a in range(n) for b in range(n)]
    coords += [("b2", a, b) for a in range(n) for b in range(n)]
    coords += [("i", a, b) for a in range(n) for b in range(r)]
    coords += [("j", a, b) for a in range(r) for b in range(n)]
    return coords


def _delta_matrices(coord, n, r, value=1.0):
    kind, a, b = coord
    db1 = np.zeros((n, n), dtype=complex)
    db2 = np.zeros((n, n), dtype=complex)
    di = np.zeros((n, r), dtype=complex)
    dj = np.zeros((r, n), dtype=complex)
    {"b1": db1, "b2": db2, "i": di, "j": dj}[kind][a, b] = value
    return db1, db2, di, dj


def _dmu_complex(d, delta):
    db1, db2, di, dj = delta
    return db1 @ d.b2 - d.b2 @ db1 + d.b1 @ db2 - db2 @ d.b1 + di @ d.j + d.i @ dj


def _dmu_real(d, delta):
    db1, db2, di, dj = delta
    out = np.zeros((d.n, d.n), dtype=complex)
    for b, db in ((d.b1, db1), (d.b2, db2)):
        bh, dbh = b.conj().T, db.conj().T
        out += db @ bh - bh @ db + b @ dbh - dbh @ b
    out += di @ d.i.conj().T + d.i @ di.conj().T
    out -= dj.conj().T @ d.j + d.j.conj().T @ dj
    return out


def _unitary_basis(n):
    """A real basis of the antihermitian matrices u(V)."""
    basis = []
    for k in range(n):
        m = np.zeros((n, n), dtype=complex)
        m[k, k] = 1j
        basis.append(m)
    for k in range(n):
        for l in range(k + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[k, l], m[l, k] = 1, -1
            basis.append(m)
            m = np.zeros((n, n), dtype=complex)
            m[k, l], m[l, k] = 1j, 1j
            basis.append(m)
    return basis


def _gauge_direction(d, xi):
    return (
        xi @ d.b1 - d.b1 @ xi,
        xi @ d.b2 - d.b2 @ xi,
        xi @ d.i,
        -d.j @ xi,
    )


def _realify(*matrices):
    flat = np.concatenate([m.reshape(-1) for m in matrices])
    return np.concatenate([flat.real, flat.imag])


def _rank(matrix, tol):
    if matrix.size == 0:
        return 0
    s = np.linalg.svd(matrix, compute_uv=False)
    ambiguous = s[(s > tol / 10) & (s < tol * 10)]
    if ambiguous.size:
        raise IllConditionedRankError(
            f"ill-conditioned rank decision: singular value {ambiguous[0]:.3e} near tol {tol:.1e}"
        )
    return int(np.sum(s > tol))


def tangent_dimension(
    d: ADHMData, tol: float = DEFAULT_RANK_TOL, zeta_r: float = -1.0
) -> int:
    """Real dimension of the quotient tangent space at a level-set datum:
    dim ker(d mu_R + d mu_C) minus the dimension of the gauge orbit, both
    decided by singular values against tol.
    """
    n, r = d.n, d.r
    if frobenius(mu_complex(d)) > tol or frobenius(
        mu_real(d) + zeta_r * np.eye(n)
    ) > tol:
        raise ValueError("datum is not on the level set within tol; run the flow first")
    coords = _perturbation_basis(n, r)
    columns = []
    for coord in coords:
        for scalar in (1.0, 1.0j):
            delta = _delta_matrices(coord, n, r, scalar)
            columns.append(_realify(_dmu_complex(d, delta), _dmu_real(d, delta)))
    jac = np.array(columns).T if columns else np.zeros((0, 0))
    kernel_dim = 2 * len(coords) - _rank(jac, tol)
    orbit_cols = [_realify(*_gauge_direction(d, xi)) for xi in _unitary_basis(n)]
    orbit = np.array(orbit_cols).T if orbit_cols else np.zeros((0, 0))
    orbit_dim = _rank(orbit, tol)
    return kernel_dim - orbit_dim


# --- Morse index at a fixed point ------------------------------------------


def _coordinate_weight(coord, cells):
    """Weight of one complex coordinate of the ADHM space under the induced
    torus action at the fixed point (the raw scaling composed with the inverse
    of the compensating gauge transformation, which fixes the datum)."""
    kind, a, b = coord
    if kind == "b1":
        (ka, la), (kb, lb) = cells[a], cells[b]
        return (1 + kb - ka, lb - la)
    if kind == "b2":
        (ka, la), (kb, lb) = cells[a], cells[b]
        return (kb - ka, 1 + lb - la)
    if kind == "i":
        ka, la = cells[a]
        return (1 - ka, -la)
    ka, la = cells[b]  # j column
    return (ka, 1 + la)


def tangent_weight_multiplicities(p: Partition) -> dict[tuple[int, int], int]:
    """Torus weights on the quotient tangent space at the fixed point of p,
    with complex multiplicities: per weight block, dim ker of the complex
    moment-map differential minus the rank of the gauge action.
    """
    d, weights = fixed_point_data(p)
    n, r = d.n, d.r
    cells = weights.cells
    coords = _perturbation_basis(n, r)
    rank_tol = 1e-7  # blocks are small integer matrices, spectra are O(1)

    by_weight: dict[tuple[int, int], list[int]] = {}
    for pos, coord in enumerate(coords):
        by_weight.setdefault(_coordinate_weight(coord, cells), []).append(pos)

    gauge_by_weight: dict[tuple[int, int], list[np.ndarray]] = {}
    for u in range(n):
        for v in range(n):
            xi = np.zeros((n, n), dtype=complex)
            xi[u, v] = 1
            w = (cells[v][0] - cells[u][0], cells[v][1] - cells[u][1])
            gauge_by_weight.setdefault(w, []).append(
                np.concatenate([m.reshape(-1) for m in _gauge_direction(d, xi)])
            )

    out: dict[tuple[int, int], int] = {}
    for w, positions in by_weight.items():
        cols = []
        for pos in positions:
            delta = _delta_matrices(coords[pos], n, r)
            cols.append(_dmu_complex(d, delta).reshape(-1))
        mu_block = np.array(cols).T
        ker = len(positions) - _rank(mu_block, rank_tol)
        gauge_cols = gauge_by_weight.get(w, [])
        gauge_rank = _rank(np.array(gauge_cols).T, rank_tol) if gauge_cols else 0
        mult = ker - gauge_rank
        if mult < 0:
            raise RuntimeError(f"gauge directions escape the kernel at weight {w}")
        if mult:
            out[w] = mult
    if sum(out.values()) != 2 * n * r:
        raise RuntimeError(
            f"tangent weights sum to {sum(out.values())}, expected {2 * n * r}"
        )
    return out


def morse_index_numeric(p: Partition, eps: float = 0.01) -> int:
    """Morse index of the torus potential at the fixed point of p, counted
    from the tangent weights: a weight space is a descending direction when
    its pairing with the potential's circle direction is negative, and each
    complex dimension contributes two real ones.

    Of the two transpose-related orientations of the weight lattice, the one
    used here is validated by the combinatorial index 2n - 2(#parts) (the
    aggregate Betti counts cannot tell them apart): the descending condition
    reads l < 0, or l = 0 and k < 0, with eps tilting the circle direction to
    (eps, 1).  eps must pair nonzero with every occurring weight and be small
    enough that the pairing sign agrees with that lexicographic rule, else
    the potential is not Morse for this eps and the call fails.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    index = 0
    for (k, l), mult in tangent_weight_multiplicities(p).items():
        pairing = eps * k + l
        negative = l < 0 or (l == 0 and k < 0)
        if abs(pairing) < 1e-12 or (pairing < 0) != negative:
            raise NonGenericEpsError(
                f"choose different eps: weight ({k},{l}) pairs to {pairing}"
            )
        if negative:
            index += 2 * mult
    return index
