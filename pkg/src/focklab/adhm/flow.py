"""Descent to the prescribed level of the real moment map.

For a stable datum on the zero level of the complex moment map and a negative
level parameter zeta_r there is a gauge transformation g in GL(V), unique up
to U(V), moving the datum onto mu_R = -zeta_r Id.  The flow finds g by
backtracking gradient descent on the norm functional

    phi(g) = (|g B1 g^-1|^2 + |g B2 g^-1|^2 + |g i|^2 + |j g^-1|^2) / 2
             + zeta_r * log |det g|

whose critical points are exactly the solutions; the descent direction at the
current datum is the hermitian matrix mu_R + zeta_r Id itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import ADHMData, frobenius, mu_complex, mu_real
from .stability import stability_check


class UnstableDataError(ValueError):
    pass


@dataclass(frozen=True)
class FlowOptions:
    zeta_r: float = -1.0
    step: float = 0.25
    max_iter: int = 10000
    tol: float = 1e-8

    def __post_init__(self):
        if self.zeta_r >= 0:
            raise ValueError("zeta_r must be negative")
        if self.step <= 0 or self.tol <= 0 or self.max_iter < 1:
            raise ValueError("step and tol must be positive, max_iter >= 1")


@dataclass
class FlowResult:
    data: ADHMData
    g: np.ndarray
    residual: float
    iterations: int
    converged: bool


def _expm_pair(h: np.ndarray, s: float):
    """exp(-s h) and its exact inverse exp(s h) for hermitian h."""
    w, u = np.linalg.eigh(h)
    uh = u.conj().T
    return (u * np.exp(-s * w)) @ uh, (u * np.exp(s * w)) @ uh


def _half_norm(d: ADHMData) -> float:
    return 0.5 * (
        frobenius(d.b1) ** 2
        + frobenius(d.b2) ** 2
        + frobenius(d.i) ** 2
        + frobenius(d.j) ** 2
    )


def kempf_ness_flow(d: ADHMData, opts: FlowOptions | None = None) -> FlowResult:
    """Move a stable mu_C = 0 datum onto the level mu_R = -zeta_r Id.

    Returns the transformed datum, the accumulated gauge transformation and
    the final residual |mu_R + zeta_r Id|_F.  Non-convergence within max_iter
    is flagged on the result, never silent; an unstable datum is rejected
    up front since no gauge transformation can reach the level.
    """
    opts = opts or FlowOptions()
    if frobenius(mu_complex(d)) > opts.tol * d.scale():
        raise ValueError("flow needs mu_C = 0 within tolerance")
    if not stability_check(d):
        raise UnstableDataError("flow cannot converge: datum unstable")

    n = d.n
    eye = np.eye(n, dtype=complex)
    g = eye.copy()
    cur = d
    step = opts.step
    if n == 0:
        return FlowResult(cur, g, 0.0, 0, True)
    for iterations in range(1, opts.max_iter + 1):
        h = mu_real(cur) + opts.zeta_r * eye
        residual = frobenius(h)
        if residual <= opts.tol:
            return FlowResult(cur, g, residual, iterations - 1, True)
        base = _half_norm(cur)
        trace_h = float(np.trace(h).real)
        spectral = float(np.linalg.norm(h, 2))
        step = min(step, 20.0 / spectral)  # keep the exponential finite
        while True:
            e, e_inv = _expm_pair(h, step)
            cand = ADHMData(e @ cur.b1 @ e_inv, e @ cur.b2 @ e_inv, e @ cur.i, cur.j @ e_inv)
            # Armijo test against the directional derivative -|h|^2; near the
            # minimum the functional difference drowns in rounding, so a plain
            # residual decrease is also accepted
            decrease = (_half_norm(cand) - step * opts.zeta_r * trace_h) - base
            cand_residual = frobenius(mu_real(cand) + opts.zeta_r * eye)
            if decrease <= -0.25 * step * residual**2 or cand_residual < residual:
                break
            step *= 0.5
            if step < 1e-18:
                return FlowResult(cur, g, residual, iterations, False)
        cur = cand
        g = e @ g
        step = min(step * 1.5, 10.0)
    residual = frobenius(mu_real(cur) + opts.zeta_r * eye)
    return FlowResult(cur, g, residual, opts.max_iter, residual <= opts.tol)


def random_stable_data(n: int, r: int, seed: int) -> ADHMData:
    """Seeded sample from the stable mu_C = 0 locus.

    B1 and B2 are diagonal with pairwise distinct joint eigenvalue pairs,
    every entry of i is bounded away from zero and j = 0, which makes mu_C
    vanish and the datum stable; stability is still re-checked.  Entries are
    dyadic rationals (multiples of 1/64) so that every product in mu_C is
    exactly representable and the moment map evaluates to exactly zero in
    floating point, whatever the summation order.
    """
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    rng = np.random.default_rng(seed)

    def dyadic(low, high, size):
        return rng.integers(low, high + 1, size=size).astype(float) / 64.0

    for _ in range(64):
        ev1 = dyadic(-128, 128, n) + 1j * dyadic(-128, 128, n)
        ev2 = dyadic(-128, 128, n) + 1j * dyadic(-128, 128, n)
        pairs = list(zip(ev1.tolist(), ev2.tolist()))
        if len(set(pairs)) != n:
            continue
        sign = 1.0 - 2.0 * rng.integers(0, 2, size=(n, r))
        re = sign * dyadic(16, 96, (n, r))  # |entry| >= 1/4, never zero
        im = dyadic(-96, 96, (n, r))
        i = re + 1j * im
        j = np.zeros((r, n), dtype=complex)
        datum = ADHMData(np.diag(ev1), np.diag(ev2), i, j)
        if stability_check(datum):
            return datum
    raise RuntimeError(f"no stable sample found for n={n}, r={r}, seed={seed}")


def unitary_invariants(d: ADHMData, max_len: int = 4) -> dict[str, complex]:
    """U(V)-invariants separating gauge-equivalent flow limits: traces of all
    words of length <= max_len in B1, B2 and their adjoints, plus the framing
    pairings i+ i and j j+.
    """
    mats = {
        "a": d.b1,
        "b": d.b2,
        "A": d.b1.conj().T,
        "B": d.b2.conj().T,
    }
    out: dict[str, complex] = {}
    words = [""]
    for _ in range(max_len):
        words = [w + c for w in words for c in "abAB"]
        for w in words:
            m = np.eye(d.n, dtype=complex)
            for c in w:
                m = m @ mats[c]
            out[f"tr({w})"] = complex(np.trace(m))
    ihi = d.i.conj().T @ d.i
    jjh = d.j @ d.j.conj().T
    for a in range(d.r):
        for b in range(d.r):
            out[f"iHi[{a},{b}]"] = complex(ihi[a, b])
            out[f"jjH[{a},{b}]"] = complex(jjh[a, b])
    return out


def invariant_distance(x: dict[str, complex], y: dict[str, complex]) -> float:
    """Max absolute difference over a shared invariant dictionary."""
    if x.keys() != y.keys():
        raise ValueError("invariant dictionaries must share keys")
    return max((abs(x[k] - y[k]) for k in x), default=0.0)
