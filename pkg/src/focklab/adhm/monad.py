"""The two-step monad complex attached to an ADHM datum.

In homogeneous coordinates [z0 : z1 : z2] the maps are

    sigma = (B1 z0 - z1 ; B2 z0 - z2 ; j z0)        V -> V + V + W
    tau   = (-(B2 z0 - z2), B1 z0 - z1, i z0)       V + V + W -> V

and tau sigma = mu_C(d) z0^2 identically: the z0^2 coefficient is the complex
moment map and every other quadratic coefficient cancels, so the pair is a
complex exactly when the complex ADHM equation holds.
"""

from __future__ import annotations

import numpy as np

from .data import ADHMData

MONOMIALS = ("z0*z0", "z0*z1", "z0*z2", "z1*z1", "z1*z2", "z2*z2")


def monad_maps(d: ADHMData):
    """Coefficient matrices ((s0, s1, s2), (t0, t1, t2)) of z0, z1, z2 in
    sigma and tau."""
    n, r = d.n, d.r
    eye = np.eye(n, dtype=complex)
    z_nn = np.zeros((n, n), dtype=complex)
    z_rn = np.zeros((r, n), dtype=complex)
    z_nr = np.zeros((n, r), dtype=complex)
    sigma = (
        np.vstack([d.b1, d.b2, d.j]),
        np.vstack([-eye, z_nn, z_rn]),
        np.vstack([z_nn, -eye, z_rn]),
    )
    tau = (
        np.hstack([-d.b2, d.b1, d.i]),
        np.hstack([z_nn, -eye, z_nr]),
        np.hstack([eye, z_nn, z_nr]),
    )
    return sigma, tau


def sigma_at(d: ADHMData, z) -> np.ndarray:
    """Evaluate sigma at a point [z0 : z1 : z2]."""
    (s0, s1, s2), _ = monad_maps(d)
    z0, z1, z2 = z
    return z0 * s0 + z1 * s1 + z2 * s2


def tau_at(d: ADHMData, z) -> np.ndarray:
    _, (t0, t1, t2) = monad_maps(d)
    z0, z1, z2 = z
    return z0 * t0 + z1 * t1 + z2 * t2


def tau_sigma_coefficients(d: ADHMData) -> dict[str, np.ndarray]:
    """The six quadratic coefficient matrices of tau sigma, keyed by monomial."""
    (s0, s1, s2), (t0, t1, t2) = monad_maps(d)
    sigma = (s0, s1, s2)
    tau = (t0, t1, t2)
    out = {}
    for a in range(3):
        for b in range(a, 3):
            coeff = tau[a] @ sigma[b]
            if a != b:
                coeff = coeff + tau[b] @ sigma[a]
            out[f"z{a}*z{b}"] = coeff
    return out


def check_complex(d: ADHMData) -> bool:
    """True iff tau sigma vanishes identically, i.e. iff mu_C(d) = 0.

    All coefficients except z0^2 cancel termwise even in floating point, and
    the z0^2 coefficient equals mu_C(d) exactly, so the comparison is exact.
    """
    return all(np.all(coeff == 0) for coeff in tau_sigma_coefficients(d).values())


def residual_z0z0(d: ADHMData) -> np.ndarray:
    """The z0^2 coefficient of tau sigma; equals the complex moment map."""
    return tau_sigma_coefficients(d)["z0*z0"]
