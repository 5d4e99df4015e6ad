"""ADHM matrix data and the complex/real moment maps.

A datum is a quadruple (B1, B2, i, j) with B1, B2 endomorphisms of V = C^n,
i: W -> V and j: V -> W for W = C^r.  The composite i j appearing in the
complex moment map forces j to map V to W, so that is the type used here.

JSON schema (round-trip safe): an object with integer fields "n", "r" and
matrix fields "B1", "B2", "i", "j", each a row-major list of rows whose
entries are two-element lists [re, im].
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ADHMData:
    b1: np.ndarray
    b2: np.ndarray
    i: np.ndarray
    j: np.ndarray

    def __post_init__(self):
        for name in ("b1", "b2", "i", "j"):
            arr = np.array(getattr(self, name), dtype=complex)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        n = self.b1.shape[0]
        r = self.i.shape[1] if self.i.ndim == 2 else 0
        if self.b1.shape != (n, n) or self.b2.shape != (n, n):
            raise ValueError("B1 and B2 must be square of the same size")
        if self.i.shape != (n, r) or self.j.shape != (r, n):
            raise ValueError(
                f"i must be {n}x{r} and j {r}x{n}, got {self.i.shape} and {self.j.shape}"
            )

    @property
    def n(self) -> int:
        return self.b1.shape[0]

    @property
    def r(self) -> int:
        return self.i.shape[1]

    def is_integral(self) -> bool:
        """True when every entry is a Gaussian integer (exact in float64)."""
        for arr in (self.b1, self.b2, self.i, self.j):
            if not np.all(arr.real == np.round(arr.real)):
                return False
            if not np.all(arr.imag == np.round(arr.imag)):
                return False
        return True

    def scale(self) -> float:
        return max(1.0, frobenius(self.b1), frobenius(self.b2),
                   frobenius(self.i), frobenius(self.j))


def frobenius(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def mu_complex(d: ADHMData) -> np.ndarray:
    """Complex moment map [B1, B2] + i j."""
    return d.b1 @ d.b2 - d.b2 @ d.b1 + d.i @ d.j


def mu_real(d: ADHMData) -> np.ndarray:
    """Real moment map [B1, B1+] + [B2, B2+] + i i+ - j+ j (hermitian)."""
    b1h = d.b1.conj().T
    b2h = d.b2.conj().T
    return (
        d.b1 @ b1h - b1h @ d.b1
        + d.b2 @ b2h - b2h @ d.b2
        + d.i @ d.i.conj().T
        - d.j.conj().T @ d.j
    )


def torus_act(t1: complex, t2: complex, d: ADHMData) -> ADHMData:
    """(B1, B2, i, j) -> (t1 B1, t2 B2, t1 i, t2 j) for unit scalars t1, t2."""
    for t in (t1, t2):
        if abs(abs(t) - 1.0) > 1e-9:
            raise ValueError(f"torus parameters must lie on the unit circle, |t| = {abs(t)}")
    return ADHMData(t1 * d.b1, t2 * d.b2, t1 * d.i, t2 * d.j)


def gl_act(g: np.ndarray, d: ADHMData) -> ADHMData:
    """The GL(V) action (g B1 g^-1, g B2 g^-1, g i, j g^-1)."""
    ginv = np.linalg.inv(g)
    return ADHMData(g @ d.b1 @ ginv, g @ d.b2 @ ginv, g @ d.i, d.j @ ginv)


def quaternion_J(d: ADHMData) -> ADHMData:
    """The quaternionic structure (B1, B2, i, j) -> (-B2+, B1+, -j+, i+);
    applying it twice negates the datum.
    """
    return ADHMData(
        -d.b2.conj().T, d.b1.conj().T, -d.j.conj().T, d.i.conj().T
    )


def torus_potential(d: ADHMData, eps: float) -> float:
    """|B1|^2 + eps |B2|^2 + |i|^2 + eps |j|^2 with Frobenius norms."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return (
        frobenius(d.b1) ** 2
        + eps * frobenius(d.b2) ** 2
        + frobenius(d.i) ** 2
        + eps * frobenius(d.j) ** 2
    )


def _matrix_to_json(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def _matrix_from_json(rows, shape) -> np.ndarray:
    out = np.zeros(shape, dtype=complex)
    for a, row in enumerate(rows):
        for b, (re, im) in enumerate(row):
            out[a, b] = complex(re, im)
    return out


def to_json_dict(d: ADHMData) -> dict:
    return {
        "n": d.n,
        "r": d.r,
        "B1": _matrix_to_json(d.b1),
        "B2": _matrix_to_json(d.b2),
        "i": _matrix_to_json(d.i),
        "j": _matrix_to_json(d.j),
    }


def from_json_dict(obj: dict) -> ADHMData:
    n, r = int(obj["n"]), int(obj["r"])
    return ADHMData(
        _matrix_from_json(obj["B1"], (n, n)),
        _matrix_from_json(obj["B2"], (n, n)),
        _matrix_from_json(obj["i"], (n, r)),
        _matrix_from_json(obj["j"], (r, n)),
    )


def unit_scalar(angle: float) -> complex:
    """e^{i angle}, convenience for building torus elements."""
    return cmath.exp(1j * angle)
