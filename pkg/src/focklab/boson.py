"""The Heisenberg algebra acting on the polynomial ring Q[x1, x2, ...].

Generators p_i, q_i and the central element c act by

    q_i : multiply by x_i        p_i : a * d/dx_i        c : a * Id

for a fixed nonzero rational a, together with the grading derivation
d0 = sum_j j x_j d/dx_j.  States are finite rational linear combinations of
monomials and are immutable; every operation returns a new state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

# A monomial is a tuple of (variable index, exponent) pairs, sorted by index,
# with every exponent >= 1; the empty tuple is the vacuum monomial 1.
Monomial = tuple[tuple[int, int], ...]

VACUUM_MONOMIAL: Monomial = ()


@dataclass(frozen=True)
class CentralScalar:
    """The nonzero rational a parametrizing the representation."""

    a: Fraction

    def __post_init__(self):
        a = Fraction(self.a)
        object.__setattr__(self, "a", a)
        if a == 0:
            raise ValueError("central scalar must be nonzero")


class BosonicState:
    """Finite-support map from monomials to nonzero rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            mono = tuple(sorted((int(i), int(e)) for i, e in mono))
            if any(i < 1 or e < 1 for i, e in mono):
                raise ValueError(f"bad monomial {mono}")
            clean[mono] = clean.get(mono, Fraction(0)) + coeff
        self.terms = {m: c for m, c in clean.items() if c != 0}

    @classmethod
    def vacuum(cls) -> BosonicState:
        return cls({VACUUM_MONOMIAL: 1})

    @classmethod
    def monomial(cls, exponents: dict[int, int], coeff=1) -> BosonicState:
        """State c * prod x_i^{e_i} from a mapping index -> exponent."""
        return cls({tuple(sorted(exponents.items())): coeff})

    @classmethod
    def zero(cls) -> BosonicState:
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, BosonicState) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: BosonicState) -> BosonicState:
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return BosonicState(out)

    def __sub__(self, other: BosonicState) -> BosonicState:
        return self + (-1) * other

    def __neg__(self) -> BosonicState:
        return (-1) * self

    def __rmul__(self, scalar) -> BosonicState:
        scalar = Fraction(scalar)
        return BosonicState({m: scalar * c for m, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "BosonicState(0)"
        bits = []
        for mono, coeff in sorted(self.terms.items()):
            body = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in mono) or "1"
            bits.append(f"{coeff}*{body}")
        return "BosonicState(" + " + ".join(bits) + ")"


def monomial_weight(mono: Monomial) -> int:
    """The n-grading sum_j j * exponent_j of a monomial."""
    return sum(i * e for i, e in mono)


def apply_q(i: int, state: BosonicState) -> BosonicState:
    """Creation operator q_i: multiply by x_i.  Raises the weight by i."""
    if i < 1:
        raise ValueError("mode index must be >= 1")
    out = {}
    for mono, coeff in state.terms.items():
        exps = dict(mono)
        exps[i] = exps.get(i, 0) + 1
        out[tuple(sorted(exps.items()))] = coeff
    return BosonicState(out)


def apply_p(i: int, state: BosonicState, a=Fraction(1)) -> BosonicState:
    """Annihilation operator p_i: a * d/dx_i with exact rational coefficients."""
    if i < 1:
        raise ValueError("mode index must be >= 1")
    a = a.a if isinstance(a, CentralScalar) else Fraction(a)
    out = {}
    for mono, coeff in state.terms.items():
        exps = dict(mono)
        e = exps.get(i, 0)
        if e == 0:
            continue
        if e == 1:
            del exps[i]
        else:
            exps[i] = e - 1
        key = tuple(sorted(exps.items()))
        out[key] = out.get(key, Fraction(0)) + coeff * e * a
    return BosonicState(out)


def apply_d0(state: BosonicState) -> BosonicState:
    """Grading derivation sum_j j x_j d/dx_j: scales each monomial by its weight."""
    return BosonicState(
        {m: c * monomial_weight(m) for m, c in state.terms.items() if monomial_weight(m)}
    )


def bilinear_form(s: BosonicState, t: BosonicState, a=Fraction(1)) -> Fraction:
    """The bilinear form with B(1,1) = 1 under which p_i is adjoint to q_i.

    Distinct monomials are orthogonal and a monomial with exponents j_1..j_n
    pairs with itself to a^{sum j_k} * prod j_k!.
    """
    a = a.a if isinstance(a, CentralScalar) else Fraction(a)
    if a == 0:
        raise ValueError("central scalar must be nonzero")
    total = Fraction(0)
    for mono, coeff in s.terms.items():
        other = t.terms.get(mono)
        if other is None:
            continue
        norm = a ** sum(e for _, e in mono)
        for _, e in mono:
            norm *= factorial(e)
        total += coeff * other * norm
    return total
