"""The Clifford algebra acting on the exterior algebra of span(dx^1, dx^2, ...).

Generators act by

    psi_i : dx^i wedge (on the left)      psi_i^* : interior product with d/dx_i

together with the grading derivation d scaling dx^{i_1} ^ ... ^ dx^{i_k} by
sum i_k.  Keys are strictly decreasing index tuples; the empty tuple is the
highest weight vector 1.
"""

from __future__ import annotations

from fractions import Fraction

# strictly decreasing tuple of indices >= 1; () is the vacuum
WedgeKey = tuple[int, ...]


class FermionicState:
    """Finite-support map from strictly decreasing index tuples to nonzero rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            key = tuple(int(i) for i in key)
            if any(i < 1 for i in key):
                raise ValueError(f"indices must be >= 1: {key}")
            if any(key[j] <= key[j + 1] for j in range(len(key) - 1)):
                raise ValueError(f"key must be strictly decreasing: {key}")
            clean[key] = clean.get(key, Fraction(0)) + coeff
        self.terms = {k: c for k, c in clean.items() if c != 0}

    @classmethod
    def vacuum(cls) -> FermionicState:
        return cls({(): 1})

    @classmethod
    def wedge(cls, indices, coeff=1) -> FermionicState:
        """State c * dx^{i_1} ^ ... with the indices given in decreasing order."""
        return cls({tuple(indices): coeff})

    @classmethod
    def zero(cls) -> FermionicState:
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, FermionicState) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: FermionicState) -> FermionicState:
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return FermionicState(out)

    def __sub__(self, other: FermionicState) -> FermionicState:
        return self + (-1) * other

    def __neg__(self) -> FermionicState:
        return (-1) * self

    def __rmul__(self, scalar) -> FermionicState:
        scalar = Fraction(scalar)
        return FermionicState({k: scalar * c for k, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "FermionicState(0)"
        bits = []
        for key, coeff in sorted(self.terms.items()):
            body = "^".join(f"dx{i}" for i in key) or "1"
            bits.append(f"{coeff}*{body}")
        return "FermionicState(" + " + ".join(bits) + ")"


def key_weight(key: WedgeKey) -> int:
    return sum(key)


def apply_psi(i: int, state: FermionicState) -> FermionicState:
    """Left wedge with dx^i; sign from reordering into decreasing keys."""
    if i < 1:
        raise ValueError("mode index must be >= 1")
    out = {}
    for key, coeff in state.terms.items():
        if i in key:
            continue  # dx^i ^ dx^i = 0
        # moving dx^i from the front past every larger index flips the sign
        bigger = sum(1 for k in key if k > i)
        new_key = tuple(sorted(key + (i,), reverse=True))
        sign = -1 if bigger % 2 else 1
        out[new_key] = out.get(new_key, Fraction(0)) + sign * coeff
    return FermionicState(out)


def apply_psi_star(i: int, state: FermionicState) -> FermionicState:
    """Interior product with d/dx_i; removing the factor in slot s costs (-1)^s."""
    if i < 1:
        raise ValueError("mode index must be >= 1")
    out = {}
    for key, coeff in state.terms.items():
        if i not in key:
            continue
        pos = key.index(i)
        new_key = key[:pos] + key[pos + 1 :]
        sign = -1 if pos % 2 else 1
        out[new_key] = out.get(new_key, Fraction(0)) + sign * coeff
    return FermionicState(out)


def apply_d(state: FermionicState) -> FermionicState:
    """Grading derivation: scales each key by the sum of its indices."""
    return FermionicState(
        {k: c * key_weight(k) for k, c in state.terms.items() if key_weight(k)}
    )
