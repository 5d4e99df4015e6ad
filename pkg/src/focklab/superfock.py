"""Graded Fock model for the operator algebra on the total homology of the
Hilbert schemes of a surface.

One Heisenberg pair for every even cohomology class and mode, one Clifford
pair for every odd class and mode, acting on Sym(even modes) (x) Lambda(odd
modes).  A creation in mode i built from a class of cohomological degree d
shifts the bidegree (point count, homological degree) by (i, 2(i-1) + d);
annihilation is the graded derivation weighted by the central charge c_i of
the mode, so that the supercommutator of annihilate(g, i) with create(g', j)
is delta_{gg'} delta_{ij} c_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .series import BivariateSeries
from .tpoly import TPoly

# A generator instance inside a basis key: (class_id, mode, cohomological
# degree).  Odd instances are kept sorted ascending by (class_id, mode) with
# reordering signs absorbed into the coefficient.
GenMode = tuple[int, int, int]


class CentralChargeUndefined(LookupError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    """A basis class of the surface: integer label, parity and degree 0..4."""

    class_id: int
    parity: str
    cohomological_degree: int

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if not 0 <= self.cohomological_degree <= 4:
            raise ValueError("cohomological degree must be in 0..4")
        if (self.cohomological_degree % 2 == 1) != (self.parity == "odd"):
            raise ValueError("parity must match the parity of the degree")

    @classmethod
    def of(cls, class_id: int, cohomological_degree: int) -> GeneratorSpec:
        parity = "odd" if cohomological_degree % 2 else "even"
        return cls(class_id, parity, cohomological_degree)

    @property
    def is_odd(self) -> bool:
        return self.parity == "odd"


@dataclass(frozen=True)
class CentralCharges:
    """Central charges c_i of the mode-i commutators.

    c_1 = 1 and c_2 = -2 are forced; higher charges are configuration and
    reading an unset one is an error, never a silent default.
    """

    charges: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        merged = {1: 1, 2: -2}
        for i, c in self.charges.items():
            if int(i) < 1:
                raise ValueError(f"mode index must be >= 1, got {i}")
            if int(c) == 0:
                raise ValueError(f"central charge c_{i} must be a nonzero integer")
            merged[int(i)] = int(c)
        object.__setattr__(self, "charges", merged)

    def charge(self, i: int) -> int:
        try:
            return self.charges[i]
        except KeyError:
            raise CentralChargeUndefined(
                f"central charge undefined for mode {i}"
            ) from None

    def __hash__(self):
        return hash(tuple(sorted(self.charges.items())))


def _gen_mode(g: GeneratorSpec, i: int) -> GenMode:
    if i < 1:
        raise ValueError("mode index must be >= 1")
    return (g.class_id, i, g.cohomological_degree)


def bidegree_shift(g: GeneratorSpec, i: int) -> tuple[int, int]:
    """Bidegree shift of a creation in mode i: (+i, +2(i-1) + degree)."""
    return i, 2 * (i - 1) + g.cohomological_degree


def key_bidegree(key) -> tuple[int, int]:
    """(n-weight, homological degree) of a basis key."""
    even, odd = key
    n = sum(e * gm[1] for gm, e in even) + sum(gm[1] for gm in odd)
    k = sum(e * (2 * (gm[1] - 1) + gm[2]) for gm, e in even) + sum(
        2 * (gm[1] - 1) + gm[2] for gm in odd
    )
    return n, k


VACUUM_KEY = ((), ())


class SuperFockState:
    """Finite rational combination of basis keys (even multiset, odd word)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            even, odd = key
            even = tuple(sorted((tuple(gm), int(e)) for gm, e in even))
            odd = tuple(sorted(tuple(gm) for gm in odd))
            if any(e < 1 for _, e in even):
                raise ValueError("even exponents must be >= 1")
            if len(set(odd)) != len(odd):
                raise ValueError("odd generators may not repeat")
            if any(gm[2] % 2 for gm, _ in even) or any(not gm[2] % 2 for gm in odd):
                raise ValueError("generator parity inconsistent with slot")
            key = (even, odd)
            clean[key] = clean.get(key, Fraction(0)) + coeff
        self.terms = {k: c for k, c in clean.items() if c != 0}

    @classmethod
    def vacuum(cls) -> SuperFockState:
        return cls({VACUUM_KEY: 1})

    @classmethod
    def zero(cls) -> SuperFockState:
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, SuperFockState) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: SuperFockState) -> SuperFockState:
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return SuperFockState(out)

    def __sub__(self, other: SuperFockState) -> SuperFockState:
        return self + (-1) * other

    def __neg__(self) -> SuperFockState:
        return (-1) * self

    def __rmul__(self, scalar) -> SuperFockState:
        scalar = Fraction(scalar)
        return SuperFockState({k: scalar * c for k, c in self.terms.items()})

    def bidegrees(self):
        return sorted({key_bidegree(k) for k in self.terms})

    def __repr__(self):
        if not self.terms:
            return "SuperFockState(0)"
        return "SuperFockState(" + ", ".join(
            f"{c} * {k}" for k, c in sorted(self.terms.items())
        ) + ")"


def create(g: GeneratorSpec, i: int, state: SuperFockState) -> SuperFockState:
    """Creation operator for (g, i): polynomial multiplication for even g,
    signed wedge for odd g.
    """
    gm = _gen_mode(g, i)
    out = {}
    for (even, odd), coeff in state.terms.items():
        if g.is_odd:
            if gm in odd:
                continue  # square-zero
            pos = sum(1 for x in odd if x < gm)
            new_odd = tuple(sorted(odd + (gm,)))
            sign = -1 if pos % 2 else 1
            key = (even, new_odd)
            out[key] = out.get(key, Fraction(0)) + sign * coeff
        else:
            exps = dict(even)
            exps[gm] = exps.get(gm, 0) + 1
            key = (tuple(sorted(exps.items())), odd)
            out[key] = out.get(key, Fraction(0)) + coeff
    return SuperFockState(out)


def annihilate(
    g: GeneratorSpec, i: int, state: SuperFockState, charges: CentralCharges
) -> SuperFockState:
    """Annihilation operator for (g, i), scaled by the central charge c_i:
    derivation in the even slot, signed contraction in the odd slot.
    """
    gm = _gen_mode(g, i)
    c_i = Fraction(charges.charge(i))
    out = {}
    for (even, odd), coeff in state.terms.items():
        if g.is_odd:
            if gm not in odd:
                continue
            pos = odd.index(gm)
            new_odd = odd[:pos] + odd[pos + 1 :]
            sign = -1 if pos % 2 else 1
            key = (even, new_odd)
            out[key] = out.get(key, Fraction(0)) + sign * c_i * coeff
        else:
            exps = dict(even)
            e = exps.get(gm, 0)
            if e == 0:
                continue
            if e == 1:
                del exps[gm]
            else:
                exps[gm] = e - 1
            key = (tuple(sorted(exps.items())), odd)
            out[key] = out.get(key, Fraction(0)) + e * c_i * coeff
    return SuperFockState(out)


def enumerate_basis(gens, max_weight: int):
    """Yield every basis key of n-weight <= max_weight for the given
    generators, vacuum first, by assigning multiplicities mode by mode.
    """
    modes = []
    for g in gens:
        for i in range(1, max_weight + 1):
            modes.append((_gen_mode(g, i), g.is_odd))
    modes.sort()

    def walk(idx, weight_left, even, odd):
        if idx == len(modes):
            yield (tuple(even), tuple(odd))
            return
        gm, is_odd = modes[idx]
        i = gm[1]
        top = 1 if is_odd else weight_left // i
        for mult in range(min(top, weight_left // i) + 1):
            if mult == 0:
                yield from walk(idx + 1, weight_left, even, odd)
            elif is_odd:
                yield from walk(idx + 1, weight_left - i, even, odd + [gm])
            else:
                yield from walk(idx + 1, weight_left - mult * i, even + [(gm, mult)], odd)

    yield from walk(0, max_weight, [], [])


def super_character(gens, order: int) -> BivariateSeries:
    """Count basis states by bidegree up to q-order, as a bivariate series
    sum_n q^n sum_k (#states of bidegree (n, k)) t^k.

    Counting runs mode by mode over multiplicity assignments (a knapsack
    sweep over the finitely many modes of weight <= order); it never touches
    the product formula.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    # table[n] maps homological degree k -> number of basis states
    table = [dict() for _ in range(order + 1)]
    table[0][0] = 1
    for g in gens:
        for i in range(1, order + 1):
            kdeg = 2 * (i - 1) + g.cohomological_degree
            if g.is_odd:
                # each odd mode used at most once: sweep n downwards
                for n in range(order, i - 1, -1):
                    for k, cnt in table[n - i].items():
                        table[n][k + kdeg] = table[n].get(k + kdeg, 0) + cnt
            else:
                # unbounded multiplicity: sweep n upwards
                for n in range(i, order + 1):
                    for k, cnt in table[n - i].items():
                        table[n][k + kdeg] = table[n].get(k + kdeg, 0) + cnt
    coeffs = []
    for n in range(order + 1):
        top = max(table[n], default=0)
        dense = [0] * (top + 1)
        for k, cnt in table[n].items():
            dense[k] = cnt
        coeffs.append(TPoly(dense))
    return BivariateSeries(order, tuple(coeffs))
