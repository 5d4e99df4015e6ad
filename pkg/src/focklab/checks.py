"""Exact verification of the defining operator relations.

Every check evaluates both sides of a relation on explicit sample states in
rational arithmetic and reports the first counterexample term on failure;
nothing is approximate here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import boson, fermion
from .superfock import CentralCharges, GeneratorSpec, annihilate, create


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _first_term(state) -> str:
    key, coeff = sorted(state.terms.items())[0]
    return f"{coeff} * {key}"


def _result(name, diff, samples_tried) -> CheckResult:
    if diff is None:
        return CheckResult(name, True, f"{samples_tried} samples")
    sample, bad = diff
    return CheckResult(name, False, f"on {sample!r}: first residual term {_first_term(bad)}")


def _scan(name, samples, residual) -> CheckResult:
    for s in samples:
        bad = residual(s)
        if not bad.is_zero():
            return _result(name, (s, bad), len(samples))
    return _result(name, None, len(samples))


def boson_commutator_check(i, j, samples, a=Fraction(1)) -> list[CheckResult]:
    """[p_i, p_j] = 0, [q_i, q_j] = 0 and [p_i, q_j] = delta_ij a on samples."""
    a = Fraction(a)

    def p(k, s):
        return boson.apply_p(k, s, a)

    def q(k, s):
        return boson.apply_q(k, s)

    delta = a if i == j else Fraction(0)
    return [
        _scan(f"[p{i},p{j}] = 0", samples, lambda s: p(i, p(j, s)) - p(j, p(i, s))),
        _scan(f"[q{i},q{j}] = 0", samples, lambda s: q(i, q(j, s)) - q(j, q(i, s))),
        _scan(
            f"[p{i},q{j}] = {delta}",
            samples,
            lambda s: p(i, q(j, s)) - q(j, p(i, s)) - delta * s,
        ),
    ]


def boson_derivation_check(j, samples) -> list[CheckResult]:
    """[d0, q_j] = j q_j and [d0, p_j] = -j p_j on samples."""
    d0 = boson.apply_d0

    def p(s):
        return boson.apply_p(j, s)

    def q(s):
        return boson.apply_q(j, s)

    return [
        _scan(
            f"[d0,q{j}] = {j} q{j}",
            samples,
            lambda s: d0(q(s)) - q(d0(s)) - Fraction(j) * q(s),
        ),
        _scan(
            f"[d0,p{j}] = -{j} p{j}",
            samples,
            lambda s: d0(p(s)) - p(d0(s)) + Fraction(j) * p(s),
        ),
    ]


def boson_adjoint_check(i, pairs, a=Fraction(1)) -> CheckResult:
    """B(q_i s, t) = B(s, p_i t) over sample pairs (s, t)."""
    a = Fraction(a)
    for s, t in pairs:
        lhs = boson.bilinear_form(boson.apply_q(i, s), t, a)
        rhs = boson.bilinear_form(s, boson.apply_p(i, t, a), a)
        if lhs != rhs:
            return CheckResult(
                f"B(q{i} s, t) = B(s, p{i} t)", False, f"{lhs} != {rhs} on {s!r}, {t!r}"
            )
    return CheckResult(f"B(q{i} s, t) = B(s, p{i} t)", True, f"{len(pairs)} pairs")


def fermion_commutator_check(i, j, samples) -> list[CheckResult]:
    """Anticommutation relations of the wedge and contraction operators."""

    def w(k, s):
        return fermion.apply_psi(k, s)

    def c(k, s):
        return fermion.apply_psi_star(k, s)

    delta = Fraction(1 if i == j else 0)
    return [
        _scan(f"{{psi{i},psi{j}}} = 0", samples, lambda s: w(i, w(j, s)) + w(j, w(i, s))),
        _scan(
            f"{{psi*{i},psi*{j}}} = 0", samples, lambda s: c(i, c(j, s)) + c(j, c(i, s))
        ),
        _scan(
            f"{{psi{i},psi*{j}}} = {delta}",
            samples,
            lambda s: w(i, c(j, s)) + c(j, w(i, s)) - delta * s,
        ),
    ]


def fermion_derivation_check(i, samples) -> list[CheckResult]:
    """[d, psi_i] = i psi_i and [d, psi*_i] = -i psi*_i on samples."""
    d = fermion.apply_d

    def w(s):
        return fermion.apply_psi(i, s)

    def c(s):
        return fermion.apply_psi_star(i, s)

    return [
        _scan(
            f"[d,psi{i}] = {i} psi{i}",
            samples,
            lambda s: d(w(s)) - w(d(s)) - Fraction(i) * w(s),
        ),
        _scan(
            f"[d,psi*{i}] = -{i} psi*{i}",
            samples,
            lambda s: d(c(s)) - c(d(s)) + Fraction(i) * c(s),
        ),
    ]


def super_commutator_check(
    g: GeneratorSpec,
    gp: GeneratorSpec,
    i: int,
    j: int,
    samples,
    charges: CentralCharges | None = None,
) -> list[CheckResult]:
    """The three graded relations between annihilation E and creation F:

        E_i^g E_j^g' = sign E_j^g' E_i^g
        F_i^g F_j^g' = sign F_j^g' F_i^g
        E_i^g F_j^g' = sign F_j^g' E_i^g + delta_{gg'} delta_{ij} c_i

    with sign = (-1)^{deg g * deg g'}.
    """
    charges = charges or CentralCharges()
    sign = Fraction(-1 if (g.cohomological_degree * gp.cohomological_degree) % 2 else 1)

    def e(h, k, s):
        return annihilate(h, k, s, charges)

    def f(h, k, s):
        return create(h, k, s)

    same = g == gp and i == j
    central = Fraction(charges.charge(i)) if same else Fraction(0)
    label = f"(g{g.class_id},{i}),(g{gp.class_id},{j})"
    return [
        _scan(
            f"EE graded commutation {label}",
            samples,
            lambda s: e(g, i, e(gp, j, s)) - sign * e(gp, j, e(g, i, s)),
        ),
        _scan(
            f"FF graded commutation {label}",
            samples,
            lambda s: f(g, i, f(gp, j, s)) - sign * f(gp, j, f(g, i, s)),
        ),
        _scan(
            f"EF graded commutation {label} central {central}",
            samples,
            lambda s: e(g, i, f(gp, j, s)) - sign * f(gp, j, e(g, i, s)) - central * s,
        ),
    ]


def commutator_check(
    kind: str, i: int, j: int, samples, g=None, gp=None, charges=None, a=Fraction(1)
) -> list[CheckResult]:
    """Dispatch on 'boson' / 'fermion' / 'super' and run the relation checks."""
    if kind == "boson":
        return boson_commutator_check(i, j, samples, a)
    if kind == "fermion":
        return fermion_commutator_check(i, j, samples)
    if kind == "super":
        if g is None or gp is None:
            raise ValueError("super check needs the two generator specs")
        return super_commutator_check(g, gp, i, j, samples, charges)
    raise ValueError(f"unknown kind {kind!r}")


# --- highest weight span -------------------------------------------------


@dataclass
class SpanReport:
    kind: str
    cutoff: int
    counts: list[int]
    expected: list[int]
    independent: bool
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.independent and self.counts == self.expected


def _rational_rank(rows) -> int:
    """Exact rank of a list of Fraction-valued rows by Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * p for v, p in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _mode_multisets(total, max_mode):
    """All multisets of modes (as non-increasing tuples) with the given sum."""
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_mode), 0, -1):
        for rest in _mode_multisets(total - first, first):
            yield (first,) + rest


def _monomials_of_weight(weight, max_index):
    """All exponent maps {index: exponent} with sum index*exponent = weight."""
    if weight == 0:
        yield {}
        return
    if max_index == 0:
        return
    top = min(max_index, weight)
    for e in range(weight // top + 1):
        for rest in _monomials_of_weight(weight - e * top, top - 1):
            yield {top: e, **rest} if e else rest


def _wedge_keys_of_weight(weight, max_index):
    """All strictly decreasing index tuples with the given sum."""
    if weight == 0:
        yield ()
        return
    for first in range(min(weight, max_index), 0, -1):
        for rest in _wedge_keys_of_weight(weight - first, first - 1):
            yield (first,) + rest


def highest_weight_span(kind: str, cutoff: int) -> SpanReport:
    """Apply every creation word of weight <= cutoff to the vacuum and verify
    the results are a basis of the weight-truncated space: linearly
    independent, in the same number as a direct enumeration of that basis.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    if kind == "boson":
        states, counts = [], []
        for w in range(cutoff + 1):
            words = list(_mode_multisets(w, w if w else 1))
            counts.append(len(words))
            for word in words:
                s = boson.BosonicState.vacuum()
                for mode in word:
                    s = boson.apply_q(mode, s)
                states.append(s)
        # the truncated space itself: enumerate exponent vectors directly
        expected = [len(list(_monomials_of_weight(w, w))) for w in range(cutoff + 1)]
    elif kind == "fermion":
        states, counts = [], []
        for w in range(cutoff + 1):
            words = [word for word in _mode_multisets(w, w if w else 1)
                     if len(set(word)) == len(word)]
            counts.append(len(words))
            for word in words:
                s = fermion.FermionicState.vacuum()
                for mode in reversed(word):
                    s = fermion.apply_psi(mode, s)
                states.append(s)
        expected = [len(list(_wedge_keys_of_weight(w, w))) for w in range(cutoff + 1)]
    else:
        raise ValueError(f"unknown kind {kind!r}")

    basis_keys = sorted({key for s in states for key in s.terms})
    index = {key: pos for pos, key in enumerate(basis_keys)}
    rows = []
    for s in states:
        row = [Fraction(0)] * len(basis_keys)
        for key, coeff in s.terms.items():
            row[index[key]] = coeff
        rows.append(row)
    independent = not rows or _rational_rank(rows) == len(rows)
    return SpanReport(kind, cutoff, counts, expected, independent)
