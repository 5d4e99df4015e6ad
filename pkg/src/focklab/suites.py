"""Named verification suites behind the service and CLI: each runs a bundle
of exact identities or numerical certificates and reports per-check results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from random import Random

import numpy as np

from . import boson, fermion
from .adhm import (
    check_complex,
    fixed_point_data,
    gl_act,
    kempf_ness_flow,
    morse_index_numeric,
    mu_complex,
    random_stable_data,
    stability_check,
    tangent_dimension,
    unitary_invariants,
)
from .adhm.flow import FlowOptions, invariant_distance
from .checks import (
    CheckResult,
    boson_adjoint_check,
    boson_commutator_check,
    boson_derivation_check,
    fermion_commutator_check,
    fermion_derivation_check,
    highest_weight_span,
    super_commutator_check,
)
from .partitions import enumerate_partitions, morse_index, poincare_c2
from .series import (
    BettiProfile,
    character_matches_goettsche,
    clifford_character,
    goettsche,
    heisenberg_character,
)
from .superfock import CentralCharges, GeneratorSpec, SuperFockState, enumerate_basis

DEFAULT_PROFILES = (
    (1, 0, 0, 0, 0),
    (1, 0, 1, 0, 1),
    (1, 4, 6, 4, 1),
    (1, 0, 22, 0, 1),
)


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: list[CheckResult]
    all_passed: bool = field(init=False)

    def __post_init__(self):
        self.all_passed = all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
            "all_passed": self.all_passed,
        }


def _boson_basis(cutoff):
    out = []
    for w in range(cutoff + 1):
        for p in enumerate_partitions(w):
            exps = {}
            for part in p.parts:
                exps[part] = exps.get(part, 0) + 1
            out.append(boson.BosonicState.monomial(exps))
    return out


def _fermion_basis(cutoff):
    out = []
    for w in range(cutoff + 1):
        for p in enumerate_partitions(w):
            if len(set(p.parts)) == len(p.parts):
                out.append(fermion.FermionicState.wedge(p.parts))
    return out


def _random_combos(basis, count, seed, zero):
    rng = Random(seed)
    out = []
    for _ in range(count):
        state = zero
        for _ in range(rng.randint(1, 4)):
            coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            state = state + coeff * rng.choice(basis)
        out.append(state)
    return out


def heisenberg_clifford_relations(
    max_mode: int = 8, cutoff: int = 8, combos: int = 100, seed: int = 0
) -> list[CheckResult]:
    """Commutation relations of both algebras on all basis states of weight
    <= cutoff plus seeded random rational combinations, for modes <= max_mode,
    with the grading-derivation relations alongside.
    """
    a = Fraction(1)
    b_samples = _boson_basis(cutoff) + _random_combos(
        _boson_basis(cutoff), combos, seed, boson.BosonicState.zero()
    )
    f_samples = _fermion_basis(cutoff) + _random_combos(
        _fermion_basis(cutoff), combos, seed + 1, fermion.FermionicState.zero()
    )
    checks = []
    for i in range(1, max_mode + 1):
        for j in range(1, max_mode + 1):
            checks += boson_commutator_check(i, j, b_samples, a)
            checks += fermion_commutator_check(i, j, f_samples)
    for j in range(1, max_mode + 1):
        checks += boson_derivation_check(j, b_samples)
        checks += fermion_derivation_check(j, f_samples)
    return checks


def adjointness_and_pairing(cutoff: int = 6, a=Fraction(2)) -> list[CheckResult]:
    """Adjointness of creation and annihilation under the bilinear form on all
    monomials of weight <= cutoff, and the self-pairing closed form checked
    against an adjointness-recursion oracle (peel one variable at a time).
    """
    monomials = _boson_basis(cutoff)
    pairs = [(s, t) for s in monomials for t in monomials]
    checks = [
        boson_adjoint_check(i, pairs, a) for i in range(1, cutoff + 1)
    ]

    def recursive_pairing(exps):
        # B(m, m) via B(q_i s, t) = B(s, p_i t) and B(1, 1) = 1
        if not exps:
            return Fraction(1)
        i, e = next(iter(exps.items()))
        rest = dict(exps)
        if e == 1:
            del rest[i]
        else:
            rest[i] = e - 1
        return Fraction(a) * e * recursive_pairing(rest)

    name = f"self pairing equals a^sum * prod(factorials), weight <= {cutoff}"
    tested = 0
    for w in range(cutoff + 1):
        for p in enumerate_partitions(w):
            exps = {}
            for part in p.parts:
                exps[part] = exps.get(part, 0) + 1
            m = boson.BosonicState.monomial(exps)
            got = boson.bilinear_form(m, m, a)
            closed = Fraction(a) ** sum(exps.values())
            for e in exps.values():
                closed *= factorial(e)
            if got != closed or got != recursive_pairing(exps):
                return checks + [
                    CheckResult(name, False, f"monomial {exps}: {got} vs {closed}")
                ]
            tested += 1
    checks.append(CheckResult(name, True, f"{tested} monomials"))
    return checks


def character_checks(order: int = 20, span_cutoff: int = 6) -> list[CheckResult]:
    """Both graded dimensions against independent partition enumeration, plus
    the creation-word spanning check at a small cutoff."""
    checks = []
    h = heisenberg_character(order)
    expected = [len(enumerate_partitions(n)) for n in range(order + 1)]
    checks.append(
        CheckResult(
            f"polynomial character counts partitions up to q^{order}",
            h == expected,
            f"{h[:8]}...",
        )
    )
    c = clifford_character(order)
    expected = [
        sum(1 for p in enumerate_partitions(n) if len(set(p.parts)) == len(p.parts))
        for n in range(order + 1)
    ]
    checks.append(
        CheckResult(
            f"exterior character counts distinct-part partitions up to q^{order}",
            c == expected,
            f"{c[:8]}...",
        )
    )
    for kind in ("boson", "fermion"):
        span = highest_weight_span(kind, span_cutoff)
        checks.append(
            CheckResult(
                f"{kind} creation words span a basis up to weight {span_cutoff}",
                span.passed,
                f"counts {span.counts}",
            )
        )
    return checks


def central_identity(profiles=DEFAULT_PROFILES, order: int = 10) -> list[CheckResult]:
    """Fock character against the product formula, per Betti profile."""
    checks = []
    for profile in profiles:
        report = character_matches_goettsche(BettiProfile(tuple(profile)), order)
        checks.append(
            CheckResult(
                f"character = product formula for betti {tuple(profile)} to q^{order}",
                report.equal,
                report.detail or "exact match",
            )
        )
    return checks


def super_fock_relations(
    cutoff: int = 6,
    max_mode: int = 3,
    extra_charges: dict[int, int] | None = None,
) -> list[CheckResult]:
    """Graded commutation relations on every basis state of n-weight <= cutoff
    for one even degree-0, one even degree-2 and one odd degree-1 class.
    """
    gens = [GeneratorSpec.of(0, 0), GeneratorSpec.of(1, 2), GeneratorSpec.of(2, 1)]
    charges = CentralCharges(extra_charges or {3: 3})
    samples = [SuperFockState({key: 1}) for key in enumerate_basis(gens, cutoff)]
    failures = []
    for g in gens:
        for gp in gens:
            for i in range(1, max_mode + 1):
                for j in range(1, max_mode + 1):
                    results = super_commutator_check(g, gp, i, j, samples, charges)
                    failures.extend(r for r in results if not r.passed)
    summary = CheckResult(
        f"graded relations on {len(samples)} basis states, modes <= {max_mode}",
        not failures,
        f"charges {dict(sorted(charges.charges.items()))}",
    )
    return failures + [summary]


def appendix_betti(nmax: int = 12) -> list[CheckResult]:
    """Morse-counting Poincare polynomials against the product formula."""
    f = goettsche(BettiProfile((1, 0, 0, 0, 0)), nmax)
    checks = []
    for n in range(1, nmax + 1):
        ok = poincare_c2(n) == f.extract_poincare(n)
        checks.append(
            CheckResult(
                f"Morse count matches q^{n} coefficient of the plane product",
                ok,
                str(poincare_c2(n)),
            )
        )
    return checks


def fixed_point_certificates(nmax: int = 6) -> list[CheckResult]:
    """mu_C = 0 exactly, stability and an exactly vanishing monad composite
    for every fixed point with at most nmax points.
    """
    checks = []
    for n in range(nmax + 1):
        for p in enumerate_partitions(n):
            d, _ = fixed_point_data(p)
            ok = (not mu_complex(d).any()) and stability_check(d) and check_complex(d)
            if not ok:
                checks.append(CheckResult(f"fixed point {p}", False, "certificate failed"))
    total = sum(len(enumerate_partitions(n)) for n in range(nmax + 1))
    checks.append(
        CheckResult(
            f"all {total} fixed points with n <= {nmax}: mu_C = 0, stable, complex",
            not checks,
            "exact integer arithmetic",
        )
    )
    return checks


def flow_convergence(
    sizes=((1, 1), (2, 1), (3, 1), (4, 1)),
    seeds: int = 5,
    tol: float = 1e-8,
    invariant_tol: float = 1e-6,
    max_iter: int = 10000,
) -> list[CheckResult]:
    """Flow convergence from seeded stable data and agreement of unitary
    invariants across gauge-equivalent restarts.
    """
    opts = FlowOptions(tol=tol, max_iter=max_iter)
    checks = []
    for n, r in sizes:
        worst_residual, worst_iters, worst_dist = 0.0, 0, 0.0
        ok = True
        for seed in range(seeds):
            d = random_stable_data(n, r, seed)
            out = kempf_ness_flow(d, opts)
            rng = np.random.default_rng(10_000 + seed)
            g0 = (
                rng.standard_normal((n, n))
                + 1j * rng.standard_normal((n, n))
                + 3.0 * np.eye(n)
            )
            out2 = kempf_ness_flow(gl_act(g0, d), opts)
            dist = invariant_distance(
                unitary_invariants(out.data), unitary_invariants(out2.data)
            )
            worst_residual = max(worst_residual, out.residual, out2.residual)
            worst_iters = max(worst_iters, out.iterations, out2.iterations)
            worst_dist = max(worst_dist, dist)
            ok = ok and out.converged and out2.converged and dist <= invariant_tol
        checks.append(
            CheckResult(
                f"flow (n={n}, r={r}), {seeds} seeds + gauge restarts",
                ok,
                f"residual <= {worst_residual:.2e}, iters <= {worst_iters}, "
                f"invariant gap <= {worst_dist:.2e}",
            )
        )
    return checks


def dimension_theorem(
    cases=((1, 1), (2, 1), (1, 2), (2, 2)), rank_tol: float = 1e-6
) -> list[CheckResult]:
    """Quotient tangent dimension 4nr at flowed random stable data."""
    checks = []
    for n, r in cases:
        d = kempf_ness_flow(random_stable_data(n, r, seed=0)).data
        dim = tangent_dimension(d, tol=rank_tol)
        checks.append(
            CheckResult(
                f"tangent dimension at (n={n}, r={r})",
                dim == 4 * n * r,
                f"got {dim}, expected {4 * n * r}",
            )
        )
    return checks


def morse_indices(nmax: int = 3, eps: float = 0.01) -> list[CheckResult]:
    """Numeric Morse index against 2n - 2(#parts) for all |p| <= nmax."""
    checks = []
    for n in range(1, nmax + 1):
        for p in enumerate_partitions(n):
            got = morse_index_numeric(p, eps)
            expected = morse_index(p)
            checks.append(
                CheckResult(
                    f"Morse index at {p}",
                    got == expected,
                    f"numeric {got}, combinatorial {expected}",
                )
            )
    return checks


def run_suite(
    suite: str,
    order: int | None = None,
    betti=None,
    nmax: int | None = None,
    seed: int = 0,
    flow_tol: float = 1e-8,
    rank_tol: float = 1e-6,
    eps: float = 0.01,
) -> SuiteReport:
    """Run one of the named suites: relations, characters, identity, appendix."""
    if suite == "relations":
        params = {"max_mode": 8, "cutoff": min(nmax or 8, 8), "seed": seed}
        checks = heisenberg_clifford_relations(
            max_mode=params["max_mode"], cutoff=params["cutoff"], seed=seed
        )
        checks += adjointness_and_pairing(cutoff=6)
        checks += super_fock_relations(cutoff=6)
    elif suite == "characters":
        params = {"order": order or 20}
        checks = character_checks(order=params["order"])
    elif suite == "identity":
        profiles = [tuple(betti)] if betti else list(DEFAULT_PROFILES)
        params = {"order": order or 10, "profiles": profiles}
        checks = central_identity(profiles=profiles, order=params["order"])
    elif suite == "appendix":
        params = {
            "nmax": nmax or 6,
            "seed": seed,
            "flow_tol": flow_tol,
            "rank_tol": rank_tol,
            "eps": eps,
        }
        checks = fixed_point_certificates(nmax=params["nmax"])
        checks += appendix_betti(nmax=12)
        checks += flow_convergence(sizes=((1, 1), (2, 1)), seeds=2, tol=flow_tol)
        checks += dimension_theorem(rank_tol=rank_tol)
        checks += morse_indices(nmax=3, eps=eps)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return SuiteReport(suite, params, checks)
