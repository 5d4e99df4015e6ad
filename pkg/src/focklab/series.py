"""Truncated bivariate power series in q with integer t-polynomial coefficients,
and the product formula generating the Poincare polynomials of Hilbert schemes
of points from the Betti numbers of the surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tpoly import TPoly


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class BettiProfile:
    """Betti numbers (b0, b1, b2, b3, b4) of a surface."""

    b: tuple[int, int, int, int, int]

    def __post_init__(self):
        b = tuple(int(x) for x in self.b)
        object.__setattr__(self, "b", b)
        if len(b) != 5 or any(x < 0 for x in b):
            raise ValueError(f"need five non-negative Betti numbers, got {b}")

    def __iter__(self):
        return iter(self.b)


@dataclass(frozen=True)
class BivariateSeries:
    """Power series in q truncated at q^order, coefficient of q^n a TPoly in t.

    Arithmetic on operands of different orders truncates to the minimum order.
    """

    order: int
    coeffs: tuple[TPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order+1 coefficient polynomials")

    @classmethod
    def zero(cls, order: int) -> BivariateSeries:
        return cls(order, (TPoly.zero(),) * (order + 1))

    @classmethod
    def one(cls, order: int) -> BivariateSeries:
        return cls(order, (TPoly.one(),) + (TPoly.zero(),) * order)

    @classmethod
    def term(cls, n: int, poly: TPoly, order: int) -> BivariateSeries:
        """The single term poly(t) * q^n, truncated at the given order."""
        coeffs = [TPoly.zero()] * (order + 1)
        if n <= order:
            coeffs[n] = poly
        return cls(order, tuple(coeffs))

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        order = min(self.order, other.order)
        return BivariateSeries(
            order, tuple(self.coeffs[n] + other.coeffs[n] for n in range(order + 1))
        )

    def __sub__(self, other: BivariateSeries) -> BivariateSeries:
        order = min(self.order, other.order)
        return BivariateSeries(
            order, tuple(self.coeffs[n] - other.coeffs[n] for n in range(order + 1))
        )

    def __mul__(self, other: BivariateSeries) -> BivariateSeries:
        order = min(self.order, other.order)
        out = [TPoly.zero()] * (order + 1)
        for n1 in range(order + 1):
            c1 = self.coeffs[n1]
            if c1.is_zero():
                continue
            for n2 in range(order + 1 - n1):
                c2 = other.coeffs[n2]
                if not c2.is_zero():
                    out[n1 + n2] = out[n1 + n2] + c1 * c2
        return BivariateSeries(order, tuple(out))

    def pow(self, k: int) -> BivariateSeries:
        """k-th power by repeated multiplication with truncation, k >= 0."""
        if k < 0:
            raise ValueError("k must be >= 0")
        out = BivariateSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def geom_inverse(self) -> BivariateSeries:
        """Multiplicative inverse to the truncation order.

        Requires constant term 1: the inverse g solves g_n = -sum_{k>=1} f_k g_{n-k}.
        """
        if self.coeffs[0] != TPoly.one():
            raise SeriesError("series not invertible: constant term is not 1")
        inv = [TPoly.one()]
        for n in range(1, self.order + 1):
            acc = TPoly.zero()
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * inv[n - k]
            inv.append(-acc)
        return BivariateSeries(self.order, tuple(inv))

    def extract_poincare(self, n: int) -> TPoly:
        """The q^n coefficient polynomial."""
        if n > self.order:
            raise SeriesError(f"beyond truncation: q^{n} with order {self.order}")
        return self.coeffs[n]

    def at_t(self, t: int) -> list[int]:
        """Evaluate every coefficient polynomial at an integer t."""
        return [c(t) for c in self.coeffs]


def goettsche(betti: BettiProfile, order: int) -> BivariateSeries:
    """Generating function of the Poincare polynomials of the Hilbert schemes
    of points on a surface with the given Betti numbers:

        prod_{m>=1} (1 + t^{2m-1} q^m)^{b1} (1 + t^{2m+1} q^m)^{b3}
                    / [(1 - t^{2m-2} q^m)^{b0} (1 - t^{2m} q^m)^{b2}
                       (1 - t^{2m+2} q^m)^{b4}]

    expanded to the given q-order; factors with m > order do not contribute.
    """
    b0, b1, b2, b3, b4 = betti
    out = BivariateSeries.one(order)
    for m in range(1, order + 1):
        for t_shift, sign, mult in (
            (2 * m - 1, 1, b1),
            (2 * m + 1, 1, b3),
            (2 * m - 2, -1, b0),
            (2 * m, -1, b2),
            (2 * m + 2, -1, b4),
        ):
            if mult == 0:
                continue
            factor = BivariateSeries.one(order) + BivariateSeries.term(
                m, TPoly.monomial(t_shift, sign), order
            )
            if sign < 0:
                factor = factor.geom_inverse()
            out = out * factor.pow(mult)
    return out


def euler_generating(f: BivariateSeries) -> list[int]:
    """Euler numbers: every coefficient polynomial evaluated at t = -1."""
    return f.at_t(-1)


def heisenberg_character(order: int) -> list[int]:
    """Graded dimension of the polynomial Fock space, i.e. the expansion of
    prod_{j>=1} 1/(1 - q^j); coefficient n is the number of partitions of n.
    """
    return _univariate_product(order, lambda j: -1)


def clifford_character(order: int) -> list[int]:
    """Graded dimension of the exterior Fock space, i.e. the expansion of
    prod_{j>=1} (1 + q^j); coefficient n counts partitions into distinct parts.
    """
    return _univariate_product(order, lambda j: 1)


def _univariate_product(order, sign_of):
    # expand prod_{j<=order} (1 + sign_of(j) q^j)^{-sign_of(j)} by convolution
    if order < 0:
        raise ValueError("order must be >= 0")
    out = [0] * (order + 1)
    out[0] = 1
    for j in range(1, order + 1):
        if sign_of(j) < 0:
            # multiply by geometric series in q^j
            for n in range(j, order + 1):
                out[n] += out[n - j]
        else:
            for n in range(order, j - 1, -1):
                out[n] += out[n - j]
    return out


def character_matches_goettsche(betti: BettiProfile, order: int) -> "IdentityReport":
    """Compare the basis-counting character of the graded Fock model built from
    the Betti profile against the product-formula expansion, coefficient by
    coefficient.  The two sides are computed by independent routes.
    """
    from .superfock import GeneratorSpec, super_character

    gens = []
    for degree, mult in enumerate(betti):
        for copy in range(mult):
            gens.append(GeneratorSpec.of(class_id=len(gens), cohomological_degree=degree))
    lhs = super_character(gens, order)
    rhs = goettsche(betti, order)
    for n in range(order + 1):
        if lhs.coeffs[n] != rhs.coeffs[n]:
            return IdentityReport(
                equal=False,
                order=order,
                first_mismatch=n,
                detail=f"q^{n}: character {lhs.coeffs[n]} vs product {rhs.coeffs[n]}",
            )
    return IdentityReport(equal=True, order=order)


@dataclass(frozen=True)
class IdentityReport:
    equal: bool
    order: int
    first_mismatch: int | None = None
    detail: str = ""
