"""Dense integer polynomials in a single variable t."""

from __future__ import annotations

from dataclasses import dataclass


def _trim(coeffs):
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class TPoly:
    """Polynomial in t with integer coefficients, coeffs[d] = coefficient of t^d."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(tuple(int(c) for c in self.coeffs)))

    @classmethod
    def zero(cls) -> TPoly:
        return cls(())

    @classmethod
    def one(cls) -> TPoly:
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> TPoly:
        return cls((0,) * degree + (coeff,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __add__(self, other: TPoly) -> TPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly(tuple(self[d] + other[d] for d in range(n)))

    def __sub__(self, other: TPoly) -> TPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly(tuple(self[d] - other[d] for d in range(n)))

    def __neg__(self) -> TPoly:
        return TPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return TPoly(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for d1, c1 in enumerate(self.coeffs):
            if c1:
                for d2, c2 in enumerate(other.coeffs):
                    out[d1 + d2] += c1 * c2
        return TPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, t: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                pieces.append(str(c))
            else:
                var = "t" if d == 1 else f"t^{d}"
                if c == 1:
                    pieces.append(var)
                elif c == -1:
                    pieces.append(f"-{var}")
                else:
                    pieces.append(f"{c}*{var}")
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out
