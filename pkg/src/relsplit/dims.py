"""Physical dimensions as the free Abelian group over the basis (L, T, M, I).

Every field object in this package carries a ``Dimension``; binary operations
combine dimensions, and addition requires equal tags.  Exponents are integers
(no rational-exponent systems).
"""
from __future__ import annotations

from dataclasses import dataclass


class DimensionError(ValueError):
    """Raised when quantities of unequal dimension are combined additively."""


@dataclass(frozen=True)
class Dimension:
    """Element of the dimension group, stored as exponents of (L, T, M, I)."""

    exps: tuple[int, int, int, int] = (0, 0, 0, 0)

    def __mul__(self, other: "Dimension") -> "Dimension":
        return Dimension(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: "Dimension") -> "Dimension":
        return Dimension(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, q: int) -> "Dimension":
        return Dimension(tuple(a * q for a in self.exps))

    def inverse(self) -> "Dimension":
        return self ** -1

    @property
    def is_neutral(self) -> bool:
        return self.exps == (0, 0, 0, 0)

    def __str__(self) -> str:
        if self.is_neutral:
            return "1"
        parts = []
        for sym, e in zip("LTMI", self.exps):
            if e == 1:
                parts.append(sym)
            elif e != 0:
                parts.append(f"{sym}^{e}")
        return " ".join(parts)


def dim_mul(a: Dimension, b: Dimension) -> Dimension:
    return a * b


def pd_check(terms: list[Dimension]) -> bool:
    """True iff all entries of a nonempty list of dimensions are equal."""
    if not terms:
        raise ValueError("pd_check needs at least one term")
    return all(t == terms[0] for t in terms)


def require_same(a: Dimension, b: Dimension, what: str = "addition") -> None:
    if a != b:
        raise DimensionError(f"{what} of unequal dimensions {a} and {b}")


ONE = Dimension()
L = Dimension((1, 0, 0, 0))
T = Dimension((0, 1, 0, 0))
M = Dimension((0, 0, 1, 0))
I = Dimension((0, 0, 0, 1))

# Derived dimensions used throughout: voltage, action, and the EM field/source
# dimensions.  U = M L^2 T^-3 I^-1 and A = U I T^2 = M L^2 T^-1.
U = M * L ** 2 / (T ** 3 * I)
A = U * I * T ** 2
UT = U * T          # Faraday fields A, F, a, b, e~
IT = I * T          # Ampere-Maxwell fields H, J, d, h~
Z0_DIM = U / I      # vacuum impedance
C0_DIM = L / T      # speed of light
EPS0_DIM = I * T / (U * L)
MU0_DIM = U * T / (I * L)
