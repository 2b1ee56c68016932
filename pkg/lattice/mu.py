from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from lattice.vectors import LatticeVector
from utils.exceptions import ZeroVector


@total_ordering
@dataclass(frozen=True)
class MuValue:
    """Exact (chi, lambda)/|lambda| stored as a sign and a squared magnitude."""

    sign: int
    squared: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.squared < 0 or (self.sign == 0) != (self.squared == 0):
            raise ValueError(f"Inconsistent mu value: sign={self.sign}, squared={self.squared}")

    def _key(self) -> Fraction:
        return self.sign * self.squared

    def __lt__(self, other: "MuValue") -> bool:
        return self._key() < other._key()

    def __eq__(self, other) -> bool:
        if not isinstance(other, MuValue):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}sqrt({self.squared})"


def mu_of(chi: LatticeVector, lam: LatticeVector) -> MuValue:
    if lam.is_zero():
        raise ZeroVector("mu is undefined for the zero cocharacter")
    p = chi.pairing(lam)
    sign = (p > 0) - (p < 0)
    return MuValue(sign, Fraction(p * p, lam.norm_squared()))


def mu_compare(chi: LatticeVector, lam1: LatticeVector, lam2: LatticeVector) -> int:
    """-1, 0 or 1 as mu(chi, lam1) is below, equal to or above mu(chi, lam2)."""
    m1, m2 = mu_of(chi, lam1), mu_of(chi, lam2)
    if m1 < m2:
        return -1
    if m2 < m1:
        return 1
    return 0
