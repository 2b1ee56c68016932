import math
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Tuple

from utils.exceptions import ZeroVector


@dataclass(frozen=True)
class LatticeVector:
    """A point of a rank-2 character or cocharacter lattice."""

    x: int
    y: int

    def __post_init__(self):
        # bool is an int subclass; reject it along with floats
        for value in (self.x, self.y):
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"Lattice coordinates must be integers, got {value!r}")

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.x, -self.y)

    def scale(self, k: int) -> "LatticeVector":
        return LatticeVector(k * self.x, k * self.y)

    def pairing(self, other: "LatticeVector") -> int:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "LatticeVector") -> int:
        return self.x * other.y - self.y * other.x

    def norm_squared(self) -> int:
        return self.x * self.x + self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def rot_ccw(self) -> "LatticeVector":
        return LatticeVector(-self.y, self.x)

    def rot_cw(self) -> "LatticeVector":
        return LatticeVector(self.y, -self.x)

    def is_parallel(self, other: "LatticeVector") -> bool:
        """Same direction, positive multiple."""
        return self.cross(other) == 0 and self.pairing(other) > 0

    def as_list(self):
        return [self.x, self.y]

    def __str__(self):
        return f"({self.x},{self.y})"


def primitive(v: LatticeVector) -> Tuple[LatticeVector, int]:
    """Split v into a primitive direction and a positive multiplier."""
    if v.is_zero():
        raise ZeroVector(f"Cannot take the primitive direction of {v}")
    g = math.gcd(v.x, v.y)
    return LatticeVector(v.x // g, v.y // g), g


def _half(v: LatticeVector) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    if v.y > 0 or (v.y == 0 and v.x > 0):
        return 0
    return 1


def ccw_compare(a: LatticeVector, b: LatticeVector) -> int:
    """Compare angles measured counterclockwise from the positive x-axis."""
    if a.is_zero() or b.is_zero():
        raise ZeroVector("The angle of the zero vector is undefined")
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    c = a.cross(b)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


ccw_key = cmp_to_key(ccw_compare)
