from dataclasses import dataclass
from enum import Enum

from lattice.vectors import LatticeVector, primitive
from utils.exceptions import MalformedInput


class Side(str, Enum):
    CHARACTER = "character"
    COCHARACTER = "cocharacter"

    def other(self) -> "Side":
        return Side.COCHARACTER if self is Side.CHARACTER else Side.CHARACTER


@dataclass(frozen=True)
class Cone2:
    """Strictly convex cone on two primitive generators, a before b counterclockwise."""

    a: LatticeVector
    b: LatticeVector
    side: Side = Side.CHARACTER

    def __post_init__(self):
        if self.a.is_zero() or self.b.is_zero():
            raise MalformedInput(f"Cone generators must be nonzero: {self.a}, {self.b}")
        if primitive(self.a)[1] != 1 or primitive(self.b)[1] != 1:
            raise MalformedInput(f"Cone generators must be primitive: {self.a}, {self.b}")
        if self.a.cross(self.b) <= 0:
            raise MalformedInput(
                f"cone({self.a},{self.b}) is not strictly convex with counterclockwise generators"
            )

    @classmethod
    def spanned_by(cls, u: LatticeVector, v: LatticeVector, side: Side = Side.CHARACTER) -> "Cone2":
        """Build the cone on u and v in either order, reducing both to primitive vectors."""
        pu, pv = primitive(u)[0], primitive(v)[0]
        if pu.cross(pv) < 0:
            pu, pv = pv, pu
        return cls(pu, pv, side)

    def contains(self, v: LatticeVector) -> bool:
        """Closed membership."""
        return self.a.cross(v) >= 0 and v.cross(self.b) >= 0

    def contains_interior(self, v: LatticeVector) -> bool:
        return self.a.cross(v) > 0 and v.cross(self.b) > 0

    def __str__(self):
        return f"cone({self.a},{self.b})"


def dual_cone(c: Cone2) -> Cone2:
    """Vectors pairing nonnegatively with all of c, on the opposite lattice side."""
    # rot_cw(b) is orthogonal to b and pairs with a to cross(a, b) > 0; symmetrically for a
    return Cone2(c.b.rot_cw(), c.a.rot_ccw(), c.side.other())
