from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from gkz.weights import WeightMatrix
from lattice.cones import Cone2
from lattice.vectors import LatticeVector, ccw_key, primitive
from utils.exceptions import DegenerateFan, IndexOutOfRange
from utils.logger import logger


@dataclass(frozen=True)
class RayGroup:
    """Columns sharing one primitive direction chi, column j equal to multipliers[j] * chi."""

    chi: LatticeVector
    multipliers: Tuple[int, ...]
    member_columns: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.multipliers)


@dataclass(frozen=True)
class Wall:
    """The ray spanned by -chi of one ray group."""

    ray: LatticeVector
    source_group: int
    # group whose chi equals the wall ray itself, if any
    opposite_group: Optional[int] = None


@dataclass(frozen=True)
class GKZFan:
    ray_groups: Tuple[RayGroup, ...]
    walls: Tuple[Wall, ...]
    chambers: Tuple[Cone2, ...]

    def wall(self, index: int) -> Wall:
        if not 0 <= index < len(self.walls):
            raise IndexOutOfRange(f"Wall index {index} outside 0..{len(self.walls) - 1}")
        return self.walls[index]

    def chamber(self, index: int) -> Cone2:
        if not 0 <= index < len(self.chambers):
            raise IndexOutOfRange(f"Chamber index {index} outside 0..{len(self.chambers) - 1}")
        return self.chambers[index]

    def adjacent_chambers(self, wall_index: int) -> Tuple[int, int]:
        """(chamber counterclockwise of the wall, chamber clockwise of it)."""
        self.wall(wall_index)
        return wall_index, (wall_index - 1) % len(self.chambers)


class LocationKind(str, Enum):
    CHAMBER = "chamber"
    WALL = "wall"
    ORIGIN = "origin"


@dataclass(frozen=True)
class Location:
    kind: LocationKind
    index: Optional[int] = None


def group_rays(w: WeightMatrix) -> List[RayGroup]:
    """One group per primitive column direction, counterclockwise from the positive x-axis."""
    buckets: Dict[LatticeVector, List[Tuple[int, int]]] = {}
    for i, column in enumerate(w.columns):
        direction, multiplier = primitive(column)
        buckets.setdefault(direction, []).append((i, multiplier))

    groups = [
        RayGroup(
            chi=direction,
            multipliers=tuple(mult for _, mult in members),
            member_columns=tuple(i for i, _ in members),
        )
        for direction, members in buckets.items()
    ]
    groups.sort(key=lambda g: ccw_key(g.chi))
    return groups


def build_fan(groups: List[RayGroup]) -> GKZFan:
    """Walls are the rays -chi_i; chambers are cones on consecutive walls."""
    by_direction = {g.chi: i for i, g in enumerate(groups)}
    walls = [
        Wall(ray=-g.chi, source_group=i, opposite_group=by_direction.get(-g.chi))
        for i, g in enumerate(groups)
    ]
    walls.sort(key=lambda wall: ccw_key(wall.ray))

    if len(walls) < 3:
        raise DegenerateFan(f"Only {len(walls)} wall directions; a complete fan needs at least 3")

    chambers = []
    for k, wall in enumerate(walls):
        following = walls[(k + 1) % len(walls)]
        if wall.ray.cross(following.ray) <= 0:
            raise DegenerateFan(f"Walls {wall.ray} and {following.ray} do not bound a convex chamber")
        chambers.append(Cone2(wall.ray, following.ray))

    logger.info(f"Built GKZ fan with {len(walls)} walls from {len(groups)} ray groups")
    return GKZFan(ray_groups=tuple(groups), walls=tuple(walls), chambers=tuple(chambers))


def locate(fan: GKZFan, chi: LatticeVector) -> Location:
    if chi.is_zero():
        return Location(LocationKind.ORIGIN)
    for k, wall in enumerate(fan.walls):
        if wall.ray.is_parallel(chi):
            return Location(LocationKind.WALL, k)
    for k, chamber in enumerate(fan.chambers):
        if chamber.contains_interior(chi):
            return Location(LocationKind.CHAMBER, k)
    raise DegenerateFan(f"{chi} is neither on a wall nor inside a chamber")
