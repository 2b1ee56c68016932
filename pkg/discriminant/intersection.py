from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from discriminant.horn import positive_form
from gkz.fan import GKZFan
from lattice.cones import dual_cone
from lattice.minimize import HalfPlane, UNBOUNDED, brute_force_minimize, lattice_minimize
from lattice.vectors import LatticeVector
from utils.logger import logger


@dataclass(frozen=True)
class RayPoint:
    """A zero of one or more Horn linear forms on the parameter line."""

    form: LatticeVector
    ray_groups: Tuple[int, ...]
    functional: LatticeVector


@dataclass
class PointLength:
    point: RayPoint
    lengths: Dict[int, int] = field(default_factory=dict)

    @property
    def length(self) -> int:
        return max(self.lengths.values(), default=0)

    @property
    def charts(self) -> Tuple[int, ...]:
        return tuple(sorted(self.lengths))


@dataclass
class WallIntersection:
    wall_index: int
    charts: Tuple[int, int]
    applicable: bool
    d_formula: Optional[int]
    per_point: List[PointLength]
    total: int

    def support(self) -> List[RayPoint]:
        return [p.point for p in self.per_point if p.length > 0]

    def charts_agree(self) -> bool:
        """Every supported point has the same length in every chart that contains it."""
        for p in self.per_point:
            if p.length > 0 and (set(p.lengths) != set(self.charts) or len(set(p.lengths.values())) != 1):
                return False
        return True


def ray_points(fan: GKZFan) -> List[RayPoint]:
    """Ray points with antiparallel rays merged; functional is the valuation of f*(x^lambda)."""
    grouped: Dict[LatticeVector, List[int]] = {}
    for index, group in enumerate(fan.ray_groups):
        form, _ = positive_form(group.chi)
        grouped.setdefault(form, []).append(index)

    points = []
    for form, members in grouped.items():
        functional = LatticeVector(0, 0)
        for index in members:
            group = fan.ray_groups[index]
            functional = functional - group.chi.scale(group.total)
        points.append(RayPoint(form=form, ray_groups=tuple(members), functional=functional))
    return points


def _chart_lengths(fan: GKZFan, chamber: int, wall_index: int, points: List[RayPoint], minimize):
    chart = dual_cone(fan.chamber(chamber))
    source = fan.ray_groups[fan.wall(wall_index).source_group].chi
    ideal = HalfPlane(normal=source, bound=-1)
    lengths = {}
    for point in points:
        if lattice_minimize(point.functional, chart) is UNBOUNDED:
            logger.debug(f"Point {point.form} lies outside the chart of chamber {chamber}")
            continue
        lengths[point.form] = minimize(point.functional, chart, ideal)
    return lengths


def wall_intersection_length(fan: GKZFan, wall_index: int, oracle: bool = False) -> WallIntersection:
    """
    Length of the discriminant along the curve of a wall, computed in the charts
    of both adjacent chambers. With oracle=True the lengths come from brute-force
    enumeration instead of exact minimization.
    """
    wall = fan.wall(wall_index)
    applicable = wall.opposite_group is None
    points = ray_points(fan)
    minimize = brute_force_minimize if oracle else lattice_minimize

    charts = fan.adjacent_chambers(wall_index)
    per_point = {p.form: PointLength(point=p) for p in points}
    for chamber in charts:
        for form, length in _chart_lengths(fan, chamber, wall_index, points, minimize).items():
            per_point[form].lengths[chamber] = length

    records = [per_point[p.form] for p in points if per_point[p.form].lengths]
    total = sum(record.length for record in records)
    d_formula = fan.ray_groups[wall.source_group].total if applicable else None

    logger.info(f"Wall {wall_index}: discriminant length {total} (applicable={applicable})")
    return WallIntersection(
        wall_index=wall_index,
        charts=charts,
        applicable=applicable,
        d_formula=d_formula,
        per_point=records,
        total=total,
    )
