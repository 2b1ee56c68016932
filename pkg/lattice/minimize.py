import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple, Union

import numpy as np

from lattice.cones import Cone2
from lattice.vectors import LatticeVector
from utils.config import Config
from utils.exceptions import EmptyFeasibleRegion
from utils.logger import logger


class Unbounded(Enum):
    UNBOUNDED = "unbounded"

    def __str__(self):
        return self.value


UNBOUNDED = Unbounded.UNBOUNDED


@dataclass(frozen=True)
class HalfPlane:
    """The region (normal, lambda) <= bound."""

    normal: LatticeVector
    bound: int

    def admits(self, v: LatticeVector) -> bool:
        return self.normal.pairing(v) <= self.bound


def _extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _constraints(cone: Cone2, half_plane: Optional[HalfPlane]) -> List[Tuple[LatticeVector, int]]:
    """Every constraint as (a, beta) meaning (a, lambda) <= beta."""
    rows = [
        # cross(a, lam) >= 0 and cross(lam, b) >= 0
        (LatticeVector(cone.a.y, -cone.a.x), 0),
        (LatticeVector(-cone.b.y, cone.b.x), 0),
    ]
    if half_plane is not None:
        rows.append((half_plane.normal, half_plane.bound))
    return rows


def _feasible_point(cone: Cone2, half_plane: Optional[HalfPlane]) -> LatticeVector:
    if half_plane is None or half_plane.bound >= 0:
        return LatticeVector(0, 0)
    n, b = half_plane.normal, half_plane.bound
    best = None
    for g in (cone.a, cone.b):
        ng = n.pairing(g)
        if ng < 0:
            # b < 0 and ng < 0, so the multiplier is positive
            point = g.scale(math.ceil(Fraction(b, ng)))
            if best is None or point.norm_squared() < best.norm_squared():
                best = point
    if best is None:
        raise EmptyFeasibleRegion(f"No lattice point of {cone} satisfies ({n}, lambda) <= {b}")
    return best


def _recession_rays(cone: Cone2, half_plane: Optional[HalfPlane]) -> List[LatticeVector]:
    if half_plane is None:
        return [cone.a, cone.b]
    n = half_plane.normal
    na, nb = n.pairing(cone.a), n.pairing(cone.b)
    rays = [g for g, ng in ((cone.a, na), (cone.b, nb)) if ng <= 0]
    if (na < 0 < nb) or (nb < 0 < na):
        rays.append(cone.a.scale(abs(nb)) + cone.b.scale(abs(na)))
    return rays


def _vertices(cone: Cone2, half_plane: Optional[HalfPlane]) -> List[Tuple[Fraction, Fraction]]:
    if half_plane is None:
        return [(Fraction(0), Fraction(0))]
    n, b = half_plane.normal, half_plane.bound
    points = []
    if b >= 0:
        points.append((Fraction(0), Fraction(0)))
    for g in (cone.a, cone.b):
        ng = n.pairing(g)
        if ng != 0:
            t = Fraction(b, ng)
            if t >= 0:
                points.append((t * g.x, t * g.y))
    return points


def _level_has_point(objective: LatticeVector, level: int, rows) -> bool:
    """Is there an integer lambda with (objective, lambda) = level meeting every row?"""
    g, s, t = _extended_gcd(objective.x, objective.y)
    if level % g != 0:
        return False
    base = LatticeVector(s * (level // g), t * (level // g))
    step = LatticeVector(-objective.y // g, objective.x // g)
    lo, hi = None, None
    for a, beta in rows:
        k = a.pairing(step)
        r = beta - a.pairing(base)
        if k == 0:
            if r < 0:
                return False
        elif k > 0:
            bound = r // k
            hi = bound if hi is None else min(hi, bound)
        else:
            bound = math.ceil(Fraction(r, k))
            lo = bound if lo is None else max(lo, bound)
    return lo is None or hi is None or lo <= hi


def lattice_minimize(
    objective: LatticeVector,
    cone: Cone2,
    half_plane: Optional[HalfPlane] = None,
) -> Union[int, Unbounded]:
    """
    Exact minimum of (objective, lambda) over lattice points of the cone,
    optionally cut by a half plane.
    """
    anchor = _feasible_point(cone, half_plane)

    for ray in _recession_rays(cone, half_plane):
        if objective.pairing(ray) < 0:
            logger.debug(f"Objective {objective} unbounded along {ray} on {cone}")
            return UNBOUNDED

    if objective.is_zero():
        return 0

    relaxed = min(objective.x * vx + objective.y * vy for vx, vy in _vertices(cone, half_plane))
    upper = objective.pairing(anchor)
    rows = _constraints(cone, half_plane)

    for level in range(math.ceil(relaxed), upper + 1):
        if _level_has_point(objective, level, rows):
            return level

    # anchor itself sits on the level `upper`
    return upper


def brute_force_minimize(
    objective: LatticeVector,
    cone: Cone2,
    half_plane: Optional[HalfPlane] = None,
    radius: Optional[int] = None,
) -> int:
    """Minimum over the lattice box |coordinates| <= radius, used as an oracle."""
    radius = Config.BRUTE_FORCE_RADIUS if radius is None else radius
    axis = np.arange(-radius, radius + 1, dtype=np.int64)
    xs, ys = np.meshgrid(axis, axis, indexing="ij")

    mask = (cone.a.x * ys - cone.a.y * xs >= 0) & (xs * cone.b.y - ys * cone.b.x >= 0)
    if half_plane is not None:
        mask &= half_plane.normal.x * xs + half_plane.normal.y * ys <= half_plane.bound
    if not mask.any():
        raise EmptyFeasibleRegion(f"No lattice point of {cone} within radius {radius}")

    values = objective.x * xs[mask] + objective.y * ys[mask]
    return int(values.min())
