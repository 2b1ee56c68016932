from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from gkz.fan import GKZFan
from gkz.weights import WeightMatrix
from lattice.mu import mu_of
from lattice.vectors import LatticeVector
from stratification.coordsets import ConstructibleCoordSet
from stratification.kn import KNStratum, Stratification, _stratify_ordered, candidate_cocharacters
from stratification.windows import WindowDescriptor, window_for_eta
from utils.config import Config
from utils.exceptions import NoFlippedStratum, NonGenericLinearization, NotWallStratum
from utils.logger import logger


class Verdict(str, Enum):
    BALANCED = "Balanced"
    NOT_BALANCED = "NotBalanced"


@dataclass(frozen=True)
class WeightedProjectiveData:
    positive_weights: Tuple[int, ...]
    negative_weights: Tuple[int, ...]
    collection_length: int

    @property
    def weighted_projective(self) -> bool:
        return not self.negative_weights


@dataclass(frozen=True)
class BalancedWallReport:
    wall_index: int
    ray: LatticeVector
    k: int
    chi_plus: LatticeVector
    chi_minus: LatticeVector
    side_plus: Stratification
    side_minus: Stratification
    flipped_plus: KNStratum
    flipped_minus: KNStratum
    shared_z: Optional[ConstructibleCoordSet]
    eta: int
    residual_weights: Tuple[int, ...]
    verdict: Verdict

    def window_dual(self, w: int) -> int:
        return -self.eta - w

    def window(self, w: int) -> WindowDescriptor:
        return window_for_eta(self.eta, w)


def _limiting_order(fan: GKZFan, r: LatticeVector, side: int) -> List[LatticeVector]:
    """Candidate order for K*r + side*r_perp as K grows without bound."""
    push = r.rot_ccw().scale(side)
    oriented = set()
    for group in fan.ray_groups:
        lam = group.chi.rot_ccw()
        lead = r.pairing(lam)
        if lead < 0 or (lead == 0 and push.pairing(lam) < 0):
            lam = -lam
        oriented.add(lam)
    return sorted(oriented, key=lambda lam: (mu_of(r, lam), mu_of(push, lam)), reverse=True)


def _orientation_bound(fan: GKZFan, r: LatticeVector) -> int:
    r_perp = r.rot_ccw()
    return 1 + max(max(abs(g.chi.pairing(r)), abs(g.chi.pairing(r_perp))) for g in fan.ray_groups)


def near_wall_characters(fan: GKZFan, wall_index: int) -> Tuple[int, LatticeVector, LatticeVector]:
    """Smallest K whose characters K*r +- r_perp already show the limiting stratum order."""
    r = fan.wall(wall_index).ray
    r_perp = r.rot_ccw()
    limits = {side: _limiting_order(fan, r, side) for side in (1, -1)}

    def settled(k: int) -> bool:
        for side, expected in limits.items():
            chi = r.scale(k) + r_perp.scale(side)
            try:
                actual = [lam for lam, _ in candidate_cocharacters(fan, chi)]
            except NonGenericLinearization:
                return False
            if actual != expected:
                return False
        return True

    low = _orientation_bound(fan, r)
    if not settled(low):
        high = 2 * low
        for _ in range(Config.NEAR_WALL_MAX_DOUBLINGS):
            if settled(high):
                break
            high *= 2
        else:
            raise NonGenericLinearization(f"No near-wall characters settle for wall {wall_index}")
        while high - low > 1:
            middle = (low + high) // 2
            if settled(middle):
                high = middle
            else:
                low = middle
        low = high

    return low, r.scale(low) + r_perp, r.scale(low) - r_perp


def wall_crossing(w: WeightMatrix, fan: GKZFan, wall_index: int) -> BalancedWallReport:
    """Stratify both sides of a wall and match the strata that flip across it."""
    wall = fan.wall(wall_index)
    k, chi_plus, chi_minus = near_wall_characters(fan, wall_index)
    chamber_plus, chamber_minus = fan.adjacent_chambers(wall_index)

    side_plus = _stratify_ordered(w, chi_plus, chamber_plus, candidate_cocharacters(fan, chi_plus))
    side_minus = _stratify_ordered(w, chi_minus, chamber_minus, candidate_cocharacters(fan, chi_minus))

    lam = wall.ray.rot_ccw()
    flipped_plus = side_plus.stratum_for(lam)
    flipped_minus = side_minus.stratum_for(-lam)
    if flipped_plus is None or flipped_minus is None:
        raise NoFlippedStratum(f"Wall {wall_index}: no strata with cocharacters +-{lam} on both sides")

    balanced = flipped_plus.z_set.equals(flipped_minus.z_set)
    verdict = Verdict.BALANCED if balanced else Verdict.NOT_BALANCED

    residual = tuple(fan.ray_groups[wall.source_group].multipliers)
    if wall.opposite_group is not None:
        residual += tuple(-d for d in fan.ray_groups[wall.opposite_group].multipliers)

    logger.info(
        f"Wall {wall_index} along {wall.ray}: {verdict.value}, K={k}, eta={flipped_plus.eta_plus}"
    )
    return BalancedWallReport(
        wall_index=wall_index,
        ray=wall.ray,
        k=k,
        chi_plus=chi_plus,
        chi_minus=chi_minus,
        side_plus=side_plus,
        side_minus=side_minus,
        flipped_plus=flipped_plus,
        flipped_minus=flipped_minus,
        shared_z=flipped_plus.z_set.canonical() if balanced else None,
        eta=flipped_plus.eta_plus,
        residual_weights=residual,
        verdict=verdict,
    )


def fixed_subquotient(fan: GKZFan, stratum: KNStratum, wall_index: int) -> WeightedProjectiveData:
    """Weights of the residual circle action on the coordinates fixed by a wall cocharacter."""
    wall = fan.wall(wall_index)
    if stratum.lam.pairing(wall.ray) != 0:
        raise NotWallStratum(f"Cocharacter {stratum.lam} is not orthogonal to wall ray {wall.ray}")
    positive = tuple(fan.ray_groups[wall.source_group].multipliers)
    negative = ()
    if wall.opposite_group is not None:
        negative = tuple(-d for d in fan.ray_groups[wall.opposite_group].multipliers)
    return WeightedProjectiveData(
        positive_weights=positive,
        negative_weights=negative,
        collection_length=sum(positive),
    )
