from dataclasses import dataclass
from typing import List, Optional, Tuple

from gkz.fan import GKZFan, LocationKind, build_fan, group_rays, locate
from gkz.weights import WeightMatrix
from lattice.mu import MuValue, mu_of
from lattice.vectors import LatticeVector, primitive
from stratification.coordsets import ConstructibleCoordSet, supports_from_pairings
from utils.exceptions import NonGenericLinearization, ZeroVector
from utils.logger import logger


@dataclass(frozen=True)
class KNStratum:
    lam: LatticeVector
    mu: MuValue
    z_set: ConstructibleCoordSet
    s_set: ConstructibleCoordSet
    eta_plus: int
    eta_minus: int


@dataclass(frozen=True)
class MaxStratum:
    lam: LatticeVector
    s_set: ConstructibleCoordSet


@dataclass(frozen=True)
class Stratification:
    linearization: LatticeVector
    chamber: int
    max_stratum: MaxStratum
    strata: Tuple[KNStratum, ...]

    def lambdas(self) -> List[LatticeVector]:
        return [s.lam for s in self.strata]

    def stratum_for(self, lam: LatticeVector) -> Optional[KNStratum]:
        return next((s for s in self.strata if s.lam == lam), None)


def eta_of(w: WeightMatrix, lam: LatticeVector) -> int:
    """Total weight of lambda on the coordinates it contracts."""
    if lam.is_zero():
        raise ZeroVector("eta is undefined for the zero cocharacter")
    return sum(-p for p in w.pairings(lam) if p < 0)


def candidate_cocharacters(fan: GKZFan, chi: LatticeVector) -> List[Tuple[LatticeVector, MuValue]]:
    """
    Primitive cocharacters orthogonal to some ray and destabilizing chi,
    sorted by strictly decreasing mu.
    """
    seen = {}
    for group in fan.ray_groups:
        lam = group.chi.rot_ccw()
        p = chi.pairing(lam)
        if p == 0:
            raise NonGenericLinearization(f"{chi} is parallel to the ray {group.chi}")
        if p < 0:
            lam = -lam
        seen[lam] = mu_of(chi, lam)

    ordered = sorted(seen.items(), key=lambda item: item[1], reverse=True)
    for (lam1, mu1), (lam2, mu2) in zip(ordered, ordered[1:]):
        if mu1 == mu2:
            raise NonGenericLinearization(f"Candidates {lam1} and {lam2} tie in mu for {chi}")
    return ordered


def _stratify_ordered(
    w: WeightMatrix,
    chi: LatticeVector,
    chamber: int,
    candidates: List[Tuple[LatticeVector, MuValue]],
) -> Stratification:
    lam_max = primitive(chi)[0]
    _, max_support = supports_from_pairings(w.pairings(lam_max))
    supports = [max_support]

    strata = []
    for lam, mu in candidates:
        fixed, attracting = supports_from_pairings(w.pairings(lam))
        if any(fixed <= earlier for earlier in supports):
            logger.debug(f"Skipping candidate {lam}: fixed support inside an earlier stratum")
            continue
        strata.append(
            KNStratum(
                lam=lam,
                mu=mu,
                z_set=ConstructibleCoordSet.build(fixed, supports),
                s_set=ConstructibleCoordSet.build(attracting, supports),
                eta_plus=eta_of(w, lam),
                eta_minus=eta_of(w, -lam),
            )
        )
        supports.append(attracting)

    logger.debug(f"Stratified {chi}: {len(strata)} strata below the maximal one")
    return Stratification(
        linearization=chi,
        chamber=chamber,
        max_stratum=MaxStratum(lam_max, ConstructibleCoordSet.build(max_support)),
        strata=tuple(strata),
    )


def kn_stratify(w: WeightMatrix, chi: LatticeVector, fan: Optional[GKZFan] = None) -> Stratification:
    """Kirwan-Ness stratification of the unstable locus for a chamber-interior character."""
    fan = fan or build_fan(group_rays(w))
    where = locate(fan, chi)
    if where.kind is not LocationKind.CHAMBER:
        raise NonGenericLinearization(f"{chi} is not inside a chamber ({where.kind.value})")
    return _stratify_ordered(w, chi, where.index, candidate_cocharacters(fan, chi))


def chamber_sample(fan: GKZFan, chamber: int, reach: int = 8) -> LatticeVector:
    """First generic character i*a + j*b of the chamber, by increasing i + j."""
    cone = fan.chamber(chamber)
    for total in range(2, 2 * reach + 1):
        for i in range(1, total):
            chi = cone.a.scale(i) + cone.b.scale(total - i)
            try:
                candidate_cocharacters(fan, chi)
            except NonGenericLinearization:
                continue
            return chi
    raise NonGenericLinearization(f"No generic character found in chamber {chamber}")
