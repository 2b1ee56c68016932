from dataclasses import dataclass
from typing import Optional

from discriminant.intersection import WallIntersection, wall_intersection_length
from gkz.fan import GKZFan
from stratification.walls import WeightedProjectiveData
from utils.logger import logger

INAPPLICABLE_NOTE = "length formula inapplicable: the wall direction is itself a weight ray"


@dataclass(frozen=True)
class ExpectedCountReport:
    wall_index: int
    discriminant_length: int
    collection_length: int
    applicable: bool
    agree: Optional[bool]
    note: str = ""


def expected_autoequivalences(
    fan: GKZFan,
    wall_index: int,
    strat_data: WeightedProjectiveData,
    intersection: Optional[WallIntersection] = None,
) -> ExpectedCountReport:
    """Compare the discriminant length at a wall with the exceptional collection length."""
    intersection = intersection or wall_intersection_length(fan, wall_index)
    if intersection.applicable:
        agree = intersection.total == strat_data.collection_length
        note = ""
    else:
        agree = None
        note = INAPPLICABLE_NOTE

    logger.info(
        f"Wall {wall_index}: discriminant {intersection.total}, "
        f"collection {strat_data.collection_length}, agree={agree}"
    )
    return ExpectedCountReport(
        wall_index=wall_index,
        discriminant_length=intersection.total,
        collection_length=strat_data.collection_length,
        applicable=intersection.applicable,
        agree=agree,
        note=note,
    )
