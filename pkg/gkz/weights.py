import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from lattice.vectors import LatticeVector
from utils.exceptions import MalformedInput, NotCalabiYau, RankDeficient, ZeroColumn
from utils.logger import logger


def _family(label: str) -> str:
    stripped = re.sub(r"\d+$", "", label)
    return stripped or label


@dataclass(frozen=True)
class WeightMatrix:
    """Weights of a rank-2 torus on m coordinates, one column per coordinate."""

    columns: Tuple[LatticeVector, ...]
    labels: Tuple[str, ...]

    @property
    def m(self) -> int:
        return len(self.columns)

    def rows(self) -> List[List[int]]:
        return [[c.x for c in self.columns], [c.y for c in self.columns]]

    def families(self) -> Dict[str, Tuple[int, ...]]:
        """Coordinates grouped by label with trailing digits stripped, in label order."""
        groups: Dict[str, List[int]] = {}
        for i, label in enumerate(self.labels):
            groups.setdefault(_family(label), []).append(i)
        return {name: tuple(members) for name, members in groups.items()}

    def pairings(self, lam: LatticeVector) -> List[int]:
        return [c.pairing(lam) for c in self.columns]


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def parse_and_validate(raw: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> WeightMatrix:
    """Validate a 2 x m integer table and wrap it as a WeightMatrix."""
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        raise MalformedInput("Weight matrix must have exactly two rows")
    top, bottom = raw
    if not isinstance(top, (list, tuple)) or not isinstance(bottom, (list, tuple)):
        raise MalformedInput("Weight matrix rows must be sequences")
    if len(top) != len(bottom) or len(top) == 0:
        raise MalformedInput(f"Weight matrix rows have lengths {len(top)} and {len(bottom)}")
    if not all(_is_int(v) for v in list(top) + list(bottom)):
        raise MalformedInput("Weight matrix entries must be integers")

    columns = tuple(LatticeVector(a, b) for a, b in zip(top, bottom))

    for i, column in enumerate(columns):
        if column.is_zero():
            raise ZeroColumn(f"Column {i} of the weight matrix is zero")

    if sum(top) != 0 or sum(bottom) != 0:
        raise NotCalabiYau(f"Row sums are ({sum(top)}, {sum(bottom)}), expected (0, 0)")

    if all(columns[0].cross(c) == 0 for c in columns):
        raise RankDeficient("All weight columns lie on one line")

    if labels is None:
        labels = [f"x{i}" for i in range(len(columns))]
    labels = tuple(labels)
    if len(labels) != len(columns):
        raise MalformedInput(f"Expected {len(columns)} labels, got {len(labels)}")
    if len(set(labels)) != len(labels) or not all(isinstance(s, str) and s for s in labels):
        raise MalformedInput("Labels must be distinct nonempty strings")

    logger.info(f"Validated weight matrix with {len(columns)} columns")
    return WeightMatrix(columns=columns, labels=labels)
