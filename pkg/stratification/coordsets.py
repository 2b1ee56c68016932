import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from gkz.weights import WeightMatrix
from utils.exceptions import MalformedInput

SET_MINUS = "∖"
UNION = "∪"
EMPTY = "∅"


def _sort_key(support: FrozenSet[int]):
    return (len(support), sorted(support))


@dataclass(frozen=True)
class ConstructibleCoordSet:
    """
    Span(ambient) with the coordinate subspaces Span(B) removed, B in excluded.

    Supports are index sets of coordinates allowed to be nonzero.
    """

    ambient: FrozenSet[int]
    excluded: Tuple[FrozenSet[int], ...] = ()

    @classmethod
    def build(cls, ambient: Iterable[int], excluded: Iterable[Iterable[int]] = ()) -> "ConstructibleCoordSet":
        return cls(frozenset(ambient), tuple(frozenset(b) for b in excluded)).canonical()

    def is_empty(self) -> bool:
        return self.ambient in self.excluded

    def canonical(self) -> "ConstructibleCoordSet":
        """Intersect every exclusion with the ambient support and keep the maximal ones."""
        cut = {b & self.ambient for b in self.excluded}
        if self.ambient in cut:
            return ConstructibleCoordSet(frozenset(), (frozenset(),))
        maximal = [b for b in cut if not any(b < other for other in cut)]
        return ConstructibleCoordSet(self.ambient, tuple(sorted(maximal, key=_sort_key)))

    def equals(self, other: "ConstructibleCoordSet") -> bool:
        return self.canonical() == other.canonical()


def coord_set_equals(a: ConstructibleCoordSet, b: ConstructibleCoordSet) -> bool:
    return a.equals(b)


def _vanishing_name(vanishing: FrozenSet[int], w: WeightMatrix) -> str:
    """Subscript for the locus where the given coordinates vanish."""
    families = w.families()
    if all(set(members) <= vanishing or not set(members) & vanishing for members in families.values()):
        names = [name for name, members in families.items() if set(members) <= vanishing]
        if all(len(name) == 1 for name in names):
            return "".join(names)
        return ",".join(names)
    return ",".join(w.labels[i] for i in sorted(vanishing))


def render_v_notation(s: ConstructibleCoordSet, w: WeightMatrix) -> str:
    """
    Render as V_{...} minus a union of V_{...}.

    V_T is the locus where the coordinates of T vanish. An exclusion B inside
    the support A is written with the smallest T cutting Span(A) down to
    Span(B), namely T = A minus B.
    """
    c = s.canonical()
    if c.is_empty():
        return EMPTY
    everything = frozenset(range(w.m))
    head = f"V_{{{_vanishing_name(everything - c.ambient, w)}}}"
    if not c.excluded:
        return head
    parts = [f"V_{{{_vanishing_name(c.ambient - b, w)}}}" for b in c.excluded]
    if len(parts) == 1:
        return f"{head}{SET_MINUS}{parts[0]}"
    return f"{head}{SET_MINUS}({UNION.join(parts)})"


_V_TERM = re.compile(r"V_\{([^}]*)\}")


def _parse_vanishing(subscript: str, w: WeightMatrix) -> FrozenSet[int]:
    subscript = subscript.strip()
    if not subscript:
        return frozenset()
    families = w.families()
    index_of = {label: i for i, label in enumerate(w.labels)}
    if "," in subscript:
        tokens = [t.strip() for t in subscript.split(",")]
    else:
        # greedy split against known family names, longest first
        names = sorted(families, key=len, reverse=True)
        tokens, rest = [], subscript
        while rest:
            match = next((n for n in names if rest.startswith(n)), None)
            if match is None:
                raise MalformedInput(f"Cannot read coordinate names in V_{{{subscript}}}")
            tokens.append(match)
            rest = rest[len(match):]
    vanishing = set()
    for token in tokens:
        if token in families:
            vanishing.update(families[token])
        elif token in index_of:
            vanishing.add(index_of[token])
        else:
            raise MalformedInput(f"Unknown coordinate or family {token!r}")
    return frozenset(vanishing)


def parse_v_notation(text: str, w: WeightMatrix) -> ConstructibleCoordSet:
    """Inverse of render_v_notation; accepts a backslash in place of the set-minus sign."""
    text = text.strip().replace("\\", SET_MINUS)
    if text == EMPTY:
        return ConstructibleCoordSet(frozenset(), (frozenset(),))
    everything = frozenset(range(w.m))
    head, _, tail = text.partition(SET_MINUS)
    head_terms = _V_TERM.findall(head)
    if len(head_terms) != 1:
        raise MalformedInput(f"Expected one leading V term in {text!r}")
    ambient = everything - _parse_vanishing(head_terms[0], w)
    excluded: List[FrozenSet[int]] = [
        everything - _parse_vanishing(term, w) for term in _V_TERM.findall(tail)
    ]
    if tail and not excluded:
        raise MalformedInput(f"Nothing follows the set difference in {text!r}")
    return ConstructibleCoordSet.build(ambient, excluded)


def supports_from_pairings(pairings: Sequence[int]) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """(fixed support, attracting support) of a cocharacter from its column pairings."""
    fixed = frozenset(i for i, p in enumerate(pairings) if p == 0)
    attracting = frozenset(i for i, p in enumerate(pairings) if p >= 0)
    return fixed, attracting
