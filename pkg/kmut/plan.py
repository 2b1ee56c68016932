from dataclasses import dataclass
from typing import List, Tuple

from stratification.windows import window_for_eta
from utils.exceptions import MalformedInput


@dataclass(frozen=True)
class TwistStep:
    twist: str
    source: str
    target: str
    grade_rule: str


@dataclass(frozen=True)
class FactorizationPlan:
    collection_length: int
    eta: int
    weight: int
    categories: Tuple[str, ...]
    steps: Tuple[TwistStep, ...]

    def composition(self) -> List[str]:
        """Twist labels in composition order, leftmost applied last."""
        return [step.twist for step in reversed(self.steps)]


def _window_text(values: Tuple[int, ...]) -> str:
    return f"[{values[0]}, {values[-1]}]" if values else "[]"


def factorization_plan(collection_length: int, eta: int, w: int) -> FactorizationPlan:
    """
    Chain G_{w+1} -> H_N -> ... -> H_1 -> G_w, one spherical twist per arrow.

    H_i keeps the closed window [w, w+eta] and asks the weight-w part of the
    restriction to the fixed locus to be left orthogonal to E_j for j < i.
    """
    if collection_length < 1:
        raise MalformedInput(f"Collection length must be positive, got {collection_length}")
    n = collection_length - 1
    window = window_for_eta(eta, w)

    categories = [f"G_{{{w + 1}}}"] + [f"H_{i}" for i in range(n, 0, -1)] + [f"G_{{{w}}}"]
    rules = {
        f"G_{{{w + 1}}}": f"weights in {_window_text(window.next_g_window)}",
        f"G_{{{w}}}": f"weights in {_window_text(window.g_window)}",
    }
    for i in range(1, n + 1):
        rules[f"H_{i}"] = (
            f"weights in {_window_text(window.c_window)}; "
            f"Hom((σ*F)_[λ={w}], E_j) = 0 for j < {i}"
        )

    steps = []
    for position, (source, target) in enumerate(zip(categories, categories[1:])):
        index = n - position
        steps.append(TwistStep(twist=f"T_{{S_{index}}}", source=source, target=target, grade_rule=rules[target]))

    return FactorizationPlan(
        collection_length=collection_length,
        eta=eta,
        weight=w,
        categories=tuple(categories),
        steps=tuple(steps),
    )
