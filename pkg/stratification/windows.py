from dataclasses import dataclass
from typing import Tuple, Union

from stratification.kn import KNStratum
from utils.exceptions import MalformedInput


@dataclass(frozen=True)
class WindowDescriptor:
    """Grade-restriction bookkeeping for one stratum at window position w."""

    eta: int
    weight: int
    g_window: Tuple[int, ...]
    c_window: Tuple[int, ...]
    next_g_window: Tuple[int, ...]
    dual_weight: int

    def dual(self) -> "WindowDescriptor":
        return window_for_eta(self.eta, self.dual_weight)


def window_for_eta(eta: int, w: int) -> WindowDescriptor:
    if eta < 0:
        raise MalformedInput(f"Window width must be nonnegative, got {eta}")
    return WindowDescriptor(
        eta=eta,
        weight=w,
        g_window=tuple(range(w, w + eta)),
        c_window=tuple(range(w, w + eta + 1)),
        next_g_window=tuple(range(w + 1, w + 1 + eta)),
        dual_weight=-eta - w,
    )


def window_descriptor(stratum: Union[KNStratum, int], w: int) -> WindowDescriptor:
    """G = [w, w+eta), C = [w, w+eta], A sits at weight w, dual position -eta-w."""
    eta = stratum if isinstance(stratum, int) else stratum.eta_plus
    return window_for_eta(eta, w)
