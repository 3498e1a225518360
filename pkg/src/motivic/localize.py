"""Torus localization of absolute motives.

For a torus action on an oriented d-critical locus whose fixed locus splits
into components, the absolute class localizes as

    sum_i  L^(-ind_i / 2) . (absolute class of component i),

where the virtual index of a component is the signed count of nonzero
tangent weights at a representative point: dim(T+) - dim(T-).  Weights are
supplied, never derived; goodness and circle-compactness of the action are
recorded as asserted flags on the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ZeroWeight
from .halflaurent import HalfLaurent
from .motive import Motive
from .registry import POINT, Registry


@dataclass(frozen=True)
class FixedComponentDatum:
    """One fixed component: its nonzero tangent weights and absolute class.

    ``motive`` None marks an isolated point (class 1 over the point).
    """

    id: str
    weights: tuple[int, ...]
    motive: Optional[Motive] = None
    good: bool = True
    circle_compact: bool = True


def virtual_index(weights) -> int:
    """dim(T+) - dim(T-) from the nonzero weight list."""
    idx = 0
    for w in weights:
        if w == 0:
            raise ZeroWeight("zero weight in tangent data; zero-weight "
                             "directions belong to the fixed component")
        idx += 1 if w > 0 else -1
    return idx


def localize_sum(reg: Registry, components) -> Motive:
    from .errors import SpaceMismatch

    out = Motive.zero(reg, POINT)
    for comp in components:
        ind = virtual_index(comp.weights)
        m = comp.motive if comp.motive is not None else Motive.one(reg, POINT)
        if m.space != POINT:
            raise SpaceMismatch(
                f"component {comp.id!r}: absolute class expected over "
                f"{POINT!r}, got {m.space!r}")
        out = out + m.scale(HalfLaurent.power(-ind))
    return out


def localization_check(reg: Registry, components,
                       direct: Motive) -> tuple[bool, str]:
    """Compare the localized sum against an independently computed class."""
    total = localize_sum(reg, components)
    if total == direct:
        return True, f"localized = direct = {total.text()}"
    return False, f"localized = {total.text()} ; direct = {direct.text()}"
