"""Oriented d-critical atlases: orientation cocycles, gluing, pushforward.

An :class:`Atlas` is the combinatorial shadow of an oriented d-critical
locus: named regions covering it, critical charts (region, ambient chart
dimension, vanishing-cycle class, orientation-comparison class Q), and
overlap data recording, for each pair of charts, a common refinement region
together with the two square-root torsor classes P into a shared bigger
chart and that chart's own orientation class Q_T.

``glue`` produces the per-region values ``mf . Y(Q)`` and verifies descent
on every overlap: the F2 cocycle identities

    Q_T = P_a + Q_a,      Q_T = P_b + Q_b,

and the transported value identity

    mf_a . Y(P_a) = mf_b . Y(P_b)

(both sides are the shared chart's class pulled back, so together these
force the glued candidates to agree on the overlap, which is also checked
directly).  Any failure raises :class:`DescentFailure` carrying both normal
forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .bundles import BundleClass, bundle_pullback
from .errors import (DescentFailure, MissingScissorTable, OrientationMissing,
                     SpaceMismatch, ValidationFailed)
from .motive import Motive, pullback, upsilon
from .registry import POINT, Registry


@dataclass(frozen=True)
class CriticalChart:
    id: str
    region: str
    dim_u: int
    mf: Motive
    q: BundleClass


@dataclass(frozen=True)
class OverlapDatum:
    chart_a: str
    chart_b: str
    region: str
    p_a: BundleClass
    p_b: BundleClass
    q_t: BundleClass
    # morphism names restricting each chart's region to the overlap region;
    # None means the overlap region is the chart's own region
    restrict_a: Optional[str] = None
    restrict_b: Optional[str] = None
    mf_t: Optional[Motive] = None  # optional shared-chart class for extra checks


@dataclass(frozen=True)
class ScissorPiece:
    """One piece of a disjointification, with its pushforward table.

    ``entries`` maps term keys (monomial, bundle bits) of the region's value
    to their absolute classes over the point; sign allows inclusion-exclusion
    over a region lattice.
    """

    region: str
    entries: dict[tuple[tuple[str, ...], int], Motive]
    sign: int = 1


@dataclass
class Atlas:
    registry: Registry
    regions: dict[str, str]  # region name -> space name
    charts: list[CriticalChart] = field(default_factory=list)
    overlaps: list[OverlapDatum] = field(default_factory=list)
    oriented: bool = True
    scissor: Optional[list[ScissorPiece]] = None

    def chart(self, cid: str) -> CriticalChart:
        for c in self.charts:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def region_space(self, region: str) -> str:
        try:
            return self.regions[region]
        except KeyError:
            raise SpaceMismatch(f"unknown region {region!r}") from None

    def subatlas(self, region_names) -> "Atlas":
        keep = set(region_names)
        return Atlas(
            self.registry,
            {r: s for r, s in self.regions.items() if r in keep},
            [c for c in self.charts if c.region in keep],
            [o for o in self.overlaps
             if o.region in keep and self.chart(o.chart_a).region in keep
             and self.chart(o.chart_b).region in keep],
            self.oriented,
            None if self.scissor is None
            else [p for p in self.scissor if p.region in keep])

    def tensor_orientations(self, cls_by_region: dict[str, BundleClass]) -> "Atlas":
        """Replace every orientation class Q by Q tensor the given global class."""
        def shift(region: str, b: BundleClass) -> BundleClass:
            return b.tensor(cls_by_region[region])

        charts = [CriticalChart(c.id, c.region, c.dim_u, c.mf,
                                shift(c.region, c.q)) for c in self.charts]
        overlaps = [OverlapDatum(o.chart_a, o.chart_b, o.region, o.p_a, o.p_b,
                                 shift(o.region, o.q_t), o.restrict_a,
                                 o.restrict_b, o.mf_t)
                    for o in self.overlaps]
        return Atlas(self.registry, dict(self.regions), charts, overlaps,
                     self.oriented, self.scissor)


@dataclass
class GlobalMotive:
    values: dict[str, Motive]
    provenance: dict[str, str]
    checked_overlaps: list[str]

    def __eq__(self, other):
        return (isinstance(other, GlobalMotive) and self.values == other.values
                and self.provenance == other.provenance)


def _restrict_motive(reg: Registry, m: Motive, morphism: Optional[str]) -> Motive:
    return m if morphism is None else pullback(reg, morphism, m)


def _restrict_bundle(reg: Registry, b: BundleClass,
                     morphism: Optional[str]) -> BundleClass:
    return b if morphism is None else bundle_pullback(reg, morphism, b)


def _structural_diagnostics(atlas: Atlas) -> list[str]:
    """Broken references and misplaced classes; gluing refuses on these."""
    diags: list[str] = []
    ids = set()
    for c in atlas.charts:
        if c.id in ids:
            diags.append(f"duplicate chart id {c.id!r}")
        ids.add(c.id)
        if c.region not in atlas.regions:
            diags.append(f"chart {c.id!r} on undeclared region {c.region!r}")
            continue
        space = atlas.regions[c.region]
        if c.mf.space != space or c.q.space != space:
            diags.append(f"chart {c.id!r}: classes not on region space "
                         f"{space!r}")
    for o in atlas.overlaps:
        for cid in (o.chart_a, o.chart_b):
            if cid not in ids:
                diags.append(f"overlap references unknown chart {cid!r}")
        if o.region not in atlas.regions:
            diags.append(f"overlap {o.chart_a}|{o.chart_b} on undeclared "
                         f"region {o.region!r}")
    return diags


def validate_atlas(atlas: Atlas) -> list[str]:
    """Structural plus data-completeness diagnostics (never raises).

    Beyond the structural checks, every pair of charts sharing a region
    must be covered by at least one overlap datum.
    """
    diags = _structural_diagnostics(atlas)
    covered = {frozenset((o.chart_a, o.chart_b)) for o in atlas.overlaps}
    for i, a in enumerate(atlas.charts):
        for b in atlas.charts[i + 1:]:
            if a.region == b.region and frozenset((a.id, b.id)) not in covered:
                diags.append(f"charts {a.id!r}, {b.id!r} share region "
                             f"{a.region!r} without an overlap datum")
    return diags


def check_orientation(atlas: Atlas) -> list[str]:
    """F2 cocycle check on every overlap; empty iff all identities hold."""
    if not atlas.oriented:
        raise OrientationMissing("atlas carries no orientation")
    structural = _structural_diagnostics(atlas)
    if structural:
        raise ValidationFailed(structural)
    reg = atlas.registry
    diags: list[str] = []
    for o in atlas.overlaps:
        label = f"{o.chart_a}|{o.chart_b}@{o.region}"
        for cid, p, mor in ((o.chart_a, o.p_a, o.restrict_a),
                            (o.chart_b, o.p_b, o.restrict_b)):
            chart = atlas.chart(cid)
            q = _restrict_bundle(reg, chart.q, mor)
            if q.space != o.q_t.space or p.space != o.q_t.space:
                diags.append(f"overlap {label}: classes on mismatched spaces")
                continue
            if o.q_t.bits != (p.bits ^ q.bits):
                diags.append(
                    f"overlap {label}: Q_T != P + Q for chart {cid} "
                    f"(got {o.q_t.bits}, expected {p.bits ^ q.bits})")
    return diags


def glue(atlas: Atlas) -> GlobalMotive:
    """Per-chart candidates with descent verified on every overlap."""
    if not atlas.oriented:
        raise OrientationMissing("atlas carries no orientation")
    reg = atlas.registry
    diags = check_orientation(atlas)
    if diags:
        raise DescentFailure("orientation", diags[0], "", "cocycle identity broken")
    values: dict[str, Motive] = {}
    provenance: dict[str, str] = {}
    for chart in sorted(atlas.charts, key=lambda c: c.id):
        candidate = chart.mf.odot(upsilon(reg, chart.q))
        if chart.region in values:
            if values[chart.region] != candidate:
                raise DescentFailure(
                    f"region {chart.region}", values[chart.region].text(),
                    candidate.text(), "two charts disagree on one region")
        else:
            values[chart.region] = candidate
            provenance[chart.region] = chart.id
    checked: list[str] = []
    for o in sorted(atlas.overlaps,
                    key=lambda o: (o.chart_a, o.chart_b, o.region)):
        label = f"{o.chart_a}|{o.chart_b}@{o.region}"
        ca, cb = atlas.chart(o.chart_a), atlas.chart(o.chart_b)
        lift_a = _restrict_motive(reg, ca.mf, o.restrict_a).odot(upsilon(reg, o.p_a))
        lift_b = _restrict_motive(reg, cb.mf, o.restrict_b).odot(upsilon(reg, o.p_b))
        if lift_a != lift_b:
            raise DescentFailure(label, lift_a.text(), lift_b.text(),
                                 "transported chart classes disagree")
        if o.mf_t is not None and lift_a != o.mf_t:
            raise DescentFailure(label, lift_a.text(), o.mf_t.text(),
                                 "transported class disagrees with shared chart")
        va = _restrict_motive(reg, values[ca.region], o.restrict_a)
        vb = _restrict_motive(reg, values[cb.region], o.restrict_b)
        if va != vb:
            raise DescentFailure(label, va.text(), vb.text(),
                                 "glued candidates disagree on overlap")
        checked.append(label)
    return GlobalMotive(values, provenance, checked)


def pushforward_to_point(atlas: Atlas, glued: GlobalMotive) -> Motive:
    """Absolute class: sum the disjointified pieces through scissor tables."""
    reg = atlas.registry
    if atlas.scissor is None:
        raise MissingScissorTable("atlas declares no scissor table")
    out = Motive.zero(reg, POINT)
    for piece in atlas.scissor:
        if piece.region not in glued.values:
            raise MissingScissorTable(
                f"scissor piece over unglued region {piece.region!r}")
        value = glued.values[piece.region]
        for (mon, bits), coeff in value.terms():
            entry = piece.entries.get((mon, bits))
            if entry is None:
                raise MissingScissorTable(
                    f"region {piece.region!r}: no scissor entry for term "
                    f"({mon}, bits={bits})")
            out = out + entry.scale(coeff * piece.sign)
    return out
