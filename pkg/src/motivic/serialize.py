"""Versioned JSON serialization for registries, motives and payloads.

Field names are fixed by the schemas in :mod:`motivic.schemas` (shipped as
files under ``docs/schemas/``); loaders validate against them and reject
unknown fields.  Serialization is deterministic: terms, generators and table
entries are emitted in canonical order, so equal in-memory values produce
byte-identical JSON.
"""

from __future__ import annotations

from typing import Any

from .arcs import ArcContext, MonomialFunction
from .bundles import BundleClass
from .dcrit import Atlas, CriticalChart, OverlapDatum, ScissorPiece
from .halflaurent import HalfLaurent
from .localize import FixedComponentDatum
from .motive import Motive
from .registry import Registry
from .zeta import (Divisor, PointTable, ResolutionData, RestrictionTable,
                   Stratum)

MOTIVE_SCHEMA = "motivic.motive/1"
REGISTRY_SCHEMA = "motivic.registry/1"
JOB_SCHEMA = "motivic.job/1"
RESULT_SCHEMA = "motivic.result/1"


# -- motives ----------------------------------------------------------------


def coeff_to_json(c: HalfLaurent) -> list[list[int]]:
    return [[k, v] for k, v in c.items()]


def coeff_from_json(data) -> HalfLaurent:
    return HalfLaurent((int(k), int(v)) for k, v in data)


def motive_to_json(m: Motive) -> dict[str, Any]:
    terms = []
    for (mon, bits), coeff in m.terms():
        terms.append({
            "monomial": list(mon),
            "bundle": list(m.reg.names_of(m.space, bits)),
            "coeff": coeff_to_json(coeff),
        })
    return {"space": m.space, "terms": terms}


def motive_from_json(reg: Registry, data) -> Motive:
    space = data["space"]
    items = []
    for t in data["terms"]:
        key = (tuple(t["monomial"]), reg.bits_of(space, t["bundle"]))
        items.append((key, coeff_from_json(t["coeff"])))
    return Motive(reg, space, items)


def _opt_motive_to_json(m):
    return None if m is None else motive_to_json(m)


def _opt_motive_from_json(reg, data):
    return None if data is None else motive_from_json(reg, data)


def bundle_to_json(reg: Registry, b: BundleClass) -> list[str]:
    return list(reg.names_of(b.space, b.bits))


# -- registry -----------------------------------------------------------------


def registry_to_json(reg: Registry) -> dict[str, Any]:
    spaces = [{"name": s.name, "dim": s.dim, "strata": list(s.strata)}
              for s in reg.spaces.values() if s.name != "K"
              and s.name not in reg.products]
    generators = [{"space": sp, "names": list(names)}
                  for sp, names in reg.generators.items()
                  if names and sp not in reg.products]
    symbols = []
    for sym in reg.symbols.values():
        if any(sym.name.startswith(p + ".") for p in reg.products):
            continue
        symbols.append({
            "name": sym.name, "space": sym.space, "order": sym.order,
            "underlying": _opt_motive_to_json(sym.underlying),
            "cover": None if sym.cover_bits is None
            else list(reg.names_of(sym.space, sym.cover_bits)),
        })
    morphisms = []
    for mor in reg.morphisms.values():
        morphisms.append({
            "name": mor.name, "source": mor.source, "target": mor.target,
            "kind": mor.kind,
            "pull_symbols": [{"symbol": k, "image": motive_to_json(v)}
                             for k, v in sorted(mor.pull_symbols.items())],
            "pull_bundles": [{"generator": k,
                              "image": list(reg.names_of(mor.source, v))}
                             for k, v in sorted(mor.pull_bundles.items())],
            "push_classes": [{"monomial": [] if mon == ("__cover__",)
                              else list(mon),
                              "bundle": list(reg.names_of(mor.source, bits)),
                              "cover": mon == ("__cover__",),
                              "image": motive_to_json(img)}
                             for (mon, bits), img in sorted(mor.push_classes.items())],
        })
    products = [{"name": p.name, "left": p.left, "right": p.right}
                for p in reg.products.values()]
    square_roots = [{"space": sp, "line_bundle": lb, "trivialization": tr,
                     "class": list(reg.names_of(sp, bits))}
                    for (sp, lb, tr), bits in sorted(reg.square_roots.items())]
    return {"schema": REGISTRY_SCHEMA, "spaces": spaces,
            "generators": generators, "symbols": symbols,
            "morphisms": morphisms, "products": products,
            "square_roots": square_roots}


def registry_from_json(data) -> Registry:
    reg = Registry()
    for s in data.get("spaces", ()):
        reg.declare_space(s["name"], s.get("dim"), tuple(s.get("strata", ())))
    for g in data.get("generators", ()):
        reg.declare_generators(g["space"], tuple(g["names"]))
    for sym in data.get("symbols", ()):
        cover = sym.get("cover")
        reg.declare_symbol(
            sym["name"], sym["space"], sym.get("order", 1),
            underlying=None, cover_bits=None if cover is None
            else reg.bits_of(sym["space"], cover))
    # underlying classes may reference other symbols: resolve in a second pass
    for sym in data.get("symbols", ()):
        und = sym.get("underlying")
        if und is not None:
            cur = reg.symbols[sym["name"]]
            reg.symbols[sym["name"]] = type(cur)(
                cur.name, cur.space, cur.order,
                motive_from_json(reg, und), cur.cover_bits)
    for p in data.get("products", ()):
        reg.declare_product(p["name"], p["left"], p["right"])
    for mor in data.get("morphisms", ()):
        pull_symbols = {e["symbol"]: motive_from_json(reg, e["image"])
                        for e in mor.get("pull_symbols", ())}
        pull_bundles = {e["generator"]: reg.bits_of(mor["source"], e["image"])
                        for e in mor.get("pull_bundles", ())}
        push_classes = {}
        for e in mor.get("push_classes", ()):
            mon = ("__cover__",) if e.get("cover") else tuple(e["monomial"])
            bits = reg.bits_of(mor["source"], e["bundle"])
            push_classes[(mon, bits)] = motive_from_json(reg, e["image"])
        reg.declare_morphism(mor["name"], mor["source"], mor["target"],
                             mor.get("kind", "general"), pull_symbols,
                             pull_bundles, push_classes)
    for sq in data.get("square_roots", ()):
        reg.declare_square_root(sq["space"], sq["line_bundle"],
                                sq["trivialization"],
                                reg.bits_of(sq["space"], sq["class"]))
    return reg


# -- resolution payload -----------------------------------------------------------


def resolution_to_json(r: ResolutionData) -> dict[str, Any]:
    strata = [{"divisors": sorted(key), "cover_order": st.cover_order,
               "class": motive_to_json(st.cls)}
              for key, st in sorted(r.strata.items(), key=lambda kv: sorted(kv[0]))]
    values = []
    for c in r.critical_values:
        table = r.restrictions.get(c)
        if table is None:
            values.append({"value": c, "space": None, "ambient": None,
                           "classes": []})
            continue
        values.append({
            "value": c, "space": table.space,
            "ambient": _opt_motive_to_json(table.ambient),
            "classes": [{"divisors": sorted(k), "class": motive_to_json(v)}
                        for k, v in sorted(table.classes.items(),
                                           key=lambda kv: sorted(kv[0]))],
        })
    points = [{"label": lbl, "value": pt.value,
               "classes": [{"divisors": sorted(k), "class": motive_to_json(v)}
                           for k, v in sorted(pt.classes.items(),
                                              key=lambda kv: sorted(kv[0]))]}
              for lbl, pt in sorted(r.points.items())]
    return {"kind": "resolution", "space_u0": r.space_u0, "dim_u": r.dim_u,
            "divisors": [{"id": d.id, "N": d.N, "nu": d.nu,
                          "boundary": d.boundary} for d in r.divisors],
            "strata": strata, "critical_values": values, "points": points,
            "constant": r.constant}


def resolution_from_json(reg: Registry, data) -> ResolutionData:
    divisors = [Divisor(d["id"], d["N"], d["nu"], d.get("boundary", False))
                for d in data["divisors"]]
    strata = {frozenset(s["divisors"]): Stratum(
        motive_from_json(reg, s["class"]), s["cover_order"])
        for s in data["strata"]}
    critical_values = []
    restrictions = {}
    for v in data.get("critical_values", ()):
        critical_values.append(v["value"])
        if v.get("space") is None:
            continue
        restrictions[v["value"]] = RestrictionTable(
            v["space"],
            {frozenset(e["divisors"]): motive_from_json(reg, e["class"])
             for e in v.get("classes", ())},
            _opt_motive_from_json(reg, v.get("ambient")))
    points = {p["label"]: PointTable(
        p["value"],
        {frozenset(e["divisors"]): motive_from_json(reg, e["class"])
         for e in p.get("classes", ())})
        for p in data.get("points", ())}
    return ResolutionData(reg, data["space_u0"], data["dim_u"], divisors,
                          strata, critical_values or ["0"], restrictions,
                          points, data.get("constant", False))


# -- monomial payload ----------------------------------------------------------------


def monomial_to_json(f: MonomialFunction, ctx: ArcContext) -> dict[str, Any]:
    return {"kind": "monomial", "exponents": list(f.exponents),
            "unit_vars": sorted(f.unit_vars), "base_space": ctx.base_space,
            "unit_generators": list(ctx.unit_generators),
            "cover_symbols": {str(k): v for k, v in sorted(ctx.cover_symbols.items())}}


def monomial_from_json(reg: Registry, data) -> tuple[MonomialFunction, ArcContext]:
    f = MonomialFunction(tuple(data["exponents"]),
                         frozenset(data.get("unit_vars", ())))
    ctx = ArcContext(reg, data["base_space"],
                     tuple(data.get("unit_generators", ())),
                     {int(k): v for k, v in data.get("cover_symbols", {}).items()})
    return f, ctx


# -- atlas payload --------------------------------------------------------------------


def atlas_to_json(a: Atlas) -> dict[str, Any]:
    reg = a.registry
    return {
        "kind": "atlas",
        "regions": [{"name": n, "space": s} for n, s in sorted(a.regions.items())],
        "charts": [{"id": c.id, "region": c.region, "dim_u": c.dim_u,
                    "mf": motive_to_json(c.mf),
                    "Q": bundle_to_json(reg, c.q)} for c in a.charts],
        "overlaps": [{"chart_a": o.chart_a, "chart_b": o.chart_b,
                      "region": o.region,
                      "p_a": bundle_to_json(reg, o.p_a),
                      "p_b": bundle_to_json(reg, o.p_b),
                      "q_t": bundle_to_json(reg, o.q_t),
                      "restrict_a": o.restrict_a, "restrict_b": o.restrict_b,
                      "mf_t": _opt_motive_to_json(o.mf_t)}
                     for o in a.overlaps],
        "oriented": a.oriented,
        "scissor": None if a.scissor is None else [
            {"region": p.region, "sign": p.sign,
             "entries": [{"monomial": list(mon),
                          "bundle": list(reg.names_of(
                              a.regions[p.region], bits)),
                          "class": motive_to_json(img)}
                         for (mon, bits), img in sorted(p.entries.items())]}
            for p in a.scissor],
    }


def _chart_mf_from_json(reg: Registry, data) -> Motive:
    """Inline motive, or a zeta-reference resolved through the pipeline."""
    if "vanishing_of" in data:
        from .zeta import vanishing_cycle

        res = resolution_from_json(reg, data["vanishing_of"])
        return vanishing_cycle(res, data.get("critical_value", "0"))
    return motive_from_json(reg, data)


def atlas_from_json(reg: Registry, data) -> Atlas:
    regions = {r["name"]: r["space"] for r in data["regions"]}
    charts = [CriticalChart(
        c["id"], c["region"], c["dim_u"], _chart_mf_from_json(reg, c["mf"]),
        BundleClass(regions[c["region"]],
                    reg.bits_of(regions[c["region"]], c["Q"])))
        for c in data["charts"]]
    overlaps = []
    for o in data.get("overlaps", ()):
        sp = regions[o["region"]]
        overlaps.append(OverlapDatum(
            o["chart_a"], o["chart_b"], o["region"],
            BundleClass(sp, reg.bits_of(sp, o["p_a"])),
            BundleClass(sp, reg.bits_of(sp, o["p_b"])),
            BundleClass(sp, reg.bits_of(sp, o["q_t"])),
            o.get("restrict_a"), o.get("restrict_b"),
            _opt_motive_from_json(reg, o.get("mf_t"))))
    scissor = None
    if data.get("scissor") is not None:
        scissor = []
        for p in data["scissor"]:
            sp = regions[p["region"]]
            entries = {(tuple(e["monomial"]), reg.bits_of(sp, e["bundle"])):
                       motive_from_json(reg, e["class"])
                       for e in p["entries"]}
            scissor.append(ScissorPiece(p["region"], entries, p.get("sign", 1)))
    return Atlas(reg, regions, charts, overlaps, data.get("oriented", True),
                 scissor)


# -- fixed-point payload -----------------------------------------------------------------


def fixedpoints_to_json(components, direct, direct_atlas=None) -> dict[str, Any]:
    return {
        "kind": "fixedpoints",
        "components": [{"id": c.id, "weights": list(c.weights),
                        "motive": _opt_motive_to_json(c.motive),
                        "good": c.good, "circle_compact": c.circle_compact}
                       for c in components],
        "direct": _opt_motive_to_json(direct),
        "direct_atlas": None if direct_atlas is None
        else atlas_to_json(direct_atlas),
    }


def fixedpoints_from_json(reg: Registry, data):
    components = [FixedComponentDatum(
        c["id"], tuple(c["weights"]), _opt_motive_from_json(reg, c.get("motive")),
        c.get("good", True), c.get("circle_compact", True))
        for c in data["components"]]
    direct = _opt_motive_from_json(reg, data.get("direct"))
    datlas = data.get("direct_atlas")
    atlas = None if datlas is None else atlas_from_json(reg, datlas)
    return components, direct, atlas


# -- ts payload ----------------------------------------------------------------------------


def ts_to_json(factors) -> dict[str, Any]:
    return {"kind": "ts", "factors": [motive_to_json(m) for m in factors]}


def ts_from_json(reg: Registry, data) -> list[Motive]:
    return [motive_from_json(reg, m) for m in data["factors"]]
