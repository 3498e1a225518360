"""File-driven command surface.

Subcommands: ``zeta | nearby | vanishing | arc-check | ts | glue | localize
| selftest``.  Jobs come from ``--job PATH`` or a shipped ``--fixture NAME``.
Output is deterministic text on stdout (or a JSON document with
``--machine-readable``); diagnostics go to stderr.

Exit codes are part of the contract: 0 success, 2 validation diagnostics,
3 missing restriction, 4 unsupported shape, 5 descent failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arcs, dcrit, localize, zeta
from .errors import (DescentFailure, MissingRestriction, MotivicError,
                     UnsupportedShape, ValidationFailed)
from .fixtures import FIXTURE_NAMES, load_fixture_job
from .jobs import Job, parse_job, require_kind
from .motive import Motive, mot_boxdot
from .serialize import RESULT_SCHEMA, motive_to_json

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_MISSING_RESTRICTION = 3
EXIT_UNSUPPORTED_SHAPE = 4
EXIT_DESCENT = 5


def _load_job(args) -> Job:
    if bool(args.job) == bool(args.fixture):
        raise ValidationFailed(["exactly one of --job and --fixture is required"])
    if args.fixture:
        data = load_fixture_job(args.fixture)
    else:
        with open(args.job, encoding="utf-8") as fh:
            data = json.load(fh)
    return parse_job(data)


def _emit(args, command: str, text: str, machine: dict) -> None:
    if args.machine_readable:
        doc = {"schema": RESULT_SCHEMA, "command": command, **machine}
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def _rational_json(z: zeta.RationalMotive) -> dict:
    return {"space": z.space,
            "terms": [{"coeff": motive_to_json(t.coeff),
                       "factors": [list(f) for f in t.factors]}
                      for t in z.terms]}


def cmd_zeta(args) -> int:
    job = _load_job(args)
    require_kind(job, "resolution")
    z = zeta.zeta_function(job.payload)
    k = args.series_order
    if k is None:
        _emit(args, "zeta", z.text(), {"rational": _rational_json(z)})
        return EXIT_OK
    series = zeta.expand_series(z, k, job.registry)
    lines = [z.text()]
    lines += [f"T^{n}: {m.text()}" for n, m in enumerate(series)]
    _emit(args, "zeta", "\n".join(lines),
          {"rational": _rational_json(z),
           "series": [motive_to_json(m) for m in series]})
    return EXIT_OK


def cmd_nearby(args) -> int:
    job = _load_job(args)
    require_kind(job, "resolution")
    m = zeta.nearby_cycle(job.payload)
    _emit(args, "nearby", m.text(), {"motive": motive_to_json(m)})
    return EXIT_OK


def cmd_vanishing(args) -> int:
    job = _load_job(args)
    require_kind(job, "resolution")
    c = args.critical_value or job.params.get("critical_value", "0")
    m = zeta.vanishing_cycle(job.payload, c)
    _emit(args, "vanishing", m.text(), {"motive": motive_to_json(m)})
    return EXIT_OK


def cmd_arc_check(args) -> int:
    job = _load_job(args)
    require_kind(job, "arc-check")
    (mono, ctx), res = job.payload
    k = args.series_order
    if k is None:
        k = int(job.params.get("series_order", 12))
    oracle = arcs.zeta_truncated(mono, k, ctx)
    series = zeta.expand_series(zeta.zeta_function(res), k, job.registry)
    lines = []
    ok = True
    for n in range(1, k + 1):
        match = oracle[n] == series[n]
        ok = ok and match
        verdict = "PASS" if match else "FAIL"
        lines.append(f"n={n:<3d} {verdict}  arc: {oracle[n].text()}  "
                     f"resolution: {series[n].text()}")
    table = "\n".join(lines) if lines else "vacuous PASS (k=0)"
    _emit(args, "arc-check", table,
          {"orders": k, "all_pass": ok,
           "coefficients": [{"n": n, "match": oracle[n] == series[n]}
                            for n in range(1, k + 1)]})
    return EXIT_OK if ok else 1


def cmd_ts(args) -> int:
    job = _load_job(args)
    require_kind(job, "ts")
    factors: list[Motive] = job.payload
    out = factors[0]
    for m in factors[1:]:
        out = mot_boxdot(out, m)
    _emit(args, "ts", out.text(), {"motive": motive_to_json(out)})
    return EXIT_OK


def cmd_glue(args) -> int:
    job = _load_job(args)
    require_kind(job, "atlas")
    atlas: dcrit.Atlas = job.payload
    glued = dcrit.glue(atlas)
    lines = [f"region {r}: {m.text()}" for r, m in sorted(glued.values.items())]
    if glued.checked_overlaps:
        lines.append("overlaps checked: " + ", ".join(glued.checked_overlaps))
    machine = {"regions": {r: motive_to_json(m)
                           for r, m in sorted(glued.values.items())},
               "checked_overlaps": glued.checked_overlaps}
    if atlas.scissor is not None:
        total = dcrit.pushforward_to_point(atlas, glued)
        lines.append(f"pushforward: {total.text()}")
        machine["pushforward"] = motive_to_json(total)
    _emit(args, "glue", "\n".join(lines), machine)
    return EXIT_OK


def cmd_localize(args) -> int:
    job = _load_job(args)
    require_kind(job, "fixedpoints")
    components, direct, direct_atlas = job.payload
    reg = job.registry
    total = localize.localize_sum(reg, components)
    if direct is None and direct_atlas is not None:
        glued = dcrit.glue(direct_atlas)
        direct = dcrit.pushforward_to_point(direct_atlas, glued)
    if direct is None:
        _emit(args, "localize", f"sum = {total.text()}",
              {"sum": motive_to_json(total)})
        return EXIT_OK
    ok, diff = localize.localization_check(reg, components, direct)
    verdict = "PASS" if ok else "FAIL"
    _emit(args, "localize", f"sum = {total.text()}; check: {verdict}",
          {"sum": motive_to_json(total), "check": ok, "diff": diff})
    return EXIT_OK if ok else 1


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    failures = run_selftest(verbose=not args.machine_readable)
    if args.machine_readable:
        print(json.dumps({"schema": RESULT_SCHEMA, "command": "selftest",
                          "failures": failures}, sort_keys=True))
    return EXIT_OK if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motivic",
        description="Exact motivic vanishing-cycle calculus on job files.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--job", help="path to a job JSON file")
        p.add_argument("--fixture", choices=FIXTURE_NAMES,
                       help="name of a shipped fixture job")
        p.add_argument("--machine-readable", action="store_true")
        p.set_defaults(fn=fn)
        return p

    p = add("zeta", cmd_zeta, help="rational form of the motivic zeta function")
    p.add_argument("--series-order", type=int, default=None,
                   help="also print the exact expansion to this order")
    add("nearby", cmd_nearby, help="motivic nearby cycle")
    p = add("vanishing", cmd_vanishing, help="motivic vanishing cycle")
    p.add_argument("--critical-value", help="slice label (default '0')")
    p = add("arc-check", cmd_arc_check,
            help="cross-check resolution zeta against the arc oracle")
    p.add_argument("--series-order", type=int, default=None)
    add("ts", cmd_ts, help="exterior-sum product of the given classes")
    add("glue", cmd_glue, help="descent-checked gluing over an atlas")
    add("localize", cmd_localize, help="torus localization sum and check")
    p = sub.add_parser("selftest",
                       help="run the invariant and regression battery")
    p.add_argument("--machine-readable", action="store_true")
    p.set_defaults(fn=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValidationFailed as exc:
        for d in exc.diagnostics:
            print(f"validation: {d}", file=sys.stderr)
        return EXIT_VALIDATION
    except MissingRestriction as exc:
        print(f"missing restriction: {exc}", file=sys.stderr)
        return EXIT_MISSING_RESTRICTION
    except UnsupportedShape as exc:
        print(f"unsupported shape: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED_SHAPE
    except DescentFailure as exc:
        print("descent failure:", file=sys.stderr)
        print(f"  left : {exc.left}", file=sys.stderr)
        print(f"  right: {exc.right}", file=sys.stderr)
        if exc.detail:
            print(f"  ({exc.detail})", file=sys.stderr)
        return EXIT_DESCENT
    except MotivicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
