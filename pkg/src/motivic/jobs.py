"""Job-file parsing: schema validation plus payload dispatch."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import jsonschema

from .errors import ValidationFailed
from .registry import Registry
from .schemas import JOB
from .serialize import (atlas_from_json, fixedpoints_from_json,
                        monomial_from_json, registry_from_json,
                        resolution_from_json, ts_from_json)


@dataclass
class Job:
    registry: Registry
    kind: str
    payload: Any
    params: dict = field(default_factory=dict)


def parse_job(data: dict) -> Job:
    """Validate a job document against the schema and build its objects."""
    try:
        jsonschema.validate(data, JOB)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise ValidationFailed([f"job schema: {exc.message} (at /{path})"]) from None
    reg = registry_from_json(data["registry"])
    payload = data["payload"]
    kind = payload["kind"]
    if kind == "resolution":
        parsed = resolution_from_json(reg, payload)
    elif kind == "monomial":
        parsed = monomial_from_json(reg, payload)
    elif kind == "arc-check":
        parsed = (monomial_from_json(reg, payload["monomial"]),
                  resolution_from_json(reg, payload["resolution"]))
    elif kind == "atlas":
        parsed = atlas_from_json(reg, payload)
    elif kind == "fixedpoints":
        parsed = fixedpoints_from_json(reg, payload)
    elif kind == "ts":
        parsed = ts_from_json(reg, payload)
    else:  # unreachable behind the schema
        raise ValidationFailed([f"unknown payload kind {kind!r}"])
    return Job(reg, kind, parsed, dict(data.get("params", {})))


def require_kind(job: Job, *kinds: str) -> None:
    if job.kind not in kinds:
        raise ValidationFailed(
            [f"command needs a {' or '.join(kinds)} payload, got {job.kind!r}"])
