"""JSON report envelope (schema ``dlcodes-report/1``)."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from typing import Any

SCHEMA_ID = "dlcodes-report/1"
PROVENANCE = ("closed-form", "derived", "constructed", "sampled", "input", "formula-unverified", "requires-construction")


def tagged(value, provenance: str) -> dict[str, Any]:
    if provenance not in PROVENANCE:
        raise ValueError(f"unknown provenance {provenance!r}")
    return {"value": value, "provenance": provenance}


def envelope(kind: str, **body) -> dict[str, Any]:
    return {"schema": SCHEMA_ID, "kind": kind, **body}


@lru_cache(maxsize=1)
def schema() -> dict[str, Any]:
    text = resources.files("dlcodes").joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate(report: dict[str, Any]) -> None:
    import jsonschema

    jsonschema.validate(report, schema())


def dumps(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=False)
