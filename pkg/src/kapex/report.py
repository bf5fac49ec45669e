"""Versioned JSON reports and the exit-code contract."""

from __future__ import annotations

import json
import time
from typing import Any, Iterable

from . import __version__
from .verify import (LemmaCheck, SearchReport, TheoremReport, lemma_json, search_json,
                     theorem_json)

SCHEMA_VERSION = "1.0"

_VALUE = {
    "type": ["object", "null"],
    "required": ["exact", "decimal"],
    "properties": {"exact": {"type": "string", "pattern": r"^-?\d+/\d+$"}, "decimal": {"type": "string"}},
}
_SEARCH = {
    "type": "object",
    "required": ["scope", "graphs_scanned", "min_value", "argmin", "expected", "match", "runtime_s", "caveat"],
    "properties": {
        "scope": {"type": "object", "required": ["n", "c", "k", "shard"]},
        "graphs_scanned": {"type": "integer", "minimum": 0},
        "min_value": _VALUE,
        "argmin": {"type": "array", "items": {"type": "string"}},
        "expected": {"type": ["string", "null"]},
        "match": {"type": ["boolean", "null"]},
        "runtime_s": {"type": "number"},
        "caveat": {"type": "string"},
    },
}
_LEMMA = {
    "type": "object",
    "required": ["lemma", "grid", "verdict", "checked", "counterexamples", "first_counterexample", "note"],
    "properties": {
        "lemma": {"type": "string"},
        "grid": {"type": "string"},
        "verdict": {"enum": ["all-pass", "counterexample"]},
        "checked": {"type": "integer", "minimum": 0},
        "counterexamples": {"type": "integer", "minimum": 0},
        "first_counterexample": {"type": ["object", "null"]},
        "note": {"type": "string"},
    },
}
_THEOREM = {
    "type": "object",
    "required": ["n", "k", "expected", "searches", "candidates", "caveats", "passed"],
    "properties": {
        "searches": {"type": "array", "items": _SEARCH},
        "candidates": {"type": ["object", "null"]},
        "caveats": {"type": "array", "items": {"type": "string"}},
        "passed": {"type": "boolean"},
    },
}

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "kapex verification report",
    "type": "object",
    "required": ["schema_version", "tool_version", "config", "searches", "theorems", "lemmas", "passed",
                 "wall_clock_s"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "tool_version": {"type": "string"},
        "config": {"type": "object"},
        "searches": {"type": "array", "items": _SEARCH},
        "theorems": {"type": "array", "items": _THEOREM},
        "lemmas": {"type": "array", "items": _LEMMA},
        "passed": {"type": "boolean"},
        "wall_clock_s": {"type": "number"},
    },
}


def _passed(item: object) -> bool:
    return bool(getattr(item, "passed"))


def emit_report(reports: Iterable[SearchReport | TheoremReport | LemmaCheck],
                config: dict | None = None, started: float | None = None) -> dict:
    """Bundle results into a schema-conformant document."""
    reports = list(reports)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "config": config or {},
        "searches": [search_json(r) for r in reports if isinstance(r, SearchReport)],
        "theorems": [theorem_json(r) for r in reports if isinstance(r, TheoremReport)],
        "lemmas": [lemma_json(r) for r in reports if isinstance(r, LemmaCheck)],
        "passed": all(_passed(r) for r in reports),
        "wall_clock_s": round(time.perf_counter() - started, 3) if started is not None else 0.0,
    }
    return doc


def exit_code(doc: dict) -> int:
    return 0 if doc["passed"] else 1


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
