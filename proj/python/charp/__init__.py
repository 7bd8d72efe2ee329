"""Exact checks of cohomological claims in characteristic p."""

import json

from ._charp import (
    EngineError,
    UsageError,
    borel_claim,
    quadratic_field,
    version,
    weights_claim,
)
from . import _charp

__all__ = [
    "EngineError",
    "UsageError",
    "borel_claim",
    "list_scenarios",
    "quadratic_field",
    "run",
    "run_all",
    "version",
    "weights_claim",
]


def list_scenarios(tag=""):
    """Registered scenarios (id, title, claim, tags, default params)."""
    return json.loads(_charp.list_json(tag))


def run(scenario_id, profile="", **params):
    """Run one scenario; returns the report as a dict."""
    return json.loads(_charp.run_json(scenario_id, {k: int(v) for k, v in params.items()}, profile))


def run_all(tag="", profile=""):
    """Run every scenario with the tag; returns (reports, exit_code)."""
    text, code = _charp.run_all_json(tag, profile)
    return json.loads(text), code
