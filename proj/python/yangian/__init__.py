"""Exact checks for rational Yangian representations."""

import json

from ._yangian import (
    ConfigError,
    Module,
    YangianError,
    check_rtt,
    list_checks,
    omega_module,
    tensor,
    vector_module,
)
from ._yangian import run_json as _run_json

__all__ = [
    "ConfigError",
    "Module",
    "YangianError",
    "check_rtt",
    "list_checks",
    "omega_module",
    "run",
    "tensor",
    "vector_module",
]


def run(config, parallel=False, timing=True):
    """Run the checks of a config dict; returns the report as a dict."""
    return json.loads(_run_json(json.dumps(config), parallel, timing))
