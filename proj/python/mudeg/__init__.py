"""Minimal faithful permutation degrees of small groups."""

import json

from ._mudeg import (
    CapExceededError,
    canonical,
    compose,
    coset_enumeration,
    element_order,
    order,
    run_cli,
)
from . import _mudeg

__all__ = [
    "CapExceededError",
    "canonical",
    "compose",
    "coset_enumeration",
    "element_order",
    "lattice",
    "mu",
    "order",
    "run_cli",
    "verify",
]


def mu(expression, max_order=2000, max_subgroups=200000):
    """Minimal faithful degree and its certificate as a dict."""
    return json.loads(_mudeg.mu_json(expression, max_order, max_subgroups))


def lattice(expression, max_order=2000, max_subgroups=200000):
    """Subgroup counts, normal subgroup orders and minimal normal orders."""
    return json.loads(_mudeg.lattice_json(expression, max_order, max_subgroups))


def verify(fault=""):
    """Run the thirteen G(4,4,3) checks and return the JSON report."""
    return json.loads(_mudeg.verify_json(fault))
