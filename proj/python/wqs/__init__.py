"""Exact classifier for weighted-quasihomogeneous surface singularities.

Thin wrapper over the compiled core: every call returns plain dicts/lists
with big integers and rationals spelled as strings (values are exact and may
exceed machine precision).
"""

import json as _json

from . import _wqs

InvalidInputError = _wqs.InvalidInputError
WqsError = _wqs.WqsError


def catalog_path():
    """Path of the bundled catalog (override with the WPS_CATALOG env var)."""
    return _wqs.catalog_path()


def list_entries():
    """Names, classes, weights, and degrees of all catalog entries."""
    return _json.loads(_wqs.list_entries())


def analyze(name):
    """Weights, degree, Milnor number, branch data, and exponent invariants."""
    return _json.loads(_wqs.analyze_entry(name))


def analyze_weights(weights, degree):
    """Same as analyze, for an explicit 3-variable weight system."""
    return _json.loads(_wqs.analyze_weights(list(weights), degree))


def dual_sets(name):
    """All dual sets of the entry's branch points."""
    return _json.loads(_wqs.dual_sets_entry(name))["dual_sets"]


def search(name, lo=1, hi=None):
    """Deformation weights whose exceptional surface realizes a dual set."""
    return _json.loads(_wqs.search_entry(name, lo, hi or 0))["hits"]


def verify():
    """Catalog-wide verification report: {'ok': bool, 'entries': [...]}."""
    return _json.loads(_wqs.verify_catalog())
