"""Independence relations as pullback squares of embeddings in small finite categories.

Thin wrapper over the C++ library: every call returns the same JSON report the
``indcat`` command line prints, decoded into Python objects.
"""

import json

from . import _indcat
from ._indcat import IndcatError, axiom_names, fixture_names

__all__ = [
    "IndcatError",
    "axiom_names",
    "check",
    "classify",
    "enumerate_objects",
    "fixture_names",
    "fixture_source",
    "recheck",
    "render",
    "run_fixtures",
]


def check(category, axiom, max_size=3, *, sample=0, seed=0, bound=3, lam=2, jobs=1, **cat):
    return json.loads(_indcat.check(category, axiom, max_size, sample, seed, bound, lam, jobs, **cat))


def classify(category, max_size=3, *, jobs=1, **cat):
    return json.loads(_indcat.classify(category, max_size, jobs, **cat))


def enumerate_objects(category, max_size=3, *, objects=False, **cat):
    return json.loads(_indcat.enumerate(category, max_size, objects, **cat))


def run_fixtures(names=None):
    return json.loads(_indcat.fixtures(list(names) if names is not None else fixture_names()))


def fixture_source(name):
    return json.loads(_indcat.fixture_source(name))


def recheck(check_name, diagram):
    """Re-run a named check on a diagram record (dict or JSON text)."""
    text = diagram if isinstance(diagram, str) else json.dumps(diagram)
    return json.loads(_indcat.recheck(check_name, text))


def render(report, fmt="table"):
    return _indcat.render(json.dumps(report), fmt)
