"""Exact relative Gelfand-Fuks cochains of formal Hamiltonian vector fields on the plane.

Every function returns plain Python data decoded from the library's JSON output.
"""

import json

from . import _core
from ._core import BudgetExceeded, InconsistencyError, set_threads, suite_names, threads

__all__ = [
    "BudgetExceeded",
    "InconsistencyError",
    "dims",
    "cohomology",
    "coboundary",
    "factorize",
    "perchik_series",
    "complex_euler_series",
    "stabilization",
    "run_suite",
    "suite_names",
    "set_threads",
    "threads",
]


def dims(algebra, weight, max_degree=None, budget_dim=200000):
    return json.loads(_core.dims(algebra, weight, max_degree, budget_dim))


def cohomology(algebra, weight, budget_dim=200000):
    return json.loads(_core.cohomology(algebra, weight, budget_dim))


def coboundary(algebra, weight, degree):
    """Sparse coboundary matrix; entries are [row, col, "p/q"] triples."""
    return json.loads(_core.coboundary(algebra, weight, degree))


def factorize():
    return json.loads(_core.factorize())


def perchik_series(n, tmax, full=False, budget_ops=None):
    if budget_ops is None:
        return json.loads(_core.perchik_series(n, tmax, full))
    return json.loads(_core.perchik_series(n, tmax, full, budget_ops))


def complex_euler_series(algebra, tmax):
    return json.loads(_core.complex_euler_series(algebra, tmax))


def stabilization(max_n, tmax):
    return json.loads(_core.stabilization(max_n, tmax))


def run_suite(suite="all"):
    return json.loads(_core.run_suite(suite))
