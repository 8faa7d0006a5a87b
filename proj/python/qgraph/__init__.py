"""Exact theta and tetrahedron graph invariants, q-difference operators and asymptotics."""

import json

from . import _qgraph
from ._qgraph import (
    PoleError,
    SingularLocusError,
    dilog,
    is_admissible,
    log_y_theta,
    verify_checks,
    w_tet,
    w_theta,
)

__version__ = _qgraph.version()

__all__ = [
    "PoleError",
    "SingularLocusError",
    "dilog",
    "evaluate",
    "growth",
    "is_admissible",
    "lagrangian",
    "log_y_theta",
    "gradient",
    "residual",
    "run_cli",
    "saddle",
    "tet",
    "theta",
    "verify",
    "verify_checks",
    "w_tet",
    "w_theta",
]


def theta(a, b, c):
    """Theta invariant as a dict with "text", "value" (exact terms) and "admissible"."""
    return json.loads(_qgraph.invariant_json("theta", [a, b, c]))


def tet(colors, primed=False, convention="triangle-sum"):
    """Tetrahedron invariant for colors (j1, j2, j12, j3, j4, j23)."""
    return json.loads(_qgraph.invariant_json("tet", list(colors), primed, convention))


def evaluate(graph, colors, v, primed=False):
    """Numeric value at v = q^(1/2)."""
    return _qgraph.invariant_eval(graph, list(colors), complex(v), primed)


def verify(check, **options):
    """Exact verification sweep; options mirror the CLI flags (grid_max, graph, edge, ...)."""
    return json.loads(_qgraph.verify_json(check, **options))


def growth(graph, x, hbars=(-1 / 32, -1 / 64, -1 / 128)):
    return json.loads(_qgraph.growth_json(graph, list(x), list(hbars)))


def saddle(x, tol=1e-8):
    return json.loads(_qgraph.saddle_json([complex(t) for t in x], tol))


def residual(graph="theta", samples=20, seed=7, tol=1e-9):
    return json.loads(_qgraph.sweep_json("residual", graph, samples, seed, tol, 1e-5))


def lagrangian(graph="theta", samples=20, seed=7, tol=1e-6, step=1e-5):
    return json.loads(_qgraph.sweep_json("lagrangian", graph, samples, seed, tol, step))


def gradient(samples=20, seed=7, tol=1e-8, step=1e-6):
    return json.loads(_qgraph.sweep_json("gradient", "theta", samples, seed, tol, step))


def run_cli(*args):
    """Runs the command-line tool in process; returns (exit_code, stdout, stderr)."""
    return _qgraph.run_cli([str(a) for a in args])
