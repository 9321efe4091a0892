"""Exact solver for positional games: biased Maker-Breaker, Waiter-Client,
the directed-edge auxiliary game and domination games on graphs.

Boards are plain dicts in the same JSON shape the CLI reads and writes, e.g.
``{"type": "hypergraph", "n": 4, "edges": [[0, 1], [2, 3]]}``.
"""

import json as _json

from . import _core
from ._core import GuardExceeded, __version__

__all__ = [
    "GuardExceeded",
    "__version__",
    "hypergraph",
    "graph",
    "run",
    "game_values",
    "decide",
    "dom_values",
    "domination_number",
    "minimal_dominating_sets",
    "wc_cycle_value",
    "wc_tree_value",
    "strategy_ids",
    "verify_strategy",
    "suite_names",
    "run_suite",
]


def hypergraph(n, edges):
    return {"type": "hypergraph", "n": n, "edges": [sorted(e) for e in edges]}


def graph(n, edges):
    return {"type": "graph", "n": n, "edges": [list(e) for e in edges]}


def _dump(board):
    return board if isinstance(board, str) else _json.dumps(board)


def run(*args):
    """Runs the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    if len(args) == 1 and not isinstance(args[0], str):
        args = tuple(args[0])
    return _core.run([str(a) for a in args])


def game_values(board, kind="mb", m=1, b=1, first="maker", start=(), jobs=1):
    return _json.loads(_core.game_values(_dump(board), kind, m, b, first, list(start), jobs))


def decide(board, kind="mb", m=1, b=1, first="maker", start=(), rounds=None, size=None, jobs=1):
    return _core.decide(_dump(board), kind, m, b, first, list(start), rounds, size, jobs)


def dom_values(g, wc=False, m=1, b=1, first="maker"):
    return _json.loads(_core.dom_values(_dump(g), wc, m, b, first))


def domination_number(g):
    return _core.domination_number(_dump(g))


def minimal_dominating_sets(g):
    return _json.loads(_core.minimal_dominating_sets(_dump(g)))


def wc_cycle_value(n):
    return _core.wc_cycle_value(n)


def wc_tree_value(tree):
    return _core.wc_tree_value(_dump(tree))


def strategy_ids():
    return _core.strategy_ids()


def verify_strategy(strategy_id, params=None, guarantee=""):
    return _json.loads(_core.verify_strategy(strategy_id, _json.dumps(params or {}), guarantee))


def suite_names():
    return _core.suite_names()


def run_suite(name, seed=1, max_n=0, instances=200):
    return _json.loads(_core.run_suite(name, seed, max_n, instances))
