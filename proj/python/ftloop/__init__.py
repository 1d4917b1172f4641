"""Fault tree analysis for models with logical loops.

Models use the text format of the ``ftloop`` command-line tool. Reports come
back as plain dicts and lists.
"""

from ._core import (
    FaultTree,
    FtloopError,
    analyze_structure,
    enumerate_solutions,
    eval_least_fixpoint,
    expand_koon,
    minimal_cut_sets,
    parse_tree,
    relax,
    simulate,
    state_table,
    top_probability,
)

__all__ = [
    "FaultTree",
    "FtloopError",
    "analyze_structure",
    "enumerate_solutions",
    "eval_least_fixpoint",
    "expand_koon",
    "minimal_cut_sets",
    "parse_tree",
    "relax",
    "simulate",
    "state_table",
    "top_probability",
]
