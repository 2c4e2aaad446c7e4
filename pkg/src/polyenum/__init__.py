"""Polynomial-delay enumeration of solutions in oracle-backed set systems.

A set system is a family of non-empty "components" over elements
``[1, n]``, reached only through two maximality oracles.  Adding a map
from elements to attribute items, a component is a *solution* when its
common item set is inclusion-maximal among all strictly larger components.
This package enumerates all solutions (or, via a reduction, all
components) with delay polynomial in the instance size and oracle cost,
optionally pruned by a monotone volume function.
"""

from .components import ReducedInstance, build_reduction, enumerate_components
from .core import (
    ALWAYS_POSITIVE,
    AlwaysPositive,
    ContractError,
    ElementSet,
    IdSet,
    Instance,
    ItemSet,
    OracleStats,
    SetSystemOracle,
    SizeAbove,
    Snapshot,
    VolumeFunction,
    min_item,
    pair_lex_less,
    subset_lex_leq,
    subset_lex_less,
)
from .enumerator import (
    EmitSink,
    Solution,
    children,
    descendants,
    enumerate_all,
    enumerate_k,
    is_solution,
    make_solution,
    parent,
)
from .oracles import ExplicitFamilyOracle, GraphConnectivityOracle

__version__ = "0.1.0"

__all__ = [
    "ALWAYS_POSITIVE",
    "AlwaysPositive",
    "ContractError",
    "ElementSet",
    "EmitSink",
    "ExplicitFamilyOracle",
    "GraphConnectivityOracle",
    "IdSet",
    "Instance",
    "ItemSet",
    "OracleStats",
    "ReducedInstance",
    "SetSystemOracle",
    "SizeAbove",
    "Snapshot",
    "Solution",
    "VolumeFunction",
    "build_reduction",
    "children",
    "descendants",
    "enumerate_all",
    "enumerate_components",
    "enumerate_k",
    "is_solution",
    "make_solution",
    "min_item",
    "pair_lex_less",
    "parent",
    "subset_lex_leq",
    "subset_lex_less",
]
