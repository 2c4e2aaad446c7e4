"""Enumerating every component of a set system, maximal or not.

The trick is an instance whose items mirror the elements: element ``v``
carries every item except ``v`` itself.  The common item set of a set
``x`` is then the complement of ``x``, so any strict superset strictly
shrinks it, which makes every component a solution.  Running the solution
enumerator on that instance therefore yields exactly the component family.
"""

from __future__ import annotations

from typing import Optional

from .core import (
    ContractError,
    ElementSet,
    IdSet,
    Instance,
    ItemSet,
    OracleStats,
    SetSystemOracle,
    VolumeFunction,
)
from .enumerator import EmitSink, enumerate_all


class ReducedInstance(Instance):
    """Instance whose attribute map is the complement map over ``[1, n]``.

    The item universe has the same size as the element universe, and all
    attribute queries are complements of bitmasks; the row-per-element
    attribute table is never materialized (it would be quadratic).
    """

    def __init__(self, n: int, oracle: SetSystemOracle) -> None:
        if n < 1:
            raise ValueError("an instance needs at least one element")
        # Instance.__init__ is skipped on purpose: it would build the
        # attribute table this class exists to avoid.
        self.n = n
        self.q = n
        self.oracle = oracle

    def sigma(self, v: int) -> ItemSet:
        if not 1 <= v <= self.n:
            raise ValueError(f"element {v} outside [1, {self.n}]")
        return IdSet.full(self.q).remove(v)

    def common_item_set(self, x: ElementSet) -> ItemSet:
        if not x:
            raise ContractError("common_item_set of an empty element set")
        if x.capacity != self.n:
            raise ValueError("element set from a different universe")
        return x.complement()

    def elements_with_item(self, i: int) -> ElementSet:
        if not 0 <= i <= self.q:
            raise ValueError(f"item {i} outside [0, {self.q}]")
        if i == 0:
            return IdSet.full(self.n)
        return IdSet.full(self.n).remove(i)

    def elements_with_items(self, items: ItemSet) -> ElementSet:
        if items.capacity != self.q:
            raise ValueError("item set from a different universe")
        return items.complement()


def build_reduction(n: int, oracle: SetSystemOracle) -> Instance:
    """Instance over ``[1, n]`` in which every component is a solution."""
    return ReducedInstance(n, oracle)


def enumerate_components(
    oracle: SetSystemOracle,
    n: int,
    rho: Optional[VolumeFunction] = None,
    sink: Optional[EmitSink] = None,
    stats: Optional[OracleStats] = None,
) -> None:
    """Emit every kept component of the system, each exactly once."""
    enumerate_all(build_reduction(n, oracle), rho=rho, sink=sink, stats=stats)
