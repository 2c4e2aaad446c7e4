"""Family-tree enumeration of solutions.

A *solution* is a component whose common item set is inclusion-maximal:
every strictly larger component has a strictly smaller common item set.
Solutions are grouped by the minimum id ``k`` of their common item set
(``k = 0`` when it is empty), and each group is covered by a forest whose
roots are the maximal components of the slice of elements carrying item
``k``.  Every non-root solution has a unique parent: the lexicographically
least among its minimal strict superset solutions in the same group.

The traversal walks each tree from its root, regenerating children on the
fly through the oracle, and interleaves output with descent: a child found
at odd depth is emitted before its subtree and one found at even depth
after it.  That alternation bounds how many tree nodes can be visited
between two consecutive outputs, which is what makes the delay (rather
than just the total time) polynomial.  A volume function prunes a child
and its entire subtree at once; since descendants are subsets of the
child, monotonicity makes the pruning lossless.

Each run is strictly sequential: the emission order and the delay
accounting depend on it.  Distinct runs over the same (immutable) instance
can proceed in parallel with separate sinks and stats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional

from .core import (
    ALWAYS_POSITIVE,
    ContractError,
    ElementSet,
    Instance,
    ItemSet,
    OracleStats,
    VolumeFunction,
)


@dataclass(frozen=True)
class Solution:
    """An emitted solution: its elements, their common items, and the group id.

    ``items`` is the common item set of ``elements`` and ``k`` its minimum
    member (0 when empty).  Instances are hashable, so collections of
    solutions compare structurally in tests.
    """

    elements: ElementSet
    items: ItemSet
    k: int


# A sink receives each emitted solution exactly once, in traversal order.
# Any exception it raises aborts the run.
EmitSink = Callable[[Solution], None]


def make_solution(inst: Instance, elements: ElementSet) -> Solution:
    """Bundle an element set with its common items and group id.

    Does not check that ``elements`` is a component, let alone a solution.
    """
    items = inst.common_item_set(elements)
    return Solution(elements, items, items.min_id())


class _Run:
    """One enumeration run: instance plus counters, pruning and output."""

    __slots__ = ("inst", "stats", "rho", "sink")

    def __init__(
        self,
        inst: Instance,
        stats: Optional[OracleStats] = None,
        rho: Optional[VolumeFunction] = None,
        sink: Optional[EmitSink] = None,
    ) -> None:
        self.inst = inst
        self.stats = stats if stats is not None else OracleStats()
        self.rho = rho if rho is not None else ALWAYS_POSITIVE
        self.sink = sink

    def l1(self, x: ElementSet, y: ElementSet) -> Optional[ElementSet]:
        self.stats.l1_calls += 1
        return self.inst.oracle.l1(x, y)

    def l2(self, y: ElementSet) -> List[ElementSet]:
        self.stats.l2_calls += 1
        return self.inst.oracle.l2(y)

    def rho_positive(self, elements: ElementSet) -> bool:
        self.stats.rho_calls += 1
        return self.rho.positive(elements)

    def emit(self, s: Solution) -> None:
        self.stats.record_output()
        if self.sink is not None:
            self.sink(s)

    def is_solution(self, component: ElementSet, items: Optional[ItemSet] = None) -> bool:
        # A component is a solution iff it is already maximal among the
        # elements carrying all of its common items: the single l1 probe
        # below answers exactly that.
        if items is None:
            items = self.inst.common_item_set(component)
        hull = self.inst.elements_with_items(items)
        return self.l1(component, hull) == component

    def parent(self, s: Solution) -> Solution:
        inst = self.inst
        k = s.k
        if not 1 <= k <= inst.q - 1:
            raise ContractError(
                f"solutions in group {k} are roots and have no parent"
            )
        # First pass: decide the parent's item set, one item at a time in
        # ascending order.  An item survives exactly when some component
        # strictly above s still carries the items kept so far plus it.
        items = inst.item_set([k])
        for i in s.items.remove(k):
            trial = items.add(i)
            hull = inst.elements_with_items(trial)
            if self.l1(s.elements, hull) != s.elements:
                items = trial
        # Second pass: grow the element set greedily in ascending id order.
        # An element is kept when some component within the hull still
        # contains everything grown so far plus it; the first grown set
        # that is itself a solution is the parent.
        hull = inst.elements_with_items(items)
        grown = s.elements
        for u in hull - s.elements:
            trial = grown.add(u)
            if self.l1(trial, hull) is not None:
                grown = trial
                if self.is_solution(grown):
                    return make_solution(inst, grown)
        raise ContractError(
            "no strict superset solution found; the input is a root of its "
            "group (or the oracle backend is inconsistent)"
        )

    def child_candidates(self, t: Solution, k: int) -> Iterator[Solution]:
        """Yield the children of ``t`` in traversal order.

        For each item ``j`` above ``k`` that ``t`` does not share, the
        candidates are the maximal components of ``t`` restricted to the
        ``j``-carrying elements.  A candidate is a child when its group is
        ``k``, when ``j`` is the smallest new item it gains over ``t``
        (each child is generated for exactly one ``j``), when it is a
        solution, and when its computed parent is ``t`` itself.  Checks
        run cheapest first; the parent recomputation dominates.
        """
        inst = self.inst
        for j in range(k + 1, inst.q + 1):
            if j in t.items:
                continue
            y = t.elements & inst.elements_with_item(j)
            if not y:
                continue  # oracles only take non-empty queries
            for c in self.l2(y):
                items_c = inst.common_item_set(c)
                if items_c.min_id() != k:
                    continue
                if (items_c - t.items).min_id() != j:
                    continue
                if not self.is_solution(c, items_c):
                    continue
                s = Solution(c, items_c, k)
                if self.parent(s).elements != t.elements:
                    continue
                yield s

    def descend(self, t: Solution, k: int, depth: int) -> None:
        """Emit every kept descendant of ``t``, stack-based.

        Mirrors the recursive formulation exactly (same emission order,
        same counter timing) while letting the depth reach the number of
        elements without touching the interpreter stack.  Each frame holds
        a solution, its depth, the lazy candidate iterator, and the
        solution to emit when the frame finishes, if any.
        """
        self.stats.traversal_calls += 1
        stack: List[tuple] = [(t, depth, self.child_candidates(t, k), None)]
        while stack:
            _, d, candidates, _ = stack[-1]
            child = next(candidates, None)
            if child is None:
                _, _, _, emit_on_pop = stack.pop()
                if emit_on_pop is not None:
                    self.emit(emit_on_pop)
                continue
            if not self.rho_positive(child.elements):
                continue  # prunes the whole subtree below child
            if d % 2 == 1:
                self.emit(child)
                emit_on_pop = None
            else:
                emit_on_pop = child
            self.stats.traversal_calls += 1
            stack.append((child, d + 1, self.child_candidates(child, k), emit_on_pop))


def is_solution(
    inst: Instance, component: ElementSet, stats: Optional[OracleStats] = None
) -> bool:
    """Test whether a component is a solution (one l1 probe).

    ``component`` should be a component of the instance's system; for a
    non-component the answer is False.
    """
    return _Run(inst, stats).is_solution(component)


def parent(inst: Instance, s: Solution, stats: Optional[OracleStats] = None) -> Solution:
    """Return the parent of a non-root solution ``s``.

    The parent is the lexicographically least (items first, then elements)
    among the minimal strict superset solutions of ``s`` within its group.
    Raises :class:`ContractError` when ``s`` is a root of its group, which
    includes every solution with ``k`` equal to 0 or to the item count.
    """
    return _Run(inst, stats).parent(s)


def children(
    inst: Instance,
    t: Solution,
    k: int,
    sink: Optional[EmitSink] = None,
    stats: Optional[OracleStats] = None,
) -> List[Solution]:
    """Generate all children of ``t`` in its group ``k``, in traversal order.

    Each child is produced exactly once.  Children are returned as a list
    and, when a sink is given, streamed to it as they are found.
    """
    run = _Run(inst, stats)
    out: List[Solution] = []
    for s in run.child_candidates(t, k):
        out.append(s)
        if sink is not None:
            sink(s)
    return out


def descendants(
    inst: Instance,
    t: Solution,
    k: int,
    depth: int = 2,
    rho: Optional[VolumeFunction] = None,
    sink: Optional[EmitSink] = None,
    stats: Optional[OracleStats] = None,
) -> None:
    """Emit every kept descendant of ``t``, not ``t`` itself.

    ``depth`` is the depth of this invocation in the traversal (roots are
    expanded at depth 2).  Children found at odd depth are emitted before
    their subtree, children found at even depth after it.
    """
    _Run(inst, stats, rho, sink).descend(t, k, depth)


def enumerate_k(
    inst: Instance,
    k: int,
    rho: Optional[VolumeFunction] = None,
    sink: Optional[EmitSink] = None,
    stats: Optional[OracleStats] = None,
) -> None:
    """Emit every kept solution whose group id is ``k``, each exactly once.

    Roots come from one l2 query on the elements carrying item ``k``
    (``k = 0`` queries the whole universe); each root that belongs to the
    group is emitted and, for inner groups, its tree is traversed.  When
    no element carries item ``k`` there is nothing to do and the oracle is
    not queried at all.
    """
    if not 0 <= k <= inst.q:
        raise ValueError(f"group id {k} outside [0, {inst.q}]")
    run = _Run(inst, stats, rho, sink)
    vk = inst.elements_with_item(k)
    if not vk:
        return
    for c in run.l2(vk):
        items = inst.common_item_set(c)
        if items.min_id() != k:
            continue
        if not run.rho_positive(c):
            continue
        t = Solution(c, items, k)
        run.emit(t)
        if 1 <= k <= inst.q - 1:
            run.descend(t, k, 2)


def enumerate_all(
    inst: Instance,
    rho: Optional[VolumeFunction] = None,
    sink: Optional[EmitSink] = None,
    stats: Optional[OracleStats] = None,
) -> None:
    """Emit every kept solution of the instance, each exactly once.

    Runs the per-group enumeration for every group id in ascending order;
    the groups partition the solution family, so nothing repeats.
    """
    for k in range(inst.q + 1):
        enumerate_k(inst, k, rho=rho, sink=sink, stats=stats)
