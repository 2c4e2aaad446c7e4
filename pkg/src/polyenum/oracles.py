"""Concrete oracle backends.

Two set systems are shipped: a family listed verbatim (the correctness
workhorse at desk scale) and the connected induced subgraphs of a simple
undirected graph.  Both are immutable after construction and deterministic,
so concurrent read-only queries are safe.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .core import ContractError, ElementSet, IdSet, SetSystemOracle, lex_sort_key, subset_lex_less


def _check_l1_args(x: ElementSet, y: ElementSet) -> None:
    if not x:
        raise ContractError("l1 requires a non-empty lower bound set")
    if not x.issubset(y):
        raise ContractError("l1 requires the lower bound to sit inside the upper bound")


class ExplicitFamilyOracle(SetSystemOracle):
    """A set system whose component family is stored as a plain list.

    Maximality queries scan the family pairwise, which is quadratic in the
    family size.  That is intentional: this backend exists to be obviously
    correct at desk scale, not to be fast.
    """

    def __init__(self, n: int, family: Iterable[Iterable[int]]) -> None:
        if n < 1:
            raise ValueError("need at least one element")
        self.n = n
        members: List[ElementSet] = []
        seen = set()
        for idx, raw in enumerate(family):
            c = raw if isinstance(raw, IdSet) else IdSet(n, raw)
            if c.capacity != n:
                raise ValueError(f"family[{idx}]: universe size {c.capacity} != {n}")
            if not c:
                raise ValueError(f"family[{idx}]: empty component")
            if c in seen:
                raise ValueError(f"family[{idx}]: duplicate component {sorted(c)}")
            seen.add(c)
            members.append(c)
        self.family: Tuple[ElementSet, ...] = tuple(members)

    def l1(self, x: ElementSet, y: ElementSet) -> Optional[ElementSet]:
        _check_l1_args(x, y)
        candidates = [c for c in self.family if x.issubset(c) and c.issubset(y)]
        best: Optional[ElementSet] = None
        for c in candidates:
            # Maximal among the candidates; any strictly larger component
            # inside y would also contain x, so this is maximality within y.
            if any(c < d for d in candidates):
                continue
            if best is None or subset_lex_less(c, best):
                best = c
        return best

    def l2(self, y: ElementSet) -> List[ElementSet]:
        candidates = [c for c in self.family if c.issubset(y)]
        maximal = [c for c in candidates if not any(c < d for d in candidates)]
        maximal.sort(key=lex_sort_key)
        return maximal

    def delta_hint(self) -> int:
        return len(self.family)


class GraphConnectivityOracle(SetSystemOracle):
    """Components are the non-empty vertex sets inducing a connected subgraph.

    The graph is simple and undirected, with vertices in ``[1, n]``.
    Connectivity queries run an iterative breadth-first sweep restricted to
    the queried vertex set, entirely on bitmasks, so no recursion depth is
    involved however large the graph gets.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 1:
            raise ValueError("need at least one vertex")
        self.n = n
        self._adj = [0] * (n + 1)
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside [1, {n}]")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            self._adj[u] |= 1 << v
            self._adj[v] |= 1 << u

    @property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        """Vertex to sorted neighbor tuple, for inspection."""
        return {
            v: tuple(IdSet._from_mask(self.n, self._adj[v]))
            for v in range(1, self.n + 1)
        }

    def _component_mask(self, seed: int, ymask: int) -> int:
        comp = 0
        frontier = 1 << seed
        while frontier:
            comp |= frontier
            reach = 0
            m = frontier
            while m:
                lsb = m & -m
                reach |= self._adj[lsb.bit_length() - 1]
                m ^= lsb
            frontier = reach & ymask & ~comp
        return comp

    def l1(self, x: ElementSet, y: ElementSet) -> Optional[ElementSet]:
        _check_l1_args(x, y)
        comp = self._component_mask(x.min_id(), y._mask)
        if x._mask & ~comp:
            return None
        return IdSet._from_mask(self.n, comp)

    def l2(self, y: ElementSet) -> List[ElementSet]:
        comps: List[ElementSet] = []
        remaining = y._mask
        while remaining:
            seed = (remaining & -remaining).bit_length() - 1
            comp = self._component_mask(seed, y._mask)
            comps.append(IdSet._from_mask(self.n, comp))
            remaining &= ~comp
        # Seeds were taken in ascending order and the components are
        # disjoint, so this is already sorted by subset_lex_less.
        return comps

    def delta_hint(self) -> int:
        return self.n
