"""Small-universe set algebra and the shared domain types.

Elements live in ``[1, n]`` and items (attributes) in ``[1, q]``.  Sets of
either kind are immutable bit-vectors, so the subset tests and
intersections that dominate the enumeration loops are single integer
operations.  The id 0 is reserved as a sentinel: ``min_item`` of an empty
set is 0, and the element slice for item 0 is the whole universe.

Everything here is immutable after construction except :class:`OracleStats`,
which is confined to one enumeration run.  Instances, oracles and sets are
safe to share read-only across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence


class ContractError(ValueError):
    """A documented precondition was violated by the caller."""


class IdSet:
    """Immutable sorted set of integer ids drawn from ``[1, capacity]``.

    Backed by a bitmask (bit ``i`` set means id ``i`` is a member).  All
    algebra returns new sets; iteration is in ascending id order.  Binary
    operations require both operands to share the same capacity.
    """

    __slots__ = ("_mask", "capacity")

    def __init__(self, capacity: int, ids: Iterable[int] = ()) -> None:
        if capacity < 0:
            raise ValueError(f"capacity must be non-negative, got {capacity}")
        mask = 0
        for i in ids:
            if not 1 <= i <= capacity:
                raise ValueError(f"id {i} outside [1, {capacity}]")
            mask |= 1 << i
        self._mask = mask
        self.capacity = capacity

    @classmethod
    def _from_mask(cls, capacity: int, mask: int) -> "IdSet":
        s = object.__new__(cls)
        s._mask = mask
        s.capacity = capacity
        return s

    @classmethod
    def empty(cls, capacity: int) -> "IdSet":
        return cls._from_mask(capacity, 0)

    @classmethod
    def full(cls, capacity: int) -> "IdSet":
        return cls._from_mask(capacity, (1 << (capacity + 1)) - 2)

    def _require_same_universe(self, other: "IdSet") -> None:
        if self.capacity != other.capacity:
            raise ValueError(
                f"mixed universes: capacity {self.capacity} vs {other.capacity}"
            )

    def add(self, i: int) -> "IdSet":
        """Return a new set with ``i`` included."""
        if not 1 <= i <= self.capacity:
            raise ValueError(f"id {i} outside [1, {self.capacity}]")
        return IdSet._from_mask(self.capacity, self._mask | (1 << i))

    def remove(self, i: int) -> "IdSet":
        """Return a new set with ``i`` excluded (present or not)."""
        return IdSet._from_mask(self.capacity, self._mask & ~(1 << i))

    def complement(self) -> "IdSet":
        """Return ``[1, capacity]`` minus this set."""
        full = (1 << (self.capacity + 1)) - 2
        return IdSet._from_mask(self.capacity, full & ~self._mask)

    def min_id(self) -> int:
        """Smallest member, or the sentinel 0 when the set is empty."""
        if self._mask == 0:
            return 0
        return (self._mask & -self._mask).bit_length() - 1

    def __contains__(self, i: int) -> bool:
        return 0 < i <= self.capacity and bool((self._mask >> i) & 1)

    def __iter__(self) -> Iterator[int]:
        m = self._mask
        while m:
            lsb = m & -m
            yield lsb.bit_length() - 1
            m ^= lsb

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __bool__(self) -> bool:
        return self._mask != 0

    def __or__(self, other: "IdSet") -> "IdSet":
        self._require_same_universe(other)
        return IdSet._from_mask(self.capacity, self._mask | other._mask)

    def __and__(self, other: "IdSet") -> "IdSet":
        self._require_same_universe(other)
        return IdSet._from_mask(self.capacity, self._mask & other._mask)

    def __sub__(self, other: "IdSet") -> "IdSet":
        self._require_same_universe(other)
        return IdSet._from_mask(self.capacity, self._mask & ~other._mask)

    def __xor__(self, other: "IdSet") -> "IdSet":
        self._require_same_universe(other)
        return IdSet._from_mask(self.capacity, self._mask ^ other._mask)

    def issubset(self, other: "IdSet") -> bool:
        self._require_same_universe(other)
        return self._mask & ~other._mask == 0

    def issuperset(self, other: "IdSet") -> bool:
        return other.issubset(self)

    def __le__(self, other: "IdSet") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "IdSet") -> bool:
        return self.issubset(other) and self._mask != other._mask

    def __ge__(self, other: "IdSet") -> bool:
        return other.issubset(self)

    def __gt__(self, other: "IdSet") -> bool:
        return other < self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdSet):
            return NotImplemented
        return self._mask == other._mask and self.capacity == other.capacity

    def __hash__(self) -> int:
        return hash((self._mask, self.capacity))

    def __repr__(self) -> str:
        return f"IdSet({self.capacity}, {list(self)})"


# The two flavours used throughout: element sets over [1, n] and item sets
# over [1, q].  They share the representation; the aliases keep signatures
# readable.
ElementSet = IdSet
ItemSet = IdSet


def min_item(items: ItemSet) -> int:
    """Minimum member of an item set, or the sentinel 0 when empty."""
    return items.min_id()


def subset_lex_less(a: IdSet, b: IdSet) -> bool:
    """Strict total order on subsets of one universe.

    ``a`` precedes ``b`` exactly when the smallest id on which they differ
    belongs to ``a``.  A consequence worth remembering: a set precedes all
    of its proper subsets.
    """
    a._require_same_universe(b)
    d = a._mask ^ b._mask
    if d == 0:
        return False
    return bool(a._mask & (d & -d))


def subset_lex_leq(a: IdSet, b: IdSet) -> bool:
    """Reflexive companion of :func:`subset_lex_less`."""
    return a == b or subset_lex_less(a, b)


def lex_sort_key(s: IdSet) -> int:
    """Sort key realizing subset_lex_less: ascending keys follow the order."""
    rev = 0
    for i in s:
        rev |= 1 << (s.capacity - i)
    return -rev


def pair_lex_less(inst: "Instance", x: ElementSet, y: ElementSet) -> bool:
    """Order element sets by (common item set, element set), both lexicographic.

    Both arguments must be non-empty; their common item sets are computed
    from ``inst``.
    """
    ix = inst.common_item_set(x)
    iy = inst.common_item_set(y)
    if ix != iy:
        return subset_lex_less(ix, iy)
    return subset_lex_less(x, y)


class SetSystemOracle:
    """Access to a set system over ``[1, n]`` through two maximality queries.

    A backend owns some family of non-empty "components" over the element
    universe and answers:

    * ``l1(x, y)``: one component ``z`` with ``x <= z <= y`` that is
      maximal within ``y``, or ``None`` when no component squeezes between
      ``x`` and ``y``.  Requires non-empty ``x`` with ``x <= y``.
    * ``l2(y)``: every inclusion-maximal component contained in ``y``,
      duplicate-free and sorted by :func:`subset_lex_less`.

    Backends must be deterministic: repeated identical queries return
    identical answers, so whole traversals replay bit for bit.
    """

    def l1(self, x: ElementSet, y: ElementSet) -> Optional[ElementSet]:
        raise NotImplementedError

    def l2(self, y: ElementSet) -> List[ElementSet]:
        raise NotImplementedError

    def delta_hint(self) -> int:
        """Coarse upper bound on ``len(l2(y))`` for any query; reporting only."""
        raise NotImplementedError


class VolumeFunction:
    """Monotone pruning predicate over element sets.

    Implementations must satisfy: if ``positive(x)`` and ``x <= y`` then
    ``positive(y)``.  The enumerator relies on the contrapositive to prune
    whole subtrees, so a non-monotone implementation silently loses output.
    """

    def positive(self, elements: ElementSet) -> bool:
        raise NotImplementedError


class AlwaysPositive(VolumeFunction):
    """No pruning: every set is kept."""

    def positive(self, elements: ElementSet) -> bool:
        return True


class SizeAbove(VolumeFunction):
    """Keep sets with more than ``threshold`` elements."""

    def __init__(self, threshold: int) -> None:
        self.threshold = threshold

    def positive(self, elements: ElementSet) -> bool:
        return len(elements) > self.threshold


ALWAYS_POSITIVE = AlwaysPositive()


@dataclass(frozen=True)
class Snapshot:
    """Counter values captured at the moment a solution was emitted."""

    l1_calls: int
    l2_calls: int
    rho_calls: int
    traversal_calls: int


class OracleStats:
    """Counters for oracle and traversal activity during one run.

    ``traversal_calls`` counts descent invocations (one per visited tree
    node, including the top-level call for each root).  One snapshot is
    appended per emitted solution, which is what the delay meters read.
    Counters only ever increase within a run; the object is not shared
    between concurrent runs.
    """

    def __init__(self) -> None:
        self.l1_calls = 0
        self.l2_calls = 0
        self.rho_calls = 0
        self.traversal_calls = 0
        self.snapshots: List[Snapshot] = []

    @property
    def outputs(self) -> int:
        return len(self.snapshots)

    def record_output(self) -> None:
        self.snapshots.append(
            Snapshot(self.l1_calls, self.l2_calls, self.rho_calls, self.traversal_calls)
        )

    def as_dict(self) -> dict:
        return {
            "l1_calls": self.l1_calls,
            "l2_calls": self.l2_calls,
            "rho_calls": self.rho_calls,
            "traversal_calls": self.traversal_calls,
            "outputs": self.outputs,
        }


class Instance:
    """An element universe, an item universe, per-element attributes, an oracle.

    ``sigma`` is given as a sequence of ``n`` iterables; row ``v - 1``
    holds the item ids carried by element ``v``, each within ``[1, q]``.
    Per-item element slices are precomputed so attribute queries are mask
    intersections.
    """

    def __init__(
        self,
        n: int,
        q: int,
        sigma: Sequence[Iterable[int]],
        oracle: SetSystemOracle,
    ) -> None:
        if n < 1:
            raise ValueError("an instance needs at least one element")
        if q < 1:
            raise ValueError("an instance needs at least one item")
        if len(sigma) != n:
            raise ValueError(f"sigma must have {n} rows, got {len(sigma)}")
        self.n = n
        self.q = q
        self.oracle = oracle
        self._sigma_masks = [0] * (n + 1)
        self._item_masks = [0] * (q + 1)
        self._item_masks[0] = (1 << (n + 1)) - 2
        for v, row in enumerate(sigma, start=1):
            m = 0
            for i in row:
                if not 1 <= i <= q:
                    raise ValueError(f"sigma[{v - 1}]: item {i} outside [1, {q}]")
                m |= 1 << i
                self._item_masks[i] |= 1 << v
            self._sigma_masks[v] = m

    @property
    def elements(self) -> ElementSet:
        """The full element universe ``[1, n]``."""
        return IdSet.full(self.n)

    def element_set(self, ids: Iterable[int] = ()) -> ElementSet:
        return IdSet(self.n, ids)

    def item_set(self, ids: Iterable[int] = ()) -> ItemSet:
        return IdSet(self.q, ids)

    def sigma(self, v: int) -> ItemSet:
        """Attribute set of element ``v``."""
        if not 1 <= v <= self.n:
            raise ValueError(f"element {v} outside [1, {self.n}]")
        return IdSet._from_mask(self.q, self._sigma_masks[v])

    def common_item_set(self, x: ElementSet) -> ItemSet:
        """Items carried by every element of ``x``.

        Rejects empty ``x``: the common attribute set of nothing is
        deliberately undefined here, so a caller that would silently get
        the full item universe fails loudly instead.
        """
        if not x:
            raise ContractError("common_item_set of an empty element set")
        if x.capacity != self.n:
            raise ValueError("element set from a different universe")
        m = (1 << (self.q + 1)) - 2
        for v in x:
            m &= self._sigma_masks[v]
            if m == 0:
                break
        return IdSet._from_mask(self.q, m)

    def elements_with_item(self, i: int) -> ElementSet:
        """Elements whose attributes include item ``i``; item 0 means all."""
        if not 0 <= i <= self.q:
            raise ValueError(f"item {i} outside [0, {self.q}]")
        return IdSet._from_mask(self.n, self._item_masks[i])

    def elements_with_items(self, items: ItemSet) -> ElementSet:
        """Elements whose attributes include every member of ``items``.

        An empty ``items`` selects the whole universe.
        """
        if items.capacity != self.q:
            raise ValueError("item set from a different universe")
        m = (1 << (self.n + 1)) - 2
        for i in items:
            m &= self._item_masks[i]
            if m == 0:
                break
        return IdSet._from_mask(self.n, m)
