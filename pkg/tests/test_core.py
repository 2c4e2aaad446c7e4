import itertools
import random

import pytest

from polyenum import (
    ContractError,
    IdSet,
    Instance,
    GraphConnectivityOracle,
    OracleStats,
    min_item,
    pair_lex_less,
    subset_lex_leq,
    subset_lex_less,
)
from polyenum.core import lex_sort_key

from conftest import elems, items


def all_subsets(universe):
    out = []
    for r in range(len(universe) + 1):
        out.extend(IdSet(max(universe), c) for c in itertools.combinations(universe, r))
    return out


class TestIdSet:
    def test_construction_and_iteration(self):
        s = IdSet(5, [4, 1, 3])
        assert list(s) == [1, 3, 4]
        assert len(s) == 3
        assert 3 in s and 2 not in s and 0 not in s and 9 not in s

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            IdSet(3, [4])
        with pytest.raises(ValueError):
            IdSet(3, [0])

    def test_algebra(self):
        a = IdSet(5, [1, 2, 4])
        b = IdSet(5, [2, 3])
        assert list(a | b) == [1, 2, 3, 4]
        assert list(a & b) == [2]
        assert list(a - b) == [1, 4]
        assert list(a ^ b) == [1, 3, 4]
        assert a.add(3) == IdSet(5, [1, 2, 3, 4])
        assert a.remove(2) == IdSet(5, [1, 4])
        assert a.remove(5) == a
        assert list(b.complement()) == [1, 4, 5]

    def test_subset_relations(self):
        a = IdSet(4, [1, 2])
        assert a <= IdSet(4, [1, 2, 3])
        assert a < IdSet(4, [1, 2, 3])
        assert not a < a
        assert a <= a
        assert IdSet(4, [1, 2, 3]) > a

    def test_universe_mismatch_rejected(self):
        with pytest.raises(ValueError):
            IdSet(3, [1]) | IdSet(4, [1])
        assert IdSet(3, [1]) != IdSet(4, [1])

    def test_full_empty_min(self):
        assert list(IdSet.full(4)) == [1, 2, 3, 4]
        assert not IdSet.empty(4)
        assert IdSet.empty(4).min_id() == 0
        assert IdSet(4, [3, 2]).min_id() == 2


def test_min_item_examples():
    assert min_item(IdSet(9, [3, 5])) == 3
    assert min_item(IdSet.empty(9)) == 0
    assert min_item(IdSet.full(9)) == 1


def test_subset_lex_less_examples():
    u = 3
    assert subset_lex_less(IdSet(u, [1, 3]), IdSet(u, [2, 3]))
    assert subset_lex_less(IdSet(u, [1, 2]), IdSet(u, [1]))
    assert not subset_lex_less(IdSet(u, [1, 2]), IdSet(u, [1, 2]))
    assert subset_lex_leq(IdSet(u, [1, 2]), IdSet(u, [1, 2]))


def test_lex_order_is_strict_total_order_on_5_universe():
    subsets = all_subsets([1, 2, 3, 4, 5])
    for a, b in itertools.product(subsets, repeat=2):
        holds = (subset_lex_less(a, b), subset_lex_less(b, a), a == b)
        assert sum(holds) == 1, (list(a), list(b))
    rng = random.Random(7)
    for _ in range(3000):
        a, b, c = rng.sample(subsets, 3)
        if subset_lex_less(a, b) and subset_lex_less(b, c):
            assert subset_lex_less(a, c)


def test_superset_precedes_subset_on_5_universe():
    subsets = all_subsets([1, 2, 3, 4, 5])
    for a, b in itertools.product(subsets, repeat=2):
        if a.issuperset(b):
            assert subset_lex_leq(a, b)
            assert not subset_lex_less(b, a) or b == a
            assert a == b or subset_lex_less(a, b)


def test_lex_sort_key_matches_comparator():
    subsets = all_subsets([1, 2, 3, 4])
    by_key = sorted(subsets, key=lex_sort_key)
    for a, b in zip(by_key, by_key[1:]):
        assert subset_lex_less(a, b)


class TestInstanceQueries:
    def test_common_item_set_examples(self, p3):
        assert p3.common_item_set(elems(p3, 2)) == items(p3, 1, 2)
        assert p3.common_item_set(elems(p3, 1, 2, 3)) == items(p3)
        for v in (1, 2, 3):
            assert p3.common_item_set(elems(p3, v)) == p3.sigma(v)

    def test_common_item_set_rejects_empty(self, p3):
        with pytest.raises(ContractError):
            p3.common_item_set(elems(p3))

    def test_elements_with_items_examples(self, p3):
        assert p3.elements_with_items(items(p3, 1)) == elems(p3, 1, 2)
        assert p3.elements_with_items(items(p3, 1, 2)) == elems(p3, 2)
        assert p3.elements_with_items(items(p3)) == p3.elements

    def test_elements_with_item_sentinel(self, p3):
        assert p3.elements_with_item(0) == p3.elements
        assert p3.elements_with_item(2) == elems(p3, 2, 3)
        with pytest.raises(ValueError):
            p3.elements_with_item(3)

    def test_pair_lex_less_examples(self, p3):
        assert pair_lex_less(p3, elems(p3, 2), elems(p3, 1, 2))
        assert not pair_lex_less(p3, elems(p3, 2), elems(p3, 2))
        assert pair_lex_less(p3, elems(p3, 1, 2), elems(p3, 2, 3))

    def test_validation(self):
        oracle = GraphConnectivityOracle(2, [(1, 2)])
        with pytest.raises(ValueError):
            Instance(0, 1, [], oracle)
        with pytest.raises(ValueError):
            Instance(2, 0, [[], []], oracle)
        with pytest.raises(ValueError):
            Instance(2, 2, [[1]], oracle)
        with pytest.raises(ValueError):
            Instance(2, 2, [[1], [3]], oracle)


def random_small_instance(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    q = rng.randint(1, 5)
    sigma = [[i for i in range(1, q + 1) if rng.random() < 0.5] for _ in range(n)]
    return Instance(n, q, sigma, GraphConnectivityOracle(n)), rng


@pytest.mark.parametrize("seed", range(25))
def test_attribute_queries_are_antitone_and_adjoint(seed):
    inst, rng = random_small_instance(seed)
    for _ in range(20):
        jm = rng.getrandbits(inst.q) << 1
        jm2 = jm | (rng.getrandbits(inst.q) << 1)
        j = IdSet._from_mask(inst.q, jm)
        j2 = IdSet._from_mask(inst.q, jm2)
        assert inst.elements_with_items(j2) <= inst.elements_with_items(j)

        xm = rng.getrandbits(inst.n) << 1
        xm2 = xm | (rng.getrandbits(inst.n) << 1)
        if xm:
            x = IdSet._from_mask(inst.n, xm)
            x2 = IdSet._from_mask(inst.n, xm2)
            assert inst.common_item_set(x2) <= inst.common_item_set(x)
            # adjointness: x inside the j-slice iff j inside x's common items
            assert (x <= inst.elements_with_items(j)) == (
                j <= inst.common_item_set(x)
            )


def test_oracle_stats_snapshots():
    st = OracleStats()
    st.l1_calls += 2
    st.record_output()
    st.l2_calls += 1
    st.traversal_calls += 3
    st.record_output()
    assert st.outputs == 2
    assert st.snapshots[0].l1_calls == 2
    assert st.snapshots[0].traversal_calls == 0
    assert st.snapshots[1].traversal_calls == 3
    assert st.as_dict()["outputs"] == 2
