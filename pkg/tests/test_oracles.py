import itertools
import random

import pytest

from polyenum import (
    ContractError,
    ExplicitFamilyOracle,
    GraphConnectivityOracle,
    IdSet,
    subset_lex_less,
)
from polyenum.testkit import materialize_components


def iset(n, *ids):
    return IdSet(n, ids)


class TestExplicitFamily:
    def test_l1_examples(self):
        oracle = ExplicitFamilyOracle(3, [[1], [1, 2], [3]])
        assert oracle.l1(iset(3, 1), iset(3, 1, 2, 3)) == iset(3, 1, 2)
        assert oracle.l1(iset(3, 2), iset(3, 2)) is None

    def test_l1_whole_query_is_member(self):
        oracle = ExplicitFamilyOracle(4, [[1, 2, 4], [1]])
        y = iset(4, 1, 2, 4)
        assert oracle.l1(y, y) == y

    def test_l1_contract_errors(self):
        oracle = ExplicitFamilyOracle(3, [[1]])
        with pytest.raises(ContractError):
            oracle.l1(iset(3), iset(3, 1))
        with pytest.raises(ContractError):
            oracle.l1(iset(3, 2), iset(3, 1))

    def test_l2_examples(self):
        oracle = ExplicitFamilyOracle(3, [[1], [1, 2], [3]])
        assert oracle.l2(iset(3, 1, 2, 3)) == [iset(3, 1, 2), iset(3, 3)]
        assert oracle.l2(iset(3, 2)) == []
        solo = ExplicitFamilyOracle(3, [[2, 3]])
        assert solo.l2(iset(3, 2, 3)) == [iset(3, 2, 3)]

    def test_validation(self):
        with pytest.raises(ValueError):
            ExplicitFamilyOracle(3, [[1], [1]])
        with pytest.raises(ValueError):
            ExplicitFamilyOracle(3, [[]])
        with pytest.raises(ValueError):
            ExplicitFamilyOracle(3, [[4]])

    def test_delta_hint(self):
        assert ExplicitFamilyOracle(3, [[1], [2]]).delta_hint() == 2


class TestGraphConnectivity:
    def test_l1_examples(self):
        p3 = GraphConnectivityOracle(3, [(1, 2), (2, 3)])
        assert p3.l1(iset(3, 2), iset(3, 1, 2, 3)) == iset(3, 1, 2, 3)
        assert p3.l1(iset(3, 1, 3), iset(3, 1, 3)) is None
        for v in (1, 2, 3):
            assert p3.l1(iset(3, v), iset(3, v)) == iset(3, v)

    def test_l2_examples(self):
        p3 = GraphConnectivityOracle(3, [(1, 2), (2, 3)])
        assert p3.l2(iset(3, 1, 3)) == [iset(3, 1), iset(3, 3)]
        assert p3.l2(iset(3, 1, 2, 3)) == [iset(3, 1, 2, 3)]
        assert p3.l2(iset(3)) == []

    def test_validation(self):
        with pytest.raises(ValueError):
            GraphConnectivityOracle(3, [(1, 1)])
        with pytest.raises(ValueError):
            GraphConnectivityOracle(3, [(1, 4)])
        with pytest.raises(ValueError):
            GraphConnectivityOracle(0)

    def test_adjacency_view_is_sorted_and_symmetric(self):
        g = GraphConnectivityOracle(4, [(3, 1), (2, 3)])
        adj = g.adjacency
        assert adj[3] == (1, 2)
        assert adj[1] == (3,)
        assert adj[4] == ()
        for v, nbrs in adj.items():
            for u in nbrs:
                assert v in adj[u]

    def test_delta_hint(self):
        assert GraphConnectivityOracle(5).delta_hint() == 5


def random_family_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    masks = set()
    for _ in range(rng.randint(1, 20)):
        m = rng.getrandbits(n) << 1
        if m:
            masks.add(m)
    if not masks:
        masks.add(2)
    return ExplicitFamilyOracle(n, [IdSet._from_mask(n, m) for m in sorted(masks)])


@pytest.mark.parametrize("seed", range(30))
def test_explicit_answers_are_consistent(seed):
    rng = random.Random(1000 + seed)
    oracle = random_family_oracle(seed)
    n = oracle.n
    for _ in range(30):
        ym = rng.getrandbits(n) << 1
        y = IdSet._from_mask(n, ym)
        maximal = oracle.l2(y)
        assert len(set(maximal)) == len(maximal)
        for a, b in zip(maximal, maximal[1:]):
            assert subset_lex_less(a, b)
        for c in maximal:
            assert c <= y
            assert not any(c < d <= y for d in oracle.family)
        if ym:
            xm = ym & (rng.getrandbits(n) << 1)
            if not xm:
                continue
            x = IdSet._from_mask(n, xm)
            z = oracle.l1(x, y)
            if z is None:
                assert not any(x <= c <= y for c in oracle.family)
            else:
                assert x <= z
                assert z in maximal


@pytest.mark.parametrize("seed", range(12))
def test_graph_l2_partitions_query(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.4]
    g = GraphConnectivityOracle(n, edges)
    for _ in range(30):
        y = IdSet._from_mask(n, rng.getrandbits(n) << 1)
        comps = g.l2(y)
        union = IdSet.empty(n)
        total = 0
        for c in comps:
            assert c <= y
            union = union | c
            total += len(c)
        assert union == y
        assert total == len(y)


@pytest.mark.parametrize("seed", range(8))
def test_explicit_family_of_connected_sets_matches_graph_oracle(seed):
    rng = random.Random(40 + seed)
    n = rng.randint(1, 6)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.5]
    graph = GraphConnectivityOracle(n, edges)
    explicit = ExplicitFamilyOracle(n, materialize_components(graph, n))
    universe = list(range(1, n + 1))
    for r in range(n + 1):
        for ys in itertools.combinations(universe, r):
            y = IdSet(n, ys)
            assert graph.l2(y) == explicit.l2(y)
            for rr in range(1, len(ys) + 1):
                for xs in itertools.combinations(ys, rr):
                    x = IdSet(n, xs)
                    # components of an induced subgraph partition it, so the
                    # maximal candidate containing x is unique and the two
                    # backends must agree exactly
                    assert graph.l1(x, y) == explicit.l1(x, y)
