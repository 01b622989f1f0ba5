import itertools
import random
from fractions import Fraction

import pytest

from hypermat import (
    BoundViolation,
    EdgeVector,
    Hypergraph,
    InPolytope,
    Partition,
    SetViolation,
    independence_test_incremental,
    is_independent,
    max_weight_hyperforest,
    rank,
    separate_polytope,
)
from hypermat.brute import (
    brute_hyperforest,
    brute_max_weight_hyperforest,
    brute_rank,
    brute_separate,
)

from helpers import random_hypergraph, random_point, random_weights


class TestRank:
    def test_examples(self, h0, h1, k4):
        assert rank(h0).rank == 2
        assert rank(h1).rank == 3
        assert rank(k4).rank == 3

    def test_subsets(self, h0):
        assert rank(h0, [0]).rank == 1
        assert rank(h0, []).rank == 0

    def test_loops(self):
        h = Hypergraph(3, [[0], [1], [0, 1]])
        assert rank(h).rank == 1
        assert rank(h, [0, 1]).rank == 0

    def test_witness_attains_rank(self, h1):
        res = rank(h1)
        p = res.witness_partition
        crossing = h1.cross_edges(None, p)
        assert res.rank == h1.n - len(p.blocks) + len(crossing)

    def test_random_against_brute(self):
        rng = random.Random(0x7A2)
        for _ in range(80):
            n = rng.randint(1, 6)
            m = rng.randint(0, 7)
            h = random_hypergraph(rng, n, m, max_size=min(5, n)) if n >= 2 \
                else Hypergraph(n, [])
            ids = [e for e in range(h.m) if rng.random() < 0.7]
            assert rank(h, ids).rank == brute_rank(h, ids)

    def test_edge_id_out_of_range(self, h0):
        with pytest.raises(ValueError):
            rank(h0, [0, 5])

    def test_rank_axioms(self):
        rng = random.Random(0xAB)
        h = random_hypergraph(rng, 5, 5, max_size=4)
        table = {}
        for r in range(h.m + 1):
            for combo in itertools.combinations(range(h.m), r):
                table[frozenset(combo)] = rank(h, combo).rank
        sets = list(table)
        for a in sets:
            assert 0 <= table[a] <= len(a)
        for a, b in itertools.product(sets, repeat=2):
            if a <= b:
                assert table[a] <= table[b]
            assert table[a | b] + table[a & b] <= table[a] + table[b]


class TestIndependence:
    def test_examples(self, h0, k3):
        assert is_independent(h0)
        assert not is_independent(k3)
        assert is_independent(k3, [0, 2])

    def test_empty_and_loop(self):
        assert is_independent(Hypergraph(3, []), [])
        assert not is_independent(Hypergraph(2, [[0], [0, 1]]))

    def test_incremental(self, h0, k3):
        assert independence_test_incremental(h0, [0], 1)
        assert not independence_test_incremental(k3, [0, 1], 2)

    def test_incremental_rejects_present_candidate(self, h0):
        with pytest.raises(ValueError):
            independence_test_incremental(h0, [0, 1], 1)

    def test_random_against_brute(self):
        rng = random.Random(0x1DE)
        for _ in range(80):
            n = rng.randint(2, 7)
            m = rng.randint(0, 8)
            h = random_hypergraph(rng, n, m, max_size=min(4, n))
            assert is_independent(h) == brute_hyperforest(h)


class TestMaxWeightHyperforest:
    def test_triangle(self, k3):
        chosen, weight = max_weight_hyperforest(k3, EdgeVector.of([3, 2, 1]))
        assert weight == 5 and chosen == frozenset({0, 1})

    def test_chosen_set_is_independent(self, h1):
        w = EdgeVector.of(["3/2", 1, 2])
        chosen, weight = max_weight_hyperforest(h1, w)
        assert is_independent(h1, chosen)
        assert weight == w.sum_over(chosen)

    def test_zero_weights_still_packed(self, h0):
        chosen, weight = max_weight_hyperforest(h0, EdgeVector.zeros(2))
        assert weight == 0 and len(chosen) == 2

    def test_random_against_brute(self):
        rng = random.Random(0xF0E)
        for _ in range(60):
            n = rng.randint(2, 6)
            m = rng.randint(0, 8)
            h = random_hypergraph(rng, n, m, max_size=min(4, n))
            w = random_weights(rng, h.m)
            chosen, weight = max_weight_hyperforest(h, w)
            assert weight == brute_max_weight_hyperforest(h, w)
            assert is_independent(h, chosen)


class TestSeparation:
    def test_interior_point(self, h0, k3):
        assert isinstance(separate_polytope(h0, EdgeVector.ones(2)), InPolytope)
        assert isinstance(separate_polytope(k3, EdgeVector.of(["2/3"] * 3)), InPolytope)

    def test_negative_coordinate(self, k3):
        out = separate_polytope(k3, EdgeVector.of([1, "-1/4", 1]))
        assert isinstance(out, BoundViolation)
        assert out.edge == 1 and out.upper is None and out.value == Fraction(-1, 4)

    def test_above_one(self, k3):
        out = separate_polytope(k3, EdgeVector.of([0, 0, "5/4"]))
        assert isinstance(out, BoundViolation)
        assert out.edge == 2 and out.upper == 1

    def test_loop_capped_at_zero(self):
        h = Hypergraph(2, [[0], [0, 1]])
        out = separate_polytope(h, EdgeVector.of(["1/2", 0]))
        assert isinstance(out, BoundViolation)
        assert out.edge == 0 and out.upper == 0

    def test_screening_in_id_order(self, k3):
        out = separate_polytope(k3, EdgeVector.of([2, -1, 0]))
        assert isinstance(out, BoundViolation) and out.edge == 0

    def test_set_violation_triangle(self, k3):
        out = separate_polytope(k3, EdgeVector.ones(3))
        assert isinstance(out, SetViolation)
        assert out.witness == frozenset({0, 1, 2})
        assert out.lhs == 3 and out.rhs == 2
        assert out.edge_set == frozenset({0, 1, 2})
        assert out.partition == Partition.whole(3)

    def test_set_violation_partition_shape(self):
        # dense spot {0,1,2} inside a larger vertex set
        h = Hypergraph(5, [[0, 1], [1, 2], [0, 2], [2, 3], [3, 4]])
        x = EdgeVector.of([1, 1, 1, 0, 0])
        out = separate_polytope(h, x)
        assert isinstance(out, SetViolation)
        assert out.witness == frozenset({0, 1, 2})
        assert out.partition == Partition(5, ((0, 1, 2), (3,), (4,)))
        assert out.lhs > out.rhs

    def test_random_against_brute(self):
        rng = random.Random(0x5E9)
        verdicts = {True: 0, False: 0}
        for _ in range(120):
            n = rng.randint(2, 6)
            m = rng.randint(1, 7)
            h = random_hypergraph(rng, n, m, max_size=min(4, n))
            x = random_point(rng, h.m)
            outcome = separate_polytope(h, x)
            inside = isinstance(outcome, InPolytope)
            assert inside == brute_separate(h, x)
            verdicts[inside] += 1
            if isinstance(outcome, SetViolation):
                lhs = x.sum_over(h.induced_edges(None, outcome.witness))
                assert lhs == outcome.lhs and lhs > len(outcome.witness) - 1
        # the sample must exercise both verdicts to mean anything
        assert verdicts[True] > 10 and verdicts[False] > 10
