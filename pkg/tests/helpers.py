"""Shared test utilities: deterministic generators and small reference
algorithms that stay independent of package internals."""

from __future__ import annotations

import random
from fractions import Fraction

from hypermat import EdgeVector, Hypergraph
from hypermat.brute import enum_partitions


def random_hypergraph(rng: random.Random, n: int, m: int, max_size: int,
                      connected: bool = False) -> Hypergraph:
    """Random hypergraph with edge sizes in 2..max_size.

    With connected=True the first n-1 edges trace a random vertex
    permutation, so the result is connected; requires m >= n-1.
    """
    edges: list[list[int]] = []
    if connected:
        assert m >= n - 1
        order = list(range(n))
        rng.shuffle(order)
        edges.extend([order[i], order[i + 1]] for i in range(n - 1))
    while len(edges) < m:
        size = rng.randint(2, min(max_size, n))
        edges.append(rng.sample(range(n), size))
    return Hypergraph(n, edges)


def random_weights(rng: random.Random, m: int, lo: int = 0, hi: int = 6,
                   den: int = 2) -> EdgeVector:
    return EdgeVector.of([Fraction(rng.randint(lo, hi), rng.randint(1, den))
                          for _ in range(m)])


def random_point(rng: random.Random, m: int) -> EdgeVector:
    # mostly in [0, 1], occasionally above, to exercise both separation outcomes
    vals = []
    for _ in range(m):
        vals.append(Fraction(rng.randint(0, 5), 4))
    return EdgeVector.of(vals)


def mst_cost(n: int, pairs: list[tuple[int, int]],
             costs: list[Fraction]) -> Fraction | None:
    """Kruskal; None when the graph is disconnected."""
    order = sorted(range(len(pairs)), key=lambda e: (costs[e], e))
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    total = Fraction(0)
    used = 0
    for e in order:
        u, v = pairs[e]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            total += costs[e]
            used += 1
    return total if used == n - 1 else None


def verify_optimal(h, k, costs, bounds, res):
    """Re-derive a reinforcement optimality proof from scratch: primal
    feasibility over every partition, dual feasibility, complementary
    slackness, and equal objectives.  Only for n small enough to
    enumerate partitions."""
    x = res.x
    ub = [bounds[e] if bounds is not None else Fraction(k * (h.n - 1))
          for e in range(h.m)]
    for e in range(h.m):
        assert 0 <= x[e] <= ub[e]
    for p in enum_partitions(h.n):
        if len(p.blocks) >= 2:
            need = k * (len(p.blocks) - 1)
            assert x.sum_over(h.cross_edges(None, p)) >= need

    gamma = res.dual.partition_duals
    beta = res.dual.bound_duals
    assert all(g >= 0 for _, g in gamma) and all(b >= 0 for b in beta)
    dual_obj = sum((g * k * (len(p.blocks) - 1) for p, g in gamma), Fraction(0)) \
        - sum((beta[e] * ub[e] for e in range(h.m)), Fraction(0))
    assert res.cost == sum((costs[e] * x[e] for e in range(h.m)), Fraction(0))
    assert res.cost == dual_obj

    for e in range(h.m):
        covering = sum((g for p, g in gamma
                        if e in h.cross_edges(None, p)), Fraction(0))
        reduced = costs[e] - covering + beta[e]
        assert reduced == res.dual.reduced_costs[e]
        assert reduced >= 0
        if x[e] > 0:
            assert reduced == 0
        if beta[e] > 0:
            assert x[e] == ub[e]
    for p, g in gamma:
        if g > 0:
            assert x.sum_over(h.cross_edges(None, p)) == k * (len(p.blocks) - 1)
