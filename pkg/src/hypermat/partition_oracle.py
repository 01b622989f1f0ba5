"""Most-violated partition inequality via a covering-LP greedy and min cuts.

Given nonnegative edge weights x and a positive per-block credit t, the
oracle minimizes

    x(crossing edges of P) - t * (|P| - 1)

over all partitions P of the vertex set.  A negative optimum certifies a
violated partition inequality; the optimum is never positive because the
one-block partition scores zero.

The minimization is the dual of a covering problem: find per-vertex
values y minimizing y(V) subject to y(S) >= demand(S) for every nonempty
vertex set S, where demand(S) is the weight of the edges inside S, plus
the credit t when S misses a fixed root vertex.  That demand function is
supermodular on intersecting sets, so a greedy works: start every vertex
at the generous value t + x(all edges), then repeatedly pick an uncovered
vertex and drop its value by the minimum slack y(S) - demand(S) over sets
S containing it.  One min cut computes that slack exactly.  The sets that
become tight are merged into a disjoint family whose complement-blocks
form the optimal partition, and x(all) - y(V) is the optimal value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import EdgeVector, Hypergraph, Partition, as_fraction
from .gadgets import build_supermodular_gadget
from .mincut import _Solver, INF


@dataclass
class GreedyState:
    """Greedy bookkeeping, exposed for inspection and tests."""

    potentials: list[Fraction]
    family: list[frozenset[int]]
    root: int
    threshold: Fraction
    last_slack: Fraction | None
    steps: int


@dataclass(frozen=True)
class PartitionOracleResult:
    """Outcome of the partition minimization.

    value is the exact minimum (always <= 0), partition attains it, and
    violated flags a strictly negative value.
    """

    value: Fraction
    partition: Partition
    violated: bool


def cover_demand(subset: Iterable[int], h: Hypergraph, weights: EdgeVector,
                 threshold: Fraction, root: int,
                 edge_ids: Iterable[int] | None = None) -> Fraction:
    """Demand a cover must meet on a nonempty vertex set: the weight of
    the selected edges inside it, plus the block credit when the set
    misses the root."""
    sub = frozenset(subset)
    if not sub:
        raise ValueError("demand of the empty set is not defined")
    inside = h.induced_edges(edge_ids, sub)
    value = weights.sum_over(inside)
    if root not in sub:
        value += as_fraction(threshold)
    return value


def min_partition(h: Hypergraph, weights: EdgeVector, threshold: Fraction,
                  edge_ids: Iterable[int] | None = None,
                  state_out: list[GreedyState] | None = None) -> PartitionOracleResult:
    """Minimize weights(crossing P) - threshold * (|P| - 1) over partitions P.

    Restricting edge_ids scopes both the crossing sum and the demands to
    that edge subset; other entries of `weights` are ignored.  Runs at
    most |V| greedy steps, one min cut each.
    """
    threshold = as_fraction(threshold)
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    n = h.n
    if n < 1:
        raise ValueError("no vertices")
    weights.require_length(h.m, "weights")
    ids = h._edge_id_list(edge_ids)
    for e in ids:
        if weights[e] < 0:
            raise ValueError(f"weights has a negative entry at edge {e}")
    total = weights.sum_over(ids)
    root = 0

    start = threshold + total
    potentials = [start] * n
    charges = [start] * n
    charges[root] = start + threshold
    neg_total = Fraction(0)  # sum of negative charges, tracked incrementally

    gadget = build_supermodular_gadget(h, weights, charges, forced=0, edge_ids=ids)
    net = gadget.network
    solver = _Solver(net.node_count, net.arcs, net.source, net.sink)
    # builder layout contract: source arc of v at position v, sink arc at n + v
    forced_prev = 0

    def set_charge(v: int, value: Fraction) -> None:
        nonlocal neg_total
        old = charges[v]
        if old < 0:
            neg_total -= old
        if value < 0:
            neg_total += value
        charges[v] = value
        solver.set_capacity(v, value if value > 0 else Fraction(0))
        if v != forced_prev:
            solver.set_capacity(n + v, -value if value < 0 else Fraction(0))

    def set_forced(v: int) -> None:
        nonlocal forced_prev
        old = forced_prev
        forced_prev = v
        c = charges[old]
        solver.set_capacity(n + old, -c if c < 0 else Fraction(0))
        solver.set_capacity(n + v, INF)

    covered = bytearray(n)
    family: list[frozenset[int]] = []
    state = GreedyState(potentials=potentials, family=family, root=root,
                        threshold=threshold, last_slack=None, steps=0)
    if state_out is not None:
        state_out.append(state)

    def demand(sub: frozenset[int]) -> Fraction:
        return cover_demand(sub, h, weights, threshold, root, ids)

    for pivot in range(n):
        if covered[pivot]:
            continue
        state.steps += 1
        assert state.steps <= n, "greedy exceeded |V| steps"
        set_forced(pivot)
        cut = solver.solve()
        side = cut.source_side
        tight = frozenset(v for v in range(n) if (2 + v) not in side)
        # cut capacity = charge(tight) - weights(inside tight) + total - neg_total,
        # so the minimum slack over sets containing the pivot is:
        slack = cut.capacity - threshold - total + neg_total
        assert pivot in tight
        assert slack >= 0, "cover became infeasible"
        state.last_slack = slack
        potentials[pivot] -= slack
        set_charge(pivot, potentials[pivot] + (threshold if pivot == root else Fraction(0)))
        assert sum((potentials[v] for v in tight), Fraction(0)) == demand(tight), \
            "chosen set is not tight after the drop"
        # uncross: unions of intersecting tight sets stay tight
        merged = set(tight)
        keep: list[frozenset[int]] = []
        for s in family:
            if s & merged:
                merged |= s
                assert sum((potentials[v] for v in merged), Fraction(0)) == demand(frozenset(merged)), \
                    "union of intersecting tight sets lost tightness"
            else:
                keep.append(s)
        keep.append(frozenset(merged))
        family[:] = keep
        for v in merged:
            covered[v] = 1

    partition = Partition(n, tuple(tuple(sorted(s)) for s in family))
    value = total - sum(potentials, Fraction(0))
    crossing = h.cross_edges(ids, partition)
    recomputed = weights.sum_over(crossing) - threshold * (len(partition.blocks) - 1)
    assert value == recomputed, "greedy value disagrees with its own partition"
    assert value <= 0, "one-block partition bound violated"
    if value < 0:
        # dual certificate: the tight family's demands sum past the total weight
        demands = sum((demand(s) for s in family), Fraction(0))
        assert demands == sum(potentials, Fraction(0)) and demands > total
    return PartitionOracleResult(value=value, partition=partition, violated=value < 0)
