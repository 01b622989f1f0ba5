"""Primal-dual solver for minimum-cost network reinforcement.

Given per-edge costs and multiplicity bounds, choose multiplicities x
with 0 <= x <= bounds so that every partition P of the vertices
satisfies x(crossing P) >= k * (|P| - 1), at minimum total cost.  For a
connected graph and k = 1 this is spanning-tree feasibility; general k
asks for enough capacity to pack k hypertrees.

The algorithm grows a set of "tight" edges.  Each round raises the dual
variable of the current partition until some crossing non-tight edge's
reduced cost hits zero, admits that edge, and re-solves the partition
subproblem minimize bounds(crossing tight edges) - k * (|P| - 1).  If
the new optimal partition merges blocks of the old one, the multiplicity
of the just-admitted edge is set by the merge's deficit (and the merged
blocks fuse); otherwise the edge enters at its bound.  The subproblem
minimum reaching zero certifies primal feasibility; running out of
crossing edges proves infeasibility with the current partition as the
certificate.  Every dual update keeps feasibility and complementary
slackness, which are asserted, so the final cost equality is a proof of
optimality; with integer k and bounds the multiplicities come out
integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .core import EdgeVector, Hypergraph, Partition
from .partition_oracle import min_partition


@dataclass(frozen=True)
class MergeDescriptor:
    """Outcome of canonicalizing a subproblem optimum against the old partition.

    block_indices are positions of the old partition's blocks fusing into
    `merged`; value is the multiplicity assigned to the triggering edge,
    chosen so the edges inside `merged` sum to exactly k * (blocks - 1).
    """

    block_indices: frozenset[int]
    merged: frozenset[int]
    value: Fraction


@dataclass
class DualState:
    """Dual variables and bookkeeping at the end of a run.

    partition_duals lists (partition, raise) pairs in the order first
    raised; bound_duals and reduced_costs are per-edge; tight_edges in
    admission order; final_partition is the last subproblem optimum, and
    on infeasibility it is the certificate violating feasibility.
    """

    partition_duals: list[tuple[Partition, Fraction]]
    bound_duals: list[Fraction]
    reduced_costs: list[Fraction]
    tight_edges: list[int]
    final_partition: Partition


@dataclass(frozen=True)
class ReinforcementResult:
    status: str  # "optimal" or "infeasible"
    x: EdgeVector | None
    cost: Fraction | None
    dual: DualState
    merges: tuple[MergeDescriptor, ...] = ()


def canonicalize_merge(h: Hypergraph, old: Partition, new: Partition, trigger: int,
                       x: Sequence[Fraction], threshold: Fraction,
                       bounds: Sequence[Fraction]) -> MergeDescriptor | None:
    """Rewrite a subproblem optimum into at most one merge of old blocks.

    First, any old block crossing several new blocks forces those new
    blocks to merge (the rewritten partition is then a coarsening of the
    old one).  Second, every merged group not spanned by the triggering
    edge splits back into its old blocks.  Both rewrites preserve the
    subproblem value; at most one merged group can survive, because the
    triggering edge spans at most one.  Returns None when the result is
    the old partition itself, else the merge with the multiplicity that
    makes the edges inside it sum to threshold * (group size - 1).
    """
    if old.n != h.n or new.n != h.n:
        raise ValueError("partition vertex count mismatch")
    # union-find over new blocks, linked through old blocks that cross them
    parent = list(range(len(new.blocks)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for ob in old.blocks:
        hit = sorted({find(new.block_index(v)) for v in ob})
        for other in hit[1:]:
            parent[find(other)] = find(hit[0])
    groups: dict[int, set[int]] = {}
    for i, ob in enumerate(old.blocks):
        groups.setdefault(find(new.block_index(ob[0])), set()).add(i)
    span = set(h.edges[trigger].vertices)
    surviving: list[set[int]] = []
    for members in groups.values():
        if len(members) < 2:
            continue
        union_verts = {v for i in members for v in old.blocks[i]}
        if span <= union_verts:
            surviving.append(members)
    assert len(surviving) <= 1, "triggering edge spans more than one merged group"
    if not surviving:
        return None
    members = surviving[0]
    merged = frozenset(v for i in members for v in old.blocks[i])
    inner_blocks = [old.blocks[i] for i in sorted(members)]
    crossing = h.cross_edges(None, inner_blocks)
    assert trigger in crossing, "triggering edge does not cross the merged blocks"
    lam = threshold * (len(members) - 1) - sum(
        (x[e] for e in crossing if e != trigger), Fraction(0)
    )
    assert 0 <= lam <= bounds[trigger], "merge deficit outside the edge bound"
    return MergeDescriptor(block_indices=frozenset(members), merged=merged, value=lam)


def _subproblem(h: Hypergraph, tight: Sequence[int], bounds: Sequence[Fraction],
                threshold: Fraction, current: Partition) -> tuple[Fraction, Partition]:
    """Minimize bounds(crossing tight edges) - threshold * (|P| - 1).

    Solved on the quotient by the current partition: blocks become
    vertices and tight edges map through, dropping those inside a block.
    The merge structure of successive optima guarantees some optimum is a
    coarsening of the current partition, so the quotient loses nothing.
    """
    blocks = current.blocks
    if len(blocks) == 1:
        return Fraction(0), current
    images: list[tuple[int, ...]] = []
    weights: list[Fraction] = []
    for e in tight:
        img = sorted({current.block_index(v) for v in h.edges[e].vertices})
        if len(img) >= 2:
            images.append(tuple(img))
            weights.append(bounds[e])
    quotient = Hypergraph(len(blocks), images)
    res = min_partition(quotient, EdgeVector(weights), threshold)
    lifted = Partition(h.n, tuple(
        tuple(sorted(v for i in qb for v in blocks[i])) for qb in res.partition.blocks
    ))
    return res.value, lifted


def _partition_value(h: Hypergraph, tight: Iterable[int], bounds: Sequence[Fraction],
                     threshold: Fraction, p: Partition) -> Fraction:
    crossing = h.cross_edges(list(tight), p)
    return sum((bounds[e] for e in crossing), Fraction(0)) - threshold * (len(p.blocks) - 1)


def reinforce(h: Hypergraph, tree_count: int, costs: EdgeVector,
              bounds: EdgeVector | None = None) -> ReinforcementResult:
    """Minimum-cost multiplicities packing `tree_count` hypertrees.

    bounds None treats every edge as unbounded; internally each bound
    becomes tree_count * (|V| - 1), which no optimal solution exceeds.
    Infeasibility is certified by a partition whose crossing edges cannot
    reach the requirement even at full bounds.  With integer tree_count
    and bounds the optimal multiplicities are integral.
    """
    if h.n < 1:
        raise ValueError("no vertices")
    if not isinstance(tree_count, int) or tree_count < 0:
        raise ValueError("tree count must be a nonnegative integer")
    costs.require_length(h.m, "costs")
    costs.require_nonnegative("costs")
    k = Fraction(tree_count)
    if bounds is None:
        ub = [k * max(h.n - 1, 1)] * h.m
    else:
        bounds.require_length(h.m, "bounds")
        bounds.require_nonnegative("bounds")
        ub = list(bounds)

    def dual_state(gammas: dict[Partition, Fraction], bdual: list[Fraction],
                   reduced: list[Fraction], tight: list[int], p: Partition) -> DualState:
        return DualState(partition_duals=list(gammas.items()), bound_duals=list(bdual),
                         reduced_costs=list(reduced), tight_edges=list(tight),
                         final_partition=p)

    if tree_count == 0 or h.n == 1:
        dual = dual_state({}, [Fraction(0)] * h.m, list(costs), [], Partition.whole(h.n))
        return ReinforcementResult(status="optimal", x=EdgeVector.zeros(h.m),
                                   cost=Fraction(0), dual=dual)

    x: list[Fraction] = [Fraction(0)] * h.m
    reduced: list[Fraction] = list(costs)
    bdual: list[Fraction] = [Fraction(0)] * h.m
    gammas: dict[Partition, Fraction] = {}
    tight: list[int] = []
    tight_set: set[int] = set()
    current = Partition.singletons(h.n)
    merges: list[MergeDescriptor] = []

    rounds = 0
    while True:
        rounds += 1
        assert rounds <= h.m + 1, "admitted more edges than exist"
        crossing = h.cross_edges(None, current)
        candidates = [e for e in sorted(crossing) if e not in tight_set]
        if not candidates:
            # even at full bounds the crossing edges cannot meet the
            # requirement: the current partition certifies infeasibility
            assert _partition_value(h, tight, ub, k, current) < 0
            dual = dual_state(gammas, bdual, reduced, tight, current)
            return ReinforcementResult(status="infeasible", x=None, cost=None,
                                       dual=dual, merges=tuple(merges))
        step = min(reduced[e] for e in candidates)
        assert step >= 0, "reduced cost went negative"
        if step > 0:
            gammas[current] = gammas.get(current, Fraction(0)) + step
            for e in crossing:
                if e in tight_set:
                    bdual[e] += step
                    assert x[e] == ub[e], "crossing tight edge below its bound"
            for e in candidates:
                reduced[e] -= step
        trigger = min(e for e in candidates if reduced[e] == 0)
        tight.append(trigger)
        tight_set.add(trigger)

        value, optimum = _subproblem(h, tight, ub, k, current)
        assert value <= 0
        if value == 0:
            # any zero-value optimum works; the one-block partition is one,
            # and ending on it gives the terminal identity x(E) = k (|V| - 1)
            optimum = Partition.whole(h.n)
        assert _partition_value(h, tight, ub, k, optimum) == value, \
            "lifted optimum does not attain the subproblem value"
        desc = canonicalize_merge(h, current, optimum, trigger, x, k, ub)
        if desc is None:
            assert _partition_value(h, tight, ub, k, current) == value, \
                "canonical identity step lost optimality"
            x[trigger] = ub[trigger]
        else:
            x[trigger] = desc.value
            merges.append(desc)
            merged_partition = Partition(h.n, tuple(
                [tuple(sorted(desc.merged))]
                + [b for i, b in enumerate(current.blocks) if i not in desc.block_indices]
            ))
            assert _partition_value(h, tight, ub, k, merged_partition) == value, \
                "canonical merge step lost optimality"
            inside = h.induced_edges(None, desc.merged)
            assert sum((x[e] for e in inside), Fraction(0)) == k * (len(desc.merged) - 1), \
                "merged block misses its exact requirement"
            current = merged_partition
        if value == 0:
            break
        # loop invariants: dual feasibility, and partially used edges
        # buried inside blocks so later raises never touch them
        assert all(r >= 0 for r in reduced) and all(b >= 0 for b in bdual)
        for e in range(h.m):
            if 0 < x[e] < ub[e]:
                img = {current.block_index(v) for v in h.edges[e].vertices}
                assert len(img) == 1, "partially used edge crosses the partition"

    total = sum(x, Fraction(0))
    assert total == k * (h.n - 1), "terminal multiplicity total off"
    cost = sum((costs[e] * x[e] for e in range(h.m)), Fraction(0))
    dual_obj = sum((g * k * (len(p.blocks) - 1) for p, g in gammas.items()), Fraction(0))
    dual_obj -= sum((ub[e] * bdual[e] for e in range(h.m)), Fraction(0))
    assert cost == dual_obj, "primal and dual objectives differ"
    # complementary slackness, exactly
    for p, g in gammas.items():
        if g > 0:
            got = sum((x[e] for e in h.cross_edges(None, p)), Fraction(0))
            assert got == k * (len(p.blocks) - 1), "raised partition not tight in x"
    for e in range(h.m):
        if bdual[e] > 0:
            assert x[e] == ub[e], "bound dual positive on an unsaturated edge"
        if x[e] > 0:
            assert reduced[e] == 0, "used edge with positive reduced cost"
        assert 0 <= x[e] <= ub[e]
    if tree_count >= 0 and (bounds is None or bounds.is_integral()):
        assert all(v.denominator == 1 for v in x), "integral data, fractional optimum"
    dual = dual_state(gammas, bdual, reduced, tight, current)
    return ReinforcementResult(status="optimal", x=EdgeVector(x), cost=cost,
                               dual=dual, merges=tuple(merges))
