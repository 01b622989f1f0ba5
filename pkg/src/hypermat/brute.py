"""Exhaustive reference implementations used to verify the cut-based algorithms.

Everything here enumerates: partitions of the vertex set, subsets of the
vertices, subsets of the edges, or integer multiplicity vectors.  These
share nothing with the main algorithms beyond the core hypergraph types,
so agreement between the two routes is meaningful evidence.

Size guards raise rather than grind: partition enumeration is capped at
n <= 12 (n <= 7 where a full minimization runs per partition), vertex
subset enumeration at n <= 12, edge subset enumeration at m <= 12, and
multiplicity enumeration at one million combinations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .core import EdgeVector, Hypergraph, Partition


def _iter_block_labels(n: int) -> Iterator[list[int]]:
    # restricted growth strings: labels[v] <= 1 + max(labels[:v])
    labels = [0] * n
    maxes = [0] * n
    while True:
        yield labels
        v = n - 1
        while v > 0 and labels[v] == maxes[v - 1] + 1:
            v -= 1
        if v == 0:
            return
        labels[v] += 1
        maxes[v] = max(maxes[v - 1], labels[v])
        for w in range(v + 1, n):
            labels[w] = 0
            maxes[w] = maxes[v]


def enum_partitions(n: int) -> Iterator[Partition]:
    """Every partition of {0..n-1}, exactly once, as Partition objects."""
    if n > 12:
        raise ValueError("partition enumeration is capped at n <= 12")
    if n == 0:
        yield Partition(0, ())
        return
    for labels in _iter_block_labels(n):
        blocks: list[list[int]] = [[] for _ in range(max(labels) + 1)]
        for v, b in enumerate(labels):
            blocks[b].append(v)
        yield Partition(n, tuple(tuple(b) for b in blocks))


def _masks(h: Hypergraph) -> list[int]:
    out = []
    for e in h.edges:
        bits = 0
        for v in e.vertices:
            bits |= 1 << v
        out.append(bits)
    return out


def _ids(h: Hypergraph, edge_ids: Iterable[int] | None) -> list[int]:
    return h._edge_id_list(edge_ids)


def brute_hyperforest(h: Hypergraph, edge_ids: Iterable[int] | None = None) -> bool:
    """Definition check: every nonempty vertex set X has at most |X| - 1
    selected edges inside it."""
    if h.n > 20:
        raise ValueError("vertex subset enumeration is capped at n <= 20")
    ids = _ids(h, edge_ids)
    masks = _masks(h)
    chosen = [masks[e] for e in ids]
    for sub in range(1, 1 << h.n):
        size = bin(sub).count("1")
        inside = sum(1 for em in chosen if em & ~sub == 0)
        if inside > size - 1:
            return False
    return True


def _crossing_value(labels: Sequence[int], masks_verts: Sequence[Sequence[int]],
                    weights: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for verts, w in zip(masks_verts, weights):
        first = labels[verts[0]]
        for v in verts[1:]:
            if labels[v] != first:
                total += w
                break
    return total


def brute_min_partition(h: Hypergraph, weights: EdgeVector, threshold: Fraction,
                        edge_ids: Iterable[int] | None = None) -> tuple[Fraction, Partition]:
    """Minimize weights(crossing edges) - threshold * (|P| - 1) by enumeration."""
    if h.n > 7:
        raise ValueError("full partition minimization is capped at n <= 7")
    ids = _ids(h, edge_ids)
    verts = [h.edges[e].vertices for e in ids]
    ws = [weights[e] for e in ids]
    best: tuple[Fraction, Partition] | None = None
    if h.n == 0:
        raise ValueError("no vertices")
    for labels in _iter_block_labels(h.n):
        p = max(labels) + 1
        val = _crossing_value(labels, verts, ws) - threshold * (p - 1)
        if best is None or val < best[0]:
            blocks: list[list[int]] = [[] for _ in range(p)]
            for v, b in enumerate(labels):
                blocks[b].append(v)
            best = (val, Partition(h.n, tuple(tuple(b) for b in blocks)))
    return best


def brute_rank(h: Hypergraph, edge_ids: Iterable[int] | None = None) -> int:
    """Rank from the partition formula: min over P of n - |P| + |crossing|."""
    if h.n > 7:
        raise ValueError("full partition minimization is capped at n <= 7")
    ids = _ids(h, edge_ids)
    verts = [h.edges[e].vertices for e in ids]
    best: int | None = None
    for labels in _iter_block_labels(h.n):
        p = max(labels) + 1
        crossing = 0
        for vs in verts:
            first = labels[vs[0]]
            if any(labels[v] != first for v in vs[1:]):
                crossing += 1
        val = h.n - p + crossing
        if best is None or val < best:
            best = val
    assert best is not None
    return best


def brute_strength(h: Hypergraph, capacities: EdgeVector | None = None) -> tuple[Fraction, Partition]:
    """Minimize capacity(crossing) / (|P| - 1) over partitions with >= 2 blocks."""
    if h.n > 7:
        raise ValueError("partition enumeration is capped at n <= 7")
    if h.n < 2:
        raise ValueError("strength needs at least two vertices")
    c = capacities if capacities is not None else EdgeVector.ones(h.m)
    verts = [e.vertices for e in h.edges]
    ws = list(c)
    best: tuple[Fraction, Partition] | None = None
    for labels in _iter_block_labels(h.n):
        p = max(labels) + 1
        if p < 2:
            continue
        ratio = _crossing_value(labels, verts, ws) / (p - 1)
        if best is None or ratio < best[0]:
            blocks: list[list[int]] = [[] for _ in range(p)]
            for v, b in enumerate(labels):
                blocks[b].append(v)
            best = (ratio, Partition(h.n, tuple(tuple(b) for b in blocks)))
    assert best is not None
    return best


def brute_arboricity(h: Hypergraph) -> tuple[Fraction, frozenset[int]]:
    """Maximize |E[X]| / (|X| - 1) over vertex sets with >= 2 vertices."""
    if h.n > 12:
        raise ValueError("vertex subset enumeration is capped at n <= 12")
    if h.n < 2:
        raise ValueError("arboricity needs at least two vertices")
    masks = _masks(h)
    best: tuple[Fraction, frozenset[int]] | None = None
    for sub in range(1, 1 << h.n):
        size = bin(sub).count("1")
        if size < 2:
            continue
        inside = sum(1 for em in masks if em & ~sub == 0)
        ratio = Fraction(inside, size - 1)
        if best is None or ratio > best[0]:
            best = (ratio, frozenset(v for v in range(h.n) if sub >> v & 1))
    assert best is not None
    return best


def _independent_subset_scan(h: Hypergraph) -> dict[int, int]:
    """All independent edge subsets as {edge-bitmask: size} via depth-first search.

    Candidate extensions are checked against the definition directly; a
    per-vertex-subset count of contained edges is maintained incrementally.
    """
    if h.m > 12:
        raise ValueError("edge subset enumeration is capped at m <= 12")
    if h.n > 16:
        raise ValueError("vertex subset enumeration is capped at n <= 16")
    masks = _masks(h)
    full = 1 << h.n
    sizes = [bin(x).count("1") for x in range(full)]
    counts = [0] * full
    out: dict[int, int] = {0: 0}

    def extend(next_edge: int, chosen_mask: int, chosen_size: int) -> None:
        for e in range(next_edge, h.m):
            em = masks[e]
            ok = True
            for sub in range(full):
                if em & ~sub == 0 and counts[sub] + 1 > sizes[sub] - 1:
                    ok = False
                    break
            if not ok:
                continue
            for sub in range(full):
                if em & ~sub == 0:
                    counts[sub] += 1
            out[chosen_mask | (1 << e)] = chosen_size + 1
            extend(e + 1, chosen_mask | (1 << e), chosen_size + 1)
            for sub in range(full):
                if em & ~sub == 0:
                    counts[sub] -= 1

    extend(0, 0, 0)
    return out


def brute_max_weight_hyperforest(h: Hypergraph, weights: EdgeVector) -> Fraction:
    """Maximum total weight of an independent edge set, by enumeration."""
    weights.require_length(h.m, "weights")
    weights.require_nonnegative("weights")
    best = Fraction(0)
    for emask in _independent_subset_scan(h):
        w = sum((weights[e] for e in range(h.m) if emask >> e & 1), Fraction(0))
        if w > best:
            best = w
    return best


def brute_separate(h: Hypergraph, x: EdgeVector) -> bool:
    """Membership in the hyperforest polytope by checking x >= 0 and
    x(S) <= rank(S) for every edge subset S."""
    x.require_length(h.m, "point")
    if any(v < 0 for v in x):
        return False
    indep = _independent_subset_scan(h)
    # rank of every subset: max size of an independent subset inside it
    rank_of = [0] * (1 << h.m)
    for emask, size in indep.items():
        if size > rank_of[emask]:
            rank_of[emask] = size
    for s in range(1 << h.m):
        for e in range(h.m):
            if s >> e & 1:
                sub = s & ~(1 << e)
                if rank_of[sub] > rank_of[s]:
                    rank_of[s] = rank_of[sub]
        # incremental subset sums of x are cheaper, but clarity wins at m <= 12
    xsum = [Fraction(0)] * (1 << h.m)
    for s in range(1, 1 << h.m):
        low = s & -s
        xsum[s] = xsum[s ^ low] + x[low.bit_length() - 1]
        if xsum[s] > rank_of[s]:
            return False
    return True


def brute_reinforce(
    h: Hypergraph, tree_count: int, costs: EdgeVector, bounds: EdgeVector
) -> tuple[str, Fraction | None, tuple[int, ...] | None]:
    """Cheapest integer multiplicities x, 0 <= x <= bounds, meeting every
    partition inequality x(crossing P) >= tree_count * (|P| - 1)."""
    if h.n > 7:
        raise ValueError("partition enumeration is capped at n <= 7")
    costs.require_length(h.m, "costs")
    bounds.require_length(h.m, "bounds")
    if not bounds.is_integral():
        raise ValueError("brute reinforcement needs integer bounds")
    combos = 1
    ranges = []
    for e in range(h.m):
        ub = int(bounds[e])
        if ub < 0:
            raise ValueError("negative bound")
        combos *= ub + 1
        if combos > 10**6:
            raise ValueError("multiplicity enumeration is capped at 1e6 combinations")
        ranges.append(range(ub + 1))
    needed = [
        (tree_count * (len(p.blocks) - 1), tuple(h.cross_edges(None, p)))
        for p in enum_partitions(h.n)
        if len(p.blocks) >= 2
    ]
    best: tuple[Fraction, tuple[int, ...]] | None = None
    for combo in itertools.product(*ranges):
        ok = True
        for need, cross in needed:
            if sum(combo[e] for e in cross) < need:
                ok = False
                break
        if not ok:
            continue
        cost = sum((costs[e] * combo[e] for e in range(h.m)), Fraction(0))
        if best is None or cost < best[0]:
            best = (cost, combo)
    if best is None:
        return ("infeasible", None, None)
    return ("optimal", best[0], best[1])
