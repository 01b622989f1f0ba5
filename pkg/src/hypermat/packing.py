"""Strength and arboricity by exact Newton iteration.

Strength is the packing value: the minimum over partitions P with at
least two blocks of capacity(crossing P) / (|P| - 1).  Its floor is the
number of disjoint hypertrees that can be packed.  Arboricity is the
covering value: the maximum over vertex sets X with at least two
vertices of |E[X]| / (|X| - 1), whose ceiling is the number of
hyperforests needed to cover every edge.

Both iterations evaluate their subproblem at the current candidate ratio
and re-anchor on the optimizer until the subproblem value hits zero
exactly; each runs at most |V| rounds.  All arithmetic is rational, so
termination tests are exact equalities, not tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import EdgeVector, Hypergraph, LoopPresentError, Partition
from .gadgets import build_arboricity_gadget, interpret_gadget_cut
from .mincut import min_st_cut
from .partition_oracle import min_partition


@dataclass(frozen=True)
class StrengthResult:
    """Packing value with the partition attaining it.

    sigma = capacities(crossing critical) / (|critical| - 1), and
    integer_packing = floor(sigma) disjoint hypertrees exist.
    """

    sigma: Fraction
    critical_partition: Partition
    integer_packing: int
    iterations: int


@dataclass(frozen=True)
class ArboricityResult:
    """Covering value with a densest vertex set as witness.

    rho = |E[witness]| / (|witness| - 1) when edges exist, and k =
    ceil(rho) hyperforests cover the edge set.
    """

    rho: Fraction
    k: int
    witness: frozenset[int]
    iterations: int


def strength(h: Hypergraph, capacities: EdgeVector | None = None) -> StrengthResult:
    """Exact strength under nonnegative rational edge capacities (default 1).

    Newton iteration from the all-singletons partition: each round asks
    the partition oracle for the most violated inequality at the current
    ratio; a zero optimum certifies the ratio, otherwise the optimizer
    becomes the new anchor and the ratio strictly drops.
    """
    if h.n < 2:
        raise ValueError("strength needs at least two vertices")
    c = capacities if capacities is not None else EdgeVector.ones(h.m)
    c.require_length(h.m, "capacities")
    c.require_nonnegative("capacities")
    anchor = Partition.singletons(h.n)
    ratio = c.sum_over(h.cross_edges(None, anchor)) / (h.n - 1)
    if ratio == 0:
        # nothing crosses the finest partition: the hypergraph is disconnected
        # (or edgeless) under the positive capacities, and no tree packs
        return StrengthResult(sigma=Fraction(0), critical_partition=anchor,
                              integer_packing=0, iterations=0)
    iterations = 0
    while True:
        iterations += 1
        assert iterations <= h.n, "Newton iteration exceeded |V| rounds"
        res = min_partition(h, c, ratio)
        if res.value == 0:
            assert ratio == c.sum_over(h.cross_edges(None, anchor)) / (len(anchor.blocks) - 1)
            return StrengthResult(sigma=ratio, critical_partition=anchor,
                                  integer_packing=math.floor(ratio), iterations=iterations)
        cand = res.partition
        blocks = len(cand.blocks)
        assert blocks >= 2, "negative value at the one-block partition"
        new_ratio = c.sum_over(h.cross_edges(None, cand)) / (blocks - 1)
        assert new_ratio < ratio, "candidate ratio failed to decrease"
        if new_ratio == 0:
            # a multi-block partition with nothing crossing: disconnected,
            # zero is attained and no ratio can go lower
            return StrengthResult(sigma=Fraction(0), critical_partition=cand,
                                  integer_packing=0, iterations=iterations)
        anchor, ratio = cand, new_ratio


def arboricity(h: Hypergraph) -> ArboricityResult:
    """Exact arboricity; rejects singleton edges, returns k = 0 when edgeless.

    Newton iteration from X = V: each round minimizes
    density * |W| - |E[W]| by min cut.  One unforced cut decides the
    round whenever its inclusion-maximal minimizer is nonempty (that
    minimizer is then the exact densest improving set); otherwise a
    per-vertex sweep of forced cuts settles termination exactly.
    """
    for e in h.edges:
        if e.is_loop:
            raise LoopPresentError(f"edge {e.id} is a singleton")
    if h.m == 0:
        return ArboricityResult(rho=Fraction(0), k=0,
                                witness=frozenset(range(h.n)), iterations=0)
    if h.n < 2:
        raise ValueError("arboricity needs at least two vertices")
    witness = frozenset(range(h.n))
    density = Fraction(h.m, h.n - 1)
    iterations = 0
    while True:
        iterations += 1
        assert iterations <= h.n, "Newton iteration exceeded |V| rounds"
        g = build_arboricity_gadget(h, density, forced=None)
        info = interpret_gadget_cut(g, min_st_cut(g.network))
        cand = info.witness
        if cand:
            # min over all W (empty included) is <= 0 and this maximal
            # minimizer attains it, so it is the exact densest set
            value = density * len(cand) - len(info.edges_inside)
            assert value <= 0
        else:
            # every nonempty W scores positive; sweep to find the exact
            # minimum over nonempty sets
            best: tuple[Fraction, frozenset[int]] | None = None
            for forced in range(h.n):
                g = build_arboricity_gadget(h, density, forced=forced)
                info = interpret_gadget_cut(g, min_st_cut(g.network))
                val = density * len(info.witness) - len(info.edges_inside)
                if best is None or val < best[0]:
                    best = (val, info.witness)
            assert best is not None and best[0] > 0
            if best[0] == density:
                # only singletons attain the minimum: no set beats the
                # current anchor, whose ratio equals the density exactly
                k = math.ceil(density)
                assert density == Fraction(len(h.induced_edges(None, witness)),
                                           len(witness) - 1)
                return ArboricityResult(rho=density, k=k, witness=witness,
                                        iterations=iterations)
            value, cand = best
        size = len(cand)
        assert size >= 2, "improving set cannot be a singleton"
        inside = len(h.induced_edges(None, cand))
        new_density = Fraction(inside, size - 1)
        assert new_density > density, "density failed to increase"
        witness, density = cand, new_density
