"""Exact minimum s-t cut on directed networks with rational or infinite capacities.

The solver runs Dinic's blocking-flow method on integers after clearing
denominators, so every comparison is exact.  Infinite capacities stay
symbolic: an infinite residual admits flow but never shrinks, and when
every s-t cut would have to cross an infinite arc the solver raises
NoFiniteCutError instead of inventing a large finite stand-in.

The reported source side is the set of nodes reachable in the final
residual network, which is the unique inclusion-minimal minimum cut;
callers rely on that for deterministic tie-breaking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .core import as_fraction


class _Infinity:
    """Symbolic infinite capacity: compares above every rational, saturates."""

    __slots__ = ()
    _instance = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("hypermat.INF")

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True

    def __add__(self, other: object) -> "_Infinity":
        return self

    __radd__ = __add__

    def __bool__(self) -> bool:
        return True


INF = _Infinity()

Cap = Union[Fraction, _Infinity]


def _check_cap(cap: object) -> Cap:
    if cap is INF:
        return INF
    f = as_fraction(cap)  # type: ignore[arg-type]
    if f < 0:
        raise ValueError(f"negative capacity {f}")
    return f


@dataclass(frozen=True)
class FlowNetwork:
    """A directed network with a distinguished source and sink.

    Arcs are (tail, head, capacity) triples; capacities are nonnegative
    rationals or INF.  Parallel arcs and self-loops are permitted (a
    self-loop never carries useful flow).
    """

    node_count: int
    arcs: tuple[tuple[int, int, Cap], ...]
    source: int
    sink: int

    def __post_init__(self) -> None:
        if not (0 <= self.source < self.node_count and 0 <= self.sink < self.node_count):
            raise ValueError("source or sink out of range")
        if self.source == self.sink:
            raise ValueError("source equals sink")
        checked = []
        for tail, head, cap in self.arcs:
            if not (0 <= tail < self.node_count and 0 <= head < self.node_count):
                raise ValueError(f"arc ({tail}, {head}) out of range")
            checked.append((tail, head, _check_cap(cap)))
        object.__setattr__(self, "arcs", tuple(checked))


@dataclass(frozen=True)
class CutResult:
    """A minimum s-t cut: the inclusion-minimal source side and its capacity."""

    source_side: frozenset[int]
    capacity: Fraction


class NoFiniteCutError(RuntimeError):
    """Every s-t cut crosses an arc of infinite capacity."""

    def __init__(self, message: str = "every s-t cut crosses an infinite arc",
                 index: int | None = None) -> None:
        super().__init__(message)
        self.index = index


class _Solver:
    """Dinic solver over a fixed arc structure with revisable capacities.

    Residual slots 2*i and 2*i+1 belong to input arc i.  A residual value
    of -1 marks a symbolically infinite arc; it admits flow but is never
    decremented.  solve() rebuilds residuals from the current capacities,
    so each call is an independent exact solve.
    """

    def __init__(self, node_count: int, arcs: Sequence[tuple[int, int, Cap]],
                 source: int, sink: int) -> None:
        self.n = node_count
        self.s = source
        self.t = sink
        self.tails = [a[0] for a in arcs]
        self.heads = [a[1] for a in arcs]
        self.caps: list[Cap] = [_check_cap(a[2]) for a in arcs]
        m = len(arcs)
        self.to = [0] * (2 * m)
        adj: list[list[int]] = [[] for _ in range(node_count)]
        for i in range(m):
            self.to[2 * i] = self.heads[i]
            self.to[2 * i + 1] = self.tails[i]
            adj[self.tails[i]].append(2 * i)
            adj[self.heads[i]].append(2 * i + 1)
        self.first = [0] * (node_count + 1)
        flat: list[int] = []
        for v in range(node_count):
            flat.extend(adj[v])
            self.first[v + 1] = len(flat)
        self.adj = flat

    def set_capacity(self, arc_index: int, cap: object) -> None:
        self.caps[arc_index] = _check_cap(cap)

    def _infinite_reach(self) -> bytearray:
        seen = bytearray(self.n)
        seen[self.s] = 1
        stack = [self.s]
        caps, first, adj, to = self.caps, self.first, self.adj, self.to
        while stack:
            v = stack.pop()
            for idx in range(first[v], first[v + 1]):
                a = adj[idx]
                if a & 1:
                    continue  # only forward slots carry input capacity
                if caps[a >> 1] is INF:
                    w = to[a]
                    if not seen[w]:
                        seen[w] = 1
                        stack.append(w)
        return seen

    def solve(self) -> CutResult:
        n, s, t = self.n, self.s, self.t
        caps = self.caps
        if self._infinite_reach()[t]:
            raise NoFiniteCutError()

        scale = 1
        for c in caps:
            if c is not INF:
                d = c.denominator
                if d != 1:
                    scale = scale * d // math.gcd(scale, d)
        res = [0] * (2 * len(caps))
        for i, c in enumerate(caps):
            res[2 * i] = -1 if c is INF else c.numerator * (scale // c.denominator)

        to, first, adj = self.to, self.first, self.adj
        flow = 0
        while True:
            level = [-1] * n
            level[s] = 0
            queue = [s]
            qi = 0
            while qi < len(queue):
                v = queue[qi]
                qi += 1
                lv = level[v] + 1
                for idx in range(first[v], first[v + 1]):
                    a = adj[idx]
                    if res[a] != 0:
                        w = to[a]
                        if level[w] < 0:
                            level[w] = lv
                            queue.append(w)
            if level[t] < 0:
                break
            it = self.first[:n]
            path: list[int] = []
            v = s
            while True:
                if v == t:
                    bottleneck = -1
                    for a in path:
                        r = res[a]
                        if r != -1 and (bottleneck == -1 or r < bottleneck):
                            bottleneck = r
                    assert bottleneck > 0, "augmenting path with no finite arc"
                    for a in path:
                        if res[a] != -1:
                            res[a] -= bottleneck
                        b = a ^ 1
                        if res[b] != -1:
                            res[b] += bottleneck
                    flow += bottleneck
                    path = []
                    v = s
                    continue
                advanced = False
                while it[v] < first[v + 1]:
                    a = adj[it[v]]
                    if res[a] != 0 and level[to[a]] == level[v] + 1:
                        path.append(a)
                        v = to[a]
                        advanced = True
                        break
                    it[v] += 1
                if not advanced:
                    if v == s:
                        break
                    level[v] = -1  # dead end for the rest of this phase
                    a = path.pop()
                    v = to[a ^ 1]
                    it[v] += 1

        reach = bytearray(n)
        reach[s] = 1
        stack = [s]
        while stack:
            v = stack.pop()
            for idx in range(first[v], first[v + 1]):
                a = adj[idx]
                if res[a] != 0:
                    w = to[a]
                    if not reach[w]:
                        reach[w] = 1
                        stack.append(w)
        assert not reach[t], "sink still reachable after max flow"

        capacity = Fraction(0)
        tails, heads = self.tails, self.heads
        for i, c in enumerate(caps):
            if reach[tails[i]] and not reach[heads[i]]:
                assert c is not INF, "minimum cut crosses an infinite arc"
                capacity += c
        assert capacity == Fraction(flow, scale), "max-flow / min-cut mismatch"
        return CutResult(frozenset(v for v in range(n) if reach[v]), capacity)


def min_st_cut(network: FlowNetwork) -> CutResult:
    """Minimum s-t cut with the inclusion-minimal source side.

    Raises NoFiniteCutError when no finite-capacity cut separates the
    source from the sink.
    """
    return _Solver(network.node_count, network.arcs, network.source, network.sink).solve()


def min_st_cut_sequence(
    network: FlowNetwork,
    updates: Iterable[Iterable[tuple[int, object]]],
) -> list[CutResult | NoFiniteCutError]:
    """Solve the template network, then re-solve after each revision batch.

    Each update is a batch of (arc_index, new_capacity) revisions; the
    revisions are cumulative, and every revised arc must be incident to
    the source or the sink.  The result list holds one entry for the
    template followed by one per batch; a network state admitting no
    finite cut contributes the NoFiniteCutError (tagged with its element
    index) in place of a CutResult rather than aborting the sequence.
    """
    solver = _Solver(network.node_count, network.arcs, network.source, network.sink)
    results: list[CutResult | NoFiniteCutError] = []

    def run(index: int) -> None:
        try:
            results.append(solver.solve())
        except NoFiniteCutError as exc:
            exc.index = index
            results.append(exc)

    run(0)
    for j, batch in enumerate(updates, start=1):
        for arc_index, cap in batch:
            if not 0 <= arc_index < len(network.arcs):
                raise ValueError(f"arc index {arc_index} out of range")
            tail, head, _ = network.arcs[arc_index]
            if tail not in (network.source, network.sink) and head not in (network.source, network.sink):
                raise ValueError(f"arc {arc_index} is not incident to the source or sink")
            solver.set_capacity(arc_index, cap)
        run(j)
    return results
