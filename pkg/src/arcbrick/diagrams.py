"""Ordered arc diagrams: clockwise order, noncrossing sets, graphs and search."""

from __future__ import annotations

import graphlib
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from . import kernels
from .arcs import (
    Arc,
    ArcError,
    crossing_report,
    enumerate_arcs,
    is_eps_admissible,
    is_weak_pair_arcs,
    make_arc,
    make_eps,
)


@dataclass(frozen=True)
class ArcDiagram:
    """Arcs listed latest first, ``(g_k, ..., g_1)``."""

    arcs: Tuple[Arc, ...]
    n: int

    def __post_init__(self):
        if any(g.n != self.n for g in self.arcs):
            raise ArcError("all arcs of a diagram must share the ambient n")

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __getitem__(self, i):
        return self.arcs[i]

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.arcs) + ")"


def diagram(arcs: Iterable[Arc], n: int | None = None) -> ArcDiagram:
    arcs = tuple(arcs)
    if n is None:
        if not arcs:
            raise ArcError("an empty diagram needs an explicit n")
        n = arcs[0].n
    return ArcDiagram(arcs, n)


def is_clockwise_ordered(d: ArcDiagram | Sequence[Arc]) -> bool:
    arcs = list(d)
    return all(is_weak_pair_arcs(arcs[p], arcs[q]) for p in range(len(arcs)) for q in range(p + 1, len(arcs)))


def is_noncrossing(arcs: Iterable[Arc]) -> bool:
    """No two distinct arcs have a Hom-crossing (contested endpoints are fine)."""
    arcs = list(arcs)
    if len(set(arcs)) != len(arcs):
        return False
    for a, b in itertools.combinations(arcs, 2):
        r = crossing_report(a, b)
        if r.hom_1to2 or r.hom_2to1:
            return False
    return True


# ----------------------------------------------------------------------------
# underlying graph


@dataclass(frozen=True)
class GraphReport:
    simple: bool
    bipartite: bool
    edge_count: int
    planar_bound_ok: bool
    k33_free: bool

    @property
    def ok(self) -> bool:
        return self.simple and self.bipartite and self.planar_bound_ok and self.k33_free


def _two_colour(nodes, adj) -> bool:
    colour = {}
    for start in nodes:
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def contains_k33(edges: Iterable[Tuple[int, int]]) -> bool:
    """Brute-force search for a K_{3,3} subgraph."""
    adj: dict = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    heavy = sorted(v for v, nb in adj.items() if len(nb) >= 3)
    for side in itertools.combinations(heavy, 3):
        common = set.intersection(*(adj[v] for v in side)) - set(side)
        if len(common) >= 3:
            return True
    return False


def diagram_graph_check(d: ArcDiagram | Sequence[Arc]) -> GraphReport:
    arcs = list(d)
    pairs = [(g.left, g.right) for g in arcs]
    counts = Counter(pairs)
    simple = all(c == 1 for c in counts.values())
    edges = sorted(set(pairs))
    nodes = sorted({v for e in edges for v in e})
    adj = {v: set() for v in nodes}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    bipartite = _two_colour(nodes, adj)
    m = len(pairs)
    bound_ok = m <= 1 if len(nodes) < 3 else m <= 2 * len(nodes) - 4
    if arcs:
        bound_ok = bound_ok and m <= max(1, 2 * arcs[0].n - 2)
    return GraphReport(simple, bipartite, m, bound_ok, not contains_k33(edges))


# ----------------------------------------------------------------------------
# construction and search


def max_weak_example(n: int) -> ArcDiagram:
    """A clockwise-ordered diagram of length ``2n-2`` whose graph is K_{n-1,2}.

    Arc ``t`` for ``1 <= t <= n-1`` runs from ``n-t-1`` to ``n`` over every
    interior node; arc ``t`` for ``n <= t <= 2n-2`` runs from ``t-n`` to
    ``n-1`` under every interior node.
    """
    if n < 2:
        raise ArcError("max_weak_example needs n >= 2")
    arcs = {}
    for t in range(1, n):
        arcs[t] = make_arc(n - t - 1, "o" * t, n)
    for t in range(n, 2 * n - 1):
        arcs[t] = make_arc(t - n, "u" * (2 * n - 2 - t), n)
    return ArcDiagram(tuple(arcs[t] for t in range(2 * n - 2, 0, -1)), n)


def order_weakly(arcs: Sequence[Arc]) -> ArcDiagram | None:
    """Arrange a set of arcs into a clockwise-ordered diagram, if possible."""
    arcs = sorted(set(arcs), key=Arc.sort_key)
    if not arcs:
        return None
    n = arcs[0].n
    ts = graphlib.TopologicalSorter()
    for b in arcs:
        ts.add(b)
    for a, b in itertools.permutations(arcs, 2):
        ab, ba = is_weak_pair_arcs(a, b), is_weak_pair_arcs(b, a)
        if not (ab or ba):
            return None
        if ab and not ba:
            ts.add(b, a)  # a must come before (be later than) b
    try:
        order = tuple(ts.static_order())
    except graphlib.CycleError:
        return None
    return ArcDiagram(order, n)


def longest_weak_length(n: int, use_bound: bool = True, use_jit: bool | None = None) -> Tuple[int, ArcDiagram]:
    """Maximum length of a clockwise-ordered diagram on ``n+1`` nodes, with a witness.

    With ``use_bound`` the search stops once it reaches ``max(1, 2n-2)``;
    without it the search is exhaustive and assumes nothing.
    """
    arcs = enumerate_arcs(n)
    allowed = kernels.weak_allowed(arcs, use_jit)
    bound = max(1, 2 * n - 2) if use_bound else None
    best = kernels.longest_compatible(allowed, bound, use_jit)
    witness = order_weakly([arcs[i] for i in best])
    if witness is None:  # pragma: no cover - kernel guarantees realizability
        raise RuntimeError("search returned an unrealizable set")
    return len(witness), witness


def iter_weak(n: int, k: int | None = None) -> Iterator[ArcDiagram]:
    """Clockwise-ordered diagrams of length ``k`` (all lengths if None), DFS order."""
    arcs = enumerate_arcs(n)
    allowed = kernels.weak_allowed(arcs)
    m = len(arcs)
    seq: List[int] = []

    def rec():
        if k is None or len(seq) == k:
            yield ArcDiagram(tuple(arcs[i] for i in seq), n)
            if k is not None:
                return
        for c in range(m):
            if all(allowed[s, c] for s in seq):
                seq.append(c)
                yield from rec()
                seq.pop()

    yield from rec()


def non_extendable_lengths(n: int) -> List[int]:
    """Lengths of clockwise-ordered diagrams that admit no insertion of a further arc."""
    arcs = enumerate_arcs(n)
    allowed = kernels.weak_allowed(arcs)
    idx = {g: i for i, g in enumerate(arcs)}
    out = set()
    for d in iter_weak(n):
        seq = [idx[g] for g in d]
        if not seq:
            continue
        extendable = any(
            all(allowed[s, c] for s in seq[:p]) and all(allowed[c, s] for s in seq[p:])
            for c in range(len(arcs)) if c not in seq
            for p in range(len(seq) + 1)
        )
        if not extendable:
            out.add(len(seq))
    return sorted(out)


def enumerate_weak(n: int, k: int) -> List[ArcDiagram]:
    return list(iter_weak(n, k))


def iter_weak_sets(n: int) -> Iterator[Tuple[Arc, ...]]:
    """Arc sets (canonical order) that admit at least one clockwise ordering."""
    arcs = enumerate_arcs(n)
    allowed = kernels.weak_allowed(arcs)
    compat = allowed | allowed.T
    forced = allowed & ~allowed.T
    members = np.zeros(len(arcs) + 1, dtype=np.int64)

    def rec(count, start):
        yield tuple(arcs[i] for i in members[:count])
        for v in range(start, len(arcs)):
            if all(compat[members[t], v] for t in range(count)) and kernels._acyclic_with(members, count, v, forced):
                members[count] = v
                yield from rec(count + 1, v + 1)

    yield from rec(0, 0)


def enumerate_noncrossing(n: int) -> List[Tuple[Arc, ...]]:
    """All noncrossing arc diagrams, each as a canonically ordered tuple (empty included)."""
    arcs = enumerate_arcs(n)
    hom, _ = kernels.pair_counts(arcs)
    free = (hom == 0) & (hom.T == 0)
    out: List[Tuple[Arc, ...]] = []
    chosen: List[int] = []

    def rec(start):
        out.append(tuple(arcs[i] for i in chosen))
        for v in range(start, len(arcs)):
            if all(free[c, v] for c in chosen):
                chosen.append(v)
                rec(v + 1)
                chosen.pop()

    rec(0)
    return out


# ----------------------------------------------------------------------------
# strand diagrams for hereditary orientations


def is_strand_diagram(d: ArcDiagram | Sequence[Arc], eps: str) -> bool:
    """Labeled strand diagram condition for the orientation ``eps``.

    For ``later`` before ``earlier`` in the list: no nontrivial crossing, a
    shared endpoint must be directed from ``later`` to ``earlier``, and a
    contested endpoint ``x`` must be the right end of ``earlier`` when
    ``eps(x) = o`` and the right end of ``later`` when ``eps(x) = u``.
    """
    arcs = list(d)
    if not arcs:
        return True
    eps = make_eps(eps, arcs[0].n)
    if len(set(arcs)) != len(arcs):
        return False
    if not all(is_eps_admissible(g, eps) for g in arcs):
        return False
    for p in range(len(arcs)):
        for q in range(p + 1, len(arcs)):
            later, earlier = arcs[p], arcs[q]
            r = crossing_report(later, earlier)
            if r.nontrivial:
                return False
            if r.shared and r.shared_directed_2to1:
                return False
            if r.contested:
                x = later.left if later.left == earlier.right else earlier.left
                want = earlier.right if eps[x - 1] == "o" else later.right
                if x != want:
                    return False
    return True
