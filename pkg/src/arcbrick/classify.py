"""Module-side weak exceptional sequences, semibricks, almost-rigid collections,
and the sweep that checks every arc formula against the linear-algebra oracle.

Sequences are listed latest first, ``(X_k, ..., X_1)``: for positions
``p < q`` the pair ``(seq[p], seq[q])`` must be a weak pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from .arcs import (
    GENTLE,
    PREPROJECTIVE,
    Arc,
    crossing_report,
    enumerate_arcs,
    ext_dim_arcs,
    hom_arcs,
    is_eps_admissible,
    is_quotient_arc,
    is_restriction,
    is_submodule_arc,
    is_tau_rigid_arc,
    is_weak_pair_arcs,
)
from .reps import (
    ADOPTED,
    AlgebraSpec,
    Representation,
    RepError,
    algebra,
    arc_from_brick,
    brick_from_arc,
    euler_form,
    ext1,
    hom_dim,
    is_brick,
    is_indecomposable,
    is_tau_rigid_oracle,
    relation_failures,
    socle_is_simple,
    thin_subquotients,
)
from .witness import ext_basis


class ClassifyError(ValueError):
    pass


# ----------------------------------------------------------------------------
# weak pairs and sequences


def _require_brick(M: Representation, A: AlgebraSpec) -> None:
    bad = relation_failures(M, A)
    if bad:
        raise RepError(f"not a representation over {A}: violates {bad}")
    if not is_brick(M, A):
        raise ClassifyError("expected a brick")


def _weak_pair_unchecked(second: Representation, first: Representation, A: AlgebraSpec) -> bool:
    return (
        hom_dim(first, second, A) == 0
        and ext1(first, second, A).dim == 0
        and ext1(first, first, A).dim == 0
        and ext1(second, second, A).dim == 0
    )


def is_weak_pair_modules(second: Representation, first: Representation, A: AlgebraSpec) -> bool:
    """``(second, first)`` is a weak exceptional sequence of length two.

    Needs Hom(first, second) = 0 and Ext^1(first, second) = 0 together with
    vanishing self-extensions.
    """
    _require_brick(second, A)
    _require_brick(first, A)
    return _weak_pair_unchecked(second, first, A)


def is_weak_sequence(seq: Sequence[Representation], A: AlgebraSpec) -> bool:
    for M in seq:
        _require_brick(M, A)
        if ext1(M, M, A).dim:
            return False
    return all(_weak_pair_unchecked(seq[p], seq[q], A) for p, q in itertools.combinations(range(len(seq)), 2))


def is_exceptional_sequence_hereditary(seq: Sequence[Representation], eps: str) -> bool:
    """Exceptional sequence over the path algebra of the orientation ``eps``."""
    from .reps import hereditary_algebra

    if not seq:
        return True
    A = hereditary_algebra(seq[0].n, eps)
    return is_weak_sequence(seq, A)


def weak_pair_matrix(arcs: Sequence[Arc], A: AlgebraSpec, convention: str = ADOPTED) -> np.ndarray:
    """Oracle matrix ``W[a, b]``: ``(arcs[a], arcs[b])`` is a weak pair of bricks over ``A``."""
    B = [brick_from_arc(g, convention) for g in arcs]
    m = len(arcs)
    self_ok = [ext1(M, M, A).dim == 0 and hom_dim(M, M, A) == 1 for M in B]
    W = np.zeros((m, m), dtype=bool)
    for a in range(m):
        for b in range(m):
            if a != b and self_ok[a] and self_ok[b]:
                W[a, b] = hom_dim(B[b], B[a], A) == 0 and ext1(B[b], B[a], A).dim == 0
    return W


# ----------------------------------------------------------------------------
# semibricks and almost rigid collections


def _cliques(m: int, ok: Callable[[int, int], bool]) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []
    chosen: List[int] = []

    def rec(start):
        out.append(tuple(chosen))
        for v in range(start, m):
            if all(ok(c, v) for c in chosen):
                chosen.append(v)
                rec(v + 1)
                chosen.pop()

    rec(0)
    return out


def semibricks(A: AlgebraSpec) -> List[Tuple[Arc, ...]]:
    """All semibricks over ``A`` (empty included), found with the Hom oracle alone.

    Members are reported by their arcs in canonical order.
    """
    arcs = [g for g in enumerate_arcs(A.n) if not relation_failures(brick_from_arc(g), A)]
    B = [brick_from_arc(g) for g in arcs]
    m = len(B)
    H = np.array([[hom_dim(B[a], B[b], A) for b in range(m)] for a in range(m)])
    return [tuple(arcs[i] for i in c) for c in _cliques(m, lambda a, b: H[a, b] == 0 and H[b, a] == 0)]


def _is_gentle(A: AlgebraSpec) -> bool:
    return A.mode == "preproj" and A.S == frozenset(range(2, A.n))


def maximal_almost_rigid(A: AlgebraSpec) -> List[Tuple[Arc, ...]]:
    """Inclusion-maximal arc collections without nontrivial crossings (gentle algebra only)."""
    if not _is_gentle(A):
        raise ClassifyError("maximal almost rigid collections are defined for S = [2, n-1]")
    arcs = enumerate_arcs(A.n)
    m = len(arcs)
    free = [[a == b or crossing_report(arcs[a], arcs[b]).nontrivial == 0 for b in range(m)] for a in range(m)]
    sets = _cliques(m, lambda a, b: free[a][b])
    maximal = []
    for c in sets:
        if not any(all(free[v][u] for u in c) for v in range(m) if v not in c):
            maximal.append(tuple(arcs[i] for i in c))
    return maximal


def almost_rigid_modules(collection: Sequence[Arc], A: AlgebraSpec) -> bool:
    """Module-side check: for distinct members, Ext^1 has dimension at most one in
    each direction and a nonzero class has an indecomposable middle term."""
    B = [brick_from_arc(g) for g in collection]
    for M in B:
        if ext1(M, M, A).dim:
            return False
    for M, N in itertools.permutations(B, 2):
        d = ext1(M, N, A).dim
        if d > 1:
            return False
        if d:
            ws = ext_basis(M, N, A)
            if len(ws) != 1 or not is_indecomposable(ws[0].E, A):
                return False
    return True


# ----------------------------------------------------------------------------
# sweep


@dataclass
class CheckStat:
    passed: int = 0
    failed: int = 0
    first_counterexample: dict | None = None

    def record(self, ok: bool, payload: Callable[[], dict]) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_counterexample is None:
                self.first_counterexample = payload()


@dataclass
class SweepReport:
    n: int
    algebras: List[str]
    convention: str
    checks: Dict[str, CheckStat] = field(default_factory=dict)

    def stat(self, name: str) -> CheckStat:
        return self.checks.setdefault(name, CheckStat())

    @property
    def mismatches(self) -> int:
        return sum(c.failed for c in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "algebras": self.algebras,
            "convention": self.convention,
            "ok": self.ok,
            "mismatches": self.mismatches,
            "checks": {
                k: {"passed": v.passed, "failed": v.failed, "first_counterexample": v.first_counterexample}
                for k, v in sorted(self.checks.items())
            },
        }


def quotient_pinning(g: Arc, M: Representation) -> List[Tuple[Arc, str, bool, bool]]:
    """For each proper restriction of ``g``: arc-side vs module-side quotient and submodule flags.

    Returns ``(inner, kind, arc_says, module_says)`` rows, one per kind.
    """
    lat = thin_subquotients(M)
    quots, subs = set(lat.quotients), set(lat.submodules)
    rows = []
    for h in enumerate_arcs(g.n):
        if not is_restriction(h, g):
            continue
        verts = frozenset(h.vertices)
        rows.append((h, "quotient", is_quotient_arc(h, g), verts in quots))
        rows.append((h, "submodule", is_submodule_arc(h, g), verts in subs))
    return rows


def sweep_verify(n: int, modes: Sequence[AlgebraSpec] | None = None, convention: str = ADOPTED) -> SweepReport:
    """Check every arc-side formula against the oracle for all bricks over each algebra.

    ``convention`` selects how arcs become modules; anything other than the
    adopted one is a mutation and is expected to produce mismatches.
    """
    if modes is None:
        modes = [algebra(n, S) for S in _subsets(n)]
    report = SweepReport(n, [A.label() for A in modes], convention)
    arcs = enumerate_arcs(n)
    B = [brick_from_arc(g, convention) for g in arcs]

    bij = report.stat("bijection")
    for g, M in zip(arcs, B):
        try:
            back = arc_from_brick(M)
        except RepError:
            back = None
        bij.record(back == g, lambda: {"arc": str(g), "back": str(back)})

    pin = report.stat("quotients")
    for g, M in zip(arcs, B):
        for h, kind, arc_says, mod_says in quotient_pinning(g, M):
            pin.record(arc_says == mod_says, lambda: {"outer": str(g), "inner": str(h), "kind": kind,
                                                      "arc": arc_says, "module": mod_says})

    for A in modes:
        tag = A.label()
        if A.mode != "preproj":
            raise ClassifyError("sweep_verify covers the preprojective family")
        gentle = _is_gentle(A)
        valid = [not relation_failures(M, A) for M in B]
        rel = report.stat("relations")
        for g, ok in zip(arcs, valid):
            rel.record(ok, lambda: {"algebra": tag, "arc": str(g)})
        if not all(valid):
            continue
        hom_s, ext_s, cb_s, wk_s = (report.stat(k) for k in ("hom", "ext", "crawley_boevey", "weak_pair"))
        H = {}
        for a, x in enumerate(arcs):
            for b, y in enumerate(arcs):
                h = hom_dim(B[a], B[b], A)
                H[a, b] = h
                want = len(hom_arcs(x, y))
                hom_s.record(h == want, lambda: {"algebra": tag, "src": str(x), "dst": str(y), "oracle": h, "arcs": want})
        E = {}
        for a, x in enumerate(arcs):
            for b, y in enumerate(arcs):
                e = ext1(B[a], B[b], A).dim
                E[a, b] = e
                pp, gg = ext_dim_arcs(x, y, PREPROJECTIVE), ext_dim_arcs(x, y, GENTLE)
                if not A.S:
                    ok = e == pp
                elif gentle:
                    ok = e == gg
                else:
                    ok = gg <= e <= pp
                ext_s.record(ok, lambda: {"algebra": tag, "x": str(x), "y": str(y), "oracle": e,
                                          "preprojective": pp, "gentle": gg})
                if not A.S:
                    lhs = H[a, b] + H[b, a] - e if (b, a) in H else None
                    cb_s.record(lhs == euler_form(B[a].dims, B[b].dims),
                                lambda: {"x": str(x), "y": str(y), "lhs": lhs})
        for a, x in enumerate(arcs):
            for b, y in enumerate(arcs):
                if a == b:
                    continue
                mod = H[b, a] == 0 and E[b, a] == 0 and E[a, a] == 0 and E[b, b] == 0 and H[a, a] == 1 and H[b, b] == 1
                arc = is_weak_pair_arcs(x, y)
                wk_s.record(mod == arc, lambda: {"algebra": tag, "second": str(x), "first": str(y),
                                                 "modules": mod, "arcs": arc})
        tau = report.stat("tau_rigid")
        for g, M in zip(arcs, B):
            oracle = is_tau_rigid_oracle(M, A)
            if not A.S:
                ok = oracle == is_tau_rigid_arc(g) == socle_is_simple(M)
            elif gentle:
                ok = oracle
            else:
                continue
            tau.record(ok, lambda: {"algebra": tag, "arc": str(g), "oracle": oracle})
    return report


def _subsets(n: int):
    inner = list(range(2, n))
    for r in range(len(inner) + 1):
        yield from itertools.combinations(inner, r)


# ----------------------------------------------------------------------------
# hereditary helpers


def admissible_arcs(n: int, eps: str) -> List[Arc]:
    return [g for g in enumerate_arcs(n) if is_eps_admissible(g, eps)]


def verify_hereditary(n: int, eps: str, kill_rule: str = ADOPTED, max_len: int | None = None) -> CheckStat:
    """Exceptional sequences by oracle versus strand diagrams, for one orientation.

    The oracle side ranges over every arc whose brick is a module over the
    path algebra; the arc side over every arc.  Each sequence of distinct arcs
    up to ``max_len`` (default ``n + 1``) is compared.
    """
    from .diagrams import is_strand_diagram
    from .reps import hereditary_algebra

    A = hereditary_algebra(n, eps, kill_rule)
    arcs = enumerate_arcs(n)
    modules = [g for g in arcs if not relation_failures(brick_from_arc(g), A)]
    index = {g: i for i, g in enumerate(modules)}
    W = weak_pair_matrix(modules, A)
    candidates = sorted(set(modules) | {g for g in arcs if is_eps_admissible(g, eps)}, key=Arc.sort_key)
    stat = CheckStat()
    top = n + 1 if max_len is None else max_len
    for k in range(top + 1):
        for seq in itertools.permutations(candidates, k):
            if all(g in index for g in seq):
                idx = [index[g] for g in seq]
                oracle = all(W[idx[p], idx[q]] for p in range(k) for q in range(p + 1, k))
            else:
                oracle = False
            arc_side = is_strand_diagram(seq, eps) if seq else True
            stat.record(oracle == arc_side, lambda: {"eps": eps, "sequence": [str(g) for g in seq],
                                                      "oracle": oracle, "arcs": arc_side})
    return stat


def count_complete_exceptional(n: int, eps: str) -> int:
    """Number of exceptional sequences of length ``n`` over the path algebra of ``eps``."""
    from .reps import hereditary_algebra

    A = hereditary_algebra(n, eps)
    mods = [g for g in enumerate_arcs(n) if not relation_failures(brick_from_arc(g), A)]
    W = weak_pair_matrix(mods, A)
    return sum(
        1
        for seq in itertools.permutations(range(len(mods)), n)
        if all(W[seq[p], seq[q]] for p in range(n) for q in range(p + 1, n))
    )


def conjecture_report(n: int) -> List[Dict]:
    """Data for the two statements left open at intermediate ``S`` (neither is asserted).

    For every ``S`` strictly between the empty set and ``[2, n-1]`` and every
    ordered brick pair, count how often the gentle Ext formula matches the
    oracle, and how often the admissible witnesses form an Ext^1 basis.
    """
    from .witness import witness_rank

    arcs = enumerate_arcs(n)
    B = [brick_from_arc(g) for g in arcs]
    full = frozenset(range(2, n))
    rows = []
    for S in map(frozenset, _subsets(n)):
        if not S or S == full:
            continue
        A = algebra(n, S)
        formula = basis = 0
        for (x, X), (y, Y) in itertools.product(zip(arcs, B), repeat=2):
            e = ext1(X, Y, A).dim
            formula += e == ext_dim_arcs(x, y, GENTLE)
            ws = ext_basis(X, Y, A)
            basis += len(ws) == e and witness_rank(ws, X, Y, A) == e
        rows.append({"S": sorted(S), "pairs": len(arcs) ** 2,
                     "gentle_formula_holds": formula, "witnesses_form_basis": basis})
    return rows
