"""Representations of the doubled A_n quiver and exact Hom/Ext oracles.

Vertices are ``1..n``.  Arrow ``a{k}`` goes ``k -> k+1`` and ``a{k}*`` goes
``k+1 -> k``.  A path ``(alpha, beta)`` (alpha first) acts as
``M(beta) @ M(alpha)`` on column vectors.  All scalars are Fractions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from . import linalg as la
from .arcs import Arc, ArcError, make_eps

ADOPTED = "adopted"
PRINTED = "printed"


class RepError(ValueError):
    """Malformed representation or algebra data."""


# ----------------------------------------------------------------------------
# algebras


def arrows(n: int) -> List[Tuple[str, int, int]]:
    """``(name, source, target)`` for every arrow of the doubled quiver."""
    out = []
    for k in range(1, n):
        out.append((f"a{k}", k, k + 1))
        out.append((f"a{k}*", k + 1, k))
    return out


def arrow_ends(name: str) -> Tuple[int, int]:
    k = int(name[1:].rstrip("*"))
    return (k + 1, k) if name.endswith("*") else (k, k + 1)


@dataclass(frozen=True)
class Relation:
    """Signed sum of length-2 paths at ``vertex``; each path is ``(alpha, beta)``."""

    vertex: int
    terms: Tuple[Tuple[int, Tuple[str, str]], ...]

    def __str__(self) -> str:
        parts = []
        for c, (a, b) in self.terms:
            parts.append(("-" if c < 0 else "+") + a + b)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


@dataclass(frozen=True)
class AlgebraSpec:
    n: int
    mode: str = "preproj"
    S: FrozenSet[int] = frozenset()
    eps: str | None = None
    kill_rule: str = ADOPTED

    @property
    def relations(self) -> Tuple[Relation, ...]:
        if self.mode != "preproj" or self.n < 2:
            return ()
        n = self.n
        rels = [Relation(1, ((1, ("a1", "a1*")),))]
        for i in range(2, n):
            mono_left = (1, (f"a{i}", f"a{i}*"))
            mono_right = (1, (f"a{i - 1}*", f"a{i - 1}"))
            if i in self.S:
                rels.append(Relation(i, (mono_left,)))
                rels.append(Relation(i, (mono_right,)))
            else:
                rels.append(Relation(i, (mono_left, (-1, mono_right[1]))))
        rels.append(Relation(n, ((1, (f"a{n - 1}*", f"a{n - 1}")),)))
        return tuple(rels)

    @property
    def killed(self) -> FrozenSet[str]:
        """Arrows forced to act by zero.

        For an orientation ``eps`` the surviving arrow at node ``k`` is the one
        carried by bricks of ``eps``-admissible arcs: ``a{k}`` when
        ``eps(k) = u`` and ``a{k}*`` when ``eps(k) = o``.
        """
        if self.mode != "hereditary":
            return frozenset()
        out = set()
        for k, c in enumerate(self.eps, start=1):
            forward_lives = c == "u"
            if self.kill_rule == PRINTED:
                forward_lives = not forward_lives
            out.add(f"a{k}*" if forward_lives else f"a{k}")
        return frozenset(out)

    @property
    def live_arrows(self) -> List[Tuple[str, int, int]]:
        dead = self.killed
        return [a for a in arrows(self.n) if a[0] not in dead]

    def label(self) -> str:
        if self.mode == "hereditary":
            return f"eps={self.eps}"
        return "S={" + ",".join(map(str, sorted(self.S))) + "}"

    def __str__(self) -> str:
        if self.mode == "hereditary":
            return f"KA_{self.n}^{self.eps}"
        return f"Pi(A_{self.n},{self.label()[2:]})"


def algebra(n: int, S: Iterable[int] = ()) -> AlgebraSpec:
    if n < 1:
        raise RepError("n must be at least 1")
    S = frozenset(int(i) for i in S)
    bad = [i for i in S if not 2 <= i <= n - 1]
    if bad:
        raise RepError(f"S must lie in [2, {n - 1}], got {sorted(bad)}")
    return AlgebraSpec(n, "preproj", S)


def gentle_algebra(n: int) -> AlgebraSpec:
    return algebra(n, range(2, n))


def hereditary_algebra(n: int, eps: str | Sequence, kill_rule: str = ADOPTED) -> AlgebraSpec:
    """Path algebra of the orientation ``eps``; ``kill_rule="printed"`` swaps the killed arrows."""
    try:
        eps = make_eps(eps, n)
    except ArcError as exc:
        raise RepError(str(exc)) from None
    if kill_rule not in (ADOPTED, PRINTED):
        raise RepError(f"unknown kill rule {kill_rule!r}")
    return AlgebraSpec(n, "hereditary", frozenset(), eps, kill_rule)


def all_subsets(n: int) -> List[FrozenSet[int]]:
    inner = list(range(2, n))
    return [frozenset(c) for r in range(len(inner) + 1) for c in itertools.combinations(inner, r)]


# ----------------------------------------------------------------------------
# representations


@dataclass(frozen=True, eq=False)
class Representation:
    n: int
    dims: Tuple[int, ...]
    maps: Mapping[str, la.Matrix] = field(repr=False)

    def map(self, name: str) -> la.Matrix:
        return self.maps[name]

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self.n == other.n and self.dims == other.dims and all(
            self.maps[a] == other.maps[a] for a, _, _ in arrows(self.n)
        )

    def __repr__(self) -> str:
        nz = [a for a, _, _ in arrows(self.n) if not la.is_zero(self.maps[a])]
        return f"Representation(dims={self.dims}, nonzero={nz})"


def make_rep(n: int, dims: Sequence[int], maps: Mapping[str, Sequence[Sequence]] | None = None) -> Representation:
    """Build a representation, filling unspecified arrows with zero maps."""
    dims = tuple(int(d) for d in dims)
    if len(dims) != n or any(d < 0 for d in dims):
        raise RepError(f"dims must be {n} nonnegative integers, got {dims}")
    maps = dict(maps or {})
    names = {a for a, _, _ in arrows(n)}
    unknown = set(maps) - names
    if unknown:
        raise RepError(f"unknown arrows {sorted(unknown)}")
    full = {}
    for a, s, t in arrows(n):
        rows, cols = dims[t - 1], dims[s - 1]
        if a in maps and rows and cols:
            try:
                full[a] = la.as_matrix(maps[a], rows, cols)
            except ValueError as exc:
                raise RepError(f"arrow {a}: {exc}") from None
        else:
            if a in maps and any(len(r) for r in maps[a]) and not (rows and cols):
                raise RepError(f"arrow {a}: nonempty matrix for a zero space")
            full[a] = la.zeros(rows, cols)
    return Representation(n, dims, full)


def zero_rep(n: int) -> Representation:
    return make_rep(n, [0] * n)


def direct_sum(*reps: Representation) -> Representation:
    n = reps[0].n
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(n))
    maps = {}
    for a, s, t in arrows(n):
        maps[a] = la.block_diag([(r.dim(t), r.dim(s), r.map(a)) for r in reps])
    return Representation(n, dims, maps)


def _eval_path(M: Representation, path: Tuple[str, str]) -> la.Matrix:
    alpha, beta = path
    src, mid = arrow_ends(alpha)
    return la.matmul(M.map(beta), M.map(alpha), inner=M.dim(mid), cols=M.dim(src))


def check_shapes(M: Representation) -> None:
    for a, s, t in arrows(M.n):
        m = M.map(a)
        if la.shape(m) != (M.dim(t), M.dim(s)) and not (M.dim(t) == 0 and not m):
            raise RepError(f"arrow {a} has shape {la.shape(m)}, expected {(M.dim(t), M.dim(s))}")


def relation_failures(M: Representation, A: AlgebraSpec) -> List[str]:
    """Names of relations or killed arrows that ``M`` violates."""
    if M.n != A.n:
        raise RepError(f"representation has n={M.n}, algebra has n={A.n}")
    check_shapes(M)
    bad = [a for a in sorted(A.killed) if not la.is_zero(M.map(a))]
    for rel in A.relations:
        v = M.dim(rel.vertex)
        total = la.zeros(v, v)
        for c, path in rel.terms:
            total = la.add(total, _eval_path(M, path), Fraction(c))
        if not la.is_zero(total):
            bad.append(str(rel))
    return bad


def validate_rep(M: Representation, A: AlgebraSpec) -> bool:
    return not relation_failures(M, A)


# ----------------------------------------------------------------------------
# bricks and arcs


def brick_from_arc(g: Arc, convention: str = ADOPTED) -> Representation:
    """The brick of an arc: ``K`` on ``left+1..right``, one arrow per interior node.

    Under the adopted convention an arc passing under node ``k`` carries
    ``a{k}`` and one passing over carries ``a{k}*``.  ``convention="printed"``
    swaps the two; it exists only to show that the swap breaks the theory.
    """
    dims = [0] * g.n
    for v in g.vertices:
        dims[v - 1] = 1
    maps = {}
    for k in g.arrow_support:
        under = g.pattern[k - g.left - 1] == "u"
        if convention == PRINTED:
            under = not under
        elif convention != ADOPTED:
            raise RepError(f"unknown convention {convention!r}")
        maps[f"a{k}" if under else f"a{k}*"] = [[1]]
    return make_rep(g.n, dims, maps)


def arc_from_brick(M: Representation) -> Arc:
    """Inverse of :func:`brick_from_arc` on thin interval bricks."""
    check_shapes(M)
    if any(d > 1 for d in M.dims):
        raise RepError("not thin: some vertex has dimension above 1")
    support = [v for v in range(1, M.n + 1) if M.dim(v)]
    if not support:
        raise RepError("zero representation has no arc")
    lo, hi = support[0], support[-1]
    if support != list(range(lo, hi + 1)):
        raise RepError("support is not an interval")
    word = []
    for k in range(lo, hi):
        fwd = not la.is_zero(M.map(f"a{k}"))
        back = not la.is_zero(M.map(f"a{k}*"))
        if fwd == back:
            raise RepError(f"edge {k}-{k + 1} must carry exactly one nonzero map")
        word.append("u" if fwd else "o")
    return Arc(lo - 1, "".join(word), M.n)


def simple(n: int, v: int) -> Representation:
    dims = [0] * n
    dims[v - 1] = 1
    return make_rep(n, dims)


# ----------------------------------------------------------------------------
# Hom


def _hom_system(M: Representation, N: Representation, A: AlgebraSpec):
    n = M.n
    offsets = []
    pos = 0
    for v in range(1, n + 1):
        offsets.append(pos)
        pos += N.dim(v) * M.dim(v)
    nvars = pos

    def var(v, r, c):
        return offsets[v - 1] + r * M.dim(v) + c

    rows = []
    for a, s, t in A.live_arrows:
        Ma, Na = M.map(a), N.map(a)
        for r in range(N.dim(t)):
            for c in range(M.dim(s)):
                row = [la.ZERO] * nvars
                # (N(a) f_s)[r][c] - (f_t M(a))[r][c]
                for p in range(N.dim(s)):
                    if Na[r][p]:
                        row[var(s, p, c)] += Na[r][p]
                for q in range(M.dim(t)):
                    if Ma[q][c]:
                        row[var(t, r, q)] -= Ma[q][c]
                if any(row):
                    rows.append(row)
    return rows, nvars, var


Morphism = Tuple[la.Matrix, ...]


def hom_basis(M: Representation, N: Representation, A: AlgebraSpec) -> List[Morphism]:
    """Basis of Hom(M, N); each morphism is a tuple of vertex matrices ``N_v x M_v``."""
    _require_valid(A, M, N)
    rows, nvars, var = _hom_system(M, N, A)
    out = []
    for vec in la.nullspace(rows, nvars):
        f = []
        for v in range(1, M.n + 1):
            f.append([[vec[var(v, r, c)] for c in range(M.dim(v))] for r in range(N.dim(v))])
        out.append(tuple(f))
    return out


def hom_dim(M: Representation, N: Representation, A: AlgebraSpec, prime: int | None = None) -> int:
    """dim Hom(M, N) over the rationals, or over GF(prime) when given."""
    _require_valid(A, M, N)
    rows, nvars, _ = _hom_system(M, N, A)
    return nvars - la.rank(rows, nvars, prime)


def is_morphism(f: Sequence[la.Matrix], M: Representation, N: Representation, A: AlgebraSpec | None = None) -> bool:
    live = A.live_arrows if A is not None else arrows(M.n)
    for a, s, t in live:
        lhs = la.matmul(N.map(a), f[s - 1], inner=N.dim(s), cols=M.dim(s))
        rhs = la.matmul(f[t - 1], M.map(a), inner=M.dim(t), cols=M.dim(s))
        if lhs != rhs:
            return False
    return True


def _require_valid(A: AlgebraSpec, *reps: Representation) -> None:
    for R in reps:
        # representations are immutable, so a passed check is remembered on the instance
        seen = R.__dict__.get("_valid_over")
        if seen is not None and A in seen:
            continue
        bad = relation_failures(R, A)
        if bad:
            raise RepError(f"representation is not over {A}: violates {bad}")
        if seen is None:
            seen = set()
            object.__setattr__(R, "_valid_over", seen)
        seen.add(A)


# ----------------------------------------------------------------------------
# Ext^1


@dataclass(frozen=True)
class ExtResult:
    dim: int
    cocycle_dim: int
    coboundary_dim: int


class ExtSpace:
    """Cocycle and coboundary spaces for Ext^1(M, N) over ``A``.

    A cocycle assigns to every live arrow ``alpha: s -> t`` a matrix
    ``phi(alpha): M_s -> N_t``; it encodes the extension whose middle term
    acts by ``[[N(alpha), phi(alpha)], [0, M(alpha)]]``.
    """

    def __init__(self, M: Representation, N: Representation, A: AlgebraSpec):
        _require_valid(A, M, N)
        self.M, self.N, self.A = M, N, A
        self.layout = {}
        pos = 0
        for a, s, t in A.live_arrows:
            self.layout[a] = (pos, N.dim(t), M.dim(s))
            pos += N.dim(t) * M.dim(s)
        self.nvars = pos
        self._cocycle_rows = self._relation_rows()
        self._coboundaries = self._coboundary_vectors()

    def _var(self, a, r, c):
        base, _, cols = self.layout[a]
        return base + r * cols + c

    def _relation_rows(self):
        M, N = self.M, self.N
        rows = []
        for rel in self.A.relations:
            u = rel.vertex
            for r in range(N.dim(u)):
                for c in range(M.dim(u)):
                    row = [la.ZERO] * self.nvars
                    for coeff, (alpha, beta) in rel.terms:
                        mid = arrow_ends(alpha)[1]
                        Nb, Ma = N.map(beta), M.map(alpha)
                        # N(beta) phi(alpha) + phi(beta) M(alpha), entry (r, c)
                        for q in range(N.dim(mid)):
                            if Nb[r][q] and alpha in self.layout:
                                row[self._var(alpha, q, c)] += coeff * Nb[r][q]
                        for q in range(M.dim(mid)):
                            if Ma[q][c] and beta in self.layout:
                                row[self._var(beta, r, q)] += coeff * Ma[q][c]
                    if any(row):
                        rows.append(row)
        return rows

    def _coboundary_vectors(self):
        M, N = self.M, self.N
        vecs = []
        for v in range(1, M.n + 1):
            for r in range(N.dim(v)):
                for c in range(M.dim(v)):
                    # elementary h with a single 1 at (v, r, c)
                    vec = [la.ZERO] * self.nvars
                    for a, s, t in self.A.live_arrows:
                        # phi_h(a) = h_t M(a) - N(a) h_s
                        if t == v:
                            Ma = M.map(a)
                            for q in range(M.dim(s)):
                                if Ma[c][q]:
                                    vec[self._var(a, r, q)] += Ma[c][q]
                        if s == v:
                            Na = N.map(a)
                            for p in range(N.dim(t)):
                                if Na[p][r]:
                                    vec[self._var(a, p, c)] -= Na[p][r]
                    vecs.append(vec)
        return vecs

    def result(self, prime: int | None = None) -> ExtResult:
        z = self.nvars - la.rank(self._cocycle_rows, self.nvars, prime)
        b = la.rank(self._coboundaries, self.nvars, prime)
        return ExtResult(z - b, z, b)

    def cocycle_basis(self) -> List[List[Fraction]]:
        return la.nullspace(self._cocycle_rows, self.nvars)

    def vectorize(self, phi: Mapping[str, la.Matrix]) -> List[Fraction]:
        """Flatten an arrow-indexed cocycle; killed arrows must be zero."""
        vec = [la.ZERO] * self.nvars
        for a, mat in phi.items():
            if a not in self.layout:
                if not la.is_zero(mat):
                    raise RepError(f"cocycle is nonzero on killed arrow {a}")
                continue
            _, rows, cols = self.layout[a]
            for r in range(rows):
                for c in range(cols):
                    vec[self._var(a, r, c)] = Fraction(mat[r][c])
        return vec

    def is_cocycle(self, vec: Sequence[Fraction]) -> bool:
        return all(sum(x * y for x, y in zip(row, vec) if x) == 0 for row in self._cocycle_rows)

    def class_rank(self, vecs: Sequence[Sequence[Fraction]]) -> int:
        """Rank of ``vecs`` modulo coboundaries."""
        base = la.rank(self._coboundaries, self.nvars)
        return la.rank(list(self._coboundaries) + [list(v) for v in vecs], self.nvars) - base


def ext1(M: Representation, N: Representation, A: AlgebraSpec, prime: int | None = None) -> ExtResult:
    """Ext^1(M, N) over the rationals, or over GF(prime) when given."""
    return ExtSpace(M, N, A).result(prime)


def euler_form(alpha: Sequence[int], beta: Sequence[int]) -> int:
    if len(alpha) != len(beta):
        raise RepError("dimension vectors must have equal length")
    n = len(alpha)
    val = sum(2 * alpha[i] * beta[i] for i in range(n))
    val -= sum(alpha[i] * beta[i + 1] + alpha[i + 1] * beta[i] for i in range(n - 1))
    return val


# ----------------------------------------------------------------------------
# thin subquotients


@dataclass(frozen=True)
class ThinLattice:
    submodules: Tuple[FrozenSet[int], ...]
    quotients: Tuple[FrozenSet[int], ...]
    indecomposable_submodules: Tuple[FrozenSet[int], ...]
    indecomposable_quotients: Tuple[FrozenSet[int], ...]


def _thin_edges(M: Representation):
    if any(d > 1 for d in M.dims):
        raise RepError("not thin: some vertex has dimension above 1")
    return [(s, t) for a, s, t in arrows(M.n) if not la.is_zero(M.map(a))]


def _connected(vs: FrozenSet[int], edges) -> bool:
    if not vs:
        return False
    seen = {min(vs)}
    stack = [min(vs)]
    while stack:
        v = stack.pop()
        for s, t in edges:
            for a, b in ((s, t), (t, s)):
                if a == v and b in vs and b not in seen:
                    seen.add(b)
                    stack.append(b)
    return seen == set(vs)


def thin_subquotients(M: Representation) -> ThinLattice:
    """Supports of all subrepresentations and quotients of a thin representation.

    Subrepresentations of a thin module are exactly the support subsets closed
    under the nonzero arrows; quotients are their complements.
    """
    edges = _thin_edges(M)
    support = [v for v in range(1, M.n + 1) if M.dim(v)]
    subs, quots = [], []
    for r in range(len(support) + 1):
        for c in itertools.combinations(support, r):
            U = frozenset(c)
            if all(t in U for s, t in edges if s in U):
                subs.append(U)
                quots.append(frozenset(support) - U)
    key = lambda u: (len(u), sorted(u))
    subs.sort(key=key)
    quots.sort(key=key)
    isubs = tuple(u for u in subs if _connected(u, edges))
    iquots = tuple(u for u in quots if _connected(u, edges))
    return ThinLattice(tuple(subs), tuple(quots), isubs, iquots)


def restrict(M: Representation, vertices: Iterable[int]) -> Representation:
    """The thin subquotient of ``M`` supported on ``vertices``."""
    vs = set(vertices)
    _thin_edges(M)
    dims = [1 if (v in vs and M.dim(v)) else 0 for v in range(1, M.n + 1)]
    maps = {a: M.map(a) for a, s, t in arrows(M.n) if s in vs and t in vs and M.dim(s) and M.dim(t)}
    return make_rep(M.n, dims, maps)


def socle_is_simple(M: Representation) -> bool:
    lat = thin_subquotients(M)
    return sum(1 for u in lat.submodules if len(u) == 1) == 1


# ----------------------------------------------------------------------------
# module predicates


def is_brick(M: Representation, A: AlgebraSpec) -> bool:
    return hom_dim(M, M, A) == 1


def endomorphism_radical_dim(M: Representation, A: AlgebraSpec) -> Tuple[int, int]:
    """``(dim End(M), dim rad End(M))`` via the trace form (characteristic zero)."""
    basis = hom_basis(M, M, A)
    d = len(basis)

    def tr(f, g):
        total = la.ZERO
        for v in range(M.n):
            k = M.dims[v]
            if k:
                fg = la.matmul(f[v], g[v], inner=k)
                total += sum(fg[i][i] for i in range(k))
        return total

    gram = [[tr(basis[a], basis[b]) for b in range(d)] for a in range(d)]
    return d, d - la.rank(gram, d)


def is_indecomposable(M: Representation, A: AlgebraSpec) -> bool:
    if M.total_dim == 0:
        return False
    d, rad = endomorphism_radical_dim(M, A)
    return d - rad == 1


def is_tau_rigid_oracle(X: Representation, A: AlgebraSpec) -> bool:
    """Ext^1(X, X') vanishes for every indecomposable quotient X' of X."""
    if not is_brick(X, A):
        raise RepError("tau-rigidity oracle expects a brick")
    lat = thin_subquotients(X)
    return all(ext1(X, restrict(X, q), A).dim == 0 for q in lat.indecomposable_quotients)
