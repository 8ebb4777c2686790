"""Explicit short exact sequences ``0 -> Y -> E -> X -> 0`` realising Ext^1 classes.

Three constructions, one per crossing type of the arcs of ``X`` and ``Y``:
a contested endpoint (one glued brick), a nontrivial crossing directed from
``Y`` to ``X`` (two cut-and-glued bricks), and one directed from ``X`` to
``Y`` (a non-thin middle term).  Middle terms are built module-side and
checked by :func:`verify_ses`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Sequence, Tuple

from . import linalg as la
from .arcs import Arc, crossing_report, directed_pairs, resolve_crossing
from .reps import (
    AlgebraSpec,
    ExtSpace,
    Representation,
    RepError,
    arc_from_brick,
    arrows,
    brick_from_arc,
    check_shapes,
    direct_sum,
    make_rep,
    relation_failures,
)

CONTESTED = "contested"
CROSS_TO = "cross_to"
CROSS_FROM = "cross_from"


class WitnessError(ValueError):
    """The requested extension does not exist or the input is not of the right shape."""


@dataclass(frozen=True, eq=False)
class SesWitness:
    """``0 -> Y --iota--> E --pi--> X -> 0`` with vertexwise matrices."""

    Y: Representation
    E: Representation
    X: Representation
    iota: Tuple[la.Matrix, ...]
    pi: Tuple[la.Matrix, ...]
    kind: str
    pair: Tuple[int, int] | None = None

    @property
    def crossing(self) -> str:
        return self.kind if self.pair is None else f"{self.kind}{self.pair}"


class SesCheck(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


# ----------------------------------------------------------------------------
# helpers


def _arc_of(M: Representation) -> Arc:
    try:
        return arc_from_brick(M)
    except RepError as exc:
        raise WitnessError(f"expected a brick of arc form: {exc}") from None


# ----------------------------------------------------------------------------
# constructions


def ses_contested(X: Representation, Y: Representation, A: AlgebraSpec | None = None) -> SesWitness:
    """Extension across a contested endpoint: one glued brick.

    The junction arrow points from the support of ``X`` into that of ``Y`` so
    that ``Y`` is a subrepresentation of the middle term.
    """
    gx, gy = _arc_of(X), _arc_of(Y)
    if gx.right == gy.left:
        glued = Arc(gx.left, gx.pattern + "u" + gy.pattern, gx.n)
    elif gy.right == gx.left:
        glued = Arc(gy.left, gy.pattern + "o" + gx.pattern, gx.n)
    else:
        raise WitnessError(f"{gx} and {gy} have no contested endpoint")
    E = brick_from_arc(glued)
    n = gx.n
    iota = tuple([[la.ONE]] if Y.dim(v) else la.zeros(E.dim(v), 0) for v in range(1, n + 1))
    pi = tuple([[la.ONE]] if X.dim(v) else la.zeros(0, E.dim(v)) for v in range(1, n + 1))
    return SesWitness(Y, E, X, iota, pi, CONTESTED)


def ses_cross_to(X: Representation, Y: Representation, pair: Tuple[int, int], A: AlgebraSpec | None = None) -> SesWitness:
    """Extension for a nontrivial crossing directed from the arc of ``Y`` to that of ``X``.

    The middle term is ``M_Q + M_Q'`` from :func:`resolve_crossing`.  ``Y``
    maps by identities into ``M_Q`` (vertices up to ``j``) and ``M_Q'``
    (vertices after ``i``); ``M_Q`` maps onto ``X`` after ``i`` and ``M_Q'``
    onto ``X`` up to ``j`` with a global sign of -1.
    """
    gx, gy = _arc_of(X), _arc_of(Y)
    try:
        gq, gq2 = resolve_crossing(gx, gy, pair)
    except Exception as exc:
        raise WitnessError(str(exc)) from None
    i, j = pair
    MQ, MQ2 = brick_from_arc(gq), brick_from_arc(gq2)
    E = direct_sum(MQ, MQ2)
    n = gx.n
    iota, pi = [], []
    for v in range(1, n + 1):
        slots = [(MQ, "q"), (MQ2, "q2")]
        col, row = [], []
        for M, tag in slots:
            if not M.dim(v):
                continue
            if tag == "q":
                col.append(1 if (Y.dim(v) and v <= j) else 0)
                row.append(1 if (X.dim(v) and v > i) else 0)
            else:
                col.append(1 if (Y.dim(v) and v > i) else 0)
                row.append(-1 if (X.dim(v) and v <= j) else 0)
        iota.append(la.as_matrix([[c] for c in col]) if Y.dim(v) else la.zeros(E.dim(v), 0))
        pi.append(la.as_matrix([row]) if X.dim(v) else la.zeros(0, E.dim(v)))
    return SesWitness(Y, E, X, tuple(iota), tuple(pi), CROSS_TO, (i, j))


def cross_from_admissible(pair: Tuple[int, int], A: AlgebraSpec) -> bool:
    i, j = pair
    return A.mode != "preproj" or not (set(range(i + 1, j + 1)) & A.S)


def ses_cross_from(X: Representation, Y: Representation, pair: Tuple[int, int], A: AlgebraSpec | None = None) -> SesWitness:
    """Extension for a nontrivial crossing directed from the arc of ``X`` to that of ``Y``.

    ``E_v = X_v + Y_v`` and ``E(alpha) = [[X(alpha), 0], [C(alpha), Y(alpha)]]``
    where the connecting maps ``C`` link ``X`` to ``Y`` at ``i``, at ``j`` and
    at every node strictly between, always along the arrow opposite to the
    one ``X`` carries.  Over ``Pi(A_n, S)`` this only exists when ``S`` misses
    ``[i+1, j]``.
    """
    gx, gy = _arc_of(X), _arc_of(Y)
    i, j = pair
    if gx == gy or (i, j) not in directed_pairs(gx, gy):
        raise WitnessError(f"{pair} is not a crossing directed from {gx} to {gy}")
    if (i == gx.left == gy.left) or (j == gx.right == gy.right):
        raise WitnessError(f"{pair} is a shared endpoint, not a nontrivial crossing")
    if A is not None and not cross_from_admissible(pair, A):
        raise WitnessError(f"S meets [{i + 1}, {j}]: the extension is not over {A}")
    n = gx.n

    def has(M, v):
        return 1 <= v <= n and M.dim(v) > 0

    conn: Dict[str, int] = {}
    if has(X, i):
        conn[f"a{i}"] = 1
    else:
        conn[f"a{i}*"] = 1
    if has(X, j + 1):
        conn[f"a{j}*"] = 1
    else:
        conn[f"a{j}"] = 1
    for k in range(i + 1, j):
        if la.is_zero(X.map(f"a{k}")):
            conn[f"a{k}"] = 1
        else:
            conn[f"a{k}*"] = 1

    dims = [X.dim(v) + Y.dim(v) for v in range(1, n + 1)]
    maps = {}
    for a, s, t in arrows(n):
        blk = la.zeros(dims[t - 1], dims[s - 1])
        xs, xt = X.dim(s), X.dim(t)
        for r in range(xt):
            for c in range(xs):
                blk[r][c] = X.map(a)[r][c]
        for r in range(Y.dim(t)):
            for c in range(Y.dim(s)):
                blk[xt + r][xs + c] = Y.map(a)[r][c]
        if a in conn:
            if not (xs and Y.dim(t)):
                raise WitnessError(f"connecting map on {a} has no room")  # pragma: no cover
            blk[xt][0] = la.Fraction(conn[a])
        maps[a] = blk
    E = make_rep(n, dims, maps)
    iota = tuple(la.as_matrix([[1 if r == X.dim(v) + c else 0 for c in range(Y.dim(v))] for r in range(dims[v - 1])])
                 if Y.dim(v) else la.zeros(dims[v - 1], 0) for v in range(1, n + 1))
    pi = tuple(la.as_matrix([[1 if c == r else 0 for c in range(dims[v - 1])] for r in range(X.dim(v))])
               if X.dim(v) else la.zeros(0, dims[v - 1]) for v in range(1, n + 1))
    return SesWitness(Y, E, X, iota, pi, CROSS_FROM, (i, j))


def split_witness(X: Representation, Y: Representation) -> SesWitness:
    """The split sequence ``0 -> Y -> Y + X -> X -> 0``."""
    E = direct_sum(Y, X)
    n = X.n
    iota, pi = [], []
    for v in range(1, n + 1):
        y, x = Y.dim(v), X.dim(v)
        iota.append([[la.ONE if r == c else la.ZERO for c in range(y)] for r in range(y + x)] if y else la.zeros(y + x, 0))
        pi.append([[la.ONE if c == y + r else la.ZERO for c in range(y + x)] for r in range(x)])
    return SesWitness(Y, E, X, tuple(iota), tuple(pi), "split")


# ----------------------------------------------------------------------------
# verification


def _morphism_ok(f, M: Representation, N: Representation, A: AlgebraSpec) -> bool:
    for a, s, t in A.live_arrows:
        lhs = la.matmul(N.map(a), f[s - 1], inner=N.dim(s), cols=M.dim(s))
        rhs = la.matmul(f[t - 1], M.map(a), inner=M.dim(t), cols=M.dim(s))
        if lhs != rhs:
            return False
    return True


def _has_section(w: SesWitness, A: AlgebraSpec) -> bool:
    """Whether some morphism ``s: X -> E`` satisfies ``pi s = id``."""
    X, E = w.X, w.E
    n = X.n
    offsets, pos = [], 0
    for v in range(1, n + 1):
        offsets.append(pos)
        pos += E.dim(v) * X.dim(v)
    nvars = pos

    def var(v, r, c):
        return offsets[v - 1] + r * X.dim(v) + c

    rows, rhs = [], []
    for a, s, t in A.live_arrows:
        Ea, Xa = E.map(a), X.map(a)
        for r in range(E.dim(t)):
            for c in range(X.dim(s)):
                row = [la.ZERO] * nvars
                for p in range(E.dim(s)):
                    if Ea[r][p]:
                        row[var(s, p, c)] += Ea[r][p]
                for q in range(X.dim(t)):
                    if Xa[q][c]:
                        row[var(t, r, q)] -= Xa[q][c]
                rows.append(row)
                rhs.append(la.ZERO)
    for v in range(1, n + 1):
        P = w.pi[v - 1]
        for r in range(X.dim(v)):
            for c in range(X.dim(v)):
                row = [la.ZERO] * nvars
                for p in range(E.dim(v)):
                    if P[r][p]:
                        row[var(v, p, c)] += P[r][p]
                rows.append(row)
                rhs.append(la.ONE if r == c else la.ZERO)
    return la.solve(rows, rhs, nvars) is not None


def verify_ses(w: SesWitness, A: AlgebraSpec) -> SesCheck:
    """Whether ``w`` is a nonsplit short exact sequence of ``A``-representations."""
    n = A.n
    try:
        for R in (w.Y, w.E, w.X):
            check_shapes(R)
            if R.n != n:
                return SesCheck(False, "shape")
        for v in range(1, n + 1):
            if la.shape(w.iota[v - 1])[0] not in (0, w.E.dim(v)) or la.shape(w.pi[v - 1])[0] != w.X.dim(v):
                return SesCheck(False, "shape")
    except RepError:
        return SesCheck(False, "shape")
    for R in (w.Y, w.E, w.X):
        if relation_failures(R, A):
            return SesCheck(False, "relation")
    if any(w.E.dim(v) != w.X.dim(v) + w.Y.dim(v) for v in range(1, n + 1)):
        return SesCheck(False, "dimension")
    if not _morphism_ok(w.iota, w.Y, w.E, A) or not _morphism_ok(w.pi, w.E, w.X, A):
        return SesCheck(False, "morphism")
    for v in range(1, n + 1):
        y, x, e = w.Y.dim(v), w.X.dim(v), w.E.dim(v)
        if y and la.rank(w.iota[v - 1], y) != y:
            return SesCheck(False, "injective")
        if x and la.rank(w.pi[v - 1], e) != x:
            return SesCheck(False, "surjective")
        if x and y and not la.is_zero(la.matmul(w.pi[v - 1], w.iota[v - 1], inner=e)):
            return SesCheck(False, "composition")
    if _has_section(w, A):
        return SesCheck(False, "split")
    return SesCheck(True, "ok")


# ----------------------------------------------------------------------------
# cocycles and bases


def _section(P: la.Matrix, x: int, e: int) -> la.Matrix:
    """Right inverse of a surjective ``x x e`` matrix, column by column."""
    cols = []
    for c in range(x):
        rhs = [la.ONE if r == c else la.ZERO for r in range(x)]
        sol = la.solve(P, rhs, e)
        if sol is None:
            raise WitnessError("pi is not surjective")
        cols.append(sol)
    return la.transpose(cols, x, e) if x else la.zeros(e, 0)


def ses_to_cocycle(w: SesWitness, A: AlgebraSpec | None = None) -> Dict[str, la.Matrix]:
    """Arrow-indexed cocycle ``phi(alpha): X_s -> Y_t`` of the extension class."""
    n = w.X.n
    live = A.live_arrows if A is not None else arrows(n)
    sec = [_section(w.pi[v - 1], w.X.dim(v), w.E.dim(v)) for v in range(1, n + 1)]
    phi = {}
    for a, s, t in live:
        xs, yt, et = w.X.dim(s), w.Y.dim(t), w.E.dim(t)
        D = la.add(
            la.matmul(w.E.map(a), sec[s - 1], inner=w.E.dim(s), cols=xs),
            la.matmul(sec[t - 1], w.X.map(a), inner=w.X.dim(t), cols=xs),
            -la.ONE,
        )
        out = la.zeros(yt, xs)
        for c in range(xs):
            col = [D[r][c] for r in range(et)]
            if yt == 0:
                if any(col):
                    raise WitnessError("difference does not lie in the image of iota")
                continue
            sol = la.solve(w.iota[t - 1], col, yt)
            if sol is None:
                raise WitnessError("difference does not lie in the image of iota")
            for r in range(yt):
                out[r][c] = sol[r]
        phi[a] = out
    return phi


def ext_basis(X: Representation, Y: Representation, A: AlgebraSpec) -> List[SesWitness]:
    """Witnesses for a basis of Ext^1(X, Y), one per Ext-crossing the algebra admits."""
    gx, gy = _arc_of(X), _arc_of(Y)
    if gx == gy:
        return []
    report = crossing_report(gx, gy)
    if report.contested:
        out = [ses_contested(X, Y, A)]
    else:
        out = []
        for p in directed_pairs(gy, gx):
            if not ((p[0] == gx.left == gy.left) or (p[1] == gx.right == gy.right)):
                out.append(ses_cross_to(X, Y, p, A))
        for p in directed_pairs(gx, gy):
            if (p[0] == gx.left == gy.left) or (p[1] == gx.right == gy.right):
                continue
            if cross_from_admissible(p, A):
                out.append(ses_cross_from(X, Y, p, A))
    if A.mode == "hereditary":
        out = [w for w in out if verify_ses(w, A)]
    return out


def witness_rank(ws: Sequence[SesWitness], X: Representation, Y: Representation, A: AlgebraSpec) -> int:
    """Rank of the witnesses' cocycles modulo coboundaries in Ext^1(X, Y)."""
    space = ExtSpace(X, Y, A)
    vecs = [space.vectorize(ses_to_cocycle(w, A)) for w in ws]
    return space.class_rank(vecs)
