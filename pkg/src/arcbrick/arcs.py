"""Arcs on n+1 nodes and their word-combinatorial crossing theory.

An arc is stored as its left endpoint plus the under/over word on the nodes
strictly between its endpoints; the terminal ``e`` letter is implicit.  All
crossing data is computed by scanning integer pairs ``i < j`` in the common
closed support, so no geometry or floating point is involved.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, List, Sequence, Tuple


class ArcError(ValueError):
    """Invalid arc data or a violated precondition of an arc operation."""


class Letter(IntEnum):
    U = -1
    E = 0
    O = 1

    @property
    def char(self) -> str:
        return "ueo"[self.value + 1]


_CHAR = {"u": Letter.U, "o": Letter.O, "e": Letter.E}


@dataclass(frozen=True)
class Arc:
    """Canonical arc ``(left, pattern)`` on nodes ``0..n``."""

    left: int
    pattern: str
    n: int = field(compare=False)

    def __post_init__(self):
        if not isinstance(self.left, int) or self.left < 0:
            raise ArcError(f"left endpoint must be a nonnegative integer, got {self.left!r}")
        if any(c not in "uo" for c in self.pattern):
            raise ArcError(f"pattern must be over 'u'/'o', got {self.pattern!r}")
        if self.right > self.n:
            raise ArcError(f"right endpoint {self.right} exceeds n={self.n}")

    @property
    def right(self) -> int:
        return self.left + len(self.pattern) + 1

    def letter(self, k: int) -> Letter:
        """Letter at node ``k`` for ``left < k <= right``."""
        if k == self.right:
            return Letter.E
        if not self.left < k < self.right:
            raise ArcError(f"node {k} outside ({self.left}, {self.right}]")
        return _CHAR[self.pattern[k - self.left - 1]]

    @property
    def arrow_support(self) -> range:
        return range(self.left + 1, self.right)

    @property
    def vertices(self) -> range:
        """Quiver vertices carrying the brick: ``left+1 .. right``."""
        return range(self.left + 1, self.right + 1)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.left, tuple(-1 if c == "u" else 1 for c in self.pattern))

    def __lt__(self, other: "Arc") -> bool:
        if not isinstance(other, Arc):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def word(self) -> str:
        return self.pattern + "e"

    def __str__(self) -> str:
        return f"{self.left}:{self.pattern}"

    def __repr__(self) -> str:
        return f"Arc({self.left}:{self.pattern}, n={self.n})"


def make_arc(left: int, pattern: str | Sequence, n: int) -> Arc:
    """Build an arc from a left endpoint and an interior word.

    ``pattern`` may be a string over ``u``/``o`` or a sequence of Letters;
    an ``E`` anywhere in it is rejected because the terminal letter is implicit.
    """
    if not isinstance(pattern, str):
        chars = []
        for x in pattern:
            x = Letter(x) if not isinstance(x, str) else _CHAR.get(x.lower())
            if x is None or x == Letter.E:
                raise ArcError("pattern letters must be U or O")
            chars.append(x.char)
        pattern = "".join(chars)
    pattern = pattern.lower()
    if "e" in pattern:
        raise ArcError("pattern may not contain 'e'; the terminal letter is implicit")
    return Arc(left, pattern, n)


_ARC_RE = re.compile(r"^\s*(\d+)\s*:\s*([uoUO]*)\s*$")


def parse_arc(text: str, n: int) -> Arc:
    """Parse the ``left:pattern`` syntax, e.g. ``0:uoou`` or ``3:``."""
    m = _ARC_RE.match(text)
    if not m:
        raise ArcError(f"cannot parse arc {text!r}; expected 'left:pattern'")
    return make_arc(int(m.group(1)), m.group(2), n)


def enumerate_arcs(n: int) -> List[Arc]:
    """All arcs on ``n+1`` nodes, sorted by ``(left, pattern)`` with U < O."""
    if n < 1:
        raise ArcError("n must be at least 1")
    out = []
    for left in range(n):
        for length in range(n - left):
            for word in itertools.product("uo", repeat=length):
                out.append(Arc(left, "".join(word), n))
    out.sort(key=Arc.sort_key)
    return out


def _same_ambient(a: Arc, b: Arc) -> None:
    if a.n != b.n:
        raise ArcError(f"arcs live on different node sets (n={a.n} vs n={b.n})")


# ----------------------------------------------------------------------------
# restrictions, quotient and submodule arcs


def is_restriction(inner: Arc, outer: Arc) -> bool:
    if not (outer.left <= inner.left < inner.right <= outer.right):
        return False
    return all(inner.letter(k) == outer.letter(k) for k in inner.arrow_support)


def is_quotient_arc(inner: Arc, outer: Arc) -> bool:
    """``outer`` passes above a non-shared left end and below a non-shared right end."""
    if not is_restriction(inner, outer):
        return False
    if inner.left != outer.left and outer.letter(inner.left) != Letter.O:
        return False
    if inner.right != outer.right and outer.letter(inner.right) != Letter.U:
        return False
    return True


def is_submodule_arc(inner: Arc, outer: Arc) -> bool:
    if not is_restriction(inner, outer):
        return False
    if inner.left != outer.left and outer.letter(inner.left) != Letter.U:
        return False
    if inner.right != outer.right and outer.letter(inner.right) != Letter.O:
        return False
    return True


# ----------------------------------------------------------------------------
# directed crossings


def directed_pairs(g1: Arc, g2: Arc) -> List[Tuple[int, int]]:
    """Pairs ``i < j`` witnessing a Hom-crossing directed from ``g1`` to ``g2``.

    A pair qualifies when the arcs agree strictly inside ``(i, j)``, ``g1`` is
    weakly below ``g2`` at ``j``, and at ``i`` each arc either starts there or
    passes on the correct side (``g1`` above, ``g2`` below).
    """
    _same_ambient(g1, g2)
    lo = max(g1.left, g2.left)
    hi = min(g1.right, g2.right)
    pairs = []
    for i in range(lo, hi):
        if i != g1.left and g1.letter(i) != Letter.O:
            continue
        if i != g2.left and g2.letter(i) != Letter.U:
            continue
        for j in range(i + 1, hi + 1):
            if g1.letter(j) <= Letter.E <= g2.letter(j):
                pairs.append((i, j))
            # condition on the open interval: stop at the first disagreement
            if j == hi or g1.letter(j) != g2.letter(j):
                break
    return pairs


def hom_arcs(src: Arc, dst: Arc) -> List[Arc]:
    """Arcs that are quotient arcs of ``src`` and submodule arcs of ``dst``."""
    out = []
    for i, j in directed_pairs(src, dst):
        word = "".join(src.letter(k).char for k in range(i + 1, j))
        out.append(Arc(i, word, src.n))
    return out


@dataclass(frozen=True)
class CrossingReport:
    shared_left: bool
    shared_right: bool
    contested: int
    nontrivial_1to2: int
    nontrivial_2to1: int
    shared_directed_1to2: int
    shared_directed_2to1: int

    @property
    def shared(self) -> int:
        return int(self.shared_left) + int(self.shared_right)

    @property
    def nontrivial(self) -> int:
        return self.nontrivial_1to2 + self.nontrivial_2to1

    @property
    def hom_1to2(self) -> int:
        return self.nontrivial_1to2 + self.shared_directed_1to2

    @property
    def hom_2to1(self) -> int:
        return self.nontrivial_2to1 + self.shared_directed_2to1


def _classify(g1: Arc, g2: Arc) -> Tuple[int, int]:
    shared = nontrivial = 0
    for i, j in directed_pairs(g1, g2):
        if (i == g1.left == g2.left) or (j == g1.right == g2.right):
            shared += 1
        else:
            nontrivial += 1
    return shared, nontrivial


def crossing_report(g1: Arc, g2: Arc) -> CrossingReport:
    _same_ambient(g1, g2)
    shared_left = g1.left == g2.left
    shared_right = g1.right == g2.right
    contested = int(g1.right == g2.left or g2.right == g1.left)
    if g1 == g2:
        return CrossingReport(True, True, 0, 0, 0, 1, 1)
    s12, x12 = _classify(g1, g2)
    s21, x21 = _classify(g2, g1)
    return CrossingReport(shared_left, shared_right, contested, x12, x21, s12, s21)


def euler_form_arcs(g1: Arc, g2: Arc) -> int:
    r = crossing_report(g1, g2)
    return r.shared - r.contested


PREPROJECTIVE = "preprojective"
GENTLE = "gentle"


def ext_dim_arcs(x: Arc, y: Arc, mode: str = PREPROJECTIVE) -> int:
    """Dimension of Ext^1 from the brick of ``x`` to the brick of ``y``.

    ``preprojective`` counts every Ext-crossing; ``gentle`` counts the
    contested endpoint, or else only nontrivial crossings directed from ``y``
    to ``x``.
    """
    r = crossing_report(x, y)
    if mode == PREPROJECTIVE:
        return r.contested + r.nontrivial
    if mode == GENTLE:
        return 1 if r.contested else r.nontrivial_2to1
    raise ArcError(f"unknown mode {mode!r}")


# ----------------------------------------------------------------------------
# pair predicates


def is_clockwise(later: Arc, earlier: Arc) -> bool:
    """Whether ``later`` is clockwise of ``earlier`` around their shared endpoint."""
    r = crossing_report(later, earlier)
    if later == earlier or r.shared == 2:
        raise ArcError("arcs share two endpoints")
    if r.shared == 0:
        raise ArcError("arcs have no shared endpoint")
    if r.contested or r.nontrivial:
        raise ArcError("arcs intersect away from their shared endpoint")
    return r.shared_directed_1to2 == 1


def is_weak_pair_arcs(second: Arc, first: Arc) -> bool:
    """Arc form of a weak exceptional pair ``(second, first)``.

    Either the arcs are disjoint, or they meet only in one shared endpoint
    directed from ``second`` to ``first``.
    """
    if second == first:
        return False
    r = crossing_report(second, first)
    return r.contested == 0 and r.nontrivial == 0 and r.hom_2to1 == 0


def almost_rigid_pair_arcs(g1: Arc, g2: Arc) -> bool:
    if g1 == g2:
        raise ArcError("almost-rigid pairs need distinct arcs")
    return crossing_report(g1, g2).nontrivial == 0


def is_tau_rigid_arc(g: Arc) -> bool:
    return re.fullmatch(r"u*o*", g.pattern) is not None


def resolve_crossing(x: Arc, y: Arc, pair: Tuple[int, int]) -> Tuple[Arc, Arc]:
    """Cut-and-glue at a nontrivial crossing directed from ``y`` to ``x``.

    Returns ``(g_q, g_q2)``: ``g_q`` follows ``y`` up to ``i`` and ``x`` from
    ``j`` on; ``g_q2`` follows ``x`` up to ``i`` and ``y`` from ``j`` on.
    """
    _same_ambient(x, y)
    if x == y:
        raise ArcError("cannot resolve a crossing of an arc with itself")
    i, j = pair
    if (i, j) not in directed_pairs(y, x):
        raise ArcError(f"{pair} is not a crossing directed from {y} to {x}")
    if (i == x.left == y.left) or (j == x.right == y.right):
        raise ArcError(f"{pair} is a shared endpoint, not a nontrivial crossing")

    def glue(a: Arc, b: Arc) -> Arc:
        word = [a.letter(k).char for k in range(a.left + 1, i + 1)]
        word += [a.letter(k).char for k in range(i + 1, j)]
        word += [b.letter(k).char for k in range(j, b.right)]
        return Arc(a.left, "".join(word), a.n)

    return glue(y, x), glue(x, y)


# ----------------------------------------------------------------------------
# orientations for the hereditary quotients


def make_eps(eps: str | Sequence, n: int) -> str:
    """Normalise an orientation on nodes ``1..n-1`` to a ``u``/``o`` string."""
    if not isinstance(eps, str):
        eps = "".join(Letter(x).char if not isinstance(x, str) else x for x in eps)
    eps = eps.lower()
    if len(eps) != n - 1 or any(c not in "uo" for c in eps):
        raise ArcError(f"orientation must be a word of length {n - 1} over u/o, got {eps!r}")
    return eps


def all_orientations(n: int) -> List[str]:
    return ["".join(w) for w in itertools.product("uo", repeat=n - 1)]


def is_eps_admissible(g: Arc, eps: str) -> bool:
    eps = make_eps(eps, g.n)
    return all(g.pattern[k - g.left - 1] == eps[k - 1] for k in g.arrow_support)


def arcs_of(items: Iterable[Arc]) -> List[Arc]:
    return sorted(set(items), key=Arc.sort_key)
