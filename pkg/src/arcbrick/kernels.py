"""Integer kernels for all-pairs crossing counts and weak-sequence search.

Each kernel has a numba ``@njit`` version and a pure numpy/Python fallback
with identical results.  Set ``ARCBRICK_DISABLE_JIT=1`` (or run without
numba installed) to force the fallback path.
"""

from __future__ import annotations

import os
from typing import Sequence, Tuple

import numpy as np

from .arcs import Arc

_DISABLED = os.environ.get("ARCBRICK_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

# letters outside the closed support never compare equal to a real letter
_OUT = np.int8(9)


def encode(arcs: Sequence[Arc]) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pack arcs into ``(left, right, letters)`` arrays.

    ``letters[a, k]`` is -1/0/1 for u/e/o at nodes ``left < k <= right`` and a
    sentinel elsewhere.
    """
    n = arcs[0].n if arcs else 1
    m = len(arcs)
    left = np.empty(m, dtype=np.int64)
    right = np.empty(m, dtype=np.int64)
    letters = np.full((m, n + 1), _OUT, dtype=np.int8)
    for a, g in enumerate(arcs):
        left[a] = g.left
        right[a] = g.right
        for k in range(g.left + 1, g.right + 1):
            letters[a, k] = int(g.letter(k))
    return left, right, letters


# ----------------------------------------------------------------------------
# all-pairs directed crossing counts


def _pair_counts_numpy(left, right, letters):
    m, width = letters.shape
    hom = np.zeros((m, m), dtype=np.int64)
    shared = np.zeros((m, m), dtype=np.int64)
    lo = np.maximum(left[:, None], left[None, :])
    hi = np.minimum(right[:, None], right[None, :])
    same_left = left[:, None] == left[None, :]
    same_right = right[:, None] == right[None, :]
    for i in range(width):
        at_left = left == i
        start1 = at_left | (letters[:, i] == 1)
        start2 = at_left | (letters[:, i] == -1)
        ok = start1[:, None] & start2[None, :] & (lo <= i) & (i < hi)
        if not ok.any():
            continue
        agree = ok.copy()
        for j in range(i + 1, width):
            if not agree.any():
                break
            inside = agree & (j <= hi)
            cond = (letters[:, j] <= 0)[:, None] & (letters[:, j] >= 0)[None, :]
            hit = inside & cond
            hom += hit
            shared += hit & ((same_left & (left[:, None] == i)) | (same_right & (right[:, None] == j)))
            agree = inside & (j < hi) & (letters[:, j][:, None] == letters[:, j][None, :])
    return hom, shared


if HAVE_NUMBA:

    @njit(cache=True)
    def _pair_counts_jit(left, right, letters):
        m, width = letters.shape
        hom = np.zeros((m, m), dtype=np.int64)
        shared = np.zeros((m, m), dtype=np.int64)
        for a in range(m):
            for b in range(m):
                lo = max(left[a], left[b])
                hi = min(right[a], right[b])
                for i in range(lo, hi):
                    if i != left[a] and letters[a, i] != 1:
                        continue
                    if i != left[b] and letters[b, i] != -1:
                        continue
                    for j in range(i + 1, hi + 1):
                        if letters[a, j] <= 0 and letters[b, j] >= 0:
                            hom[a, b] += 1
                            if (i == left[a] and i == left[b]) or (j == right[a] and j == right[b]):
                                shared[a, b] += 1
                        if j == hi or letters[a, j] != letters[b, j]:
                            break
        return hom, shared


def pair_counts(arcs: Sequence[Arc], use_jit: bool | None = None) -> Tuple[np.ndarray, np.ndarray]:
    """Directed Hom-crossing counts for every ordered pair of ``arcs``.

    Returns ``(hom, shared)`` where ``hom[a, b]`` counts Hom-crossings directed
    from arc ``a`` to arc ``b`` and ``shared[a, b]`` the shared-endpoint ones
    among them.  Diagonal entries are 1 and 1.
    """
    left, right, letters = encode(arcs)
    jit = HAVE_NUMBA if use_jit is None else (use_jit and HAVE_NUMBA)
    if jit:
        return _pair_counts_jit(left, right, letters)
    return _pair_counts_numpy(left, right, letters)


def weak_allowed(arcs: Sequence[Arc], use_jit: bool | None = None) -> np.ndarray:
    """``allowed[a, b]``: ``(arcs[a], arcs[b])`` is a weak pair (a later than b)."""
    hom, shared = pair_counts(arcs, use_jit)
    left = np.array([g.left for g in arcs])
    right = np.array([g.right for g in arcs])
    contested = (right[:, None] == left[None, :]) | (left[:, None] == right[None, :])
    nontrivial = (hom - shared) + (hom - shared).T
    allowed = (~contested) & (nontrivial == 0) & (hom.T == 0)
    np.fill_diagonal(allowed, False)
    return allowed


# ----------------------------------------------------------------------------
# longest weak sequence: clique search in the compatibility graph with an
# acyclicity check on the forced orders


def _acyclic_with(members, count, v, forced):
    # Kahn's algorithm on members[:count] + [v]
    size = count + 1
    nodes = np.empty(size, dtype=np.int64)
    nodes[:count] = members[:count]
    nodes[count] = v
    indeg = np.zeros(size, dtype=np.int64)
    for x in range(size):
        for y in range(size):
            if forced[nodes[x], nodes[y]]:
                indeg[y] += 1
    stack = np.empty(size, dtype=np.int64)
    top = 0
    for x in range(size):
        if indeg[x] == 0:
            stack[top] = x
            top += 1
    seen = 0
    while top > 0:
        top -= 1
        x = stack[top]
        seen += 1
        for y in range(size):
            if forced[nodes[x], nodes[y]]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    stack[top] = y
                    top += 1
    return seen == size


def _longest_py(compat, forced, bound):
    m = compat.shape[0]
    best = np.zeros(0, dtype=np.int64)
    members = np.zeros(m + 1, dtype=np.int64)

    def rec(count, cands):
        nonlocal best
        if count > len(best):
            best = members[:count].copy()
            if count >= bound:
                return True
        if count + len(cands) <= len(best):
            return False
        for idx, v in enumerate(cands):
            if count + len(cands) - idx <= len(best):
                return False
            if not _acyclic_with(members, count, v, forced):
                continue
            members[count] = v
            rest = [w for w in cands[idx + 1:] if compat[v, w]]
            if rec(count + 1, rest):
                return True
        return False

    rec(0, list(range(m)))
    return best


if HAVE_NUMBA:
    _acyclic_with_jit = njit(cache=True)(_acyclic_with)

    @njit(cache=True)
    def _longest_jit(compat, forced, bound):
        m = compat.shape[0]
        depth_cap = m + 1
        # candidate lists per depth, and the cursor into each list
        cands = np.empty((depth_cap, m), dtype=np.int64)
        ncand = np.zeros(depth_cap, dtype=np.int64)
        cursor = np.zeros(depth_cap, dtype=np.int64)
        members = np.zeros(depth_cap, dtype=np.int64)
        best = np.zeros(0, dtype=np.int64)
        for v in range(m):
            cands[0, v] = v
        ncand[0] = m
        depth = 0
        while depth >= 0:
            if depth > best.shape[0]:
                best = members[:depth].copy()
                if depth >= bound:
                    break
            c = cursor[depth]
            if c >= ncand[depth] or depth + ncand[depth] - c <= best.shape[0]:
                cursor[depth] = 0
                depth -= 1
                if depth >= 0:
                    cursor[depth] += 1
                continue
            v = cands[depth, c]
            if not _acyclic_with_jit(members, depth, v, forced):
                cursor[depth] += 1
                continue
            members[depth] = v
            k = 0
            for t in range(c + 1, ncand[depth]):
                w = cands[depth, t]
                if compat[v, w]:
                    cands[depth + 1, k] = w
                    k += 1
            ncand[depth + 1] = k
            cursor[depth + 1] = 0
            depth += 1
        return best


def longest_compatible(allowed: np.ndarray, bound: int | None = None, use_jit: bool | None = None) -> np.ndarray:
    """Indices of a largest arc set admitting a weak ordering.

    ``allowed`` is the matrix from :func:`weak_allowed`.  The search stops as
    soon as a set of size ``bound`` is found (pass None for a full search).
    """
    allowed = np.asarray(allowed, dtype=np.bool_)
    compat = allowed | allowed.T
    forced = allowed & ~allowed.T
    cap = allowed.shape[0] + 1 if bound is None else int(bound)
    jit = HAVE_NUMBA if use_jit is None else (use_jit and HAVE_NUMBA)
    if jit:
        return _longest_jit(compat, forced, cap)
    return _longest_py(compat, forced, cap)
