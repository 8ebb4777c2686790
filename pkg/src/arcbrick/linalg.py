"""Exact rational linear algebra on small dense matrices.

Matrices are lists of rows of :class:`fractions.Fraction`.  Everything here is
sized for representations of dimension at most a few dozen, so plain Python
loops are fine and keep the arithmetic exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(size: int) -> Matrix:
    m = zeros(size, size)
    for i in range(size):
        m[i][i] = ONE
    return m


def as_matrix(data: Sequence[Sequence], rows: int | None = None, cols: int | None = None) -> Matrix:
    """Copy ``data`` into a fresh Fraction matrix, checking the shape if given."""
    m = [[Fraction(x) for x in row] for row in data]
    if rows is not None:
        if len(m) != rows:
            raise ValueError(f"expected {rows} rows, got {len(m)}")
        if cols is not None and any(len(r) != cols for r in m):
            raise ValueError(f"expected {cols} columns")
    return m


def shape(m: Sequence[Sequence]) -> Tuple[int, int]:
    if not m:
        return (0, 0)
    return (len(m), len(m[0]))


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]], inner: int | None = None,
           cols: int | None = None) -> Matrix:
    """Product ``a @ b``.  ``inner`` and ``cols`` fix the shape when a factor is empty."""
    rows = len(a)
    k = len(b) if inner is None else inner
    if cols is None:
        cols = len(b[0]) if b else 0
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x == 0:
                continue
            bt = b[t]
            for j in range(cols):
                y = bt[j]
                if y:
                    oi[j] += x * y
    return out


def add(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]], scale: Fraction = ONE) -> Matrix:
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero(m: Sequence[Sequence[Fraction]]) -> bool:
    return all(x == 0 for row in m for x in row)


def transpose(m: Sequence[Sequence[Fraction]], rows: int | None = None, cols: int | None = None) -> Matrix:
    r = len(m) if rows is None else rows
    c = (len(m[0]) if m else 0) if cols is None else cols
    return [[m[i][j] for i in range(r)] for j in range(c)]


def rref(m: Sequence[Sequence[Fraction]], ncols: int | None = None) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form with leftmost pivoting.

    Returns the nonzero rows of the reduced matrix and the pivot columns.
    """
    a = [list(row) for row in m]
    cols = ncols if ncols is not None else (len(a[0]) if a else 0)
    pivots: List[int] = []
    r = 0
    nrows = len(a)
    for c in range(cols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        if pv != 1:
            a[r] = [x / pv for x in a[r]]
        pr = a[r]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f != 0:
                    ai = a[i]
                    for j in range(c, cols):
                        if pr[j]:
                            ai[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _int_row(row: Sequence[Fraction]) -> dict:
    """Sparse integer multiple of ``row`` as ``{column: value}``."""
    den = math.lcm(*(x.denominator for x in row if x))
    return {j: int(x * den) for j, x in enumerate(row) if x}


def rank(m: Sequence[Sequence[Fraction]], ncols: int | None = None, prime: int | None = None) -> int:
    """Exact rank by fraction-free elimination on sparse integer rows.

    With ``prime`` set, the rank is taken over GF(prime); entries must then
    have denominators prime to it.
    """
    pivots: dict = {}
    for raw in m:
        if prime is None:
            row = _int_row(raw)
        else:
            row = {}
            for j, x in enumerate(raw):
                if x:
                    if x.denominator % prime == 0:
                        raise ValueError(f"entry {x} is not defined modulo {prime}")
                    v = x.numerator * pow(x.denominator, -1, prime) % prime
                    if v:
                        row[j] = v
        while row:
            lead = min(row)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = row
                break
            a, b = p[lead], row[lead]
            new = {j: a * v for j, v in row.items() if j != lead}
            for j, v in p.items():
                if j != lead:
                    w = new.get(j, 0) - b * v
                    if prime is not None:
                        w %= prime
                    if w:
                        new[j] = w
                    else:
                        new.pop(j, None)
            if prime is not None:
                row = {j: v % prime for j, v in new.items() if v % prime}
                continue
            g = 0
            for v in new.values():
                g = math.gcd(g, v)
            row = {j: v // g for j, v in new.items()} if g > 1 else new
    return len(pivots)


def nullspace(m: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis of ``{x : m x = 0}`` as a list of vectors, one per free column.

    Basis vector ``k`` has a 1 in the k-th free column, so the basis is in
    reduced echelon order with respect to reversed column priority.
    """
    red, pivots = rref(m, ncols)
    pivset = set(pivots)
    basis: Matrix = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def solve(m: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], ncols: int) -> List[Fraction] | None:
    """One solution of ``m x = rhs`` (free variables zero), or None if inconsistent."""
    aug = [list(row) + [Fraction(b)] for row, b in zip(m, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def block_diag(blocks: Sequence[Tuple[int, int, Sequence[Sequence[Fraction]]]]) -> Matrix:
    """Block diagonal matrix from ``(rows, cols, block)`` triples."""
    total_r = sum(b[0] for b in blocks)
    total_c = sum(b[1] for b in blocks)
    out = zeros(total_r, total_c)
    r0 = c0 = 0
    for rows, cols, blk in blocks:
        for i in range(rows):
            for j in range(cols):
                out[r0 + i][c0 + j] = Fraction(blk[i][j])
        r0 += rows
        c0 += cols
    return out


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse(s) -> Fraction:
    return Fraction(s)
