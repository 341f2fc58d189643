"""Exact linear algebra over the rationals.

Matrices are numpy object arrays holding Python ``int`` or ``Fraction``
entries. Elimination is done fraction-free on integer rows: every row is
cleared of denominators up front and kept primitive (content 1) after each
update, so entries stay small for the 0/1 matrices this package produces.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "matrix", "zeros", "identity", "is_zero", "rank", "nullspace",
    "solve", "column_space", "complete_basis", "hstack", "vstack",
    "block_diag", "flatten", "is_invertible", "echelon",
]


def matrix(rows: Sequence[Sequence], shape: tuple[int, int] | None = None) -> np.ndarray:
    """Build an object matrix; ``shape`` is needed when there are no rows."""
    if shape is not None:
        out = zeros(*shape)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                out[i, j] = _normal(x)
        return out
    rows = [list(r) for r in rows]
    if not rows:
        return zeros(0, 0)
    out = zeros(len(rows), len(rows[0]))
    for i, row in enumerate(rows):
        if len(row) != out.shape[1]:
            raise ValueError("ragged rows")
        for j, x in enumerate(row):
            out[i, j] = _normal(x)
    return out


def _normal(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, (int, np.integer)):
        return int(x)
    raise TypeError(f"inexact entry {x!r}")


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=object)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=object)


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def hstack(blocks: Sequence[np.ndarray], rows: int) -> np.ndarray:
    if not blocks:
        return zeros(rows, 0)
    return np.concatenate(list(blocks), axis=1)


def vstack(blocks: Sequence[np.ndarray], cols: int) -> np.ndarray:
    if not blocks:
        return zeros(0, cols)
    return np.concatenate(list(blocks), axis=0)


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = zeros(r, c)
    i = j = 0
    for b in blocks:
        out[i:i + b.shape[0], j:j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def flatten(mats: Iterable[np.ndarray]) -> list:
    """Concatenate matrices row-major into one coordinate list."""
    out: list = []
    for m in mats:
        out.extend(m.flat)
    return out


def _int_row(row: Iterable) -> list[int]:
    row = [Fraction(x) for x in row]
    den = lcm(*(x.denominator for x in row)) if row else 1
    return [int(x * den) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g == 0:
        return row
    return [x // g for x in row]


def echelon(a: np.ndarray) -> tuple[list[list[int]], list[int]]:
    """Fully reduced integer echelon form: (nonzero rows, pivot columns).

    Each pivot column has exactly one nonzero entry, in its own row.
    """
    nrows, ncols = a.shape
    rows = [_primitive(_int_row(a[i])) for i in range(nrows)]
    rows = [r for r in rows if any(r)]
    pivots: list[int] = []
    top = 0
    for c in range(ncols):
        if top == len(rows):
            break
        k = next((k for k in range(top, len(rows)) if rows[k][c]), None)
        if k is None:
            continue
        rows[top], rows[k] = rows[k], rows[top]
        p = rows[top]
        pc = p[c]
        for k in range(len(rows)):
            if k == top or not rows[k][c]:
                continue
            a_k = rows[k][c]
            g = gcd(a_k, pc)
            u, v = pc // g, a_k // g
            rows[k] = _primitive([u * x - v * y for x, y in zip(rows[k], p)])
        pivots.append(c)
        top += 1
    return rows[:top], pivots


def rank(a: np.ndarray) -> int:
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    return len(echelon(a)[1])


def nullspace(a: np.ndarray) -> list[np.ndarray]:
    """Integer basis of {x : a x = 0}, one vector per free column."""
    ncols = a.shape[1]
    rows, pivots = echelon(a) if a.shape[0] else ([], [])
    pivot_set = set(pivots)
    scale = lcm(*(rows[k][p] for k, p in enumerate(pivots))) if pivots else 1
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        x = [0] * ncols
        x[f] = scale
        for k, p in enumerate(pivots):
            x[p] = -rows[k][f] * scale // rows[k][p]
        x = _primitive(x)
        basis.append(np.array(x, dtype=object))
    return basis


def solve(b: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Return some x with b @ x == y; raise ValueError if none exists.

    Free variables are set to zero, so the answer is unique whenever ``b``
    has full column rank.
    """
    n = b.shape[1]
    k = y.shape[1]
    if b.shape[0] != y.shape[0]:
        raise ValueError("row count mismatch")
    x = zeros(n, k)
    if b.shape[0] == 0:
        return x
    rows, pivots = echelon(hstack([b, y], b.shape[0]))
    for row, p in zip(rows, pivots):
        if p >= n:
            raise ValueError("inconsistent system")
        for j in range(k):
            x[p, j] = _normal(Fraction(row[n + j], row[p]))
    return x


def column_space(a: np.ndarray) -> np.ndarray:
    """Independent columns of ``a`` spanning its column space (as a matrix)."""
    if a.shape[1] == 0 or a.shape[0] == 0:
        return zeros(a.shape[0], 0)
    target = rank(a)
    chosen: list[int] = []
    for j in range(a.shape[1]):
        if len(chosen) == target:
            break
        if rank(a[:, chosen + [j]]) > len(chosen):
            chosen.append(j)
    return a[:, chosen].copy()


def complete_basis(u: np.ndarray) -> list[int]:
    """Standard basis indices whose vectors extend the columns of ``u`` to a basis."""
    n = u.shape[0]
    r = rank(u)
    cur = u
    chosen = []
    for i in range(n):
        if r == n:
            break
        e = zeros(n, 1)
        e[i, 0] = 1
        trial = hstack([cur, e], n)
        if rank(trial) > r:
            cur = trial
            chosen.append(i)
            r += 1
    return chosen


def is_invertible(a: np.ndarray) -> bool:
    return a.shape[0] == a.shape[1] and rank(a) == a.shape[0]
