"""Exact linear algebra over a prime field F_p.

All matrices are numpy int64 arrays with entries reduced into [0, p).
Everything here is deterministic: reduced row echelon form drives rank,
kernel and solving, so bases come out canonical for a given input.
"""

from __future__ import annotations

import numpy as np


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def reduce_mod(a: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # int64 is safe: entries < p and inner dimensions stay at desk scale
    return (a @ b) % p


def inv_scalar(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduce a copy of `a`; returns (R, pivot column indices)."""
    r = reduce_mod(a, p).copy()
    rows, cols = r.shape
    pivots: list[int] = []
    lead = 0
    for c in range(cols):
        if lead >= rows:
            break
        nz = np.nonzero(r[lead:, c])[0]
        if nz.size == 0:
            continue
        piv = lead + int(nz[0])
        if piv != lead:
            r[[lead, piv]] = r[[piv, lead]]
        r[lead] = (r[lead] * inv_scalar(r[lead, c], p)) % p
        col = r[:, c].copy()
        col[lead] = 0
        r = (r - np.outer(col, r[lead])) % p
        pivots.append(c)
        lead += 1
    return r, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of {x : a x = 0}, returned as columns."""
    rows, cols = a.shape
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(cols, len(free))
    for k, c in enumerate(free):
        basis[c, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-r[i, c]) % p
    return basis


def column_space(a: np.ndarray, p: int) -> np.ndarray:
    """The pivot columns of `a` (a canonical basis of the column span)."""
    _, pivots = rref(a, p)
    return a[:, pivots].copy()


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution X of a X = b, or None if the system is inconsistent."""
    rows, cols = a.shape
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    aug = np.hstack([reduce_mod(a, p), reduce_mod(b, p)])
    r, pivots = rref(aug, p)
    if any(c >= cols for c in pivots):
        return None
    x = zeros(cols, b.shape[1])
    for i, c in enumerate(pivots):
        x[c] = r[i, cols:]
    return x


def inv(a: np.ndarray, p: int) -> np.ndarray | None:
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        return None
    return solve(a, eye(n), p)


def is_invertible(a: np.ndarray, p: int) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def is_zero(a: np.ndarray) -> bool:
    return a.size == 0 or not a.any()
