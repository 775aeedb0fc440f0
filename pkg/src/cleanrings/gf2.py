"""Bit-packed n-by-n matrix arithmetic over the two-element field.

A matrix is a single integer: entry (r, c) sits at bit r*n + c, which matches
the row-major mixed-radix encoding used by matrix rings with a two-element
base. Addition is XOR; multiplication uses a lane trick that multiplies the
column-k bit pattern of the left factor by row k of the right factor, so a
full product costs O(n) word operations.
"""

from __future__ import annotations

import numpy as np

MAX_DIM = 7  # n*n must fit comfortably in a 64-bit lane layout


def _masks(n: int) -> tuple[int, int]:
    col = 0
    for r in range(n):
        col |= 1 << (r * n)
    return col, (1 << n) - 1


_MASKS = {n: _masks(n) for n in range(1, MAX_DIM + 1)}


def matmul(a: int, b: int, n: int) -> int:
    """Product of two packed matrices."""
    colmask, rowmask = _MASKS[n]
    acc = 0
    for k in range(n):
        ak = (a >> k) & colmask        # bit r*n set iff a[r, k] == 1
        bk = (b >> (n * k)) & rowmask  # row k of b
        acc ^= ak * bk                 # rows land on disjoint n-bit lanes
    return acc


def matmul_bulk(A: np.ndarray, B: np.ndarray, n: int) -> np.ndarray:
    """Vectorized `matmul` over aligned arrays of packed matrices."""
    colmask, rowmask = _MASKS[n]
    acc = np.zeros_like(A)
    for k in range(n):
        ak = (A >> k) & colmask
        bk = (B >> (n * k)) & rowmask
        acc ^= ak * bk
    return acc


def identity(n: int) -> int:
    out = 0
    for r in range(n):
        out |= 1 << (r * n + r)
    return out


def rows(a: int, n: int) -> list[int]:
    mask = (1 << n) - 1
    return [(a >> (r * n)) & mask for r in range(n)]


def from_rows(row_bits: list[int], n: int) -> int:
    out = 0
    for r, bits in enumerate(row_bits):
        out |= bits << (r * n)
    return out


def rank(a: int, n: int) -> int:
    """Rank by Gaussian elimination on row bitsets."""
    work = rows(a, n)
    rk = 0
    for c in range(n):
        pivot = None
        for r in range(rk, n):
            if (work[r] >> c) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        for r in range(n):
            if r != rk and ((work[r] >> c) & 1):
                work[r] ^= work[rk]
        rk += 1
    return rk


def is_invertible(a: int, n: int) -> bool:
    return rank(a, n) == n


def inverse(a: int, n: int) -> int | None:
    """Inverse of a packed matrix, or None if singular."""
    work = rows(a, n)
    aug = [1 << r for r in range(n)]
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if (work[r] >> c) & 1:
                pivot = r
                break
        if pivot is None:
            return None
        work[c], work[pivot] = work[pivot], work[c]
        aug[c], aug[pivot] = aug[pivot], aug[c]
        for r in range(n):
            if r != c and ((work[r] >> c) & 1):
                work[r] ^= work[c]
                aug[r] ^= aug[c]
    return from_rows(aug, n)
