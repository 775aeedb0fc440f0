"""Independent oracles for cross-checking the library's enumeration kernels.

Everything here derives membership sets and decomposition counts from full
Cayley tables by definition-chasing algorithms that share no code with the
library's power-walk, squaring-sweep, and cover-pass implementations: units
come from scanning table rows for a two-sided partner, nilpotents from
linear powering up to the ring size, and decomposition counts from a naive
loop over all (e, t) pairs with e + t = a.
"""

from __future__ import annotations

import numpy as np

_CHUNK_ROWS = 64


class OraclePack:
    def __init__(self, ring):
        self.ring = ring
        n = ring.size
        idx = np.arange(n, dtype=np.int64)
        self.mul = _full_table(ring.mul_many, n)
        self.add = _full_table(ring.add_many, n)
        self.neg = ring.neg_many(idx)
        self.sub = self.add[:, self.neg]         # sub[a, b] = a + (-b)
        self.idem = self.mul[idx, idx] == idx
        both = (self.mul == ring.one) & (self.mul.T == ring.one)
        self.unit = both.any(axis=1)
        self.inverse = np.where(self.unit, np.argmax(both, axis=1), -1)
        self.nil = _nilpotents_by_linear_powering(self.mul, ring.zero)
        self.radical = _radical_by_definition(self.mul, self.sub, ring.one, self.unit)

    def member_mask(self, kind: str) -> np.ndarray:
        return {"clean": self.unit, "nil-clean": self.nil, "j-clean": self.radical}[kind]

    def decomposition_counts(self, kind: str) -> np.ndarray:
        """counts[a] = #{(e, t) : e + t = a, e idempotent, t admissible}."""
        member = self.member_mask(kind)
        # t is determined by e, so scan all e for each a
        return (self.idem[None, :] & member[self.sub]).sum(axis=1)


def _full_table(bulk_op, n: int) -> np.ndarray:
    table = np.empty((n, n), dtype=np.int64)
    idx = np.arange(n, dtype=np.int64)
    for lo in range(0, n, _CHUNK_ROWS):
        rows = idx[lo : lo + _CHUNK_ROWS]
        table[rows] = bulk_op(np.repeat(rows, n), np.tile(idx, rows.size)).reshape(rows.size, n)
    return table


def _nilpotents_by_linear_powering(mul: np.ndarray, zero: int) -> np.ndarray:
    # the nilpotency index of an element is at most the ring size
    n = mul.shape[0]
    idx = np.arange(n)
    power = idx.copy()
    nil = power == zero
    for _ in range(n - 1):
        power = mul[power, idx]
        nil |= power == zero
    return nil


def _radical_by_definition(mul, sub, one: int, unit: np.ndarray) -> np.ndarray:
    # x in J iff 1 - r*x is a unit for every r
    one_minus = sub[one]
    return unit[one_minus[mul]].all(axis=0)


_PACKS: dict[int, OraclePack] = {}


def oracle_pack(ring) -> OraclePack:
    key = id(ring)
    if key not in _PACKS:
        _PACKS[key] = OraclePack(ring)
    return _PACKS[key]
