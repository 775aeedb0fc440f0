"""Finite unital rings and finite non-unital algebras on integer indices.

Every structure here is a set {0, ..., size-1} with pure evaluators
add(i, j), mul(i, j), neg(i). Structured constructions (matrix rings,
products, truncated skew-polynomial rings, quotients, unital adjunctions)
fix a mixed-radix codec between indices and entry tuples: a matrix over a
base of size b is the base-b integer of its entries in row-major order, a
product element is the mixed-radix tuple of its components (first factor
least significant), and a truncated polynomial is the base-b integer of its
coefficient list with the degree-0 coefficient least significant.

Whole-ring scans go through the vectorized `*_many` evaluators, which are
kept behaviorally identical to the scalar ones. Structural caches are filled
at most once per ring; concurrent fills may duplicate work but always freeze
identical values.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import gf2
from .errors import (
    ImproperIdealError,
    InternalCheckError,
    InvalidArgumentError,
    InvalidEndomorphismError,
    InvalidIdealError,
    InvalidSizeError,
    SizeCapError,
    UnsupportedCharacteristicError,
)

DEFAULT_SIZE_CAP = 1 << 20
TABLE_LIMIT = 1024              # full Cayley tables memoized below this size
DIGIT_CACHE_LIMIT = 1 << 17     # precomputed digit tables below this size
AXIOM_EXHAUSTIVE_LIMIT = 256    # size**3 triples scanned exhaustively up to here
DEFAULT_SAMPLE_TRIPLES = 1_000_000
_CHUNK = 1 << 16

Array = np.ndarray


def _idx(x) -> Array:
    return np.atleast_1d(np.asarray(x, dtype=np.int64))


def _pair(i, j) -> tuple[Array, Array]:
    a, b = _idx(i), _idx(j)
    if a.shape != b.shape:
        a, b = np.broadcast_arrays(a, b)
    return a, b


def _check_cap(size: int, cap: Optional[int], what: str) -> int:
    cap = DEFAULT_SIZE_CAP if cap is None else cap
    if size > cap:
        raise SizeCapError(
            f"{what} has {size} elements, above the size cap {cap}; "
            f"rerun with a cap of at least {size}",
            required=size,
        )
    return size


class BulkOps:
    """Vectorized add/mul/neg on aligned int64 index arrays."""

    __slots__ = ("add", "mul", "neg")

    def __init__(self, add, mul, neg):
        self.add = add
        self.mul = mul
        self.neg = neg


# ---------------------------------------------------------------------------
# codecs: index <-> structured element


class AtomCodec:
    """Plain indices with no internal structure."""

    def decode(self, i: int):
        return i

    def encode(self, obj) -> int:
        if not isinstance(obj, int):
            raise InvalidArgumentError(f"expected an integer element, got {obj!r}")
        return obj

    def show(self, i: int) -> str:
        return str(i)


class TupleCodec:
    """Mixed-radix tuples; first position is the least significant digit."""

    kind = "tuple"

    def __init__(self, radices: Sequence[int]):
        self.radices = list(radices)
        divs = []
        d = 1
        for r in self.radices:
            divs.append(d)
            d *= r
        self.divs = divs
        self.size = d

    def decode(self, i: int) -> tuple[int, ...]:
        out = []
        for r in self.radices:
            i, digit = divmod(i, r)
            out.append(digit)
        return tuple(out)

    def encode(self, obj) -> int:
        if not isinstance(obj, (tuple, list)) or len(obj) != len(self.radices):
            raise InvalidArgumentError(
                f"expected a {len(self.radices)}-tuple of component indices, got {obj!r}"
            )
        i = 0
        for digit, r, d in zip(obj, self.radices, self.divs):
            if not 0 <= digit < r:
                raise InvalidArgumentError(f"component {digit} out of range 0..{r - 1}")
            i += digit * d
        return i

    def show(self, i: int) -> str:
        return "(" + ",".join(str(d) for d in self.decode(i)) + ")"


class PolyCodec(TupleCodec):
    """Coefficient tuples (a0, ..., a_{n-1}), degree 0 first."""

    kind = "poly"

    def show(self, i: int) -> str:
        return "poly(" + ",".join(str(d) for d in self.decode(i)) + ")"


class MatrixCodec:
    """Row-major n-by-n matrices with entries given as base-ring indices."""

    kind = "matrix"

    def __init__(self, base_size: int, n: int):
        self.base_size = base_size
        self.n = n

    def decode(self, i: int) -> list[list[int]]:
        n, b = self.n, self.base_size
        flat = []
        for _ in range(n * n):
            i, digit = divmod(i, b)
            flat.append(digit)
        return [flat[r * n : (r + 1) * n] for r in range(n)]

    def encode(self, obj) -> int:
        n, b = self.n, self.base_size
        if (
            not isinstance(obj, (list, tuple))
            or len(obj) != n
            or any(not isinstance(row, (list, tuple)) or len(row) != n for row in obj)
        ):
            raise InvalidArgumentError(f"expected an {n}x{n} matrix of entry indices, got {obj!r}")
        i = 0
        for r in range(n - 1, -1, -1):
            for c in range(n - 1, -1, -1):
                e = obj[r][c]
                if not isinstance(e, int) or not 0 <= e < b:
                    raise InvalidArgumentError(f"entry {e!r} out of range 0..{b - 1}")
                i = i * b + e
        return i

    def show(self, i: int) -> str:
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in self.decode(i)) + "]"


class UpperTriangularCodec:
    """n-by-n upper triangular matrices; only the n(n+1)/2 stored entries vary."""

    kind = "ut"

    def __init__(self, base_size: int, n: int):
        self.base_size = base_size
        self.n = n
        self.positions = [(r, c) for r in range(n) for c in range(r, n)]

    def decode(self, i: int) -> list[list[int]]:
        n, b = self.n, self.base_size
        mat = [[0] * n for _ in range(n)]
        for r, c in self.positions:
            i, digit = divmod(i, b)
            mat[r][c] = digit
        return mat

    def encode(self, obj) -> int:
        n, b = self.n, self.base_size
        if (
            not isinstance(obj, (list, tuple))
            or len(obj) != n
            or any(not isinstance(row, (list, tuple)) or len(row) != n for row in obj)
        ):
            raise InvalidArgumentError(f"expected an {n}x{n} matrix of entry indices, got {obj!r}")
        for r in range(n):
            for c in range(r):
                if obj[r][c] != 0:
                    raise InvalidArgumentError("below-diagonal entries must be zero")
        i = 0
        for r, c in reversed(self.positions):
            e = obj[r][c]
            if not isinstance(e, int) or not 0 <= e < b:
                raise InvalidArgumentError(f"entry {e!r} out of range 0..{b - 1}")
            i = i * b + e
        return i

    def show(self, i: int) -> str:
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in self.decode(i)) + "]"


class PairCodec:
    """Unital-adjunction pairs (eps, a) with eps in {0, 1}."""

    kind = "pair"

    def __init__(self, alg_size: int):
        self.alg_size = alg_size

    def decode(self, i: int) -> tuple[int, int]:
        return (i % 2, i // 2)

    def encode(self, obj) -> int:
        if not isinstance(obj, (tuple, list)) or len(obj) != 2:
            raise InvalidArgumentError(f"expected a pair (eps, a), got {obj!r}")
        eps, a = obj
        if eps not in (0, 1) or not 0 <= a < self.alg_size:
            raise InvalidArgumentError(f"pair {obj!r} out of range")
        return eps + 2 * a

    def show(self, i: int) -> str:
        eps, a = self.decode(i)
        return f"({eps},{a})"


# ---------------------------------------------------------------------------
# core structures


class _IndexedOps:
    """Shared machinery for index-based finite additive/multiplicative tables."""

    def __init__(self, size, add, mul, neg, label, *, bulk=None, codec=None,
                 char_two=False, add_is_xor=False):
        self.size = int(size)
        self.add = add
        self.mul = mul
        self.neg = neg
        self.label = label
        self.codec = codec if codec is not None else AtomCodec()
        self.char_two = char_two
        self.add_is_xor = add_is_xor
        self._bulk = bulk
        self._cache: dict = {}

    # freeze-on-first-compute: duplicated work is allowed, the stored value
    # is whichever landed first and computations are deterministic.
    def freeze(self, key: str, compute: Callable[[], object]):
        cache = self._cache
        if key not in cache:
            value = compute()
            cache.setdefault(key, value)
        return cache[key]

    def elements(self) -> Array:
        return np.arange(self.size, dtype=np.int64)

    def _fallback(self, fn, a: Array, b: Optional[Array] = None) -> Array:
        if b is None:
            it = (fn(int(x)) for x in a.ravel())
        else:
            it = (fn(int(x), int(y)) for x, y in zip(a.ravel(), b.ravel()))
        out = np.fromiter(it, dtype=np.int64, count=a.size)
        return out.reshape(a.shape)

    def add_many(self, i, j) -> Array:
        a, b = _pair(i, j)
        if self.add_is_xor:
            return a ^ b
        if self._bulk is not None:
            return self._bulk.add(a, b)
        return self._fallback(self.add, a, b)

    def mul_many(self, i, j) -> Array:
        a, b = _pair(i, j)
        if self._bulk is not None:
            return self._bulk.mul(a, b)
        return self._fallback(self.mul, a, b)

    def neg_many(self, i) -> Array:
        a = _idx(i)
        if self.char_two:
            return a.copy()
        if self._bulk is not None:
            return self._bulk.neg(a)
        return self._fallback(self.neg, a)

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def sub_many(self, i, j) -> Array:
        a, b = _pair(i, j)
        if self.add_is_xor:
            return a ^ b
        return self.add_many(a, self.neg_many(b))

    def op_table(self, kind: str) -> Array:
        """Full Cayley table for 'add' or 'mul'; only for small structures."""
        if self.size > TABLE_LIMIT:
            raise SizeCapError(
                f"refusing to materialize a {self.size}x{self.size} table", self.size * self.size
            )

        def build():
            idx = self.elements()
            left = np.repeat(idx, self.size)
            right = np.tile(idx, self.size)
            fn = self.add_many if kind == "add" else self.mul_many
            return fn(left, right).reshape(self.size, self.size)

        return self.freeze(f"table:{kind}", build)

    def show(self, i: int) -> str:
        return self.codec.show(i)

    def __repr__(self):
        return f"<{type(self).__name__} {self.label!r} size={self.size}>"


class FiniteRing(_IndexedOps):
    """Immutable finite unital ring with indexed elements.

    `units_hint`, when present, is a zero-argument callable returning
    (units_array, inverse_array_or_None); it is validated before use.
    """

    def __init__(self, size, add, mul, neg, *, one, zero=0, label, bulk=None,
                 codec=None, char_two=False, add_is_xor=False, units_hint=None):
        if size < 2:
            raise InvalidSizeError("a ring needs at least 2 elements (one != zero)")
        if not (0 <= zero < size and 0 <= one < size):
            raise InvalidSizeError("zero/one indices out of range")
        if zero == one:
            raise InvalidSizeError("trivial ring excluded: one must differ from zero")
        super().__init__(size, add, mul, neg, label, bulk=bulk, codec=codec,
                         char_two=char_two, add_is_xor=add_is_xor)
        self.zero = int(zero)
        self.one = int(one)
        self.units_hint = units_hint


class NonUnitalAlgebra(_IndexedOps):
    """Finite algebra without a multiplicative identity; zero is index 0.

    The characteristic-2 flag is computed, not declared: it is true iff
    a + a = 0 for every element.
    """

    def __init__(self, size, add, mul, neg, *, label, bulk=None, codec=None,
                 add_is_xor=False):
        if size < 1:
            raise InvalidSizeError("an algebra needs at least 1 element")
        super().__init__(size, add, mul, neg, label, bulk=bulk, codec=codec,
                         char_two=False, add_is_xor=add_is_xor)
        self.zero = 0
        idx = self.elements()
        if not np.array_equal(self.add_many(0, idx), idx):
            raise InvalidArgumentError("index 0 must be the additive identity")
        self.char_two = bool(np.all(self.add_many(idx, idx) == 0))


# ---------------------------------------------------------------------------
# digit helpers for the structured constructors


def _uniform_digits(size: int, base: int, count: int):
    """Return digits(I) -> (len(I), count) array for base-`base` encodings."""
    divs = np.array([base**k for k in range(count)], dtype=np.int64)
    if size <= DIGIT_CACHE_LIMIT:
        table = (np.arange(size, dtype=np.int64)[:, None] // divs[None, :]) % base

        def digits(I: Array) -> Array:
            return table[I]

    else:

        def digits(I: Array) -> Array:
            return (I[:, None] // divs[None, :]) % base

    return digits, divs


def _base_vec_ops(base: _IndexedOps):
    """Vectorized base ops, preferring table gathers for small bases."""
    if base.size <= TABLE_LIMIT:
        add_t = base.op_table("add")
        mul_t = base.op_table("mul")
        neg_t = base.neg_many(base.elements())
        return (
            lambda x, y: add_t[x, y],
            lambda x, y: mul_t[x, y],
            lambda x: neg_t[x],
        )
    return base.add_many, base.mul_many, base.neg_many


# ---------------------------------------------------------------------------
# ring constructors


def make_zmod(n: int, *, cap: Optional[int] = None, label: Optional[str] = None) -> FiniteRing:
    """Ring of integers modulo n; index i represents the residue i."""
    if n < 2:
        raise InvalidSizeError(f"modulus must be >= 2, got {n} (trivial ring excluded)")
    _check_cap(n, cap, f"Z{n}")

    def units_hint():
        idx = np.arange(n, dtype=np.int64)
        units = idx[np.gcd(idx, n) == 1]
        inv = np.full(n, -1, dtype=np.int64)
        for u in units.tolist():
            inv[u] = pow(u, -1, n)
        return units, inv

    bulk = BulkOps(
        add=lambda a, b: (a + b) % n,
        mul=lambda a, b: (a * b) % n,
        neg=lambda a: (-a) % n,
    )
    return FiniteRing(
        n,
        lambda i, j: (i + j) % n,
        lambda i, j: (i * j) % n,
        lambda i: (-i) % n,
        one=1,
        label=label or f"Z{n}",
        bulk=bulk,
        char_two=(n == 2),
        add_is_xor=(n == 2),
        units_hint=units_hint,
    )


def make_boolean(k: int, *, cap: Optional[int] = None, label: Optional[str] = None) -> FiniteRing:
    """Boolean ring F2^k on k-bit vectors: XOR addition, AND multiplication."""
    if k < 1:
        raise InvalidSizeError(f"need at least 1 bit, got {k}")
    size = 1 << k
    _check_cap(size, cap, f"B{k}")
    bulk = BulkOps(add=lambda a, b: a ^ b, mul=lambda a, b: a & b, neg=lambda a: a.copy())
    return FiniteRing(
        size,
        lambda i, j: i ^ j,
        lambda i, j: i & j,
        lambda i: i,
        one=size - 1,
        label=label or f"B{k}",
        bulk=bulk,
        char_two=True,
        add_is_xor=True,
    )


def make_product(factors: Sequence[FiniteRing], *, cap: Optional[int] = None,
                 label: Optional[str] = None) -> FiniteRing:
    """Direct product with componentwise operations and mixed-radix encoding."""
    if not factors:
        raise InvalidArgumentError("a product needs at least one factor")
    factors = list(factors)
    size = 1
    for f in factors:
        size *= f.size
    _check_cap(size, cap, "product ring")
    codec = TupleCodec([f.size for f in factors])
    divs = codec.divs
    sizes = codec.radices

    def scalar(op_name):
        ops = [getattr(f, op_name) for f in factors]

        def op(i, j):
            out = 0
            for k in range(len(factors)):
                out += ops[k]((i // divs[k]) % sizes[k], (j // divs[k]) % sizes[k]) * divs[k]
            return out

        return op

    neg_ops = [f.neg for f in factors]

    def neg(i):
        out = 0
        for k in range(len(factors)):
            out += neg_ops[k]((i // divs[k]) % sizes[k]) * divs[k]
        return out

    vec = [_base_vec_ops(f) for f in factors]

    def bulk_bin(which):
        def op(a, b):
            out = np.zeros_like(a)
            for k, f in enumerate(factors):
                da = (a // divs[k]) % sizes[k]
                db = (b // divs[k]) % sizes[k]
                out += vec[k][which](da, db) * divs[k]
            return out

        return op

    def bulk_neg(a):
        out = np.zeros_like(a)
        for k in range(len(factors)):
            out += vec[k][2]((a // divs[k]) % sizes[k]) * divs[k]
        return out

    one = codec.encode(tuple(f.one for f in factors))
    return FiniteRing(
        size,
        scalar("add"),
        scalar("mul"),
        neg,
        one=one,
        label=label or " x ".join(f.label for f in factors),
        bulk=BulkOps(bulk_bin(0), bulk_bin(1), bulk_neg),
        codec=codec,
        char_two=all(f.char_two for f in factors),
        add_is_xor=all(f.add_is_xor for f in factors),
    )


def make_matrix_ring(base: FiniteRing, n: int, *, cap: Optional[int] = None,
                     label: Optional[str] = None) -> FiniteRing:
    """Full n-by-n matrix ring over `base`, row-major mixed-radix encoded."""
    if n < 1:
        raise InvalidArgumentError(f"matrix dimension must be >= 1, got {n}")
    size = base.size ** (n * n)
    _check_cap(size, cap, f"M({n},{base.label})")
    codec = MatrixCodec(base.size, n)
    b = base.size
    m = n * n

    packed_f2 = base.size == 2 and base.zero == 0 and base.one == 1 and n <= gf2.MAX_DIM

    digits, divs = _uniform_digits(size, b, m)
    badd, bmul, bneg = _base_vec_ops(base)

    def scalar_add(i, j):
        out = 0
        for k in range(m):
            out += base.add((i // int(divs[k])) % b, (j // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_neg(i):
        out = 0
        for k in range(m):
            out += base.neg((i // int(divs[k])) % b) * int(divs[k])
        return out

    if packed_f2:
        def scalar_mul(i, j):
            return gf2.matmul(i, j, n)
    else:
        def scalar_mul(i, j):
            A = [(i // int(divs[k])) % b for k in range(m)]
            B = [(j // int(divs[k])) % b for k in range(m)]
            out = 0
            for r in range(n):
                for c in range(n):
                    acc = base.mul(A[r * n], B[c])
                    for k in range(1, n):
                        acc = base.add(acc, base.mul(A[r * n + k], B[k * n + c]))
                    out += acc * int(divs[r * n + c])
            return out

    def bulk_add(a, bb):
        da, db = digits(a), digits(bb)
        return badd(da, db) @ divs

    def bulk_neg(a):
        return bneg(digits(a)) @ divs

    if packed_f2:
        def bulk_mul(a, bb):
            return gf2.matmul_bulk(a, bb, n)
    else:
        def bulk_mul(a, bb):
            da, db = digits(a), digits(bb)
            out = np.empty_like(da)
            for r in range(n):
                for c in range(n):
                    acc = bmul(da[:, r * n], db[:, c])
                    for k in range(1, n):
                        acc = badd(acc, bmul(da[:, r * n + k], db[:, k * n + c]))
                    out[:, r * n + c] = acc
            return out @ divs

    one = codec.encode([[base.one if r == c else base.zero for c in range(n)] for r in range(n)])
    return FiniteRing(
        size,
        scalar_add,
        scalar_mul,
        scalar_neg,
        one=one,
        label=label or f"M({n},{base.label})",
        bulk=BulkOps(bulk_add, bulk_mul, bulk_neg),
        codec=codec,
        char_two=base.char_two,
        add_is_xor=base.add_is_xor,
    )


def make_ut_ring(base: FiniteRing, n: int, *, cap: Optional[int] = None,
                 label: Optional[str] = None) -> FiniteRing:
    """Upper triangular n-by-n matrices; only stored entries are encoded."""
    if n < 2:
        raise InvalidArgumentError(f"upper-triangular dimension must be >= 2, got {n}")
    m = n * (n + 1) // 2
    size = base.size**m
    _check_cap(size, cap, f"UT({n},{base.label})")
    codec = UpperTriangularCodec(base.size, n)
    b = base.size
    positions = codec.positions
    pos_of = {rc: k for k, rc in enumerate(positions)}

    digits, divs = _uniform_digits(size, b, m)
    badd, bmul, bneg = _base_vec_ops(base)

    def scalar_add(i, j):
        out = 0
        for k in range(m):
            out += base.add((i // int(divs[k])) % b, (j // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_neg(i):
        out = 0
        for k in range(m):
            out += base.neg((i // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_mul(i, j):
        A = [(i // int(divs[k])) % b for k in range(m)]
        B = [(j // int(divs[k])) % b for k in range(m)]
        out = 0
        for r, c in positions:
            acc = base.mul(A[pos_of[(r, r)]], B[pos_of[(r, c)]])
            for k in range(r + 1, c + 1):
                acc = base.add(acc, base.mul(A[pos_of[(r, k)]], B[pos_of[(k, c)]]))
            out += acc * int(divs[pos_of[(r, c)]])
        return out

    def bulk_add(a, bb):
        return badd(digits(a), digits(bb)) @ divs

    def bulk_neg(a):
        return bneg(digits(a)) @ divs

    def bulk_mul(a, bb):
        da, db = digits(a), digits(bb)
        out = np.empty_like(da)
        for r, c in positions:
            acc = bmul(da[:, pos_of[(r, r)]], db[:, pos_of[(r, c)]])
            for k in range(r + 1, c + 1):
                acc = badd(acc, bmul(da[:, pos_of[(r, k)]], db[:, pos_of[(k, c)]]))
            out[:, pos_of[(r, c)]] = acc
        return out @ divs

    one = codec.encode([[base.one if r == c else base.zero for c in range(n)] for r in range(n)])
    return FiniteRing(
        size,
        scalar_add,
        scalar_mul,
        scalar_neg,
        one=one,
        label=label or f"UT({n},{base.label})",
        bulk=BulkOps(bulk_add, bulk_mul, bulk_neg),
        codec=codec,
        char_two=base.char_two,
        add_is_xor=base.add_is_xor,
    )


class Endomorphism:
    """A verified unital ring endomorphism given as a total index map."""

    def __init__(self, ring: FiniteRing, mapping, name: str = "endo", *, verified=False):
        self.ring = ring
        self.map = _idx(mapping)
        self.name = name
        if not verified:
            report = check_endomorphism(ring, self.map)
            if not report.ok:
                raise InvalidEndomorphismError(
                    f"{name} is not an endomorphism of {ring.label}: {report.describe()}",
                    witness=report.witness,
                )

    def __call__(self, i: int) -> int:
        return int(self.map[i])

    @staticmethod
    def identity(ring: FiniteRing) -> "Endomorphism":
        return Endomorphism(ring, np.arange(ring.size, dtype=np.int64), "id", verified=True)

    @staticmethod
    def swap_factors(ring: FiniteRing, i: int, j: int, name: Optional[str] = None) -> "Endomorphism":
        """Exchange factors i and j (0-based) of a product ring."""
        codec = ring.codec
        if not isinstance(codec, TupleCodec) or codec.kind != "tuple":
            raise InvalidArgumentError("swap requires a product ring")
        k = len(codec.radices)
        if not (0 <= i < k and 0 <= j < k):
            raise InvalidArgumentError(f"swap positions out of range 1..{k}")
        if codec.radices[i] != codec.radices[j]:
            raise InvalidArgumentError("swap requires factors of equal size")
        idx = np.arange(ring.size, dtype=np.int64)
        di = (idx // codec.divs[i]) % codec.radices[i]
        dj = (idx // codec.divs[j]) % codec.radices[j]
        mapping = idx + (dj - di) * codec.divs[i] + (di - dj) * codec.divs[j]
        return Endomorphism(ring, mapping, name or f"swap({i + 1},{j + 1})")

    def __repr__(self):
        return f"<Endomorphism {self.name!r} on {self.ring.label!r}>"


def make_trunc_skew_poly(base: FiniteRing, sigma, n: int, *, cap: Optional[int] = None,
                         label: Optional[str] = None) -> FiniteRing:
    """Truncated skew-polynomial ring: coefficient tuples (a0, ..., a_{n-1})
    with left coefficients and the commutation rule x*a = sigma(a)*x, so
    (sum a_i x^i)(sum b_j x^j) = sum_{i+j<n} a_i * sigma^i(b_j) x^(i+j).
    """
    if n < 2:
        raise InvalidArgumentError(f"truncation degree must be >= 2, got {n}")
    if not isinstance(sigma, Endomorphism):
        sigma = Endomorphism(base, sigma, "sigma")  # raises if the map fails the laws
    elif sigma.ring is not base:
        raise InvalidArgumentError("sigma must be an endomorphism of the coefficient ring")
    size = base.size**n
    _check_cap(size, cap, f"T({base.label},{sigma.name},{n})")
    codec = PolyCodec([base.size] * n)
    b = base.size

    sig_pows = [np.arange(b, dtype=np.int64)]
    for _ in range(n - 1):
        sig_pows.append(sigma.map[sig_pows[-1]])

    digits, divs = _uniform_digits(size, b, n)
    badd, bmul, bneg = _base_vec_ops(base)

    def scalar_add(i, j):
        out = 0
        for k in range(n):
            out += base.add((i // int(divs[k])) % b, (j // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_neg(i):
        out = 0
        for k in range(n):
            out += base.neg((i // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_mul(i, j):
        A = [(i // int(divs[k])) % b for k in range(n)]
        B = [(j // int(divs[k])) % b for k in range(n)]
        out = 0
        for k in range(n):
            acc = base.zero
            for t in range(k + 1):
                acc = base.add(acc, base.mul(A[t], int(sig_pows[t][B[k - t]])))
            out += acc * int(divs[k])
        return out

    def bulk_add(a, bb):
        return badd(digits(a), digits(bb)) @ divs

    def bulk_neg(a):
        return bneg(digits(a)) @ divs

    def bulk_mul(a, bb):
        da, db = digits(a), digits(bb)
        out = np.empty_like(da)
        for k in range(n):
            acc = bmul(da[:, 0], db[:, k])
            for t in range(1, k + 1):
                acc = badd(acc, bmul(da[:, t], sig_pows[t][db[:, k - t]]))
            out[:, k] = acc
        return out @ divs

    one = codec.encode(tuple([base.one] + [base.zero] * (n - 1)))
    return FiniteRing(
        size,
        scalar_add,
        scalar_mul,
        scalar_neg,
        one=one,
        label=label or f"T({base.label},{sigma.name},{n})",
        bulk=BulkOps(bulk_add, bulk_mul, bulk_neg),
        codec=codec,
        char_two=base.char_two,
        add_is_xor=base.add_is_xor,
    )


def _verify_ideal_subset(ring: FiniteRing, elements: Array) -> None:
    """Raise InvalidIdealError unless the subset is a two-sided ideal."""
    mask = np.zeros(ring.size, dtype=bool)
    mask[elements] = True
    if not mask[ring.zero]:
        raise InvalidIdealError("an ideal must contain zero")
    left = np.repeat(elements, elements.size)
    right = np.tile(elements, elements.size)
    if not mask[ring.add_many(left, right)].all():
        raise InvalidIdealError("subset not closed under addition")
    if not mask[ring.neg_many(elements)].all():
        raise InvalidIdealError("subset not closed under negation")
    idx = ring.elements()
    for a in elements.tolist():
        if not mask[ring.mul_many(idx, a)].all() or not mask[ring.mul_many(a, idx)].all():
            raise InvalidIdealError(f"subset not absorbing at element {a}")


def make_quotient(ring: FiniteRing, ideal, *, label: Optional[str] = None,
                  check: bool = True) -> tuple[FiniteRing, Array]:
    """Quotient by a two-sided ideal, on minimal coset representatives.

    `ideal` may be an Ideal object or any iterable of element indices.
    Returns the quotient ring together with the projection a -> a-bar as a
    total index map.
    """
    elements = getattr(ideal, "elements", ideal)
    I = np.unique(_idx(list(elements)))
    if I.size and (I[0] < 0 or I[-1] >= ring.size):
        raise InvalidArgumentError("ideal elements out of range")
    if check:
        _verify_ideal_subset(ring, I)
    mask = np.zeros(ring.size, dtype=bool)
    mask[I] = True
    if mask[ring.one]:
        raise ImproperIdealError("ideal contains one; the quotient would be trivial")

    # minimal index per coset a + I
    idx = ring.elements()
    rep = np.empty(ring.size, dtype=np.int64)
    for lo in range(0, ring.size, _CHUNK):
        chunk = idx[lo : lo + _CHUNK]
        cosets = ring.add_many(np.repeat(chunk, I.size), np.tile(I, chunk.size))
        rep[chunk] = cosets.reshape(chunk.size, I.size).min(axis=1)

    reps = np.unique(rep)
    qpos = np.full(ring.size, -1, dtype=np.int64)
    qpos[reps] = np.arange(reps.size)
    proj = qpos[rep]
    qsize = int(reps.size)

    left = np.repeat(reps, qsize)
    right = np.tile(reps, qsize)
    add_t = proj[ring.add_many(left, right)].reshape(qsize, qsize)
    mul_t = proj[ring.mul_many(left, right)].reshape(qsize, qsize)
    neg_t = proj[ring.neg_many(reps)]

    quotient = FiniteRing(
        qsize,
        lambda i, j: int(add_t[i, j]),
        lambda i, j: int(mul_t[i, j]),
        lambda i: int(neg_t[i]),
        one=int(proj[ring.one]),
        zero=int(proj[ring.zero]),
        label=label or f"{ring.label}/I{I.size}",
        bulk=BulkOps(
            lambda a, b: add_t[a, b],
            lambda a, b: mul_t[a, b],
            lambda a: neg_t[a],
        ),
        char_two=bool(np.all(add_t[np.arange(qsize), np.arange(qsize)] == proj[ring.zero])),
    )
    return quotient, proj


def adjoin_unity(alg: NonUnitalAlgebra, *, cap: Optional[int] = None,
                 label: Optional[str] = None) -> FiniteRing:
    """Adjoin a unity over F2: pairs (eps, a) with
    (eps, a)(delta, b) = (eps*delta, eps*b + delta*a + ab).
    """
    if not alg.char_two:
        raise UnsupportedCharacteristicError(
            f"{alg.label} does not have characteristic 2; cannot adjoin an F2 unity"
        )
    size = 2 * alg.size
    _check_cap(size, cap, f"({alg.label})*")
    codec = PairCodec(alg.size)

    def scalar_add(i, j):
        return ((i ^ j) & 1) + 2 * alg.add(i >> 1, j >> 1)

    def scalar_mul(i, j):
        e, a = i & 1, i >> 1
        d, b = j & 1, j >> 1
        out = alg.mul(a, b)
        if e:
            out = alg.add(out, b)
        if d:
            out = alg.add(out, a)
        return (e & d) + 2 * out

    def scalar_neg(i):
        return (i & 1) + 2 * alg.neg(i >> 1)

    aadd, amul, aneg = _base_vec_ops(alg)

    def bulk_add(x, y):
        return ((x ^ y) & 1) + 2 * aadd(x >> 1, y >> 1)

    def bulk_mul(x, y):
        e, a = x & 1, x >> 1
        d, b = y & 1, y >> 1
        out = amul(a, b)
        out = aadd(out, np.where(e == 1, b, 0))
        out = aadd(out, np.where(d == 1, a, 0))
        return (e & d) + 2 * out

    def bulk_neg(x):
        return (x & 1) + 2 * aneg(x >> 1)

    return FiniteRing(
        size,
        scalar_add,
        scalar_mul,
        scalar_neg,
        one=1,
        label=label or f"({alg.label})*",
        bulk=BulkOps(bulk_add, bulk_mul, bulk_neg),
        codec=codec,
        char_two=True,
        add_is_xor=alg.add_is_xor,
    )


# ---------------------------------------------------------------------------
# non-unital algebra constructors (instruments for the nil-algebra checks)


def strictly_upper_algebra(base: FiniteRing, n: int, *, cap: Optional[int] = None,
                           label: Optional[str] = None) -> NonUnitalAlgebra:
    """Strictly upper triangular n-by-n matrices over `base` (a nil algebra)."""
    if n < 2:
        raise InvalidArgumentError(f"need dimension >= 2, got {n}")
    positions = [(r, c) for r in range(n) for c in range(r + 1, n)]
    m = len(positions)
    size = base.size**m
    _check_cap(size, cap, f"su({n},{base.label})")
    pos_of = {rc: k for k, rc in enumerate(positions)}
    b = base.size
    digits, divs = _uniform_digits(size, b, m)
    badd, bmul, bneg = _base_vec_ops(base)

    def scalar_add(i, j):
        out = 0
        for k in range(m):
            out += base.add((i // int(divs[k])) % b, (j // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_neg(i):
        out = 0
        for k in range(m):
            out += base.neg((i // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_mul(i, j):
        A = [(i // int(divs[k])) % b for k in range(m)]
        B = [(j // int(divs[k])) % b for k in range(m)]
        out = 0
        for r, c in positions:
            acc = base.zero
            for k in range(r + 1, c):
                acc = base.add(acc, base.mul(A[pos_of[(r, k)]], B[pos_of[(k, c)]]))
            out += acc * int(divs[pos_of[(r, c)]])
        return out

    def bulk_add(x, y):
        return badd(digits(x), digits(y)) @ divs

    def bulk_neg(x):
        return bneg(digits(x)) @ divs

    def bulk_mul(x, y):
        da, db = digits(x), digits(y)
        out = np.zeros_like(da)
        for r, c in positions:
            acc = None
            for k in range(r + 1, c):
                term = bmul(da[:, pos_of[(r, k)]], db[:, pos_of[(k, c)]])
                acc = term if acc is None else badd(acc, term)
            if acc is not None:
                out[:, pos_of[(r, c)]] = acc
        return out @ divs

    return NonUnitalAlgebra(
        size,
        scalar_add,
        scalar_mul,
        scalar_neg,
        label=label or f"su({n},{base.label})",
        bulk=BulkOps(bulk_add, bulk_mul, bulk_neg),
        codec=TupleCodec([b] * m),
        add_is_xor=base.add_is_xor,
    )


def poly_nil_algebra(base: FiniteRing, n: int, *, cap: Optional[int] = None,
                     label: Optional[str] = None) -> NonUnitalAlgebra:
    """The algebra x*base[x]/(x^n): polynomials with zero constant term."""
    if n < 2:
        raise InvalidArgumentError(f"truncation degree must be >= 2, got {n}")
    m = n - 1  # coefficients of x^1 .. x^(n-1)
    size = base.size**m
    _check_cap(size, cap, f"x{base.label}[x]/(x^{n})")
    b = base.size
    digits, divs = _uniform_digits(size, b, m)
    badd, bmul, bneg = _base_vec_ops(base)

    def scalar_add(i, j):
        out = 0
        for k in range(m):
            out += base.add((i // int(divs[k])) % b, (j // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_neg(i):
        out = 0
        for k in range(m):
            out += base.neg((i // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_mul(i, j):
        A = [(i // int(divs[k])) % b for k in range(m)]  # A[k] is the x^(k+1) coefficient
        B = [(j // int(divs[k])) % b for k in range(m)]
        out = 0
        for k in range(m):  # degree k+1 output
            acc = base.zero
            for t in range(k):  # x^(t+1) * x^(k-t): (t+1) + (k-t) = k+1
                acc = base.add(acc, base.mul(A[t], B[k - t - 1]))
            out += acc * int(divs[k])
        return out

    def bulk_add(x, y):
        return badd(digits(x), digits(y)) @ divs

    def bulk_neg(x):
        return bneg(digits(x)) @ divs

    def bulk_mul(x, y):
        da, db = digits(x), digits(y)
        out = np.zeros_like(da)
        for k in range(m):
            acc = None
            for t in range(k):
                term = bmul(da[:, t], db[:, k - t - 1])
                acc = term if acc is None else badd(acc, term)
            if acc is not None:
                out[:, k] = acc
        return out @ divs

    return NonUnitalAlgebra(
        size,
        scalar_add,
        scalar_mul,
        scalar_neg,
        label=label or f"x{base.label}[x]/(x^{n})",
        bulk=BulkOps(bulk_add, bulk_mul, bulk_neg),
        codec=TupleCodec([b] * m),
        add_is_xor=base.add_is_xor,
    )


def matrix_algebra(alg: NonUnitalAlgebra, n: int, *, cap: Optional[int] = None,
                   label: Optional[str] = None) -> NonUnitalAlgebra:
    """n-by-n matrices with entries in a non-unital algebra."""
    if n < 1:
        raise InvalidArgumentError(f"matrix dimension must be >= 1, got {n}")
    m = n * n
    size = alg.size**m
    _check_cap(size, cap, f"M({n},{alg.label})")
    b = alg.size
    digits, divs = _uniform_digits(size, b, m)
    badd, bmul, bneg = _base_vec_ops(alg)

    def scalar_add(i, j):
        out = 0
        for k in range(m):
            out += alg.add((i // int(divs[k])) % b, (j // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_neg(i):
        out = 0
        for k in range(m):
            out += alg.neg((i // int(divs[k])) % b) * int(divs[k])
        return out

    def scalar_mul(i, j):
        A = [(i // int(divs[k])) % b for k in range(m)]
        B = [(j // int(divs[k])) % b for k in range(m)]
        out = 0
        for r in range(n):
            for c in range(n):
                acc = alg.mul(A[r * n], B[c])
                for k in range(1, n):
                    acc = alg.add(acc, alg.mul(A[r * n + k], B[k * n + c]))
                out += acc * int(divs[r * n + c])
        return out

    def bulk_add(x, y):
        return badd(digits(x), digits(y)) @ divs

    def bulk_neg(x):
        return bneg(digits(x)) @ divs

    def bulk_mul(x, y):
        da, db = digits(x), digits(y)
        out = np.empty_like(da)
        for r in range(n):
            for c in range(n):
                acc = bmul(da[:, r * n], db[:, c])
                for k in range(1, n):
                    acc = badd(acc, bmul(da[:, r * n + k], db[:, k * n + c]))
                out[:, r * n + c] = acc
        return out @ divs

    return NonUnitalAlgebra(
        size,
        scalar_add,
        scalar_mul,
        scalar_neg,
        label=label or f"M({n},{alg.label})",
        bulk=BulkOps(bulk_add, bulk_mul, bulk_neg),
        codec=MatrixCodec(b, n),
        add_is_xor=alg.add_is_xor,
    )


def algebra_from_ideal(ring: FiniteRing, elements: Iterable[int], *,
                       label: Optional[str] = None, check: bool = True) -> NonUnitalAlgebra:
    """View a two-sided ideal as a non-unital algebra, re-indexed from 0."""
    I = np.unique(_idx(list(elements)))
    if check:
        _verify_ideal_subset(ring, I)
    pos = np.full(ring.size, -1, dtype=np.int64)
    pos[I] = np.arange(I.size)

    return NonUnitalAlgebra(
        int(I.size),
        lambda i, j: int(pos[ring.add(int(I[i]), int(I[j]))]),
        lambda i, j: int(pos[ring.mul(int(I[i]), int(I[j]))]),
        lambda i: int(pos[ring.neg(int(I[i]))]),
        label=label or f"ideal({I.size}) of {ring.label}",
        bulk=BulkOps(
            lambda a, b: pos[ring.add_many(I[a], I[b])],
            lambda a, b: pos[ring.mul_many(I[a], I[b])],
            lambda a: pos[ring.neg_many(I[a])],
        ),
    )


# ---------------------------------------------------------------------------
# axiom and endomorphism checking


class AxiomReport:
    """Outcome of an axiom scan: pass, or a named axiom with a witness triple."""

    def __init__(self, ok: bool, axiom=None, witness=None, mode="exhaustive", notice=None):
        self.ok = ok
        self.axiom = axiom
        self.witness = witness
        self.mode = mode
        self.notice = notice

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"pass ({self.mode})"
        return f"{self.axiom} fails at {self.witness}"

    def __repr__(self):
        return f"<AxiomReport {self.describe()}>"


def _axiom_checks(s: _IndexedOps, unital: bool):
    zero = s.zero
    checks = [
        ("add-commutativity", lambda a, b, c: s.add_many(a, b) == s.add_many(b, a)),
        ("add-associativity",
         lambda a, b, c: s.add_many(s.add_many(a, b), c) == s.add_many(a, s.add_many(b, c))),
        ("zero-neutral", lambda a, b, c: s.add_many(a, zero) == a),
        ("neg-inverse", lambda a, b, c: s.add_many(a, s.neg_many(a)) == zero),
        ("mul-associativity",
         lambda a, b, c: s.mul_many(s.mul_many(a, b), c) == s.mul_many(a, s.mul_many(b, c))),
        ("left-distributivity",
         lambda a, b, c: s.mul_many(a, s.add_many(b, c)) == s.add_many(s.mul_many(a, b), s.mul_many(a, c))),
        ("right-distributivity",
         lambda a, b, c: s.mul_many(s.add_many(a, b), c) == s.add_many(s.mul_many(a, c), s.mul_many(b, c))),
    ]
    if unital:
        one = s.one
        checks.insert(5, ("one-neutral",
                          lambda a, b, c: (s.mul_many(one, a) == a) & (s.mul_many(a, one) == a)))
    return checks


def _scan_axioms(s: _IndexedOps, unital: bool, triples) -> AxiomReport:
    checks = _axiom_checks(s, unital)
    for a, b, c in triples:
        for name, law in checks:
            ok = law(a, b, c)
            if not ok.all():
                k = int(np.argmin(ok))
                return AxiomReport(False, name, (int(a[k]), int(b[k]), int(c[k])))
    return AxiomReport(True)


def check_ring_axioms(ring: FiniteRing, mode: str = "exhaustive", *,
                      samples: int = DEFAULT_SAMPLE_TRIPLES, seed: int = 0) -> AxiomReport:
    """Check the ring axioms exhaustively or on sampled triples.

    Exhaustive mode silently downgrades to sampling (with a notice) when
    size**3 would be too much work.
    """
    return _check_axioms_impl(ring, True, mode, samples, seed)


def check_algebra_axioms(alg: NonUnitalAlgebra, mode: str = "exhaustive", *,
                         samples: int = DEFAULT_SAMPLE_TRIPLES, seed: int = 0) -> AxiomReport:
    """Axiom scan for non-unital algebras (no identity laws)."""
    return _check_axioms_impl(alg, False, mode, samples, seed)


def _check_axioms_impl(s, unital, mode, samples, seed) -> AxiomReport:
    notice = None
    if mode == "exhaustive" and s.size > AXIOM_EXHAUSTIVE_LIMIT:
        mode = "sampled"
        notice = (
            f"size {s.size} exceeds the exhaustive cap {AXIOM_EXHAUSTIVE_LIMIT}; "
            f"sampled {samples} random triples instead"
        )
    if mode == "exhaustive":
        report = _exhaustive_axiom_scan(s, unital)
    elif mode == "sampled":
        rng = np.random.default_rng(seed)

        def triples():
            left = samples
            while left > 0:
                k = min(left, _CHUNK)
                yield (rng.integers(0, s.size, k), rng.integers(0, s.size, k),
                       rng.integers(0, s.size, k))
                left -= k

        report = _scan_axioms(s, unital, triples())
    else:
        raise InvalidArgumentError(f"unknown mode {mode!r}")
    report.mode = mode
    report.notice = notice
    return report


def _exhaustive_axiom_scan(s, unital: bool) -> AxiomReport:
    """Whole-grid axiom scan over full Cayley tables (size <= 256 only).

    Triple laws are checked in row slabs via 3-d table indexing, which keeps
    peak memory small while staying fully vectorized.
    """
    at = s.op_table("add")
    mt = s.op_table("mul")
    idx = s.elements()
    neg = s.neg_many(idx)
    zero = s.zero

    if not np.array_equal(at, at.T):
        bad = np.argwhere(at != at.T)[0]
        return AxiomReport(False, "add-commutativity", (int(bad[0]), int(bad[1]), 0))
    if not np.array_equal(at[:, zero], idx):
        a = int(np.argmax(at[:, zero] != idx))
        return AxiomReport(False, "zero-neutral", (a, zero, 0))
    if not np.all(at[idx, neg] == zero):
        a = int(np.argmax(at[idx, neg] != zero))
        return AxiomReport(False, "neg-inverse", (a, int(neg[a]), 0))
    if unital:
        one = s.one
        if not (np.array_equal(mt[one], idx) and np.array_equal(mt[:, one], idx)):
            a = int(np.argmax((mt[one] != idx) | (mt[:, one] != idx)))
            return AxiomReport(False, "one-neutral", (a, one, 0))

    slab = max(1, (1 << 22) // (s.size * s.size))
    for lo in range(0, s.size, slab):
        rows = slice(lo, min(lo + slab, s.size))
        checks = (
            ("add-associativity", at[at[rows]], at[rows, at]),
            ("mul-associativity", mt[mt[rows]], mt[rows, mt]),
            ("left-distributivity", mt[rows, at], at[mt[rows][:, :, None], mt[rows][:, None, :]]),
            ("right-distributivity", mt[at[rows]], at[mt[rows][:, None, :], mt[None, :, :]]),
        )
        for name, lhs, rhs in checks:
            if not np.array_equal(lhs, rhs):
                a, b, c = np.argwhere(lhs != rhs)[0]
                return AxiomReport(False, name, (int(a) + lo, int(b), int(c)))
    return AxiomReport(True)


class EndoReport:
    """Outcome of an endomorphism check."""

    def __init__(self, ok: bool, law=None, witness=None):
        self.ok = ok
        self.law = law
        self.witness = witness

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        return "pass" if self.ok else f"{self.law} not preserved at {self.witness}"


def check_endomorphism(ring: FiniteRing, mapping) -> EndoReport:
    """Check that an index map preserves 0, 1, addition and multiplication."""
    m = _idx(mapping)
    if m.shape != (ring.size,):
        raise InvalidArgumentError(f"map must be total on 0..{ring.size - 1}")
    if m.min() < 0 or m.max() >= ring.size:
        raise InvalidArgumentError("map values out of range")
    if int(m[ring.zero]) != ring.zero:
        return EndoReport(False, "zero", (ring.zero,))
    if int(m[ring.one]) != ring.one:
        return EndoReport(False, "one", (ring.one,))
    idx = ring.elements()
    for lo in range(0, ring.size, max(1, _CHUNK // ring.size)):
        rows = idx[lo : lo + max(1, _CHUNK // ring.size)]
        A = np.repeat(rows, ring.size)
        B = np.tile(idx, rows.size)
        ok = m[ring.add_many(A, B)] == ring.add_many(m[A], m[B])
        if not ok.all():
            k = int(np.argmin(ok))
            return EndoReport(False, "additivity", (int(A[k]), int(B[k])))
        ok = m[ring.mul_many(A, B)] == ring.mul_many(m[A], m[B])
        if not ok.all():
            k = int(np.argmin(ok))
            return EndoReport(False, "multiplicativity", (int(A[k]), int(B[k])))
    return EndoReport(True)
