import numpy as np
import pytest

from cleanrings import gf2


def unpack(a, n):
    return np.array([[(a >> (r * n + c)) & 1 for c in range(n)] for r in range(n)])


def pack(mat, n):
    out = 0
    for r in range(n):
        for c in range(n):
            out |= int(mat[r][c] & 1) << (r * n + c)
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_matmul_matches_numpy(n):
    rng = np.random.default_rng(7)
    for _ in range(200):
        a = int(rng.integers(0, 1 << (n * n)))
        b = int(rng.integers(0, 1 << (n * n)))
        want = pack(unpack(a, n) @ unpack(b, n) % 2, n)
        assert gf2.matmul(a, b, n) == want


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matmul_bulk_matches_scalar(n):
    rng = np.random.default_rng(3)
    A = rng.integers(0, 1 << (n * n), 500)
    B = rng.integers(0, 1 << (n * n), 500)
    out = gf2.matmul_bulk(A, B, n)
    for a, b, c in zip(A, B, out):
        assert gf2.matmul(int(a), int(b), n) == int(c)


def _rank_by_row_reduction(mat):
    m = [list(map(int, row)) for row in mat]
    n = len(m)
    rank = 0
    for c in range(n):
        pivot = next((r for r in range(rank, n) if m[r][c] % 2), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(n):
            if r != rank and m[r][c] % 2:
                m[r] = [(x + y) % 2 for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rank_matches_plain_row_reduction(n):
    rng = np.random.default_rng(11)
    for _ in range(200):
        a = int(rng.integers(0, 1 << (n * n)))
        assert gf2.rank(a, n) == _rank_by_row_reduction(unpack(a, n))


def test_gl_orders():
    # |GL_n(F2)| = prod (2^n - 2^k)
    for n, order in [(2, 6), (3, 168), (4, 20160)]:
        count = sum(1 for a in range(1 << (n * n)) if gf2.is_invertible(a, n))
        assert count == order


def test_inverse_roundtrip():
    n = 3
    ident = gf2.identity(n)
    for a in range(1 << (n * n)):
        inv = gf2.inverse(a, n)
        if gf2.is_invertible(a, n):
            assert inv is not None
            assert gf2.matmul(a, inv, n) == ident
            assert gf2.matmul(inv, a, n) == ident
        else:
            assert inv is None


def test_identity_neutral():
    n = 4
    ident = gf2.identity(n)
    rng = np.random.default_rng(0)
    for a in rng.integers(0, 1 << 16, 100):
        assert gf2.matmul(int(a), ident, n) == int(a)
        assert gf2.matmul(ident, int(a), n) == int(a)
