import numpy as np
import pytest

from cleanrings import (
    Endomorphism,
    FiniteRing,
    ImproperIdealError,
    InvalidArgumentError,
    InvalidEndomorphismError,
    InvalidIdealError,
    InvalidSizeError,
    SizeCapError,
    UnsupportedCharacteristicError,
    adjoin_unity,
    algebra_from_ideal,
    check_algebra_axioms,
    check_endomorphism,
    check_ring_axioms,
    make_boolean,
    make_matrix_ring,
    make_product,
    make_quotient,
    make_trunc_skew_poly,
    make_ut_ring,
    make_zmod,
    matrix_algebra,
    poly_nil_algebra,
    strictly_upper_algebra,
)
from cleanrings import structure


class TestZmod:
    def test_f2_arithmetic(self):
        r = make_zmod(2)
        assert r.size == 2 and r.one == 1 and r.add(1, 1) == 0

    def test_z4_arithmetic(self):
        r = make_zmod(4)
        assert r.mul(2, 2) == 0 and r.neg(1) == 3

    def test_trivial_rejected(self):
        with pytest.raises(InvalidSizeError):
            make_zmod(1)

    def test_cap(self):
        with pytest.raises(SizeCapError):
            make_zmod(100, cap=50)


class TestBoolean:
    def test_b1_is_f2(self):
        b1, f2 = make_boolean(1), make_zmod(2)
        for i in range(2):
            for j in range(2):
                assert b1.add(i, j) == f2.add(i, j) and b1.mul(i, j) == f2.mul(i, j)

    def test_all_idempotent(self):
        r = make_boolean(2)
        assert all(r.mul(i, i) == i for i in range(4))

    def test_bitwise_and(self):
        assert make_boolean(3).mul(0b101, 0b011) == 0b001

    def test_zero_bits_rejected(self):
        with pytest.raises(InvalidSizeError):
            make_boolean(0)


class TestProduct:
    def test_f2_squared_matches_boolean(self):
        p = make_product([make_zmod(2), make_zmod(2)])
        b = make_boolean(2)
        for i in range(4):
            for j in range(4):
                assert p.add(i, j) == b.add(i, j) and p.mul(i, j) == b.mul(i, j)

    def test_z4_times_f2(self):
        p = make_product([make_zmod(4), make_zmod(2)])
        assert p.size == 8 and p.codec.decode(p.one) == (1, 1)

    def test_f2_times_f3_is_z6(self):
        # Chinese remainder: componentwise ops agree with Z6 under (a mod 2, a mod 3)
        p = make_product([make_zmod(2), make_zmod(3)])
        z6 = make_zmod(6)
        assert p.size == 6
        assert check_ring_axioms(p).ok
        assert len(structure.units(p)) == 2
        iso = {a: p.codec.encode((a % 2, a % 3)) for a in range(6)}
        for a in range(6):
            for b in range(6):
                assert iso[z6.add(a, b)] == p.add(iso[a], iso[b])
                assert iso[z6.mul(a, b)] == p.mul(iso[a], iso[b])

    def test_single_factor_identity(self):
        z9 = make_zmod(9)
        p = make_product([z9])
        for i in range(9):
            for j in range(9):
                assert p.add(i, j) == z9.add(i, j) and p.mul(i, j) == z9.mul(i, j)

    def test_empty_rejected(self):
        with pytest.raises(InvalidArgumentError):
            make_product([])


class TestMatrixRing:
    def test_sizes(self):
        f2 = make_zmod(2)
        assert make_matrix_ring(f2, 2).size == 16
        assert make_matrix_ring(f2, 3).size == 512
        m = make_matrix_ring(make_zmod(4), 2)
        assert m.size == 256
        assert m.codec.decode(m.one) == [[1, 0], [0, 1]]

    def test_cap_names_requirement(self):
        with pytest.raises(SizeCapError) as err:
            make_matrix_ring(make_zmod(2), 9)
        assert err.value.required == 2**81

    def test_matmul_reference(self):
        # entries follow the row-by-column convention over Z4
        m = make_matrix_ring(make_zmod(4), 2)
        a = m.codec.encode([[1, 2], [3, 0]])
        b = m.codec.encode([[0, 1], [2, 2]])
        assert m.codec.decode(m.mul(a, b)) == [[0, 1], [0, 3]]


class TestUpperTriangular:
    def test_sizes(self):
        f2 = make_zmod(2)
        assert make_ut_ring(f2, 2).size == 8
        assert make_ut_ring(f2, 3).size == 64
        assert make_ut_ring(make_zmod(4), 2).size == 64

    def test_agrees_with_full_matrix_ring(self):
        f2 = make_zmod(2)
        ut = make_ut_ring(f2, 2)
        m = make_matrix_ring(f2, 2)
        emb = {i: m.codec.encode(ut.codec.decode(i)) for i in range(8)}
        for i in range(8):
            for j in range(8):
                assert emb[ut.mul(i, j)] == m.mul(emb[i], emb[j])
                assert emb[ut.add(i, j)] == m.add(emb[i], emb[j])

    def test_below_diagonal_literal_rejected(self):
        ut = make_ut_ring(make_zmod(2), 2)
        with pytest.raises(InvalidArgumentError):
            ut.codec.encode([[1, 0], [1, 1]])


class TestTruncSkewPoly:
    def test_x_squared_vanishes(self):
        f2 = make_zmod(2)
        t = make_trunc_skew_poly(f2, Endomorphism.identity(f2), 2)
        assert t.size == 4
        x = t.codec.encode((0, 1))
        assert t.mul(x, x) == 0

    def test_swap_commutation_rule(self):
        p = make_product([make_zmod(2), make_zmod(2)])
        t = make_trunc_skew_poly(p, Endomorphism.swap_factors(p, 0, 1), 2)
        assert t.size == 16
        x = t.codec.encode((0, p.one))
        e10 = t.codec.encode((p.codec.encode((1, 0)), 0))
        e01 = t.codec.encode((p.codec.encode((0, 1)), 0))
        assert t.mul(x, e10) == t.mul(e01, x) != 0

    def test_size_z4(self):
        z4 = make_zmod(4)
        assert make_trunc_skew_poly(z4, Endomorphism.identity(z4), 3).size == 64

    def test_identity_sigma_is_plain_convolution(self):
        # cross-checked against an independent truncated convolution
        for base, n in [(make_zmod(2), 3), (make_zmod(4), 2), (make_zmod(3), 3)]:
            t = make_trunc_skew_poly(base, Endomorphism.identity(base), n)
            assert t.size <= 4096
            b = base.size
            for i in range(t.size):
                for j in range(t.size):
                    A = [(i // b**k) % b for k in range(n)]
                    B = [(j // b**k) % b for k in range(n)]
                    C = [0] * n
                    for s in range(n):
                        for u in range(n - s):
                            C[s + u] = base.add(C[s + u], base.mul(A[s], B[u]))
                    assert t.mul(i, j) == sum(c * b**k for k, c in enumerate(C))

    def test_invalid_sigma_rejected(self):
        f2 = make_zmod(2)
        with pytest.raises(InvalidEndomorphismError):
            make_trunc_skew_poly(f2, [0, 0], 2)  # sends 1 to 0


class TestQuotient:
    def test_z4_mod_two(self):
        z4 = make_zmod(4)
        q, proj = make_quotient(z4, [0, 2])
        f2 = make_zmod(2)
        assert q.size == 2
        for i in range(2):
            for j in range(2):
                assert q.add(i, j) == f2.add(i, j) and q.mul(i, j) == f2.mul(i, j)
        assert proj.tolist() == [0, 1, 0, 1]

    def test_matrix_quotient_is_matrix_over_quotient(self):
        # entrywise reduction mod 2 realizes the isomorphism
        m2z4 = make_matrix_ring(make_zmod(4), 2)
        ideal = [i for i in range(256)
                 if all(d in (0, 2) for row in m2z4.codec.decode(i) for d in row)]
        q, proj = make_quotient(m2z4, ideal)
        m2f2 = make_matrix_ring(make_zmod(2), 2)
        assert q.size == 16
        red = {}
        for i in range(256):
            entry = [[d % 2 for d in row] for row in m2z4.codec.decode(i)]
            red[i] = m2f2.codec.encode(entry)
        # proj factors through the entrywise reduction
        match = {}
        for i in range(256):
            match.setdefault(int(proj[i]), red[i])
            assert match[int(proj[i])] == red[i]
        for i in range(256):
            for j in range(256):
                assert red[m2z4.mul(i, j)] == m2f2.mul(red[i], red[j])

    def test_improper_ideal_rejected(self):
        with pytest.raises(ImproperIdealError):
            make_quotient(make_zmod(4), [0, 1, 2, 3])

    def test_non_ideal_rejected(self):
        with pytest.raises(InvalidIdealError):
            make_quotient(make_zmod(4), [0, 1])


class TestAdjoinUnity:
    def test_strictly_upper_instrument(self):
        f2 = make_zmod(2)
        a = strictly_upper_algebra(f2, 3)
        assert a.size == 8
        star = adjoin_unity(a)
        assert star.size == 16 and star.one == 1
        idem = [i for i in range(16) if star.mul(i, i) == i]
        assert idem == [0, 1]

    def test_nil_poly_adjunction_is_dual_numbers(self):
        f2 = make_zmod(2)
        a = poly_nil_algebra(f2, 2)
        assert a.size == 2
        assert a.mul(1, 1) == 0  # zero multiplication
        star = adjoin_unity(a)
        t = make_trunc_skew_poly(f2, Endomorphism.identity(f2), 2)
        # (eps, a) -> eps + a*x is the identity on indices
        for i in range(4):
            for j in range(4):
                assert star.add(i, j) == t.add(i, j) and star.mul(i, j) == t.mul(i, j)

    def test_characteristic_two_required(self):
        z9 = make_zmod(9)
        alg = algebra_from_ideal(z9, [0, 3, 6])
        assert not alg.char_two
        with pytest.raises(UnsupportedCharacteristicError):
            adjoin_unity(alg)

    def test_ideal_algebra_adjunction(self):
        z4 = make_zmod(4)
        alg = algebra_from_ideal(z4, [0, 2])
        assert alg.char_two
        star = adjoin_unity(alg)
        assert check_ring_axioms(star).ok


class TestMatrixAlgebra:
    def test_nilpotency_of_strictly_upper(self):
        f2 = make_zmod(2)
        a = strictly_upper_algebra(f2, 3)
        ma = matrix_algebra(a, 2)
        assert ma.size == 4096
        assert check_algebra_axioms(ma, "sampled", samples=50_000).ok
        # x^3 lands in matrices over A^3 = 0
        for i in np.random.default_rng(1).integers(0, 4096, 100):
            x = int(i)
            assert ma.mul(ma.mul(x, x), x) == 0


class TestAxiomChecks:
    def test_exhaustive_pass(self):
        assert check_ring_axioms(make_zmod(6)).ok

    def test_corrupted_table_witnessed(self):
        broken = FiniteRing(
            4,
            lambda i, j: (i + j) % 4,
            lambda i, j: 0 if (i, j) == (1, 1) else (i * j) % 4,
            lambda i: (-i) % 4,
            one=1,
            label="broken",
        )
        report = check_ring_axioms(broken)
        assert not report.ok
        assert report.axiom in (
            "mul-associativity", "one-neutral", "left-distributivity", "right-distributivity",
        )
        assert report.witness is not None

    def test_downgrade_notice(self):
        m3 = make_matrix_ring(make_zmod(2), 3)
        report = check_ring_axioms(m3, "exhaustive", samples=10_000)
        assert report.ok and report.mode == "sampled" and report.notice

    def test_sampled_mode(self):
        m3 = make_matrix_ring(make_zmod(2), 3)
        assert check_ring_axioms(m3, "sampled", samples=100_000).ok

    def test_fleet_axioms_where_small(self, fleet):
        for ring in fleet:
            if ring.size <= 256:
                report = check_ring_axioms(ring)
                assert report.ok and report.mode == "exhaustive", ring.label


class TestEndomorphism:
    def test_identity_passes(self):
        z4 = make_zmod(4)
        assert check_endomorphism(z4, list(range(4))).ok

    def test_swap_passes(self):
        p = make_product([make_zmod(2), make_zmod(2)])
        sigma = Endomorphism.swap_factors(p, 0, 1)
        assert check_endomorphism(p, sigma.map).ok

    def test_one_not_preserved(self):
        z4 = make_zmod(4)
        report = check_endomorphism(z4, [0, 0, 0, 0])
        assert not report.ok and report.law == "one"

    def test_swap_of_unequal_factors_rejected(self):
        p = make_product([make_zmod(2), make_zmod(3)])
        with pytest.raises(InvalidArgumentError):
            Endomorphism.swap_factors(p, 0, 1)

    def test_swap_of_nonisomorphic_equal_size_factors_rejected(self):
        p = make_product([make_zmod(4), make_boolean(2)])
        with pytest.raises(InvalidEndomorphismError):
            Endomorphism.swap_factors(p, 0, 1)


class TestCodecs:
    def test_roundtrip_exhaustive(self, fleet):
        for ring in fleet:
            if ring.size > 4096:
                continue
            for i in range(ring.size):
                assert ring.codec.encode(ring.codec.decode(i)) == i, ring.label

    def test_evaluators_pure(self, m2f2):
        assert m2f2.mul(6, 6) == m2f2.mul(6, 6)
        assert m2f2.add(6, 9) == m2f2.add(6, 9)


class TestBulkAgainstScalar:
    def test_fleet_sampled(self, fleet):
        rng = np.random.default_rng(42)
        for ring in fleet:
            k = min(ring.size * ring.size, 300)
            I = rng.integers(0, ring.size, k)
            J = rng.integers(0, ring.size, k)
            add_bulk = ring.add_many(I, J)
            mul_bulk = ring.mul_many(I, J)
            neg_bulk = ring.neg_many(I)
            for a, b, s, p, m in zip(I, J, add_bulk, mul_bulk, neg_bulk):
                assert ring.add(int(a), int(b)) == int(s), ring.label
                assert ring.mul(int(a), int(b)) == int(p), ring.label
                assert ring.neg(int(a)) == int(m), ring.label
