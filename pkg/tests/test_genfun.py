import pytest

from qcong.genfun import (
    Family,
    Multiset,
    build_series,
    check_jacobi_specializations,
    check_phi_factorizations,
    phi_product_approx,
    phi_series,
    sum_of_squares_series,
    tail_product_series,
    two_adic_overpartition,
)
from qcong.series import EXACT, Mod, Series


class TestMultiset:
    def test_merges_and_sorts(self):
        ms = Multiset(((3, 1), (1, 1), (3, 1), (2, 2)))
        assert ms.entries == ((1, 1), (2, 2), (3, 2))
        assert ms.parts == (1, 2, 2, 3, 3)

    def test_from_parts(self):
        assert Multiset.from_parts([2, 1, 2]).parts == (1, 2, 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            Multiset(((0, 1),))
        with pytest.raises(ValueError):
            Multiset(())

    def test_lcm(self):
        assert Multiset.from_parts([1, 1, 2, 2, 2, 4, 4, 5]).lcm() == 20


class TestFamily:
    def test_tokens_round_trip(self):
        fams = [
            Family.overpartitions(),
            Family.odd_overpartitions(),
            Family.plane(),
            Family.ncolor(),
            Family.k_rowed(4),
            Family.restricted([1, 2, 2, 3, 3]),
        ]
        for fam in fams:
            assert Family.from_token(fam.token) == fam

    def test_validation(self):
        with pytest.raises(ValueError):
            Family("plk")
        with pytest.raises(ValueError):
            Family("over", k=2)
        with pytest.raises(ValueError):
            Family("restricted")
        with pytest.raises(ValueError):
            Family("nonsense")


class TestBuildSeries:
    def test_overpartition_prefix(self):
        assert build_series(Family.overpartitions(), 4).tolist() == [1, 2, 4, 8, 14]

    def test_restricted_examples(self):
        s = build_series(Family.restricted([1, 2, 5, 8]), 5)
        assert s[5] == 4
        s = build_series(Family.restricted([1, 2, 2, 3, 3]), 4)
        assert s[4] == 8

    def test_one_rowed_is_overpartition(self):
        for order in (0, 5, 40):
            assert build_series(Family.k_rowed(1), order) == build_series(
                Family.overpartitions(), order
            )

    def test_plane_prefix(self):
        assert build_series(Family.plane(), 3)[3] == 16

    def test_ncolor_equals_plane(self):
        for order in (0, 7, 33):
            assert build_series(Family.ncolor(), order) == build_series(
                Family.plane(), order
            )

    def test_k_rowed_agrees_with_plane_below_k(self):
        # a plane overpartition of n has at most n rows
        pl = build_series(Family.plane(), 30)
        for k in (2, 5, 9):
            plk = build_series(Family.k_rowed(k), 30)
            for n in range(k + 1):
                assert plk[n] == pl[n]

    def test_constant_term_and_parity(self):
        # every family except restricted is = 1 (mod 2)
        fams = [
            Family.overpartitions(),
            Family.odd_overpartitions(),
            Family.plane(),
            Family.ncolor(),
            Family.k_rowed(3),
        ]
        for fam in fams:
            s = build_series(fam, 40)
            assert s[0] == 1
            assert all(s[n] % 2 == 0 for n in range(1, 41)), fam

    def test_restricted_constant_term(self):
        assert build_series(Family.restricted([2, 3]), 10)[0] == 1


class TestPhi:
    def test_plus_prefix(self):
        assert phi_series(1, 9).tolist() == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]

    def test_minus_prefix(self):
        assert phi_series(-1, 4).tolist() == [1, -2, 0, 0, 2]

    def test_minus_inverts_overpartitions(self):
        order = 120
        prod = phi_series(-1, order).mul(build_series(Family.overpartitions(), order))
        assert prod == Series.one(EXACT, order)

    def test_inverse_of_phi_minus_is_overpartition_series(self):
        inv = phi_series(-1, 4).inverse_of_unit()
        assert inv.tolist() == [1, 2, 4, 8, 14]


class TestSumOfSquares:
    def test_k_one_is_square_indicator(self):
        s = sum_of_squares_series(1, 20)
        assert [n for n in range(21) if s[n]] == [1, 4, 9, 16]
        assert all(s[n * n] == 1 for n in range(1, 5))

    def test_small_values(self):
        s = sum_of_squares_series(2, 10)
        assert s[5] == 2  # 1+4 and 4+1
        assert s[3] == 0
        assert s[2] == 1

    def test_k_validation(self):
        with pytest.raises(ValueError):
            sum_of_squares_series(0, 5)


class TestTwoAdic:
    def test_k2_is_theta_mod_four(self):
        order = 80
        got = two_adic_overpartition(order, 2)
        assert got == phi_series(1, order, Mod(4))

    def test_k3_is_phi_phi2_squared(self):
        order = 120
        got = two_adic_overpartition(order, 3)
        phi1 = phi_series(1, order, Mod(8))
        phi2 = phi_series(1, order // 2, Mod(8)).inflate(2, order)
        assert got == phi1.mul(phi2).mul(phi2)

    @pytest.mark.parametrize("bits", range(2, 7))
    def test_matches_product_construction(self, bits):
        order = 500
        want = build_series(Family.overpartitions(), order, Mod(2**bits))
        assert two_adic_overpartition(order, bits) == want
        assert phi_product_approx(bits, order) == want

    def test_modular_build_equals_exact_reduction(self):
        order = 300
        exact = build_series(Family.overpartitions(), order)
        for bits in (2, 4, 6):
            assert (
                build_series(Family.overpartitions(), order, Mod(2**bits))
                == exact.reduce_mod(2**bits)
            )

    @pytest.mark.parametrize("bits", range(2, 7))
    def test_odd_parts_product(self, bits):
        order = 500
        want = build_series(Family.odd_overpartitions(), order, Mod(2**bits))
        assert phi_product_approx(bits, order, odd_parts=True) == want

    def test_bits_validation(self):
        with pytest.raises(ValueError):
            two_adic_overpartition(10, 1)


class TestTailProducts:
    def test_tail_zero_is_full_product(self):
        assert tail_product_series(0, 25) == build_series(Family.overpartitions(), 25)

    def test_tail_at_order_is_one(self):
        assert tail_product_series(20, 20) == Series.one(EXACT, 20)

    def test_plane_factorizes_through_tails(self):
        order = 100
        acc = build_series(Family.overpartitions(), order)
        for n in range(1, order + 1):
            acc = acc.mul(tail_product_series(n, order))
        assert acc == build_series(Family.plane(), order)


class TestIdentityChecks:
    def test_phi_factorizations_pass(self):
        for report in check_phi_factorizations(200):
            assert report.passed, report

    def test_jacobi_specializations_pass(self):
        for report in check_jacobi_specializations(100):
            assert report.passed, report

    def test_order_zero_trivially_passes(self):
        for report in check_phi_factorizations(0) + check_jacobi_specializations(0):
            assert report.passed

    def test_mismatch_is_reported_not_raised(self):
        lhs = Series(EXACT, 4, [1, 2, 3, 4, 5])
        rhs = Series(EXACT, 4, [1, 2, 9, 4, 5])
        from qcong.genfun import _compare

        report = _compare("broken", lhs, rhs)
        assert not report.passed
        assert report.first_mismatch == 2
