import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sperner.combinat import (binom, binom_frac, binom_real, decompose, erf,
                              erf_inv, mms, shadow_bound, shadow_cmp,
                              shadow_root, stirling_binom, stirling_binom_log)


class TestDecompose:
    def test_examples(self):
        p = decompose(36, 15)
        assert (p.c, p.r) == (2, 6)
        assert decompose(26, 3).c == 8 and decompose(26, 3).r == 2
        for n in (1, 5, 17):
            p = decompose(n, 1)
            assert (p.c, p.r) == (n, 0)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            decompose(3, 4)
        with pytest.raises(ValueError):
            decompose(5, 0)

    @given(st.integers(1, 500), st.integers(1, 500))
    def test_unique_decomposition(self, a, b):
        n, k = max(a, b), min(a, b)
        p = decompose(n, k)
        assert p.n == p.c * p.k + p.r
        assert 0 <= p.r < p.k


class TestBinom:
    def test_examples(self):
        assert binom(5, 1) == 5
        assert binom(1000, 2) == 1000 * 999 // 2
        # multiplicative formula oracle
        val = 1
        for i in range(5):
            val = val * (13 - i) // (i + 1)
        assert binom(13, 5) == val == 1287

    def test_out_of_range(self):
        assert binom(5, -1) == 0
        assert binom(5, 6) == 0
        with pytest.raises(ValueError):
            binom(-1, 0)

    def test_pascal_rule_exhaustive(self):
        for x in range(1, 61):
            for y in range(0, x + 1):
                assert binom(x, y) == binom(x - 1, y - 1) + binom(x - 1, y)


class TestBinomReal:
    def test_integer_agreement(self):
        assert binom_real(7.0, 2) == 21.0
        for q in range(3, 12):
            for t in range(0, q + 1):
                assert math.isclose(binom_real(float(q), t), binom(q, t))

    def test_empty_product(self):
        for q in (0.0, 1.5, 7.0):
            assert binom_real(q, 0) == 1.0

    def test_quadratic_root(self):
        q = (1 + math.sqrt(217)) / 2
        assert abs(q - 7.8654) < 1e-3
        assert abs(binom_real(q, 2) - 27.0) < 1e-9

    def test_rejects_below_t(self):
        with pytest.raises(ValueError):
            binom_real(2.75, 3)

    @given(st.integers(1, 8),
           st.floats(0.0, 50.0, allow_nan=False),
           st.floats(1e-6, 10.0, allow_nan=False))
    def test_strictly_increasing(self, t, base, step):
        q1 = t + base
        q2 = q1 + step
        assert binom_real(q2, t) > binom_real(q1, t)

    def test_fraction_agreement(self):
        assert binom_frac(Fraction(7), 2) == 21
        assert binom_frac(Fraction(9, 2), 2) == Fraction(9, 2) * Fraction(7, 2) / 2


class TestMms:
    def test_uniform_case(self):
        assert mms(decompose(6, 3)) == 5 == binom(5, 1)

    def test_exact_rationals(self):
        assert mms(decompose(36, 15)) == Fraction(595, 9)
        # direct formula evaluation
        p = decompose(10, 3)
        assert (p.c, p.r) == (3, 1)
        expect = Fraction(binom(10, 3)) / (2 + Fraction(1 * 4, 7))
        assert mms(p) == expect == Fraction(140, 3)

    def test_r_zero_matches_resolution_count(self):
        for k in range(1, 21):
            for c in range(1, 11):
                n = c * k
                if n < k:
                    continue
                p = decompose(n, k)
                if p.r == 0 and p.n > p.c:
                    assert mms(p) == binom(n - 1, p.c - 1)

    def test_rejects_n_le_c(self):
        with pytest.raises(ValueError):
            mms(decompose(1, 1))


class TestShadow:
    def test_root_examples(self):
        assert abs(shadow_root(2, 27) - (1 + math.sqrt(217)) / 2) < 1e-9
        assert shadow_root(2, 1) == pytest.approx(2.0, abs=1e-9)
        assert abs(shadow_root(2, 9) - (1 + math.sqrt(73)) / 2) < 1e-9
        assert math.ceil(shadow_bound(2, 9)) == 5

    def test_bound_is_root_for_c2(self):
        for x in (0, 1, 5, 27, 100):
            assert shadow_bound(2, x) == pytest.approx(shadow_root(2, x), abs=1e-9)

    @given(st.integers(2, 6), st.floats(0.0, 1e5, allow_nan=False))
    @settings(max_examples=200)
    def test_root_round_trip(self, c, x):
        q = shadow_root(c, x)
        prod = 1.0
        for i in range(c):
            prod *= (q - i) / (i + 1)
        assert prod == pytest.approx(x, rel=1e-9, abs=1e-7)

    def test_exact_comparison_integral_points(self):
        # binom(5, 2) = 10 pairs have shadow bound exactly 5
        assert shadow_cmp(2, 10, 5)
        assert not shadow_cmp(2, 10, 4)
        assert shadow_cmp(3, binom(9, 3), binom(9, 2))
        assert not shadow_cmp(3, binom(9, 3), binom(9, 2) - 1)

    def test_exact_comparison_matches_float(self):
        for c in (2, 3, 4):
            for x in range(0, 60):
                fb = shadow_bound(c, x)
                for y in range(0, 40):
                    if abs(fb - y) > 1e-6:
                        assert shadow_cmp(c, x, y) == (fb <= y)


class TestStirling:
    def test_symmetry(self):
        assert stirling_binom(10, 4) == pytest.approx(stirling_binom(10, 6))

    def test_ratio_near_one(self):
        for x in range(200, 2001, 200):
            for y in (x // 2, x // 10):
                ratio = math.exp(stirling_binom_log(x, y) - math.log(binom(x, y)))
                assert abs(ratio - 1) < 0.01

    def test_domain(self):
        with pytest.raises(ValueError):
            stirling_binom(5, 0)
        with pytest.raises(ValueError):
            stirling_binom(5, 5)


class TestErf:
    def test_zero(self):
        assert erf(0.0) == 0.0

    def test_inverse_half(self):
        v = erf_inv(0.5)
        assert abs(v - 0.47694) < 1e-4
        assert v < 0.477

    def test_round_trip(self):
        for p in (-0.9, -0.3, 0.0, 0.3, 0.5, 0.77, 0.99):
            assert abs(erf(erf_inv(p)) - p) < 1e-12

    def test_domain(self):
        with pytest.raises(ValueError):
            erf_inv(1.0)
        with pytest.raises(ValueError):
            erf_inv(-1.5)
