"""Exact sequence families: frozen reference values and structural laws."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tilingkit import oracle as orc
from tilingkit.sequences import (
    NonIntegerResultError,
    a,
    a_diag,
    a_diag_plus,
    a_explicit,
    a_k,
    a_s,
    a_s_binomial,
    binom,
    fibonacci_k,
    fibonacci_k_conv,
    neg_fibonacci_k,
    pell,
)

# a(r,n) for r,n <= 5
A_TABLE = [
    [1, 1, 2, 4, 8, 16],
    [1, 2, 5, 12, 28, 64],
    [1, 3, 9, 25, 66, 168],
    [1, 4, 14, 44, 129, 360],
    [1, 5, 20, 70, 225, 681],
    [1, 6, 27, 104, 363, 1182],
]

# a_s(2,n) for s <= 8, n <= 4
AS2_TABLE = [
    [1, 3, 9, 25, 66],
    [1, 4, 13, 38, 104],
    [1, 5, 18, 56, 160],
    [1, 6, 24, 80, 240],
    [1, 7, 31, 111, 351],
    [1, 8, 39, 150, 501],
    [1, 9, 48, 198, 699],
    [1, 10, 58, 256, 955],
    [1, 11, 69, 325, 1280],
]

# negF(n,3) for n = -9..1
NEGF3 = {-9: -8, -8: 4, -7: 1, -6: -3, -5: 2, -4: 0, -3: -1, -2: 1, -1: 0,
         0: 0, 1: 1}


class TestBaseFamily:
    def test_reference_grid(self):
        for r, row in enumerate(A_TABLE):
            for n, value in enumerate(row):
                assert a(r, n) == value, (r, n)

    def test_boundaries(self):
        assert a(7, 0) == 1
        assert all(a(r, 0) == 1 for r in range(20))
        assert all(a(0, n) == 2 ** (n - 1) for n in range(1, 20))
        assert a(-1, 3) == 0
        assert a(3, -1) == 0

    def test_worked_recurrence_value(self):
        assert a(5, 5) == a(4, 5) + 2 * a(5, 4) - a(4, 4) == 1182

    @given(st.integers(1, 10), st.integers(0, 14))
    @settings(max_examples=80)
    def test_convolution_law(self, r, n):
        assert a(r, n) == sum(a(r - 1, n - j) * a(0, j) for j in range(n + 1))

    def test_new_recurrence_via_cumulative_sum(self):
        for r in range(1, 9):
            for n in range(1, 13):
                assert a(r, n) == a_s(1, r, n - 1) + a(r - 1, n)

    def test_closed_form_matches_on_domain(self):
        assert a_explicit(1, 4) == 28
        assert a_explicit(0, 5) == 16
        assert a_explicit(5, 5) == 1182
        for r in range(8):
            for n in range(1, 13):
                assert a_explicit(r, n) == a(r, n)

    def test_closed_form_non_integer_diagnostic(self):
        with pytest.raises(NonIntegerResultError, match="non-integer result"):
            a_explicit(2, 0)

    def test_memo_idempotence(self):
        assert a(6, 9) == a(6, 9)
        assert a_s(3, 2, 7) == a_s(3, 2, 7)
        assert a_k(2, 9, 3) == a_k(2, 9, 3)


class TestCumulativeSums:
    def test_reference_grid(self):
        for s, row in enumerate(AS2_TABLE):
            for n, value in enumerate(row):
                assert a_s(s, 2, n) == value, (s, n)

    def test_column_of_ones(self):
        assert all(a_s(s, r, 0) == 1 for s in range(7) for r in range(7))

    def test_cumulative_step(self):
        for s in range(1, 6):
            for r in range(5):
                for n in range(10):
                    assert a_s(s, r, n) == sum(
                        a_s(s - 1, r, i) for i in range(n + 1)
                    )

    def test_binomial_form(self):
        assert a_s_binomial(1, 1, 3) == 20
        assert a_s_binomial(0, 2, 3) == 25
        assert a_s_binomial(2, 2, 1) == 5
        for s in range(6):
            for r in range(6):
                for n in range(9):
                    if n + s >= 1:
                        assert a_s_binomial(s, r, n) == a_s(s, r, n)

    def test_diagonal_closed_forms(self):
        assert a_diag(2, 2) == 18
        assert a_diag(1, 2) == 8
        assert a_diag(5, 1) == 11
        assert a_diag_plus(1, 2) == 12 == a_s(2, 1, 2)
        for r in range(8):
            for n in range(10):
                if r + n >= 1:
                    assert a_diag(r, n) == a_s(r, r, n)
                assert a_diag_plus(r, n) == a_s(r + 1, r, n)

    def test_diagonal_recurrence(self):
        for r in range(1, 9):
            for n in range(1, 11):
                assert a_s(r, r, n) == 2 * a_s(r, r, n - 1) + a_s(
                    r - 1, r - 1, n
                )

    def test_diagonal_closed_form_edge_is_diagnosed(self):
        with pytest.raises(NonIntegerResultError):
            a_diag(0, 0)


class TestStepFibonacci:
    def test_three_step_values(self):
        want = [0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149]
        assert [fibonacci_k(n, 3) for n in range(11)] == want

    def test_degenerate_and_classical(self):
        assert fibonacci_k(0, 5) == 0
        assert fibonacci_k(-3, 4) == 0
        assert fibonacci_k(4, 2) == 3
        assert fibonacci_k(8, 3) == 44
        assert fibonacci_k(1, 0) == 1
        assert fibonacci_k(2, 0) == 0

    def test_doubling_plateau(self):
        # 2^(n-2) up to and including n = k + 1
        for k in range(2, 12):
            for n in range(2, k + 2):
                assert fibonacci_k(n, k) == 2 ** (n - 2), (n, k)
            assert fibonacci_k(k + 2, k) != 2 ** k


class TestNegativeIndexFibonacci:
    def test_reference_values_k3(self):
        for n, value in NEGF3.items():
            assert neg_fibonacci_k(n, 3) == value, n

    def test_agreement_with_forward_values(self):
        # identical to the forward family everywhere at or above -(k-2)
        for k in range(2, 7):
            for n in range(-(k - 2), 15):
                assert neg_fibonacci_k(n, k) == fibonacci_k(n, k), (n, k)

    def test_recurrence_holds_everywhere(self):
        for k in range(2, 6):
            for n in range(-20, 10):
                assert neg_fibonacci_k(n, k) == sum(
                    neg_fibonacci_k(n - j, k) for j in range(1, k + 1)
                )

    def test_classical_reflection(self):
        assert neg_fibonacci_k(-4, 2) == -3
        for n in range(1, 15):
            assert neg_fibonacci_k(-n, 2) == (-1) ** (n + 1) * fibonacci_k(n, 2)

    def test_k_must_be_at_least_two(self):
        with pytest.raises(ValueError):
            neg_fibonacci_k(3, 1)


class TestBoundedWhiteConvolutions:
    def test_reference_values(self):
        assert a_k(0, 5, 3) == fibonacci_k(6, 3) == 13
        assert a_k(1, 4, 3) == 26
        assert a_k(1, 1, 1) == 2
        assert a_k(2, 6, 3) == 359
        assert a_k(3, 0, 2) == 1
        assert a_k(3, -1, 2) == 0

    def test_alias_shift(self):
        assert fibonacci_k_conv(5, 3, 1) == 26
        assert fibonacci_k_conv(6, 3, 2) == 153
        assert fibonacci_k_conv(7, 3, 2) == 359
        assert fibonacci_k_conv(0, 3, 2) == 0
        assert fibonacci_k_conv(-4, 3, 1) == 0
        for n in range(0, 12):
            for k in range(1, 5):
                assert fibonacci_k_conv(n, k, 0) == fibonacci_k(n, k)

    def test_stabilizes_to_unbounded_family(self):
        for r in range(5):
            for n in range(9):
                for k in range(n, n + 3):
                    if k >= 1:
                        assert a_k(r, n, k) == a(r, n), (r, n, k)

    def test_no_white_tiles_at_k_zero(self):
        assert a_k(3, 0, 0) == 1
        assert a_k(3, 2, 0) == 0

    def test_matches_enumeration(self):
        for r in range(3):
            for n in range(8):
                for k in range(1, 5):
                    assert a_k(r, n, k) == orc.count_tilings(
                        r, n, orc.TilingFilter(max_white_len=k)
                    )


class TestPell:
    def test_reference_values(self):
        assert [pell(n) for n in range(9)] == [0, 1, 2, 5, 12, 29, 70, 169, 408]
        assert pell(-2) == 0

    def test_recurrence(self):
        for n in range(2, 30):
            assert pell(n) == 2 * pell(n - 1) + pell(n - 2)


class TestBinomHelper:
    def test_zero_conventions(self):
        assert binom(5, 2) == 10
        assert binom(3, 5) == 0
        assert binom(-1, 0) == 0
        assert binom(4, -1) == 0
