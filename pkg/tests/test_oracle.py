"""Enumeration semantics: the brute-force side must be trustworthy on its own."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tilingkit import oracle as orc
from tilingkit.oracle import (
    OracleScaleError,
    Run,
    Tile,
    TilingFilter,
    TwoTonedTiling,
    count_tilings,
    enumerate_compositions,
    enumerate_palindromic_compositions,
    enumerate_palindromic_tilings,
    enumerate_tilings,
    runs_of,
)


class TestTileTypes:
    def test_red_tiles_are_unit_squares(self):
        with pytest.raises(ValueError):
            Tile("R", 2)
        with pytest.raises(ValueError):
            Tile("W", 0)
        assert str(Tile("W", 3)) == "W3"
        assert str(Tile("R", 1)) == "R"

    def test_tiling_accounting(self):
        t = TwoTonedTiling.from_codes((0, 3, 0, 1))
        assert t.red_count == 2
        assert t.white_total == 4
        assert t.grid_length == 6
        assert str(t) == "R W3 R W1"
        assert not t.is_palindromic()
        assert TwoTonedTiling.from_codes((1, 0, 1)).is_palindromic()

    def test_filter_validation(self):
        with pytest.raises(ValueError):
            TilingFilter(max_white_len=0)
        with pytest.raises(ValueError):
            TilingFilter(palindromic=True, suffix_white_tiles=2)


class TestEnumerateTilings:
    def test_one_red_two_white_cells(self):
        tilings = enumerate_tilings(1, 2)
        codes = [t.codes for t in tilings]
        assert codes == sorted(codes)
        assert set(codes) == {(0, 2), (2, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)}

    def test_all_red_tiling_is_unique(self):
        tilings = enumerate_tilings(3, 0)
        assert [t.codes for t in tilings] == [(0, 0, 0)]

    def test_no_duplicates_and_filters_respected(self):
        filt = TilingFilter(max_white_len=2)
        tilings = enumerate_tilings(2, 5, filt)
        codes = [t.codes for t in tilings]
        assert len(set(codes)) == len(codes)
        for t in tilings:
            assert t.red_count == 2
            assert t.white_total == 5
            assert all(tile.length <= 2 for tile in t.tiles if tile.kind == "W")

    def test_forbidden_white_length(self):
        tilings = enumerate_tilings(1, 3, TilingFilter(forbidden_white_len=2))
        assert all(
            tile.length != 2 for t in tilings for tile in t.tiles
            if tile.kind == "W"
        )
        assert len(tilings) == 6

    def test_suffix_white_tiles(self):
        # strip length n + r + s, white total n + s, last s tiles white
        filt = TilingFilter(suffix_white_tiles=2)
        tilings = enumerate_tilings(2, 3, filt)
        assert len(tilings) == 56
        for t in tilings:
            assert t.red_count == 2
            assert t.white_total == 5
            assert all(tile.kind == "W" for tile in t.tiles[-2:])

    def test_count_equals_enumeration_length(self):
        for r in range(4):
            for n in range(7):
                for filt in (
                    None,
                    TilingFilter(max_white_len=2),
                    TilingFilter(forbidden_white_len=1),
                    TilingFilter(suffix_white_tiles=1),
                    TilingFilter(palindromic=True),
                ):
                    assert count_tilings(r, n, filt) == len(
                        enumerate_tilings(r, n, filt)
                    )

    def test_resource_guard(self):
        with pytest.raises(OracleScaleError, match="oracle scale exceeded"):
            count_tilings(0, 40, ceiling=1000)
        with pytest.raises(OracleScaleError):
            enumerate_tilings(0, 40, ceiling=1000)
        with pytest.raises(OracleScaleError):
            enumerate_compositions(40, ceiling=1000)


class TestSuffixSemantics:
    def test_suffix_counts_match_cumulative_sums(self):
        # ground-truth validation of the suffix reading: the count must be the
        # running total of the (s-1)-suffix counts
        for s in range(1, 4):
            for r in range(3):
                for n in range(6):
                    direct = count_tilings(
                        r, n, TilingFilter(suffix_white_tiles=s)
                    )
                    summed = sum(
                        count_tilings(r, i, TilingFilter(suffix_white_tiles=s - 1))
                        for i in range(n + 1)
                    )
                    assert direct == summed, (s, r, n)


class TestCompositions:
    def test_lexicographic_order_and_lengths(self):
        comps = enumerate_compositions(4)
        assert comps == sorted(comps)
        assert len(comps) == 8
        assert all(sum(c) == 4 for c in comps)

    def test_empty_composition_of_zero(self):
        assert enumerate_compositions(0) == [()]
        assert enumerate_compositions(0, max_part=3) == [()]

    def test_allowed_parts(self):
        comps = enumerate_compositions(5, allowed_parts={1, 2, 5})
        assert len(comps) == 9
        assert all(set(c) <= {1, 2, 5} for c in comps)

    def test_no_multiple_of(self):
        comps = enumerate_compositions(4, no_multiple_of=2)
        assert set(comps) == {(3, 1), (1, 3), (1, 1, 1, 1)}

    def test_max_part_counts_are_step_fibonacci(self):
        from tilingkit.sequences import fibonacci_k

        for n in range(0, 13):
            for k in range(1, n + 2):
                assert (
                    orc.count_compositions(n, max_part=k)
                    == fibonacci_k(n + 1, k)
                ), (n, k)


class TestRuns:
    def test_worked_example(self):
        runs = runs_of((2, 2, 2, 4, 1, 1, 2))
        assert runs == [
            Run(2, 3, 0),
            Run(4, 1, 3),
            Run(1, 2, 4),
            Run(2, 1, 6),
        ]

    def test_single_part(self):
        assert runs_of((5,)) == [Run(5, 1, 0)]

    def test_alternating_parts(self):
        assert [r.length for r in runs_of((1, 2, 1))] == [1, 1, 1]

    @given(st.lists(st.integers(1, 4), min_size=0, max_size=12))
    @settings(max_examples=150)
    def test_reconstruction(self, parts):
        runs = runs_of(tuple(parts))
        flat = [run.value for run in runs for _ in range(run.length)]
        assert flat == parts
        assert sum(run.length for run in runs) == len(parts)
        # maximality: adjacent runs carry different values
        assert all(
            runs[i].value != runs[i + 1].value for i in range(len(runs) - 1)
        )


class TestPalindromicTilings:
    def test_counts_against_reference_row(self):
        # r = 2 row: 1 1 3 3 8 8 20 20 48 48
        row = [orc.count_palindromic_tilings(2, n) for n in range(10)]
        assert row == [1, 1, 3, 3, 8, 8, 20, 20, 48, 48]

    def test_odd_reds_with_odd_white_total_is_impossible(self):
        assert enumerate_palindromic_tilings(1, 1) == []
        assert orc.count_palindromic_tilings(3, 7) == 0

    def test_every_output_is_a_palindrome(self):
        tilings = enumerate_palindromic_tilings(2, 6)
        assert len(tilings) == 20
        assert all(t.is_palindromic() for t in tilings)
        assert len({t.codes for t in tilings}) == 20

    def test_centerless_palindromes(self):
        # the two-red extensions of the centerless palindromes of 6
        tilings = enumerate_palindromic_tilings(2, 6)
        centerless = [t for t in tilings if len(t.tiles) % 2 == 0]
        assert len(centerless) == 12


class TestPalindromicCompositions:
    def test_power_counts(self):
        assert orc.count_palindromic_compositions(6) == 8
        assert orc.count_palindromic_compositions(7) == 8
        assert orc.count_palindromic_compositions(0) == 1

    def test_forbidden_part(self):
        pals = enumerate_palindromic_compositions(4, forbidden_part=2)
        assert set(pals) == {(4,), (1, 1, 1, 1)}

    def test_outputs_are_palindromes_without_duplicates(self):
        for n in range(9):
            pals = enumerate_palindromic_compositions(n)
            assert len(set(pals)) == len(pals)
            assert all(c == c[::-1] and (sum(c) == n) for c in pals)
            assert len(pals) == 2 ** (n // 2)
