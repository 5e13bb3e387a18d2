"""Morphic-word pipeline: envelope drift, representability bounds, table rows."""

from fractions import Fraction

import pytest

from frobwords.golden import TABLE1_GOLDEN
from frobwords.morphic import (
    PhiBoundParams,
    ab_bound,
    phi_envelope_table,
    table1,
    verify_phi_base_case,
    verify_pvects_window,
)

GOLD = {pair: (ceil_m, comp) for pair, ceil_m, comp in TABLE1_GOLDEN}


class TestBoundParams:
    def test_window_starts(self):
        assert PhiBoundParams(4).N_C == 132
        assert PhiBoundParams(5).N_C == 660

    def test_five_fold_growth(self):
        for c in range(4, 9):
            assert PhiBoundParams(c + 1).N_C == 5 * PhiBoundParams(c).N_C

    def test_c_below_4_rejected(self):
        with pytest.raises(ValueError):
            PhiBoundParams(3)


class TestBaseCases:
    def test_max_direction(self):
        report = verify_phi_base_case("max")
        assert report.n_range == (29, 145)
        assert report.passed

    def test_min_direction(self):
        report = verify_phi_base_case("min")
        assert report.n_range == (132, 660)
        assert report.passed

    def test_below_base_range_fails(self):
        # at n=5 the max-side drift has not started: z_max(5) = 3 < 5/3 + 4
        _, z_max = phi_envelope_table(5)
        assert 3 * int(z_max[4]) < 5 + 12

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            verify_phi_base_case("sideways")


class TestPvectsWindow:
    def test_examples(self):
        assert verify_pvects_window(132, 4)
        assert verify_pvects_window(660, 5)

    def test_precondition(self):
        with pytest.raises(ValueError):
            verify_pvects_window(132, 40)


class TestAbBound:
    @pytest.mark.parametrize("pair,expected", [
        ((1, 1), 132), ((1, 2), 222), ((5, 6), 93506), ((2, 5), 2652),
        ((6, 5), 88006),
    ])
    def test_reference_values(self, pair, expected):
        assert ab_bound(*pair).ceil_M == expected

    def test_exact_rational_kept(self):
        bd = ab_bound(1, 2)
        assert bd.M == Fraction(665, 3)
        assert bd.r == 222

    def test_known_reference_discrepancy_3_1(self):
        # The defining formula gives ceil(670/3) = 224 for (3,1); the bundled
        # reference table records 244.  Pin both facts so neither drifts.
        assert ab_bound(3, 1).M == Fraction(670, 3)
        assert ab_bound(3, 1).ceil_M == 224
        assert GOLD[(3, 1)][0] == 244

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError):
            ab_bound(2, 4)


class TestTable1Rows:
    def test_small_rows_match_reference(self):
        rows = table1([(1, 4), (2, 3), (3, 2), (5, 2), (1, 1)])
        for row in rows:
            ceil_m, comp = GOLD[(row.a, row.b)]
            assert row.ceil_M == ceil_m
            assert row.complement == comp

    def test_medium_row_complements(self):
        rows = table1([(2, 5), (3, 4), (4, 3), (5, 3)])
        for row in rows:
            assert row.complement == GOLD[(row.a, row.b)][1]

    def test_row_3_1_complement_empty(self):
        (row,) = table1([(3, 1)])
        assert row.ceil_M == 224
        assert row.complement == ()


class TestEnvelopeFacts:
    def test_five_fold_inequality_spot(self):
        _, z_max = phi_envelope_table(5 * 300 + 4)
        for k in range(1, 301):
            for r in range(5):
                assert int(z_max[5 * k + r - 1]) >= 2 * int(z_max[k]) + k - 2

    def test_exact_scaling_at_window_starts(self):
        _, z_max = phi_envelope_table(3300)
        for n in (132, 660):
            assert int(z_max[5 * n - 1]) == 2 * int(z_max[n - 1]) + n
