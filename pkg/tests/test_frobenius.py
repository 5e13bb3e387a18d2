"""Weight maps, the two-coin problem, representability and witnesses."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from frobwords.frobenius import (
    Weights,
    complement_below,
    pf_witnesses,
    representable_set,
    s_value,
    sylvester_number,
)
from frobwords.verify import MaxComplexityWord, classical_nonrepresentable
from frobwords.words import FiniteWord, WORDS

PF, PHI, T = WORDS["pf"], WORDS["phi"], WORDS["t"]


class TestWeights:
    def test_validation(self):
        with pytest.raises(ValueError):
            Weights((0, 1))
        with pytest.raises(ValueError):
            Weights(())

    def test_gcd(self):
        assert Weights((6, 10)).gcd == 2
        assert Weights((2, 3)).gcd == 1
        with pytest.raises(ValueError):
            Weights((2, 4)).require_coprime()


class TestSylvester:
    def test_examples(self):
        assert sylvester_number(3, 5) == 7
        assert sylvester_number(2, 3) == 1
        assert sylvester_number(1, 17) == -1

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError):
            sylvester_number(4, 6)

    def test_brute_force_oracle(self):
        # independent dynamic-programming oracle, frozen small cases
        for a, b in [(3, 5), (2, 3), (4, 7), (5, 6)]:
            missing = classical_nonrepresentable(a, b)
            assert max(missing) == sylvester_number(a, b)

    @given(st.integers(2, 25), st.integers(2, 25))
    def test_formula_matches_dp(self, a, b):
        if math.gcd(a, b) != 1:
            return
        missing = classical_nonrepresentable(a, b)
        assert max(missing) == sylvester_number(a, b)


class TestSValue:
    def test_examples(self):
        assert s_value(FiniteWord.from_string("01"), Weights((2, 3))) == 5
        assert s_value(FiniteWord([], 2), Weights((2, 3))) == 0
        assert s_value(FiniteWord.from_string("012"), Weights((1, 1, 2))) == 4

    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            s_value(FiniteWord.from_string("01"), Weights((1, 1, 2)))


class TestRepresentableSet:
    def test_pf_unit_weights(self):
        assert representable_set(PF, Weights((1, 1)), 10) == set(range(1, 11))

    def test_phi_1_4_misses_3(self):
        values = representable_set(PHI, Weights((1, 4)), 405)
        assert 3 not in values
        assert {1, 2, 4, 5, 8} <= values

    def test_t_contains_small_values(self):
        values = representable_set(T, Weights((1, 1, 2)), 50)
        assert {1, 2, 3, 4, 5, 6} <= values

    def test_monotone_in_max_len(self):
        small = representable_set(T, Weights((2, 3, 4)), 20)
        large = representable_set(T, Weights((2, 3, 4)), 40)
        assert small <= large

    def test_requires_coprime(self):
        with pytest.raises(ValueError):
            representable_set(PF, Weights((2, 4)), 10)


class TestComplementBelow:
    def test_every_length_present_gives_empty(self):
        report = complement_below(PF, Weights((1, 1)), 100)
        assert report.complement == ()
        assert report.search_bound == 100

    def test_max_len_guard(self):
        with pytest.raises(ValueError):
            complement_below(PF, Weights((2, 3)), 100, max_len=10)

    def test_classical_cross_check(self):
        stair = MaxComplexityWord()
        for a, b in [(2, 3), (3, 4), (3, 5), (4, 5), (5, 6), (2, 5)]:
            bound = sylvester_number(a, b) + 1
            report = complement_below(stair, Weights((a, b)), bound)
            assert report.complement == classical_nonrepresentable(a, b), (a, b)

    def test_report_metadata(self):
        report = complement_below(PF, Weights((2, 3)), 30)
        assert report.max_factor_length >= 15
        assert report.method == "binary-envelope-interval"
        assert all(0 < v < 30 for v in report.complement)


class TestPaperfoldingWitnesses:
    def test_pair_4_5(self):
        results = pf_witnesses(4, 5, range(4, 11))
        assert [r.n for r in results] == list(range(4, 11))
        assert all(r.verified_nonrepresentable for r in results)

    def test_pair_4_7(self):
        assert all(r.verified_nonrepresentable
                   for r in pf_witnesses(4, 7, range(4, 9)))

    def test_small_n_reported_not_asserted(self):
        (res,) = pf_witnesses(4, 5, range(2, 3))
        assert res.target == 20
        assert isinstance(res.verified_nonrepresentable, bool)

    def test_hypothesis_guard(self):
        with pytest.raises(ValueError):
            pf_witnesses(3, 5, range(4, 6))
        with pytest.raises(ValueError):
            pf_witnesses(4, 6, range(4, 6))

    def test_independent_value_scan_small_n(self):
        # cross-check the envelope verdict by scanning actual factor values
        for n in (4, 5):
            target = 4 * (2 ** (n - 1) - 2) + 5 * (2 ** (n - 1) + 2)
            max_len = target // 4
            text = PF.prefix_array(2**15)
            z = np.concatenate([[0], np.cumsum(text == 0)])
            seen = set()
            for length in range(1, max_len + 1):
                zeros = z[length:] - z[:-length]
                for zz in np.unique(zeros):
                    seen.add(4 * int(zz) + 5 * (length - int(zz)))
            assert target not in seen
