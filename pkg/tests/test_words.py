"""Word generation: printed prefixes, construction equivalence, exact floors."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from frobwords.words import (
    ConfigurationError,
    FiniteWord,
    Morphism,
    PHI_MORPHISM,
    WORDS,
    fib_beatty,
    fibonacci_letter,
    fibonacci_prefix,
    floor_alpha,
    floor_phi,
    floor_phi_array,
    incidence_matrix,
    iterate_morphism,
    paperfolding_letter,
    paperfolding_prefix,
    replace_alternate_zeros,
    ternary_t_letter,
    ternary_t_prefix,
)

PF_12 = "001001100011"
FIB_17 = "01001010010010100"
PHI_25 = "0010100101110110010111011"
T_17 = "01201210210210120"


class TestFiniteWord:
    def test_roundtrip_and_equality(self):
        w = FiniteWord.from_string("00101")
        assert str(w) == "00101"
        assert len(w) == 5
        assert w == FiniteWord((0, 0, 1, 0, 1), 2)
        assert w[1:3] == FiniteWord.from_string("01")

    def test_symbol_validation(self):
        with pytest.raises(ValueError):
            FiniteWord([0, 2], alphabet_size=2)

    def test_empty_word_allowed(self):
        assert len(FiniteWord([], 2)) == 0

    def test_complement_reverse(self):
        w = FiniteWord.from_string("0010011")
        assert str(w.complement().reverse()) == "0011011"


class TestPaperfolding:
    def test_letter_examples(self):
        assert paperfolding_letter(1) == 0
        assert paperfolding_letter(3) == 1
        assert paperfolding_letter(12) == 1  # 12 = 3 * 2^2

    def test_letter_rejects_zero(self):
        with pytest.raises(ValueError):
            paperfolding_letter(0)

    @pytest.mark.parametrize("construction", ["direct", "recursive", "toeplitz"])
    def test_prefix_12(self, construction):
        assert str(paperfolding_prefix(12, construction)) == PF_12

    def test_prefix_1(self):
        assert str(paperfolding_prefix(1)) == "0"

    def test_constructions_agree_to_4096(self):
        a = paperfolding_prefix(4096, "direct")
        assert a == paperfolding_prefix(4096, "recursive")
        assert a == paperfolding_prefix(4096, "toeplitz")

    def test_unknown_construction(self):
        with pytest.raises(ValueError):
            paperfolding_prefix(4, "spiral")

    @given(st.integers(min_value=1, max_value=2**14))
    def test_letter_matches_recursive_prefix(self, n):
        w = paperfolding_prefix(n, "recursive")
        assert w[n - 1] == paperfolding_letter(n)


class TestBeatty:
    def test_floor_phi_small(self):
        assert floor_phi(0) == 0
        assert floor_phi(1) == 1
        assert floor_phi(2) == 3

    def test_floor_alpha_small(self):
        assert floor_alpha(1) == 0
        with pytest.raises(ValueError):
            floor_alpha(0)

    def test_fib_beatty_dispatch(self):
        assert fib_beatty(2, "phi") == 3
        assert fib_beatty(1, "alpha") == 0
        with pytest.raises(ValueError):
            fib_beatty(2, "tau")

    def test_array_matches_scalar(self):
        arr = floor_phi_array(2000)
        assert all(int(arr[n]) == floor_phi(n) for n in range(0, 2001, 37))

    def test_array_range_error(self):
        with pytest.raises(OverflowError):
            floor_phi_array(2 * 10**9)

    @given(st.integers(min_value=1, max_value=10**12))
    def test_floor_phi_certified(self, n):
        # w = floor(n*phi) iff (2w-n)^2 < 5n^2 < (2w-n+2)^2
        w = floor_phi(n)
        assert (2 * w - n) ** 2 < 5 * n * n < (2 * w - n + 2) ** 2


class TestFibonacciWord:
    def test_prefix_17(self):
        assert str(fibonacci_prefix(17)) == FIB_17

    def test_zero_to_two_image(self):
        image = "".join("2" if c == "0" else c for c in FIB_17)
        assert image == "21221212212212122"

    def test_ones_count_telescopes(self):
        w = fibonacci_prefix(5000)
        assert w.count(1) == floor_alpha(5001)

    def test_letters_match_prefix(self):
        w = fibonacci_prefix(300)
        assert all(w[n - 1] == fibonacci_letter(n) for n in range(1, 301))


class TestMorphisms:
    def test_phi_fixed_point_prefix(self):
        assert str(iterate_morphism(PHI_MORPHISM, 0, 25)) == PHI_25
        assert str(iterate_morphism(PHI_MORPHISM, 0, 5)) == "00101"

    def test_identity_morphism_rejected(self):
        ident = Morphism([FiniteWord("0", 2), FiniteWord("1", 2)])
        with pytest.raises(ConfigurationError):
            iterate_morphism(ident, 0, 2)

    def test_non_prolongable_seed_rejected(self):
        m = Morphism([FiniteWord.from_string("10"), FiniteWord.from_string("11")])
        with pytest.raises(ConfigurationError):
            iterate_morphism(m, 0, 10)

    def test_incidence_matrix_phi(self):
        assert incidence_matrix(PHI_MORPHISM).tolist() == [[3, 1], [2, 4]]

    def test_incidence_matrix_identity(self):
        ident = Morphism([FiniteWord("0", 2), FiniteWord("1", 2)])
        assert incidence_matrix(ident).tolist() == [[1, 0], [0, 1]]

    def test_incidence_matrix_swap(self):
        m = Morphism([FiniteWord.from_string("01"), FiniteWord.from_string("10")])
        assert incidence_matrix(m).tolist() == [[1, 1], [1, 1]]

    def test_image_alphabet_validation(self):
        with pytest.raises(ValueError):
            Morphism([FiniteWord("012", 3), FiniteWord("0", 3)])

    @pytest.mark.parametrize("k", range(1, 5))
    def test_fixed_point_prefixes_nested(self, k):
        shorter = iterate_morphism(PHI_MORPHISM, 0, 5**k)
        longer = iterate_morphism(PHI_MORPHISM, 0, 5 ** (k + 1))
        assert longer.symbols[: 5**k] == shorter.symbols


class TestAlternateZeros:
    def test_periodic_example(self):
        chi = FiniteWord.from_string("01010101")
        assert str(replace_alternate_zeros(chi, "second")) == "01210121"
        assert str(replace_alternate_zeros(chi, "first")) == "21012101"

    def test_fib_17_image(self):
        assert str(replace_alternate_zeros(fibonacci_prefix(17))) == T_17

    def test_rejects_ternary_input(self):
        with pytest.raises(ValueError):
            replace_alternate_zeros(FiniteWord.from_string("012"))

    @given(st.lists(st.integers(0, 1), min_size=0, max_size=200),
           st.sampled_from(["second", "first"]))
    def test_erasing_recovers_input(self, bits, start):
        w = FiniteWord(bits, 2)
        image = replace_alternate_zeros(w, start)
        assert len(image) == len(w)
        assert tuple(0 if s == 2 else s for s in image) == w.symbols

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=200))
    def test_both_starts_partition_zeros(self, bits):
        w = FiniteWord(bits, 2)
        twos_second = replace_alternate_zeros(w, "second").count(2)
        twos_first = replace_alternate_zeros(w, "first").count(2)
        assert twos_second + twos_first == w.count(0)


class TestTernaryWord:
    def test_prefix_17(self):
        assert str(ternary_t_prefix(17)) == T_17

    def test_prefix_1(self):
        assert str(ternary_t_prefix(1)) == "0"

    def test_zero_two_split_at_5000(self):
        w = ternary_t_prefix(5000)
        assert w.count(0) - w.count(2) in (0, 1)

    def test_letters_match_prefix(self):
        w = ternary_t_prefix(400)
        assert all(w[n - 1] == ternary_t_letter(n) for n in range(1, 401))


class TestGenerators:
    @pytest.mark.parametrize("name,expected", [
        ("pf", PF_12), ("fib", FIB_17[:12]), ("phi", PHI_25[:12]), ("t", T_17[:12]),
    ])
    def test_prefix_matches(self, name, expected):
        assert str(WORDS[name].prefix(12)) == expected

    def test_prefix_array_read_only(self):
        arr = WORDS["pf"].prefix_array(100)
        with pytest.raises(ValueError):
            arr[0] = 1

    def test_grow_only_cache_consistent(self):
        gen = WORDS["fib"]
        short = gen.prefix_array(10).copy()
        gen.prefix_array(10000)
        assert np.array_equal(gen.prefix_array(10), short)
