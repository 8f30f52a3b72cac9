from fractions import Fraction as F

import pytest

from catalania.counting import VecProfile, catalan_gen, catalan_sequence, catalan_vector
from catalania.exact import binom
from catalania.forest import compositions, generate_forests, generate_mixed_forests


class TestCatalanGen:
    def test_classic_catalan_prefix(self):
        assert [catalan_gen(n, 2, 1) for n in range(6)] == [1, 1, 2, 5, 14, 42]

    def test_n_zero_is_one_for_all_parameters(self):
        for beta in (F(0), F(1), F(7, 2), F(-3)):
            for gamma in (F(0), F(1), F(-5, 2)):
                assert catalan_gen(0, beta, gamma) == 1

    def test_ternary_two_internal(self):
        assert catalan_gen(2, 3, 1) == 3

    def test_gamma_zero_vanishes_for_positive_n(self):
        assert catalan_gen(3, 2, 0) == 0

    def test_quotient_form_agreement(self):
        # gamma/(beta n + gamma) binom(beta n + gamma, n) wherever defined
        for beta in (F(0), F(1), F(2), F(3), F(1, 2), F(-1)):
            for gamma in (F(-2), F(-1, 2), F(1), F(2), F(3)):
                for n in range(1, 8):
                    pole = beta * n + gamma
                    if pole == 0:
                        continue
                    quotient = gamma / pole * binom(pole, n)
                    assert catalan_gen(n, beta, gamma) == quotient

    def test_integrality_on_natural_grid(self):
        for beta in range(1, 5):
            for gamma in range(0, 5):
                for n in range(0, 9):
                    value = catalan_gen(n, beta, gamma)
                    assert value.denominator == 1 and value >= 0


class TestCatalanVector:
    def test_mixed_pair(self):
        assert catalan_vector(VecProfile((1, 1), (2, 3)), 1) == 5

    def test_specializes_to_scalar(self):
        for k in range(7):
            assert catalan_vector(VecProfile((k,), (2,)), 1) == catalan_gen(k, 2, 1)

    def test_empty_profile_counts_one(self):
        assert catalan_vector(VecProfile((0, 0), (2, 3)), 4) == 1
        assert catalan_vector(VecProfile((0,), (5,)), 0) == 1

    def test_gamma_zero_nonempty_counts_zero(self):
        assert catalan_vector(VecProfile((1, 0), (2, 3)), 0) == 0


class TestVecProfile:
    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            VecProfile((1,), (2, 3))

    def test_rejects_non_increasing_outdegrees(self):
        with pytest.raises(ValueError):
            VecProfile((1, 1), (3, 2))
        with pytest.raises(ValueError):
            VecProfile((1, 1), (2, 2))

    def test_rejects_zero_outdegree(self):
        with pytest.raises(ValueError):
            VecProfile((1,), (0,))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            VecProfile((), ())

    def test_derived_quantities(self):
        profile = VecProfile((2, 1), (2, 3))
        assert profile.t == 2
        assert profile.dot_np() == 7
        assert profile.leaf_count(2) == 2 * 1 + 1 * 2 + 2


class TestCatalanSequence:
    def test_binary_prefix(self):
        assert catalan_sequence(2, 1, 3) == [1, 1, 2, 5]

    def test_unary_paths(self):
        assert catalan_sequence(1, 1, 4) == [1, 1, 1, 1, 1]

    def test_two_component_binary(self):
        assert catalan_sequence(2, 2, 1) == [1, 2]


class TestEnumerationOracle:
    """The central dual route: the closed forms against exhaustive generation."""

    def test_scalar_grid(self):
        for beta in (1, 2, 3):
            for gamma in (1, 2, 3):
                for n in range(0, 6 if beta <= 2 else 4):
                    count = len(generate_forests(beta, n, gamma))
                    assert count == catalan_gen(n, beta, gamma), (beta, gamma, n)

    def test_vector_grid(self):
        for p in ((2,), (3,), (2, 3)):
            for gamma in (0, 1, 2):
                for total in range(0, 4):
                    for n_vec in compositions(total, len(p)):
                        profile = VecProfile(n_vec, p)
                        count = len(generate_mixed_forests(profile, gamma))
                        assert count == catalan_vector(profile, gamma), (p, gamma, n_vec)
