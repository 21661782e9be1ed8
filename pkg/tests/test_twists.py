"""Word calculus of spherical twists: reflections, rewriting, normal forms."""

from __future__ import annotations

import random

import pytest

from sigma2 import intmat
from sigma2.lattice import (
    SIGMA2,
    class_of_line_bundle,
    class_of_OC,
    euler_pairing,
    pic,
)
from sigma2.twists import (
    TwistWord,
    apply_word,
    dual_conjugate,
    dual_matrix,
    is_k0_trivial,
    normalize,
    rewrite_pair,
    shift,
    tensor_oc,
    twist,
    twist_on_class,
    word,
    word_matrix,
)

I4 = intmat.identity(4)
O = class_of_line_bundle(pic(SIGMA2, 0, 0))


def lb(a, b):
    return class_of_line_bundle(pic(SIGMA2, a, b))


def random_word(rng, length, index_bound=5):
    gens = []
    for _ in range(length):
        roll = rng.random()
        if roll < 0.6:
            gens.append(twist(rng.randint(-index_bound, index_bound),
                              1 if rng.random() < 0.5 else -1))
        elif roll < 0.85:
            gens.append(tensor_oc(rng.randint(-2, 2)))
        else:
            gens.append(shift(rng.randint(-2, 2)))
    return TwistWord(tuple(gens))


class TestTwistOnClass:
    def test_structure_sheaf_reflects_to_minus_section(self):
        assert twist_on_class(0, 1, O) == lb(-1, 0)

    def test_degree_minus_one_twist_on_fiber_bundle(self):
        assert twist_on_class(-1, 1, lb(0, 1)) == lb(1, 1)

    def test_root_is_negated(self):
        for a in range(-5, 6):
            alpha = class_of_OC(a)
            assert twist_on_class(a, 1, alpha) == -alpha

    def test_inverse_twist_agrees_on_the_lattice(self):
        # pairing against a spherical class is symmetric, so both signs
        # give one and the same reflection
        v = lb(2, -3)
        for a in range(-4, 5):
            assert twist_on_class(a, 1, v) == twist_on_class(a, -1, v)

    def test_reflection_formula(self):
        v = lb(1, 4)
        alpha = class_of_OC(-1)
        assert twist_on_class(-1, 1, v) == v - euler_pairing(alpha, v) * alpha

    def test_rejects_quadric_classes(self):
        from sigma2.lattice import QUADRIC

        with pytest.raises(ValueError):
            apply_word(word(twist(0)), class_of_line_bundle(pic(QUADRIC, 0, 0)))


class TestStandardBasisCoordinates:
    def test_round_trip(self):
        from sigma2.twists import class_coordinates, class_from_coordinates

        rng = random.Random(31)
        for _ in range(50):
            v = lb(rng.randint(-6, 6), rng.randint(-6, 6))
            assert class_from_coordinates(class_coordinates(v)) == v

    def test_basis_vectors(self):
        from sigma2.twists import class_coordinates, standard_basis

        for i, e in enumerate(standard_basis()):
            assert class_coordinates(e) == tuple(int(j == i) for j in range(4))


class TestWordMatrix:
    def test_identity_word(self):
        assert word_matrix(TwistWord()) == I4

    def test_functorial(self):
        rng = random.Random(20240)
        for _ in range(50):
            u = random_word(rng, rng.randint(0, 6))
            v = random_word(rng, rng.randint(0, 6))
            assert word_matrix(u * v) == intmat.matmul(word_matrix(u), word_matrix(v))

    def test_squares_trivial(self):
        for a in range(-10, 11):
            assert word_matrix(word(twist(a), twist(a))) == I4

    def test_inverse_pairs_trivial(self):
        for a in range(-10, 11):
            assert word_matrix(word(twist(a), twist(a, -1))) == I4
            assert word_matrix(word(twist(a, -1), twist(a))) == I4

    def test_adjacent_twists_compose_to_tensor(self):
        t = word_matrix(word(tensor_oc(1)))
        for a in range(-10, 11):
            assert word_matrix(word(twist(a), twist(a + 1))) == t

    def test_tensor_conjugation(self):
        for a in range(-6, 7):
            for m in range(-3, 4):
                lhs = word_matrix(word(tensor_oc(m), twist(a)))
                rhs = word_matrix(word(twist(a - 2 * m), tensor_oc(m)))
                assert lhs == rhs, (a, m)

    def test_inverse_twist_expansion(self):
        for a in range(-6, 7):
            lhs = word_matrix(word(twist(a, -1)))
            rhs = word_matrix(word(twist(a + 1), tensor_oc(-1)))
            assert lhs == rhs, a

    def test_shift_acts_by_sign(self):
        assert word_matrix(word(shift(1))) == tuple(
            tuple(-x for x in row) for row in I4
        )
        assert word_matrix(word(shift(2))) == I4

    def test_determinant_is_unimodular(self):
        rng = random.Random(77)
        for _ in range(40):
            w = random_word(rng, rng.randint(0, 8))
            assert intmat.determinant(word_matrix(w)) in (1, -1)


class TestRewritePair:
    def test_adjacent_pair_is_single_tensor(self):
        for a in range(-5, 6):
            assert rewrite_pair(a, a + 1).gens == (tensor_oc(1),)

    def test_equal_pair_is_single_square(self):
        w = rewrite_pair(3, 3)
        assert w.gens == (twist(3), twist(3))

    def test_decreasing_example_matches_matrix(self):
        assert word_matrix(rewrite_pair(3, 0)) == word_matrix(word(twist(3), twist(0)))

    @pytest.mark.parametrize("a", range(-5, 6))
    @pytest.mark.parametrize("b", range(-5, 6))
    def test_matrix_oracle(self, a, b):
        assert word_matrix(rewrite_pair(a, b)) == word_matrix(word(twist(a), twist(b)))

    @pytest.mark.parametrize("a,b", [(0, 4), (4, 0), (-3, 2), (2, -3)])
    def test_output_shape(self, a, b):
        # tensors plus twists in adjacent equal pairs, nothing else
        gens = list(rewrite_pair(a, b).gens)
        i = 0
        while i < len(gens):
            if gens[i].kind == "OC":
                i += 1
                continue
            assert gens[i].kind == "T"
            assert i + 1 < len(gens) and gens[i + 1] == gens[i]
            i += 2


class TestNormalize:
    def test_empty_word(self):
        nf = normalize(TwistWord())
        assert (nf.tensor_exp, nf.has_odd_twist, nf.squares, nf.shift_parity) \
            == (0, False, (), 0)

    def test_adjacent_pair(self):
        nf = normalize(word(twist(0), twist(1)))
        assert (nf.tensor_exp, nf.has_odd_twist, nf.squares) == (1, False, ())

    def test_single_twist_anchors_at_zero(self):
        nf = normalize(word(twist(5)))
        assert nf.has_odd_twist and nf.odd_anchor == 0
        assert word_matrix(nf.to_word()) == word_matrix(word(twist(5)))

    def test_square_normalizes_to_trivial_frame(self):
        for a in range(-4, 5):
            nf = normalize(word(twist(a), twist(a)))
            assert nf.tensor_exp == 0 and not nf.has_odd_twist

    def test_shift_parity_recorded(self):
        nf = normalize(word(shift(3), twist(1), shift(2)))
        assert nf.shift_parity == 1
        assert word_matrix(nf.to_word()) == word_matrix(word(shift(1), twist(1)))

    def test_soundness_on_random_words(self):
        rng = random.Random(99)
        for n in range(400):
            w = random_word(rng, rng.randint(0, 12))
            nf = normalize(w)
            assert word_matrix(nf.to_word()) == word_matrix(w), (n, w)
            assert nf.has_odd_twist == (w.twist_count() % 2 == 1)
            assert nf.shift_parity == w.total_shift() % 2
            assert all(exp in (2, -2) for _, exp in nf.squares)

    def test_trivial_words_have_no_tensor_and_no_anchor(self):
        rng = random.Random(5)
        seen = 0
        for _ in range(300):
            w = random_word(rng, rng.randint(0, 10))
            if is_k0_trivial(w):
                nf = normalize(w)
                assert nf.tensor_exp == 0 and not nf.has_odd_twist
                seen += 1
        assert seen > 0


class TestDualConjugate:
    def test_letter_images(self):
        w = word(twist(3), tensor_oc(2), shift(1), twist(-1, -1))
        out = dual_conjugate(w).gens
        assert out == (twist(-5, -1), tensor_oc(-2), shift(-1), twist(-1))

    def test_matrix_contract(self):
        d = dual_matrix()
        rng = random.Random(13)
        for _ in range(40):
            w = random_word(rng, rng.randint(0, 8))
            lhs = word_matrix(dual_conjugate(w))
            rhs = intmat.matmul(d, intmat.matmul(word_matrix(w), d))
            assert lhs == rhs

    def test_involution_at_matrix_level(self):
        rng = random.Random(14)
        for _ in range(40):
            w = random_word(rng, rng.randint(0, 8))
            assert word_matrix(dual_conjugate(dual_conjugate(w))) == word_matrix(w)

    def test_tensor_image(self):
        assert dual_conjugate(word(tensor_oc(1))).gens == (tensor_oc(-1),)


class TestK0Trivial:
    def test_squares_are_trivial(self):
        for a in range(-6, 7):
            assert is_k0_trivial(word(twist(a), twist(a)))

    def test_single_twist_moves_a_line_bundle(self):
        # the reflection fixes [O((a+1)f)] but moves [O((a+2)f)]
        for a in range(-6, 7):
            assert not is_k0_trivial(word(twist(a)))
            assert apply_word(word(twist(a)), lb(0, a + 1)) == lb(0, a + 1)
            assert apply_word(word(twist(a)), lb(0, a + 2)) != lb(0, a + 2)

    def test_tensor_moves_the_structure_sheaf(self):
        assert not is_k0_trivial(word(tensor_oc(1)))
        assert apply_word(word(tensor_oc(1)), O) == lb(1, 0)
