"""Braid words, permutations, closures, and Markov moves."""

import random

import pytest

from braidforge.braids import (
    BraidWord,
    Conjugate,
    Destabilize,
    Permutation,
    Stabilize,
    closure_components,
    exponent_sum,
    markov_move,
    parse_braid_word,
    random_braid_word,
    random_markov_perturbation,
    underlying_permutation,
)
from braidforge.errors import IndexOutOfRange, NotDestabilizable, ParseError


class TestParsing:
    def test_basic(self):
        w = parse_braid_word("1 1 1", 2)
        assert w == BraidWord(2, (1, 1, 1))

    def test_commas_and_signs(self):
        assert parse_braid_word("1, 2, -1", 3) == BraidWord(3, (1, 2, -1))

    def test_empty(self):
        assert parse_braid_word("", 3) == BraidWord(3, ())

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            parse_braid_word("3", 3)

    def test_malformed(self):
        with pytest.raises(ParseError):
            parse_braid_word("a", 3)
        with pytest.raises(ParseError):
            parse_braid_word("0", 3)

    def test_json_round_trip(self):
        w = parse_braid_word("1 -2", 3)
        assert BraidWord.from_jsonable(w.to_jsonable()) == w


class TestExponentSum:
    def test_mixed(self):
        assert exponent_sum(BraidWord(3, (1, -2, 1))) == 1

    def test_empty(self):
        assert exponent_sum(BraidWord(3)) == 0

    def test_power(self):
        assert exponent_sum(BraidWord(2, (1, 1, 1))) == 3


class TestPermutation:
    def test_single_generator(self):
        assert underlying_permutation(BraidWord(2, (1,))) == Permutation((2, 1))

    def test_involution(self):
        assert underlying_permutation(BraidWord(2, (1, 1))) == Permutation.identity(2)

    def test_three_cycle(self):
        p = underlying_permutation(BraidWord(3, (1, 2)))
        # Letters apply in list order: the strand at 1 moves to 2, then to 3.
        assert p == Permutation((3, 1, 2))
        assert len(p.cycles()) == 1

    def test_inverse(self):
        p = underlying_permutation(BraidWord(4, (1, 2, 3, 1)))
        assert p.compose(p.inverse()) == Permutation.identity(4)


class TestClosureComponents:
    def test_single_component(self):
        assert closure_components(BraidWord(2, (1,))) == [[1, 2]]

    def test_trivial_braid(self):
        assert closure_components(BraidWord(3)) == [[1], [2], [3]]

    def test_hopf_link(self):
        assert closure_components(BraidWord(2, (1, 1))) == [[1], [2]]


class TestMarkovMoves:
    def test_stabilize(self):
        w = markov_move(BraidWord(2, (1,)), Stabilize(1))
        assert w == BraidWord(3, (2, 1))

    def test_conjugate_by_empty(self):
        w = BraidWord(3, (1, -2))
        assert markov_move(w, Conjugate(BraidWord(3))) == w

    def test_conjugate(self):
        w = markov_move(BraidWord(2, (1,)), Conjugate(BraidWord(2, (1, 1))))
        assert w == BraidWord(2, (1, 1, 1, -1, -1))

    def test_destabilize_inverts_stabilize(self):
        w = BraidWord(2, (1, -1, 1))
        for sign in (1, -1):
            up = markov_move(w, Stabilize(sign))
            assert markov_move(up, Destabilize()) == w

    def test_destabilize_trailing(self):
        assert markov_move(BraidWord(3, (1, 2)), Destabilize()) == BraidWord(2, (1,))

    def test_not_destabilizable(self):
        for w in (BraidWord(3, (2, 2)), BraidWord(3, (1, 2, 1)), BraidWord(2, ())):
            with pytest.raises(NotDestabilizable):
                markov_move(w, Destabilize())

    def test_conjugation_preserves_structure(self):
        rng = random.Random(0)
        for _ in range(10):
            w = random_braid_word(rng)
            gamma = random_braid_word(rng, max_strands=w.strands, max_letters=3)
            gamma = BraidWord(w.strands, gamma.letters)
            moved = markov_move(w, Conjugate(gamma))
            assert exponent_sum(moved) == exponent_sum(w)
            assert len(closure_components(moved)) == len(closure_components(w))

    def test_stabilize_counts(self):
        w = BraidWord(3, (1, -2))
        up = markov_move(w, Stabilize(1))
        assert exponent_sum(up) == exponent_sum(w) + 1
        assert len(closure_components(up)) == len(closure_components(w))
        down = markov_move(w, Stabilize(-1))
        assert exponent_sum(down) == exponent_sum(w) - 1


class TestRandomPerturbation:
    def test_zero_steps(self):
        w = BraidWord(2, (1, 1))
        assert random_markov_perturbation(w, 0, 5) == w

    def test_determinism(self):
        w = BraidWord(3, (1, -2, 1))
        a = random_markov_perturbation(w, 6, 42)
        b = random_markov_perturbation(w, 6, 42)
        assert a == b

    def test_component_count_preserved(self):
        rng = random.Random(1)
        for _ in range(10):
            w = random_braid_word(rng)
            moved = random_markov_perturbation(w, 5, rng.randint(0, 10**6))
            assert len(closure_components(moved)) == len(closure_components(w))


def test_word_inverse_and_product():
    w = BraidWord(3, (1, -2))
    assert (w * w.inverse()).letters == (1, -2, 2, -1)
    assert underlying_permutation(w * w.inverse()) == Permutation.identity(3)
