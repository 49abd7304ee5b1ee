"""Braid tensors, the braid equation, partial traces, and trace routes."""

import random
from fractions import Fraction

import pytest

from braidforge.braids import BraidWord, parse_braid_word, random_braid_word
from braidforge.errors import NotScalar, SingularInput, ZeroScalar
from braidforge.matrix import RingMatrix, kron, random_invertible_matrix
from braidforge.rings import LAURENT, RATIONAL, LaurentPoly
from braidforge.presets import standard_tensor
from braidforge.tensors import (
    BraidTensor,
    check_braid_equation,
    identity_tensor,
    matrix_to_tensor,
    partial_trace_scalars,
    swap_tensor,
    tensor_from_matrix_pair,
    tensor_generator_operator,
    tensor_inverse,
    tensor_rep_trace,
    tensor_to_matrix,
)

T = LaurentPoly.var()


def rational_pair_tensor(m: int, seed: int) -> BraidTensor:
    rng = random.Random(seed)
    a = random_invertible_matrix(m, rng)
    b = mat_b = a**-1
    return tensor_from_matrix_pair(a, mat_b)


class TestTensorMatrixRoundTrip:
    def test_round_trip(self):
        t = standard_tensor(2, 7)
        assert matrix_to_tensor(tensor_to_matrix(t), 2) == BraidTensor(
            t.m, t.ring, t.entries
        )

    def test_identity(self):
        t = identity_tensor(3, RATIONAL)
        assert tensor_to_matrix(t) == RingMatrix.identity(RATIONAL, 9)

    def test_swap_matrix(self):
        t = swap_tensor(2, RATIONAL)
        expected = RingMatrix(
            RATIONAL,
            [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
        )
        assert tensor_to_matrix(t) == expected


class TestTensorFromMatrixPair:
    def test_entry_formula(self):
        a = RingMatrix(RATIONAL, [[1, 2], [3, 4]])
        b = RingMatrix(RATIONAL, [[5, 6], [7, 1]])
        t = tensor_from_matrix_pair(a, b)
        for i1 in range(2):
            for i2 in range(2):
                for j1 in range(2):
                    for j2 in range(2):
                        assert t[i1, i2, j1, j2] == (
                            b.entries[i1][j2] * a.entries[i2][j1]
                        )

    def test_singular_rejected(self):
        a = RingMatrix(RATIONAL, [[1, 0], [0, 1]])
        s = RingMatrix(RATIONAL, [[1, 1], [1, 1]])
        with pytest.raises(SingularInput):
            tensor_from_matrix_pair(s, a)
        with pytest.raises(SingularInput):
            tensor_from_matrix_pair(a, s)

    def test_pair_recorded(self):
        t = standard_tensor(2, 3)
        assert t.pair is not None
        a, b = t.pair
        assert b == a**-1 * RingMatrix.identity(LAURENT, 2).scale(T) or b == (
            RingMatrix.identity(LAURENT, 2).scale(T) * a**-1
        )


class TestBraidEquation:
    def test_identity_passes(self):
        assert check_braid_equation(identity_tensor(2, RATIONAL)) == []

    def test_swap_passes(self):
        assert check_braid_equation(swap_tensor(2, RATIONAL)) == []

    def test_standard_pairs_pass(self):
        for m, seed in ((2, 0), (2, 5), (3, 1)):
            assert check_braid_equation(standard_tensor(m, seed)) == []

    def test_random_tensor_fails(self):
        entries = [
            [
                [
                    [Fraction(i1 + 2 * i2 + 3 * j1 + 5 * j2 + 1) for j2 in range(2)]
                    for j1 in range(2)
                ]
                for i2 in range(2)
            ]
            for i1 in range(2)
        ]
        t = BraidTensor(2, RATIONAL, entries)
        assert check_braid_equation(t) != []

    def test_period_two_pair(self):
        rng = random.Random(11)
        a = random_invertible_matrix(2, rng)
        ring_t = RingMatrix.identity(LAURENT, 2).scale(T)
        a_l = a.to_ring(LAURENT)
        t1 = tensor_from_matrix_pair(a_l, ring_t * a_l**-1)
        b = random_invertible_matrix(2, rng).to_ring(LAURENT)
        t2 = tensor_from_matrix_pair(b, ring_t * b**-1)
        assert check_braid_equation(t1, t2) == []


class TestTensorInverse:
    def test_matrix_inverse(self):
        t = standard_tensor(2, 4)
        inv = tensor_inverse(t)
        assert tensor_to_matrix(t) * tensor_to_matrix(inv) == RingMatrix.identity(
            LAURENT, 4
        )

    def test_pair_propagates(self):
        t = standard_tensor(2, 4)
        inv = tensor_inverse(t)
        a, b = t.pair
        assert inv.pair == (b**-1, a**-1)


class TestPartialTraces:
    def test_identity_scalars(self):
        assert partial_trace_scalars(identity_tensor(2, RATIONAL)) == (
            Fraction(2),
            Fraction(2),
        )

    def test_swap_scalars(self):
        assert partial_trace_scalars(swap_tensor(2, RATIONAL)) == (
            Fraction(1),
            Fraction(1),
        )

    def test_standard_pair_scalars(self):
        for m in (2, 3):
            t = standard_tensor(m, 9)
            assert partial_trace_scalars(t) == (T, T**-1)

    def test_not_scalar(self):
        # gamma = diag(2, 0): a partial trace that is diagonal but not scalar.
        entries = [
            [
                [
                    [
                        Fraction(1) if (i1, i2) == (j1, j2) and i1 == 0 else Fraction(0)
                        for j2 in range(2)
                    ]
                    for j1 in range(2)
                ]
                for i2 in range(2)
            ]
            for i1 in range(2)
        ]
        bad = BraidTensor(2, RATIONAL, entries)
        with pytest.raises(NotScalar):
            partial_trace_scalars(bad)

    def test_zero_scalar(self):
        zero = BraidTensor(
            2, RATIONAL, [[[[Fraction(0)] * 2] * 2] * 2] * 2
        )
        with pytest.raises(ZeroScalar):
            partial_trace_scalars(zero)


class TestSlotOperators:
    def test_generator_matrix_matches_kron(self):
        t = standard_tensor(2, 2)
        op = tensor_generator_operator(t, 3, 1)
        expected = kron(tensor_to_matrix(t), RingMatrix.identity(LAURENT, 2))
        assert op.to_matrix() == expected

    def test_generator_second_slot(self):
        t = standard_tensor(2, 2)
        op = tensor_generator_operator(t, 3, 2)
        expected = kron(RingMatrix.identity(LAURENT, 2), tensor_to_matrix(t))
        assert op.to_matrix() == expected

    def test_braid_relation_as_matrices(self):
        t = standard_tensor(2, 6)
        g1 = tensor_generator_operator(t, 3, 1).to_matrix()
        g2 = tensor_generator_operator(t, 3, 2).to_matrix()
        assert g1 * g2 * g1 == g2 * g1 * g2


class TestTraceRoutes:
    def test_methods_agree_fixed_words(self):
        t = standard_tensor(2, 1)
        for text, strands in (
            ("", 1),
            ("1", 2),
            ("1 1 1", 2),
            ("1 -2 1 -2", 3),
            ("1 2 -1 3", 4),
        ):
            w = parse_braid_word(text, strands)
            dense = tensor_rep_trace(t, w, "dense")
            contract = tensor_rep_trace(t, w, "contract")
            slots = tensor_rep_trace(t, w, "slots")
            assert dense == contract == slots

    def test_methods_agree_random(self):
        rng = random.Random(21)
        t = standard_tensor(2, 13)
        for _ in range(6):
            w = random_braid_word(rng, max_strands=4, max_letters=6)
            dense = tensor_rep_trace(t, w, "dense")
            contract = tensor_rep_trace(t, w, "contract")
            slots = tensor_rep_trace(t, w, "slots")
            assert dense == contract == slots

    def test_empty_word_trace(self):
        t = standard_tensor(2, 1)
        w = BraidWord(3)
        assert tensor_rep_trace(t, w) == LaurentPoly.const(8)

    def test_swap_tensor_trace_counts_cycles(self):
        t = swap_tensor(2, RATIONAL)
        # The closure of t1 t2 in B3 has one component; the slot trace of the
        # swap tensor is m^{#components}.
        w = parse_braid_word("1 2", 3)
        assert tensor_rep_trace(t, w, "dense") == Fraction(2)
        assert tensor_rep_trace(t, BraidWord(3), "dense") == Fraction(8)

    def test_unknown_method(self):
        t = standard_tensor(2, 1)
        with pytest.raises(ValueError):
            tensor_rep_trace(t, BraidWord(2, (1,)), "magic")


def test_jsonable():
    t = swap_tensor(2, RATIONAL)
    data = t.to_jsonable()
    assert data["m"] == 2
    assert isinstance(data["entries"], list)
