"""Slot modules: sl2 action, basis change between words, ladder operator."""

import pytest

from qpbw import fock
from qpbw.fock import FockVector, TruncationError, conj1_operator, \
    koy_transform, sigma_scalar, sl2_act
from qpbw.rootdata import CartanType, all_reduced_words
from qpbw.scalars import Scalar

ONE = Scalar.from_int(1)


def basis(ct, word, exps):
    return FockVector.basis(ct, word, tuple(exps))


def test_sl2_action_rules():
    ct = CartanType("A1")
    word = (0,)
    p0 = basis(ct, word, (0,))
    p1 = basis(ct, word, (1,))
    # a p(1) = (1 - q^2) p(0);  a p(0) = 0
    want = p0.scale(ONE - Scalar.q_power(2))
    assert sl2_act(ct, "a", 0, p1) == want
    assert sl2_act(ct, "a", 0, p0).is_zero()
    # c p(0) = -q p(0)
    assert sl2_act(ct, "c", 0, p0) == p0.scale(-Scalar.q_power(1))
    # d always shifts up; b diagonal
    assert sl2_act(ct, "d", 0, p0) == p1
    assert sl2_act(ct, "b", 0, p1) == p1.scale(Scalar.q_power(1))


def test_quantum_determinant():
    ct = CartanType("A1")
    word = (0,)
    for n in range(6):
        v = basis(ct, word, (n,))
        ad = sl2_act(ct, "a", 0, sl2_act(ct, "d", 0, v))
        bc = sl2_act(ct, "b", 0, sl2_act(ct, "c", 0, v))
        assert ad - bc.scale(Scalar.q_power(1)) == v


def test_sl2_qi_scaling():
    # in B2 the long-root slot uses q_i = q^2
    ct = CartanType("B2")
    word = tuple(sorted(all_reduced_words(ct, ct.longest_word()))[0])
    i = word[0]
    d = ct.qi(i)
    v = FockVector.vacuum(ct, word)
    got = fock.leg_act(ct, "c", 0, v)
    assert got == v.scale(-Scalar.q_power(d))


def test_koy_transform_identity_and_vacuum():
    ct = CartanType("A2")
    wa, wb = sorted(all_reduced_words(ct, ct.longest_word()))
    v = basis(ct, wa, (1, 0, 1))
    assert koy_transform(ct, wa, wa, v) == v
    vac = FockVector.vacuum(ct, wa)
    assert koy_transform(ct, wa, wb, vac) == FockVector.vacuum(ct, wb)


def test_koy_transform_roundtrip():
    ct = CartanType("B2")
    wa, wb = sorted(all_reduced_words(ct, ct.longest_word()))
    for exps in ((1, 0, 0, 0), (0, 1, 0, 0), (1, 0, 1, 0), (0, 2, 0, 1)):
        v = basis(ct, wa, exps)
        there = koy_transform(ct, wa, wb, v)
        back = koy_transform(ct, wb, wa, there)
        assert back == v


def test_koy_transform_two_terms():
    ct = CartanType("A2")
    v = basis(ct, (1, 0, 1), (0, 1, 0))
    got = koy_transform(ct, (1, 0, 1), (0, 1, 0), v)
    assert len(got.terms) == 2
    assert got.gamma((0, 1, 0)) == (1, 1)


def test_sigma_scalar():
    ct = CartanType("A1")
    word = (0,)
    v = basis(ct, word, (3,))
    assert sigma_scalar(ct, (0,), v) == v
    vac = FockVector.vacuum(ct, word)
    assert sigma_scalar(ct, (5,), vac) == vac
    # lambda = -antifundamental: q^{n (pi_1, alpha_1)} with (pi_1, alpha_1)=1
    assert sigma_scalar(ct, (-1,), v) == v.scale(Scalar.q_power(3))


def test_conj1_vacuum_a1():
    ct = CartanType("A1")
    vac = FockVector.vacuum(ct, (0,))
    got = conj1_operator(ct, (0,), 0, vac)
    # c_{0,1} = 1 and d(0)/d(1) = 1/(1-q^2)
    want = basis(ct, (0,), (1,)).scale(
        (ONE - Scalar.q_power(2)).inverse())
    assert got == want


def test_conj1_weight_shift():
    ct = CartanType("A2")
    word = (0, 1, 0)
    v = basis(ct, word, (1, 0, 0))
    got = conj1_operator(ct, word, 1, v)
    for n in got.terms:
        assert got.gamma(n) == (1, 1)


def test_conj1_sigma_commutation():
    # sigma_lam conj1_i = q^{-(lam, alpha_i')} conj1_i sigma_lam where
    # i' is the index dual to i under -w0 (the slot grading is twisted)
    ct = CartanType("A2")
    word = (0, 1, 0)
    lam = (1, -2)
    for exps in ((0, 0, 0), (1, 0, 0), (0, 1, 0)):
        v = basis(ct, word, exps)
        for i in range(2):
            lhs = sigma_scalar(ct, lam, conj1_operator(ct, word, i, v))
            rhs = conj1_operator(ct, word, i, sigma_scalar(ct, lam, v))
            pairing = ct.pair_pq(lam, ct.alpha(1 - i))
            assert lhs == rhs.scale(Scalar.q_power(-int(pairing)))


def test_truncation_error():
    ct = CartanType("A1")
    v = basis(ct, (0,), (9,))
    with pytest.raises(TruncationError):
        koy_transform(ct, (0,), (0,), v, height=3)


def test_fock_json():
    ct = CartanType("A2")
    v = basis(ct, (0, 1, 0), (1, 0, 0)).scale(Scalar.q_power(-1))
    js = v.to_json()
    assert js["word"] == [1, 2, 1]
    assert js["terms"] == [{"exps": [1, 0, 0], "coeff": "1/q"}]
