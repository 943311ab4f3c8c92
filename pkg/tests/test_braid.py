"""Braid-group operators and root-vector families."""

import random

from qpbw import braid
from qpbw.pairing import eq_mod_serre
from qpbw.rootdata import CartanType, all_reduced_words
from qpbw.scalars import Scalar
from qpbw.uqcore import UElement


def test_tdot_on_its_own_index():
    ct = CartanType("A2")
    got = braid.t_dot(ct, 0, UElement.e(ct, 0))
    want = -(UElement.f(ct, 0) * UElement.k_i(ct, 0))
    assert got == want


def test_that_on_its_own_index():
    ct = CartanType("A2")
    got = braid.t_hat(ct, 0, UElement.e(ct, 0))
    want = -(UElement.f(ct, 0) * UElement.k_i(ct, 0, -1))
    assert got == want


def test_that_adjacent_index():
    ct = CartanType("A2")
    e1, e2 = UElement.e(ct, 0), UElement.e(ct, 1)
    got = braid.t_hat(ct, 0, e2)
    want = e1 * e2 - (e2 * e1).scale(Scalar.q_power(1))
    assert got == want


def test_braid_on_k():
    ct = CartanType("A2")
    got = braid.t_dot(ct, 0, UElement.k(ct, ct.alpha(1)))
    assert got == UElement.k(ct, (1, 1))
    assert braid.t_hat(ct, 0, UElement.k(ct, ct.alpha(1))) == got


def test_inverse_tables_roundtrip():
    for name in ("A1", "A2", "A3", "B2", "G2"):
        braid.validate_inverses(CartanType(name))


def test_inverse_examples():
    ct = CartanType("A1")
    f1k1 = UElement.f(ct, 0) * UElement.k_i(ct, 0)
    assert braid.t_dot_inv(ct, 0, -f1k1) == UElement.e(ct, 0)
    want = -(UElement.k_i(ct, 0, -1) * UElement.f(ct, 0))
    assert braid.t_dot_inv(ct, 0, UElement.e(ct, 0)) == want
    ct2 = CartanType("A2")
    e2 = UElement.e(ct2, 1)
    assert braid.t_hat_inv(ct2, 0, braid.t_hat(ct2, 0, e2)) == e2


def test_automorphism_property():
    rng = random.Random(31)
    for name in ("A2", "B2"):
        ct = CartanType(name)
        for _ in range(6):
            i = rng.randrange(ct.rank)
            xw = tuple(rng.randrange(ct.rank)
                       for _ in range(rng.randint(1, 2)))
            yw = tuple(rng.randrange(ct.rank)
                       for _ in range(rng.randint(1, 2)))
            x = UElement.e_word(ct, xw) * UElement.f(ct, rng.randrange(
                ct.rank))
            y = UElement.f_word(ct, yw)
            lhs = braid.t_dot(ct, i, x * y)
            rhs = braid.t_dot(ct, i, x) * braid.t_dot(ct, i, y)
            assert eq_mod_serre(lhs, rhs)


def test_braid_relation_a2_generators():
    ct = CartanType("A2")
    for g in (UElement.e(ct, 0), UElement.e(ct, 1), UElement.f(ct, 0),
              UElement.k_i(ct, 0)):
        lhs = braid.apply_word(ct, "dot", (0, 1, 0), g)
        rhs = braid.apply_word(ct, "dot", (1, 0, 1), g)
        assert eq_mod_serre(lhs, rhs)


def test_hat_is_antipode_conjugate_of_dot():
    # hat_w = S^-1 dot_w S on generators
    ct = CartanType("B2")
    for g in (UElement.e(ct, 0), UElement.e(ct, 1), UElement.f(ct, 0),
              UElement.f(ct, 1)):
        lhs = braid.t_hat(ct, 0, g)
        rhs = braid.t_dot(ct, 0, g.antipode()).antipode_inv()
        assert eq_mod_serre(lhs, rhs)


def test_apply_word_roundtrip():
    ct = CartanType("G2")
    x = UElement.e(ct, 1)
    word = (0, 1, 0)
    y = braid.apply_word(ct, "dot", word, x)
    assert braid.apply_word(ct, "dot", word, y, inverse=True) == x


def test_root_vectors():
    ct = CartanType("A2")
    word = (0, 1, 0)
    e1, e2 = UElement.e(ct, 0), UElement.e(ct, 1)
    assert braid.root_vector(ct, "ehat", word, 1) == e1
    want = e1 * e2 - (e2 * e1).scale(Scalar.q_power(1))
    assert braid.root_vector(ct, "ehat", word, 2) == want
    assert braid.root_vector(ct, "etilde", word, 3) == e1


def test_root_vectors_triangular():
    for name in ("A2", "B2"):
        ct = CartanType(name)
        word = min(all_reduced_words(ct, ct.longest_word()))
        for fam, eside in (("ehat", True), ("edot", True), ("etilde", True),
                           ("fhat", False), ("fdot", False),
                           ("ftilde", False)):
            for r in range(1, len(word) + 1):
                v = braid.root_vector(ct, fam, word, r)
                for (fw, kap, ew) in v.terms:
                    assert not any(kap)
                    if eside:
                        assert not fw
                    else:
                        assert not ew
