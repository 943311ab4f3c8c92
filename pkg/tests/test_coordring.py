"""Lowest-weight modules, matrix coefficients, tensor-module action."""

import random

import pytest

from qpbw.coordring import (LWModule, MatCoef, act_on_tensor, build_irrep,
                            fundamental_modules, verify_intertwiner)
from qpbw.fock import FockVector
from qpbw.rootdata import CartanType
from qpbw.scalars import Scalar
from qpbw.uqcore import UElement

ONE = Scalar.from_int(1)


def test_a1_two_dimensional():
    ct = CartanType("A1")
    V = build_irrep(ct, (-1,))
    assert V.dim == 2
    km = V.k_matrix(0)
    eigs = sorted(str(km[j][j]) for j in range(2))
    assert eigs == ["1/q", "q"]


def test_a2_fundamental():
    ct = CartanType("A2")
    V = build_irrep(ct, (-1, 0))
    assert V.dim == 3


def test_trivial_module():
    for name in ("A1", "A2", "B2"):
        ct = CartanType(name)
        V = build_irrep(ct, (0,) * ct.rank)
        assert V.dim == 1


def test_b2_fundamentals():
    ct = CartanType("B2")
    dims = sorted(V.dim for V in fundamental_modules(ct))
    assert dims == [4, 5]


def test_matrix_coefficient_pairing():
    ct = CartanType("A1")
    V = build_irrep(ct, (-1,))
    phi = MatCoef(V, 0, 0)
    # <phi, k> is an eigenvalue of the k action
    val = phi.eval(UElement.k_i(ct, 0))
    assert val in (Scalar.q_power(1), Scalar.q_power(-1))


def test_product_rule_random():
    # <phi psi, u> = sum <phi, u_(1)> <psi, u_(2)>
    ct = CartanType("A1")
    V = build_irrep(ct, (-1,))
    rng = random.Random(41)
    coefs = [MatCoef(V, s, t) for s in range(2) for t in range(2)]
    elements = [UElement.e(ct, 0), UElement.f(ct, 0),
                UElement.k_i(ct, 0), UElement.e(ct, 0) * UElement.f(ct, 0)]
    for _ in range(12):
        phi, psi = rng.choice(coefs), rng.choice(coefs)
        u = rng.choice(elements)
        got = phi.eval_product(psi, u)
        want = Scalar.from_int(0)
        for (ma, mb), c in u.coproduct().terms.items():
            want = want + c * phi.eval(UElement(ct, {ma: ONE})) \
                * psi.eval(UElement(ct, {mb: ONE}))
        assert got == want


def test_sl2_dictionary_relations():
    # the four matrix coefficients of the 2-dim module satisfy ab = qba
    # and ad - da = (q - q^-1) bc under the convolution product
    ct = CartanType("A1")
    V = build_irrep(ct, (-1,))
    k, e = UElement.k_i(ct, 0), UElement.e(ct, 0)
    by_role = {}
    for s in range(2):
        for t in range(2):
            phi = MatCoef(V, s, t)
            kv = phi.eval(k)
            ev = phi.eval(e)
            if not kv.is_zero():
                by_role["a" if kv == Scalar.q_power(1) else "d"] = phi
            else:
                by_role["b" if not ev.is_zero() else "c"] = phi
    a, b, c, d = (by_role[g] for g in "abcd")
    probes = [UElement.one(ct), e, UElement.f(ct, 0), k,
              e * UElement.f(ct, 0)]
    qq = Scalar.q_power(1)
    for u in probes:
        assert a.eval_product(b, u) == b.eval_product(a, u) * qq
        lhs = a.eval_product(d, u) - d.eval_product(a, u)
        rhs = (b.eval_product(c, u)) * (qq - Scalar.q_power(-1))
        assert lhs == rhs


def test_act_on_tensor_a1_full_dictionary():
    # each matrix coefficient of the 2-dim module acts on single-slot
    # vectors as the matching sl2 generator
    ct = CartanType("A1")
    V = build_irrep(ct, (-1,))
    from qpbw.fock import sl2_act
    k, e = UElement.k_i(ct, 0), UElement.e(ct, 0)
    by_role = {}
    for s in range(2):
        for t in range(2):
            phi = MatCoef(V, s, t)
            kv = phi.eval(k)
            if not kv.is_zero():
                by_role["a" if kv == Scalar.q_power(1) else "d"] = phi
            else:
                by_role["b" if not phi.eval(e).is_zero() else "c"] = phi
    for g in "abcd":
        for n in range(5):
            v = FockVector.basis(ct, (0,), (n,))
            assert act_on_tensor(by_role[g], (0,), v) == sl2_act(ct, g, 0, v)


def test_verify_intertwiner_a2_smoke():
    ct = CartanType("A2")
    rep = verify_intertwiner(ct, (1, 0, 1), (0, 1, 0), 2)
    assert rep and all(r["pass"] for r in rep)
