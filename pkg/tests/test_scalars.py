"""Exact arithmetic over Z[q, q^-1] and its fraction field."""

import random

from qpbw.scalars import (LaurentPoly, Scalar, c_const, d_const, qbinom,
                          qfact, qint, qint_scalar, qfact_scalar)

q = LaurentPoly.q_power
one = LaurentPoly.from_int(1)


def lp(coeffs):
    return LaurentPoly(dict(coeffs))


def test_qint_values():
    assert qint(0).is_zero()
    assert qint(2) == lp({1: 1, -1: 1})
    assert qint(-3) == lp({2: -1, 0: -1, -2: -1})
    for n in range(1, 9):
        assert qint(-n) == -qint(n)


def test_qbinom_values():
    assert qbinom(5, 0) == one
    assert qbinom(2, 1) == lp({1: 1, -1: 1})
    assert qbinom(4, 2) == lp({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})


def test_qbinom_pascal():
    # both q-Pascal recurrences, exactly
    for n in range(1, 9):
        for m in range(1, n + 1):
            b = qbinom(n, m)
            left = qbinom(n - 1, m - 1) * q(n - m) + qbinom(n - 1, m) * q(-m)
            right = qbinom(n - 1, m - 1) * q(-(n - m)) + qbinom(n - 1, m) * q(m)
            assert b == left
            assert b == right


def test_c_const_values():
    assert c_const(0).is_one()
    dq = Scalar.q_power(1) - Scalar.q_power(-1)
    assert c_const(1) == dq.inverse()
    want = (Scalar.from_laurent(lp({1: 1, -1: 1})) * Scalar.q_power(-1)
            * (dq * dq).inverse())
    assert c_const(2) == want


def test_d_const_values():
    assert d_const(0).is_one()
    assert d_const(1) == Scalar.from_laurent(lp({0: 1, 2: -1}))
    rev = Scalar.q_power(-1) - Scalar.q_power(1)
    assert d_const(2) == Scalar.q_power(3) * rev * rev


def test_c_times_d_bridge():
    # c(n) * d(n) = (-1)^n q^n [n]!
    for n in range(9):
        want = Scalar.from_int((-1) ** n) * Scalar.q_power(n) * qfact_scalar(n)
        assert c_const(n) * d_const(n) == want


def test_scaled_constants():
    # q_i = q^d versions are plain exponent substitutions
    for n in range(5):
        for d in (1, 2, 3):
            assert qint_scalar(n, d) == qint_scalar(n, 1).subst_q_power(d)
            assert c_const(n, d) == c_const(n, 1).subst_q_power(d)
            assert d_const(n, d) == d_const(n, 1).subst_q_power(d)


def _random_scalar(rng):
    num = {rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(3)}
    den = {rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(3)}
    if not any(den.values()):
        den = {0: 1}
    return Scalar(num, den)


def test_field_axioms_randomized():
    rng = random.Random(7)
    for _ in range(60):
        a, b, c = (_random_scalar(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a - b == -(b - a)
        if not b.is_zero():
            assert (a / b) * b == a
            assert b * b.inverse() == Scalar.from_int(1)


def test_canonical_idempotence():
    rng = random.Random(3)
    for _ in range(40):
        a = _random_scalar(rng)
        again = Scalar(dict(a.num), dict(a.den))
        assert again.num == a.num and again.den == a.den


def test_string_form():
    assert str(Scalar.from_int(-3)) == "-3"
    assert str(Scalar.q_power(2)) == "q^2"
    assert str(qint_scalar(2)) == "(q^2 + 1)/q"
    dq = Scalar.q_power(1) - Scalar.q_power(-1)
    assert str(dq.inverse()) == "q/(q^2 - 1)"


def test_bar_involution():
    for s in (qint_scalar(3), c_const(2), d_const(2)):
        assert s.bar().bar() == s
    assert qint_scalar(4).bar() == qint_scalar(4)


def test_qfact():
    assert qfact(0) == one
    assert qfact(3) == qint(3) * qint(2)
