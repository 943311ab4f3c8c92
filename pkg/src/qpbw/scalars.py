"""Exact arithmetic in Z[q,q^-1] and the rational function field Q(q).

Everything downstream of this module computes with these two types only;
no floating point anywhere.  LaurentPoly is a sparse exponent->coefficient
map over arbitrary-precision integers.  Scalar is a reduced fraction of
two integer polynomials in q (negative exponents are cleared into the
fraction), so equality is structural.
"""

from __future__ import annotations

import math


def _strip(coeffs):
    return {e: c for e, c in coeffs.items() if c != 0}


class LaurentPoly:
    """Sparse Laurent polynomial in q with integer coefficients."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs=None):
        self.c = _strip(coeffs) if coeffs else {}
        self._hash = None

    @staticmethod
    def from_int(n):
        return LaurentPoly({0: n})

    @staticmethod
    def q_power(k):
        return LaurentPoly({k: 1})

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == {0: 1}

    def __add__(self, other):
        c = dict(self.c)
        for e, v in other.c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    def __sub__(self, other):
        c = dict(self.c)
        for e, v in other.c.items():
            c[e] = c.get(e, 0) - v
        return LaurentPoly(c)

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self.c.items()})

    def __mul__(self, other):
        if not self.c or not other.c:
            return LaurentPoly()
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly(c)

    def scale_int(self, n):
        if n == 0:
            return LaurentPoly()
        return LaurentPoly({e: n * v for e, v in self.c.items()})

    def shift(self, k):
        """Multiply by q^k."""
        return LaurentPoly({e + k: v for e, v in self.c.items()})

    def subst_power(self, d):
        """Substitute q -> q^d (exponent scaling); d may be negative."""
        return LaurentPoly({e * d: v for e, v in self.c.items()})

    def bar(self):
        """The involution q -> q^-1."""
        return self.subst_power(-1)

    def min_exp(self):
        return min(self.c) if self.c else 0

    def max_exp(self):
        return max(self.c) if self.c else 0

    def __pow__(self, n):
        result = LaurentPoly({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.c.items())))
        return self._hash

    def __repr__(self):
        return "LaurentPoly(%s)" % poly_str(self.c)


def poly_str(coeffs):
    """Render an exponent map as an integer polynomial, descending exponents."""
    if not coeffs:
        return "0"
    parts = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        if e == 0:
            term = str(abs(c))
        else:
            qp = "q" if e == 1 else "q^%d" % e
            term = qp if abs(c) == 1 else "%d*%s" % (abs(c), qp)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# polynomial helpers on nonnegative-exponent maps (Z[q])

def _pdeg(p):
    return max(p) if p else -1


def _plc(p):
    return p[max(p)] if p else 0


def _pmul(p1, p2):
    if len(p2) == 1:
        (e2, v2), = p2.items()
        return {e1 + e2: v1 * v2 for e1, v1 in p1.items()}
    c = {}
    for e1, v1 in p1.items():
        for e2, v2 in p2.items():
            e = e1 + e2
            c[e] = c.get(e, 0) + v1 * v2
    for e in [e for e, v in c.items() if not v]:
        del c[e]
    return c


def _pcontent(p):
    g = 0
    for v in p.values():
        g = math.gcd(g, v)
    return g


def _pprim(p):
    g = _pcontent(p)
    if g in (0, 1):
        return dict(p)
    return {e: v // g for e, v in p.items()}


def _pscale(p, n):
    if n == 0:
        return {}
    return {e: v * n for e, v in p.items()}


def _psub(p1, p2):
    c = dict(p1)
    for e, v in p2.items():
        c[e] = c.get(e, 0) - v
    return _strip(c)


def _pseudo_rem(a, b):
    """Remainder of a by b up to integer content (b nonzero): each step
    scales r by the least factor clearing the leading coefficient, keeping
    the integers small (the content is irrelevant to the primitive gcd)."""
    db, lb = _pdeg(b), _plc(b)
    r = dict(a)
    scaled = 0
    while r and _pdeg(r) >= db:
        if scaled >= 4:
            c = _pcontent(r)
            if c > 1:
                r = {e: v // c for e, v in r.items()}
            scaled = 0
        dr, lr = _pdeg(r), _plc(r)
        g = math.gcd(lr, lb)
        # (lb/g) * r - (lr/g) * q^(dr-db) * b
        s, t = lb // g, lr // g
        if s != 1:
            r = _pscale(r, s)
            scaled += 1
        r = _psub(r, {e + dr - db: v * t for e, v in b.items()})
    return r


def _pgcd(a, b):
    """Primitive gcd in Z[q], positive leading coefficient."""
    a, b = _pprim(a), _pprim(b)
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _pprim(r)
    if a and _plc(a) < 0:
        a = _pscale(a, -1)
    return a if a else {0: 1}


def _pdiv_exact(a, b):
    """Exact division in Q[q]; result must have integer coefficients."""
    if not a:
        return {}
    db, lb = _pdeg(b), _plc(b)
    q = {}
    r = dict(a)
    while r:
        dr, lr = _pdeg(r), _plc(r)
        if dr < db or lr % lb != 0:
            raise ArithmeticError("inexact polynomial division")
        t = lr // lb
        q[dr - db] = t
        r = _psub(r, {e + dr - db: v * t for e, v in b.items()})
    return q


def laurent_div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division of Laurent polynomials; raises if not exact."""
    if b.is_zero():
        raise ZeroDivisionError("Laurent division by zero")
    if a.is_zero():
        return LaurentPoly()
    sa, sb = a.min_exp(), b.min_exp()
    pa = {e - sa: v for e, v in a.c.items()}
    pb = {e - sb: v for e, v in b.c.items()}
    return LaurentPoly({e + sa - sb: v for e, v in _pdiv_exact(pa, pb).items()})


# ---------------------------------------------------------------------------

class Scalar:
    """Element of Q(q): reduced fraction of integer polynomials in q.

    Canonical form: num/den in Z[q] with nonnegative exponents, polynomial
    gcd 1, den with positive leading coefficient, and integer contents
    coprime.  Equality and hashing are structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _normal=False):
        if den is None:
            den = {0: 1}
        if _normal:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(num, den)
        self._hash = None

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_int(n):
        return Scalar({0: n} if n else {}, {0: 1}, _normal=True)

    @staticmethod
    def from_laurent(p: LaurentPoly):
        s = p.min_exp()
        if s >= 0:
            return Scalar(dict(p.c), {0: 1})
        return Scalar({e - s: v for e, v in p.c.items()}, {-s: 1})

    @staticmethod
    def q_power(k):
        if k >= 0:
            return Scalar({k: 1}, {0: 1}, _normal=True)
        return Scalar({0: 1}, {-k: 1}, _normal=True)

    # -- predicates ----------------------------------------------------
    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == {0: 1} and self.den == {0: 1}

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            num = dict(self.num)
            for e, v in other.num.items():
                num[e] = num.get(e, 0) + v
            if len(self.den) == 1:
                (e, c), = self.den.items()
                return _mono_den(_strip(num), e, c)
            return Scalar(_strip(num), dict(self.den))
        g = _cross_gcd(self.den, other.den)
        if g == {0: 1}:
            num = dict(_pmul(self.num, other.den))
            for e, v in _pmul(other.num, self.den).items():
                num[e] = num.get(e, 0) + v
            # coprime denominators: the sum is already reduced up to content
            return _finish(_strip(num), _pmul(self.den, other.den))
        # over the least common denominator only factors of g can cancel
        d2p = _pdiv_exact(other.den, g)
        num = dict(_pmul(self.num, d2p))
        for e, v in _pmul(other.num, _pdiv_exact(self.den, g)).items():
            num[e] = num.get(e, 0) + v
        num = _strip(num)
        if not num:
            return _ZERO
        den = _pmul(self.den, d2p)
        while True:
            t = _cross_gcd(num, g)
            if t == {0: 1}:
                break
            num = _pdiv_exact(num, t)
            den = _pdiv_exact(den, t)
            g = _cross_gcd(t, den)
            if g == {0: 1}:
                break
        return _finish(num, den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Scalar({e: -v for e, v in self.num.items()}, dict(self.den),
                      _normal=True)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if not self.num or not other.num:
            return _ZERO
        if len(self.den) == 1 and len(other.den) == 1:
            (e1, c1), = self.den.items()
            (e2, c2), = other.den.items()
            return _mono_den(_pmul(self.num, other.num), e1 + e2, c1 * c2)
        # both fractions reduced: only cross factors can cancel
        n1, d2 = _cancel(self.num, other.den)
        n2, d1 = _cancel(other.num, self.den)
        return _finish(_pmul(n1, n2), _pmul(d1, d2))

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("division by zero Scalar")
        if not self.num:
            return _ZERO
        n1, n2 = _cancel(self.num, other.num)
        d1, d2 = _cancel(self.den, other.den)
        return _finish(_pmul(n1, d2), _pmul(d1, n2))

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero Scalar")
        return _finish(dict(self.den), dict(self.num))

    def bar(self):
        """Apply q -> q^-1."""
        num = {-e: v for e, v in self.num.items()}
        den = {-e: v for e, v in self.den.items()}
        sn = min(num) if num else 0
        sd = min(den)
        s = min(sn, sd)
        return Scalar({e - s: v for e, v in num.items()},
                      {e - s: v for e, v in den.items()})

    def subst_q_power(self, d):
        """Substitute q -> q^d (d a positive integer)."""
        if d == 1:
            return self
        return Scalar({e * d: v for e, v in self.num.items()},
                      {e * d: v for e, v in self.den.items()})

    # -- structure -------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, Scalar) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(sorted(self.num.items())),
                               tuple(sorted(self.den.items()))))
        return self._hash

    def __str__(self):
        if self.den == {0: 1}:
            return poly_str(self.num)
        ns = poly_str(self.num)
        if len(self.num) > 1:
            ns = "(%s)" % ns
        ds = poly_str(self.den)
        if len(self.den) > 1:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)

    def __repr__(self):
        return "Scalar(%s)" % str(self)


def _cross_gcd(a, b):
    """Polynomial-part gcd of a and b, up to q-powers and integer content
    (monomials cannot contribute a polynomial factor)."""
    if len(a) == 1 or len(b) == 1:
        return {0: 1}
    sa, sb = min(a), min(b)
    if sa:
        a = {e - sa: v for e, v in a.items()}
    if sb:
        b = {e - sb: v for e, v in b.items()}
    return _pgcd(a, b)


def _cancel(a, b):
    """Divide the common polynomial factor out of a and b."""
    g = _cross_gcd(a, b)
    if g == {0: 1}:
        return a, b
    return _pdiv_exact(a, g), _pdiv_exact(b, g)


def _finish(num, den):
    """Canonicalize a fraction whose polynomial parts are already coprime:
    clear the common q-power, the common integer content, and the sign."""
    num, den = _strip(num), _strip(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return _ZERO
    s = min(min(num), min(den))
    if s:
        num = {e - s: v for e, v in num.items()}
        den = {e - s: v for e, v in den.items()}
    c = math.gcd(_pcontent(num), _pcontent(den))
    if c > 1:
        num = {e: v // c for e, v in num.items()}
        den = {e: v // c for e, v in den.items()}
    if _plc(den) < 0:
        num = {e: -v for e, v in num.items()}
        den = {e: -v for e, v in den.items()}
    return Scalar(num, den, _normal=True)


def _mono_den(num, k, c):
    """Canonical Scalar for num / (c q^k), avoiding the polynomial gcd."""
    if not num:
        return _ZERO
    s = min(min(num), k)
    if s:
        num = {e - s: v for e, v in num.items()}
        k -= s
    if c not in (1, -1):
        g = math.gcd(_pcontent(num), abs(c))
        if g > 1:
            num = {e: v // g for e, v in num.items()}
            c //= g
    if c < 0:
        num = {e: -v for e, v in num.items()}
        c = -c
    return Scalar(num, {k: c}, _normal=True)


def _normalize(num, den):
    num, den = _strip(num), _strip(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, {0: 1}
    # clear common power of q
    sn, sd = min(num), min(den)
    s = min(sn, sd)
    if s:
        num = {e - s: v for e, v in num.items()}
        den = {e - s: v for e, v in den.items()}
    g = _pgcd(num, den)
    if g != {0: 1}:
        num = _pdiv_exact(num, g)
        den = _pdiv_exact(den, g)
    cn, cd = _pcontent(num), _pcontent(den)
    c = math.gcd(cn, cd)
    if c > 1:
        num = {e: v // c for e, v in num.items()}
        den = {e: v // c for e, v in den.items()}
    if _plc(den) < 0:
        num = {e: -v for e, v in num.items()}
        den = {e: -v for e, v in den.items()}
    return num, den


_ZERO = Scalar.from_int(0)
ZERO = _ZERO
ONE = Scalar.from_int(1)


# ---------------------------------------------------------------------------
# q-combinatorics

def qint(n: int) -> LaurentPoly:
    """Balanced q-integer (q^n - q^-n)/(q - q^-1)."""
    if n == 0:
        return LaurentPoly()
    if n < 0:
        return -qint(-n)
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def qfact(n: int) -> LaurentPoly:
    p = LaurentPoly({0: 1})
    for k in range(2, n + 1):
        p = p * qint(k)
    return p


def qbinom(n: int, m: int) -> LaurentPoly:
    """Balanced q-binomial coefficient; m >= 0, n may be negative."""
    if m < 0:
        raise ValueError("qbinom needs m >= 0")
    num = LaurentPoly({0: 1})
    for k in range(m):
        num = num * qint(n - k)
    return laurent_div_exact(num, qfact(m))


def c_const(n: int, d: int = 1) -> Scalar:
    """[n]! q^{-n(n-1)/2} (q-q^{-1})^{-n} with q replaced by q^d."""
    num = qfact(n).shift(-n * (n - 1) // 2)
    den = (LaurentPoly({1: 1}) - LaurentPoly({-1: 1})) ** n
    val = Scalar.from_laurent(num) / Scalar.from_laurent(den)
    return val.subst_q_power(d) if d != 1 else val


def d_const(n: int, d: int = 1) -> Scalar:
    """q^{n(n+1)/2} (q^{-1}-q)^n with q replaced by q^d."""
    p = (LaurentPoly({-1: 1}) - LaurentPoly({1: 1})) ** n
    val = Scalar.from_laurent(p.shift(n * (n + 1) // 2))
    return val.subst_q_power(d) if d != 1 else val


def qint_scalar(n: int, d: int = 1) -> Scalar:
    return Scalar.from_laurent(qint(n).subst_power(d))


def qfact_scalar(n: int, d: int = 1) -> Scalar:
    return Scalar.from_laurent(qfact(n).subst_power(d))
