"""The quantized enveloping algebra in triangular normal form.

Elements are finite sums  sum  c_(F,kappa,E) . f_F  k_kappa  e_E  where F and
E are free words in the generators f_i / e_i (no Serre relations imposed), and
kappa runs over the root lattice Q.  Multiplication rewrites products into
this normal form using only the k-commutation rules and the e-f commutator

    e_i f_j - f_j e_i = delta_ij (k_i - k_i^{-1}) / (q_i - q_i^{-1}).

Equality of UElement values is equality in this free (pre-Serre) algebra;
equality modulo the Serre ideals is decided elsewhere via the Drinfeld
pairing.

Hopf structure:
    Delta(e_i) = e_i x 1 + k_i x e_i        eps(e_i) = 0
    Delta(f_i) = f_i x k_i^{-1} + 1 x f_i   eps(f_i) = 0
    Delta(k_g) = k_g x k_g                  eps(k_g) = 1
    S(e_i) = -k_i^{-1} e_i,  S(f_i) = -f_i k_i,  S(k_g) = k_{-g}.
"""

from __future__ import annotations

from .rootdata import CartanType
from .scalars import ONE, Scalar, qint_scalar

Mono = tuple  # (fword, kappa, eword)


def _add_term(acc: dict, mono, coeff: Scalar):
    cur = acc.get(mono)
    s = coeff if cur is None else cur + coeff
    if s.is_zero():
        acc.pop(mono, None)
    else:
        acc[mono] = s


def _fword_weight(ct: CartanType, word):
    v = [0] * ct.rank
    for i in word:
        v[i] += 1
    return tuple(v)


class UElement:
    """Element of U_q(g) in triangular normal form f * k * e."""

    __slots__ = ("ct", "terms")

    def __init__(self, ct: CartanType, terms: dict):
        self.ct = ct
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero(ct):
        return UElement(ct, {})

    @staticmethod
    def one(ct):
        return UElement(ct, {((), ct.zero(), ()): ONE})

    @staticmethod
    def e(ct, i):
        return UElement(ct, {((), ct.zero(), (i,)): ONE})

    @staticmethod
    def f(ct, i):
        return UElement(ct, {((i,), ct.zero(), ()): ONE})

    @staticmethod
    def k(ct, gamma):
        return UElement(ct, {((), tuple(gamma), ()): ONE})

    @staticmethod
    def k_i(ct, i, power=1):
        g = tuple(power if j == i else 0 for j in range(ct.rank))
        return UElement(ct, {((), g, ()): ONE})

    @staticmethod
    def e_word(ct, word):
        return UElement(ct, {((), ct.zero(), tuple(word)): ONE})

    @staticmethod
    def f_word(ct, word):
        return UElement(ct, {(tuple(word), ct.zero(), ()): ONE})

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _add_term(acc, m, c)
        return UElement(self.ct, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UElement(self.ct, {m: -c for m, c in self.terms.items()})

    def scale(self, s: Scalar):
        if s.is_zero():
            return UElement.zero(self.ct)
        return UElement(self.ct, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(Scalar.from_int(other))
        acc = {}
        for m2, c2 in other.terms.items():
            prod = self._mul_mono(m2)
            for m, c in prod.items():
                _add_term(acc, m, c * c2)
        return UElement(self.ct, acc)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self * other
        return NotImplemented

    def _mul_mono(self, mono):
        """self * (f_F k_kappa e_E) as a term dict."""
        F, kappa, E = mono
        cur = {m: c for m, c in self.terms.items()}
        for j in F:
            cur = _rmul_f(self.ct, cur, j)
        if any(kappa):
            cur = _rmul_k(self.ct, cur, kappa)
        for j in E:
            cur = _rmul_e(cur, j)
        return cur

    def __eq__(self, other):
        return isinstance(other, UElement) and self.ct is other.ct \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.ct.name, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    # -- structure maps -------------------------------------------------
    def weight(self):
        """Q-weight if homogeneous, else raises ValueError."""
        wts = {mono_weight(self.ct, m) for m in self.terms}
        if len(wts) > 1:
            raise ValueError("element is not weight homogeneous")
        return wts.pop() if wts else self.ct.zero()

    def counit(self) -> Scalar:
        total = Scalar.from_int(0)
        for (F, kappa, E), c in self.terms.items():
            if not F and not E:
                total = total + c
        return total

    def coproduct(self) -> "UTensor":
        ct = self.ct
        out = UTensor.zero(ct)
        for (F, kappa, E), c in self.terms.items():
            t = UTensor.one(ct)
            for j in F:
                t = t * _DELTA_CACHE(ct, "f", j)
            t = t * UTensor(ct, {(((), kappa, ()), ((), kappa, ())): ONE})
            for j in E:
                t = t * _DELTA_CACHE(ct, "e", j)
            out = out + t.scale(c)
        return out

    def antipode(self):
        return self._anti_map(_S_GEN)

    def antipode_inv(self):
        return self._anti_map(_SINV_GEN)

    def _anti_map(self, gen_images):
        ct = self.ct
        out = UElement.zero(ct)
        for (F, kappa, E), c in self.terms.items():
            x = UElement.k(ct, tuple(-g for g in kappa))
            for j in E:
                x = gen_images(ct, "e", j) * x
            for j in reversed(F):
                x = x * gen_images(ct, "f", j)
            out = out + x.scale(c)
        return out

    def a_involution(self):
        """Ring involution q -> q^{-1}, k -> k^{-1}, e_i -> -k_i^{-1} e_i,
        f_i -> -f_i k_i (a homomorphism, semilinear over q -> q^{-1})."""
        ct = self.ct
        out = UElement.zero(ct)
        for (F, kappa, E), c in self.terms.items():
            x = UElement.one(ct)
            for j in F:
                x = x * (-(UElement.f(ct, j) * UElement.k_i(ct, j)))
            x = x * UElement.k(ct, tuple(-g for g in kappa))
            for j in E:
                x = x * (-(UElement.k_i(ct, j, -1) * UElement.e(ct, j)))
            out = out + x.scale(c.bar())
        return out

    def map_coeffs(self, fn):
        return UElement(self.ct, {m: fn(c) for m, c in self.terms.items()})

    # -- display --------------------------------------------------------
    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_mono_sort_key):
            c = self.terms[m]
            cs = str(c)
            ms = mono_str(m)
            if ms == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(ms)
            else:
                if "+" in cs or (cs.count("-") - cs.count("^-")) > 0:
                    cs = "(%s)" % cs
                parts.append("%s*%s" % (cs, ms))
        return " + ".join(parts)


def mono_weight(ct: CartanType, mono):
    F, kappa, E = mono
    v = [0] * ct.rank
    for i in E:
        v[i] += 1
    for i in F:
        v[i] -= 1
    return tuple(v)


def mono_str(mono) -> str:
    F, kappa, E = mono
    parts = ["f%d" % (i + 1) for i in F]
    if any(kappa):
        parts.append("k[%s]" % ",".join(str(g) for g in kappa))
    parts.extend("e%d" % (i + 1) for i in E)
    return "*".join(parts) if parts else "1"


def _mono_sort_key(mono):
    F, kappa, E = mono
    return (len(F) + len(E), F, E, kappa)


# -- right multiplication by generators, on raw term dicts ----------------

def _rmul_e(terms: dict, j: int) -> dict:
    return {(F, kappa, E + (j,)): c for (F, kappa, E), c in terms.items()}


def _rmul_k(ct: CartanType, terms: dict, gamma) -> dict:
    acc = {}
    for (F, kappa, E), c in terms.items():
        shift = -ct.pair_qq(gamma, _fword_weight(ct, E))
        kap2 = tuple(a + b for a, b in zip(kappa, gamma))
        _add_term(acc, (F, kap2, E), c * Scalar.q_power(shift))
    return acc


def _rmul_f(ct: CartanType, terms: dict, j: int) -> dict:
    alpha_j = ct.alpha(j)
    dj = ct.qi(j)
    denom = Scalar.q_power(dj) - Scalar.q_power(-dj)
    acc = {}
    for (F, kappa, E), c in terms.items():
        # f_j passes kappa and all of E, then joins the f-word.
        shift = -ct.pair_qq(kappa, alpha_j)
        _add_term(acc, (F + (j,), kappa, E), c * Scalar.q_power(shift))
        # commutator terms, one per e_j letter in E
        for p, i in enumerate(E):
            if i != j:
                continue
            w = _fword_weight(ct, E[:p])
            E2 = E[:p] + E[p + 1:]
            s = ct.pair_qq(alpha_j, w)
            kp = tuple(a + b for a, b in zip(kappa, alpha_j))
            km = tuple(a - b for a, b in zip(kappa, alpha_j))
            _add_term(acc, (F, kp, E2), c * Scalar.q_power(-s) / denom)
            _add_term(acc, (F, km, E2), -(c * Scalar.q_power(s) / denom))
    return acc


# -- generator images for the (inverse) antipode -------------------------

def _S_GEN(ct, kind, j):
    if kind == "e":
        return -(UElement.k_i(ct, j, -1) * UElement.e(ct, j))
    return -(UElement.f(ct, j) * UElement.k_i(ct, j))


def _SINV_GEN(ct, kind, j):
    if kind == "e":
        return -(UElement.e(ct, j) * UElement.k_i(ct, j, -1))
    return -(UElement.k_i(ct, j) * UElement.f(ct, j))


_delta_cache = {}


def _DELTA_CACHE(ct, kind, j):
    key = (ct.name, kind, j)
    t = _delta_cache.get(key)
    if t is None:
        zero = ct.zero()
        ki = tuple(1 if r == j else 0 for r in range(ct.rank))
        kinv = tuple(-g for g in ki)
        if kind == "e":
            t = UTensor(ct, {
                (((), zero, (j,)), ((), zero, ())): ONE,
                (((), ki, ()), ((), zero, (j,))): ONE,
            })
        else:
            t = UTensor(ct, {
                (((j,), zero, ()), ((), kinv, ())): ONE,
                (((), zero, ()), ((j,), zero, ())): ONE,
            })
        _delta_cache[key] = t
    return t


class UTensor:
    """Element of U x U, with componentwise multiplication."""

    __slots__ = ("ct", "terms")

    def __init__(self, ct, terms: dict):
        self.ct = ct
        self.terms = {p: c for p, c in terms.items() if not c.is_zero()}

    @staticmethod
    def zero(ct):
        return UTensor(ct, {})

    @staticmethod
    def one(ct):
        unit = ((), ct.zero(), ())
        return UTensor(ct, {(unit, unit): ONE})

    @staticmethod
    def of(x: UElement, y: UElement):
        ct = x.ct
        terms = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                _add_term(terms, (m1, m2), c1 * c2)
        return UTensor(ct, terms)

    def __add__(self, other):
        acc = dict(self.terms)
        for p, c in other.terms.items():
            _add_term(acc, p, c)
        return UTensor(self.ct, acc)

    def __sub__(self, other):
        return self + other.scale(Scalar.from_int(-1))

    def scale(self, s: Scalar):
        return UTensor(self.ct, {p: c * s for p, c in self.terms.items()})

    def __mul__(self, other):
        ct = self.ct
        acc = {}
        for (a1, b1), c1 in self.terms.items():
            x1 = UElement(ct, {a1: ONE})
            y1 = UElement(ct, {b1: ONE})
            for (a2, b2), c2 in other.terms.items():
                left = x1._mul_mono(a2)
                right = y1._mul_mono(b2)
                cc = c1 * c2
                for ma, ca in left.items():
                    for mb, cb in right.items():
                        _add_term(acc, (ma, mb), cc * ca * cb)
        return UTensor(ct, acc)

    def __eq__(self, other):
        return isinstance(other, UTensor) and self.ct is other.ct \
            and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def apply_left(self, fn) -> "UTensor":
        """Apply a linear map (UElement -> UElement) to the left leg."""
        ct = self.ct
        acc = {}
        for (a, b), c in self.terms.items():
            img = fn(UElement(ct, {a: ONE}))
            for m, cm in img.terms.items():
                _add_term(acc, (m, b), c * cm)
        return UTensor(ct, acc)

    def apply_right(self, fn) -> "UTensor":
        ct = self.ct
        acc = {}
        for (a, b), c in self.terms.items():
            img = fn(UElement(ct, {b: ONE}))
            for m, cm in img.terms.items():
                _add_term(acc, (a, m), c * cm)
        return UTensor(ct, acc)

    def contract(self, pairing) -> Scalar:
        """sum pairing(left, right) * coeff over all terms."""
        total = Scalar.from_int(0)
        for (a, b), c in self.terms.items():
            total = total + pairing(a, b) * c
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, key=lambda p: (_mono_sort_key(p[0]),
                                                        _mono_sort_key(p[1]))):
            c = self.terms[(a, b)]
            parts.append("(%s)*%s(x)%s" % (c, mono_str(a), mono_str(b)))
        return " + ".join(parts)


def divided_e_power(ct, i, n) -> UElement:
    """e_i^{(n)} = e_i^n / [n]_{q_i}!"""
    x = UElement.e_word(ct, (i,) * n)
    inv = Scalar.from_int(1)
    for k in range(2, n + 1):
        inv = inv * qint_scalar(k, ct.qi(i))
    return x.scale(inv.inverse())


def divided_f_power(ct, i, n) -> UElement:
    x = UElement.f_word(ct, (i,) * n)
    inv = Scalar.from_int(1)
    for k in range(2, n + 1):
        inv = inv * qint_scalar(k, ct.qi(i))
    return x.scale(inv.inverse())
