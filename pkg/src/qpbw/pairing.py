"""The Drinfeld pairing tau : U^{>=0} x U^{<=0} -> F and equality oracles.

tau is the unique bilinear pairing with

    (tau x tau)(Delta(x), y2 x y1) = tau(x, y1 y2)
    (tau x tau)(x1 x x2, Delta(y)) = tau(x1 x2, y)
    tau(e_i, k_lam) = tau(k_lam, f_i) = 0
    tau(k_lam, k_mu) = q^{(lam,mu)}
    tau(e_i, f_j)   = delta_ij / (q_i - q_i^{-1}).

On pure words it is computed by peeling the last e-letter:

    tau(e_{E'} e_j, f_F) =
        sum over positions p with F_p = j of
        q^{-(alpha_j, wt F[p+1:])} / (q_j - q_j^{-1})
        * tau(e_{E'}, f_{F without p}),

which is the second axiom with the single-f component of Delta(f_F) made
explicit.  The radical of tau is exactly the Serre ideal, so tau doubles as
the equality oracle modulo the quantum Serre relations.
"""

from __future__ import annotations

from itertools import permutations

from .rootdata import CartanType
from .scalars import ONE, ZERO, Scalar
from .uqcore import UElement, _fword_weight


class Pairing:
    """Memoized Drinfeld pairing for one Cartan type."""

    _instances = {}

    def __new__(cls, ct: CartanType):
        obj = cls._instances.get(ct.name)
        if obj is None:
            obj = super().__new__(cls)
            obj.ct = ct
            obj._memo = {}
            obj._denoms = tuple(
                Scalar.q_power(d) - Scalar.q_power(-d) for d in ct.d)
            cls._instances[ct.name] = obj
        return obj

    def tau_words(self, eword, fword) -> Scalar:
        """tau(e_{eword}, f_{fword}) on pure words."""
        ct = self.ct
        if _fword_weight(ct, eword) != _fword_weight(ct, fword):
            return ZERO
        if not eword:
            return ONE
        key = (eword, fword)
        val = self._memo.get(key)
        if val is not None:
            return val
        j = eword[-1]
        head = eword[:-1]
        alpha_j = ct.alpha(j)
        total = ZERO
        for p, letter in enumerate(fword):
            if letter != j:
                continue
            shift = -ct.pair_qq(alpha_j, _fword_weight(ct, fword[p + 1:]))
            sub = self.tau_words(head, fword[:p] + fword[p + 1:])
            if not sub.is_zero():
                total = total + sub * Scalar.q_power(shift)
        total = total / self._denoms[j]
        self._memo[key] = total
        return total

    def tau(self, x: UElement, y: UElement) -> Scalar:
        """Bilinear extension; x must lie in U^{>=0}, y in U^{<=0}."""
        ct = self.ct
        total = ZERO
        for (Fx, kap, E), cx in x.terms.items():
            if Fx:
                raise ValueError("left pairing argument has an f-part")
            for (F, mu, Ey), cy in y.terms.items():
                if Ey:
                    raise ValueError("right pairing argument has an e-part")
                base = self.tau_words(E, F)
                if base.is_zero():
                    continue
                shift = ct.pair_qq(mu, _fword_weight(ct, F)) \
                    + ct.pair_qq(kap, mu)
                total = total + base * cx * cy * Scalar.q_power(shift)
        return total


def words_of_weight(ct: CartanType, gamma):
    """All words in the alphabet I with content gamma, sorted."""
    letters = []
    for i, m in enumerate(gamma):
        if m < 0:
            raise ValueError("weight must be a nonnegative root-lattice sum")
        letters.extend([i] * m)
    return sorted(set(permutations(letters)))


def canonical_coords(x: UElement) -> dict:
    """Coordinates of x against dual word functionals, separating the
    triangular factors.  Two elements of U are equal modulo the two-sided
    Serre ideal iff their canonical coordinates agree (the pairing radical
    on each factor is the corresponding one-sided Serre ideal)."""
    ct = x.ct
    pr = Pairing(ct)
    out = {}
    for (F, kap, E), c in x.terms.items():
        fw = _fword_weight(ct, F)
        ew = _fword_weight(ct, E)
        for A in words_of_weight(ct, fw):
            cf = pr.tau_words(A, F)
            if cf.is_zero():
                continue
            for B in words_of_weight(ct, ew):
                ce = pr.tau_words(E, B)
                if ce.is_zero():
                    continue
                key = (A, kap, B)
                cur = out.get(key, ZERO) + c * cf * ce
                if cur.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = cur
    return out


def eq_mod_serre(x: UElement, y: UElement) -> bool:
    """Equality in U_q(g) proper (i.e. modulo the quantum Serre relations)."""
    return canonical_coords(x - y) == {}


def is_zero_mod_serre(x: UElement) -> bool:
    return canonical_coords(x) == {}
