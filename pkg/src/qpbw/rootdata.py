"""Cartan data, the invariant bilinear form, and reduced-word combinatorics.

Conventions are pinned here once and read by every other module:

* types A1, A2, A3, B2, G2;
* Cartan matrix a[i][j] = (alpha_i^vee, alpha_j);
* symmetrizers d[i] = (alpha_i, alpha_i)/2, short roots have (alpha,alpha)=2;
* B2: alpha_1 long (d=2), alpha_2 short;  G2: alpha_1 long (d=3), alpha_2 short.

Root-lattice (Q) vectors are integer tuples in simple-root coordinates;
weight-lattice (P) vectors are integer tuples in fundamental-weight
coordinates.  Indices are 0-based internally; serialization is 1-based.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

_CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}

_SYMMETRIZER = {
    "A1": (1,),
    "A2": (1, 1),
    "A3": (1, 1, 1),
    "B2": (2, 1),
    "G2": (3, 1),
}

_NUM_POS_ROOTS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "G2": 6}


class LatticeVec(NamedTuple):
    """Lattice element: integer coords in the tagged basis ('Q' or 'P')."""

    coords: tuple
    basis: str


class CartanType:
    """Fixed table of Cartan data for one of the supported types."""

    def __init__(self, name: str):
        if name not in _CARTAN:
            raise ValueError("unsupported Cartan type %r" % name)
        self.name = name
        self.a = _CARTAN[name]
        self.d = _SYMMETRIZER[name]
        self.rank = len(self.d)
        for i in range(self.rank):
            for j in range(self.rank):
                assert self.d[i] * self.a[i][j] == self.d[j] * self.a[j][i]
        self.pos_roots = self._generate_pos_roots()
        assert len(self.pos_roots) == _NUM_POS_ROOTS[name]

    _cache = {}

    def __new__(cls, name):
        if name in cls._cache:
            return cls._cache[name]
        obj = super().__new__(cls)
        cls._cache[name] = obj
        return obj

    # -- lattice vectors -----------------------------------------------
    def alpha(self, i):
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def zero(self):
        return (0,) * self.rank

    def _generate_pos_roots(self):
        roots = {self.alpha(i) for i in range(self.rank)}
        frontier = set(roots)
        while frontier:
            new = set()
            for v in frontier:
                for i in range(self.rank):
                    w = self.reflect_q(i, v)
                    if all(x >= 0 for x in w) and w not in roots:
                        new.add(w)
            roots |= new
            frontier = new
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    # -- bilinear form ----------------------------------------------------
    def pair_qq(self, v, w):
        """(v, w) for v, w in root coordinates; always an integer."""
        return sum(v[i] * self.d[i] * self.a[i][j] * w[j]
                   for i in range(self.rank) for j in range(self.rank))

    def pair_pq(self, lam, gam):
        """(lam, gam) with lam in weight coords, gam in root coords."""
        return sum(lam[j] * self.d[j] * gam[j] for j in range(self.rank))

    def pair_pp(self, lam, mu):
        """(lam, mu) with both in weight coords; may be fractional."""
        inv = self._cartan_inverse()
        return sum(lam[i] * inv[j][i] * self.d[j] * mu[j]
                   for i in range(self.rank) for j in range(self.rank))

    @lru_cache(maxsize=None)
    def _cartan_inverse(self):
        n = self.rank
        m = [[Fraction(self.a[i][j]) for j in range(n)]
             + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            p = m[col][col]
            m[col] = [x / p for x in m[col]]
            for r in range(n):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return tuple(tuple(row[n:]) for row in m)

    def coroot_pair_q(self, v, i):
        """(v, alpha_i^vee) for v in root coordinates."""
        return sum(v[j] * self.a[i][j] for j in range(self.rank))

    def weight_coords_of_root(self, v):
        """Root coords -> weight coords (always integral)."""
        return tuple(self.coroot_pair_q(v, i) for i in range(self.rank))

    def height(self, v):
        return sum(v)

    # -- reflections ------------------------------------------------------
    def reflect_q(self, i, v):
        c = self.coroot_pair_q(v, i)
        return tuple(v[j] - c * (1 if j == i else 0) for j in range(self.rank))

    def reflect_p(self, i, lam):
        c = lam[i]
        return tuple(lam[j] - c * self.a[j][i] for j in range(self.rank))

    def reflect(self, i, vec: LatticeVec) -> LatticeVec:
        if vec.basis == "Q":
            return LatticeVec(self.reflect_q(i, vec.coords), "Q")
        return LatticeVec(self.reflect_p(i, vec.coords), "P")

    def word_act_q(self, word, v):
        """Apply s_{i_1} ... s_{i_m} to v (rightmost letter acts first)."""
        for i in reversed(word):
            v = self.reflect_q(i, v)
        return v

    def word_act_p(self, word, lam):
        for i in reversed(word):
            lam = self.reflect_p(i, lam)
        return lam

    # -- Weyl words ---------------------------------------------------------
    def length_of(self, word):
        """Length of the Weyl element represented by the (arbitrary) word."""
        return sum(1 for beta in self.pos_roots
                   if any(c < 0 for c in self.word_act_q(word, beta)))

    def is_reduced(self, word):
        return len(word) == self.length_of(word)

    def perm_of_word(self, word):
        """Canonical fingerprint: images of all positive roots."""
        return tuple(self.word_act_q(word, beta) for beta in self.pos_roots)

    def braid_order(self, i, j):
        return {0: 2, 1: 3, 2: 4, 3: 6}[self.a[i][j] * self.a[j][i]]

    @lru_cache(maxsize=None)
    def longest_word(self):
        """A fixed reduced word for w0 (deterministic greedy descent)."""
        lam = (1,) * self.rank
        word = []
        while any(c > 0 for c in lam):
            i = next(k for k in range(self.rank) if lam[k] > 0)
            lam = self.reflect_p(i, lam)
            word.append(i)
        word.reverse()
        return tuple(word)

    def qi(self, i):
        """Exponent d_i so that q_i = q^{d_i}."""
        return self.d[i]


def all_reduced_words(ct: CartanType, word) -> frozenset:
    """Closure of a reduced word under braid moves (all of I_w, Matsumoto)."""
    word = tuple(word)
    if not ct.is_reduced(word):
        raise ValueError("input word is not reduced: %r" % (word,))
    target = ct.perm_of_word(word)
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for p in range(len(w) - 1):
            i, j = w[p], w[p + 1]
            if i == j:
                continue
            m = ct.braid_order(i, j)
            if p + m > len(w):
                continue
            seg = w[p:p + m]
            alt = tuple(i if k % 2 == 0 else j for k in range(m))
            if seg == alt:
                rep = tuple(j if k % 2 == 0 else i for k in range(m))
                w2 = w[:p] + rep + w[p + m:]
                if w2 not in seen:
                    seen.add(w2)
                    stack.append(w2)
    for w in seen:
        assert ct.perm_of_word(w) == target
    return frozenset(seen)


def suffix_roots(ct: CartanType, word):
    """beta_r = s_{i_m} ... s_{i_{r+1}} (alpha_{i_r}) for r = 1..m."""
    m = len(word)
    out = []
    for r in range(m):
        v = ct.alpha(word[r])
        for k in range(r + 1, m):
            v = ct.reflect_q(word[k], v)
        out.append(v)
    return tuple(out)


def prefix_roots(ct: CartanType, word):
    """beta_r = s_{i_1} ... s_{i_{r-1}} (alpha_{i_r}) for r = 1..m."""
    out = []
    for r in range(len(word)):
        v = ct.alpha(word[r])
        for k in range(r - 1, -1, -1):
            v = ct.reflect_q(word[k], v)
        out.append(v)
    return tuple(out)


def kostant_count(ct: CartanType, gamma) -> int:
    """Number of ways to write gamma as a nonneg sum of positive roots."""
    roots = ct.pos_roots

    @lru_cache(maxsize=None)
    def count(idx, rem):
        if all(c == 0 for c in rem):
            return 1
        if idx == len(roots):
            return 0
        beta = roots[idx]
        total = 0
        k = 0
        while all(rem[t] - k * beta[t] >= 0 for t in range(len(rem))):
            total += count(idx + 1,
                           tuple(rem[t] - k * beta[t] for t in range(len(rem))))
            k += 1
        return total

    return count(0, tuple(gamma))


def parse_word(text: str):
    """Parse '1,2,1' (1-based serialization) into a 0-based tuple."""
    letters = tuple(int(p) - 1 for p in text.split(","))
    if any(i < 0 for i in letters):
        raise ValueError("word indices are 1-based: %r" % text)
    return letters


def format_word(word) -> str:
    return ",".join(str(i + 1) for i in word)
