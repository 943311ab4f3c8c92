"""Finite-dimensional lowest-weight modules, their matrix coefficients,
and the independent oracle for the module basis-change identities.

V(lambda) for antidominant lambda is built as the quotient of the
lowest-weight Verma module (basis: e-words applied to the lowest vector
v with f_i v = 0) by the radical of the contravariant form

    <x v, y v> = chi_lambda-evaluation of b(x) y at the lowest vector,

where b is the anti-involution e_i <-> f_i.  The generator matrices are
checked against all defining relations (including both Serre families) on
construction.

A matrix coefficient Phi_{s,t} acts on a tensor Fock vector along a
reduced word i via the iterated coproduct

    Delta_{m-1}(Phi_{s,t}) = sum Phi_{s,j_1} x Phi_{j_1,j_2} x ... x
                             Phi_{j_{m-1},t},

with the r-th tensor leg restricted to the subalgebra generated by
e_{i_r}, f_{i_r}, k_{i_r}^{+-1}.  The restricted leg is rewritten as a
polynomial in the four rank-1 matrix coefficients a, b, c, d (those of
the 2-dimensional module, embedded through copies of it for longer
strings) and applied slotwise through the rank-1 Fock rules.
"""

from __future__ import annotations

from functools import lru_cache

from .fock import FockVector, koy_transform, leg_act
from .pairing import words_of_weight
from .pbw import indices_of_weight, solve_linear
from .rootdata import CartanType
from .scalars import ONE, ZERO, Scalar, qfact, qint


# -- small exact matrices (lists of rows of Scalar) -------------------------

def _zeros(nrow, ncol):
    return [[ZERO] * ncol for _ in range(nrow)]


def _identity(n):
    m = _zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def _mat_mul(a, b):
    nrow, mid, ncol = len(a), len(b), len(b[0])
    out = _zeros(nrow, ncol)
    for i in range(nrow):
        ai = a[i]
        for k in range(mid):
            c = ai[k]
            if c.is_zero():
                continue
            bk = b[k]
            row = out[i]
            for j in range(ncol):
                if not bk[j].is_zero():
                    row[j] = row[j] + c * bk[j]
    return out


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_scale(a, s):
    return [[x * s for x in row] for row in a]


def _mat_is_zero(a):
    return all(x.is_zero() for row in a for x in row)


def _mat_inverse(a):
    n = len(a)
    aug = [list(row) + list(idrow) for row, idrow in zip(a, _identity(n))]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()),
                   None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# -- lowest-weight Verma vectors (dict e-word -> Scalar) --------------------

def _verma_f(ct: CartanType, lam, i, vec: dict) -> dict:
    """Action of f_i on a combination of e-words applied to the lowest
    vector of weight lam (f_i annihilates the lowest vector)."""
    out = {}
    for word, c in vec.items():
        for w2, c2 in _verma_f_word(ct, tuple(lam), i, word).items():
            out[w2] = out.get(w2, ZERO) + c * c2
    return {w: c for w, c in out.items() if not c.is_zero()}


@lru_cache(maxsize=None)
def _verma_f_word(ct: CartanType, lam, i, word) -> dict:
    if not word:
        return {}
    j, rest = word[0], word[1:]
    out = {}
    for w2, c in _verma_f_word(ct, lam, i, rest).items():
        out[(j,) + w2] = c
    if j == i:
        # f_i e_i = e_i f_i - (k_i - k_i^{-1}) / (q_i - q_i^{-1})
        exp = _pair_weight_alpha(ct, lam, rest, i)
        d = ct.qi(i)
        num = Scalar.q_power(-exp) - Scalar.q_power(exp)
        den = Scalar.q_power(d) - Scalar.q_power(-d)
        coeff = num / den
        if not coeff.is_zero():
            out[rest] = out.get(rest, ZERO) + coeff
    return {w: c for w, c in out.items() if not c.is_zero()}


def _pair_weight_alpha(ct: CartanType, lam, eword, i) -> int:
    """(lam + wt(eword), alpha_i) as an integer exponent of q."""
    val = ct.pair_pq(lam, ct.alpha(i))
    for j in eword:
        val += ct.pair_qq(ct.alpha(j), ct.alpha(i))
    if val.denominator != 1:
        raise ValueError("non-integral pairing")
    return int(val)


@lru_cache(maxsize=None)
def _form_words(ct: CartanType, lam, xword, yword) -> Scalar:
    """Contravariant form <x v, y v> of two e-words at lowest weight lam."""
    vec = {yword: ONE}
    for i in xword:
        vec = _verma_f(ct, lam, i, vec)
        if not vec:
            return ZERO
    return vec.get((), ZERO)


class LWModule:
    """The simple module of antidominant lowest weight lam, with exact
    generator matrices (column = input basis index)."""

    MAX_DIM = 64

    def __init__(self, ct: CartanType, lam):
        lam = tuple(lam)
        if any(c > 0 for c in lam):
            raise ValueError("lowest weight must be antidominant")
        self.ct = ct
        self.lam = lam
        self._build_basis()
        self._build_matrices()
        self._check_relations()
        self._string_cache = {}
        self._leg_cache = {}

    # -- construction ------------------------------------------------------

    def _build_basis(self):
        ct, lam = self.ct, self.lam
        self.weights = []             # list of gamma (Q-coordinates)
        self.words = {}               # gamma -> selected e-words
        self._gram = {}               # gamma -> Gram matrix of selected
        frontier = [ct.zero()]
        seen = set(frontier)
        dim = 0
        while frontier:
            nxt = []
            for gamma in sorted(frontier):
                sel, gram = self._select_words(gamma)
                if not sel:
                    continue
                self.weights.append(gamma)
                self.words[gamma] = sel
                self._gram[gamma] = gram
                dim += len(sel)
                if dim > self.MAX_DIM:
                    raise ValueError("dimension bound exceeded")
                for i in range(ct.rank):
                    g2 = tuple(gamma[t] + ct.alpha(i)[t]
                               for t in range(ct.rank))
                    if g2 not in seen:
                        seen.add(g2)
                        nxt.append(g2)
            frontier = nxt
        self.weights.sort(key=lambda g: (ct.height(g), g))
        self.basis = [(g, w) for g in self.weights for w in self.words[g]]
        self.index = {bw: n for n, bw in enumerate(self.basis)}
        self.dim = len(self.basis)

    def _select_words(self, gamma):
        """Maximal subset of e-words of weight gamma with invertible Gram."""
        ct, lam = self.ct, self.lam
        sel, rows = [], []
        for w in words_of_weight(ct, gamma):
            cand = sel + [w]
            gram = [[_form_words(ct, lam, a, b) for b in cand]
                    for a in cand]
            try:
                _mat_inverse(gram)
            except ValueError:
                continue
            sel, rows = cand, gram
        return sel, rows

    def _coords(self, gamma, vec: dict):
        """Coordinates (over the selected words at gamma) of a Verma vector
        given as {e-word: Scalar}; the radical part is dropped."""
        sel = self.words.get(gamma)
        if not sel:
            return {}
        target = {}
        for s, bw in enumerate(sel):
            val = ZERO
            for w, c in vec.items():
                val = val + c * _form_words(self.ct, self.lam, bw, w)
            if not val.is_zero():
                target[s] = val
        if not target:
            return {}
        gram = self._gram[gamma]
        cols = [{s: gram[s][j] for s in range(len(sel))}
                for j in range(len(sel))]
        sol = solve_linear(cols, target)
        return {self.index[(gamma, sel[j])]: c
                for j, c in enumerate(sol) if not c.is_zero()}

    def _build_matrices(self):
        ct = self.ct
        self.e_mats = [_zeros(self.dim, self.dim) for _ in range(ct.rank)]
        self.f_mats = [_zeros(self.dim, self.dim) for _ in range(ct.rank)]
        for col, (gamma, w) in enumerate(self.basis):
            for i in range(ct.rank):
                up = tuple(gamma[t] + ct.alpha(i)[t] for t in range(ct.rank))
                for row, c in self._coords(up, {(i,) + w: ONE}).items():
                    self.e_mats[i][row][col] = c
                down = tuple(gamma[t] - ct.alpha(i)[t]
                             for t in range(ct.rank))
                fv = _verma_f(ct, self.lam, i, {w: ONE})
                for row, c in self._coords(down, fv).items():
                    self.f_mats[i][row][col] = c

    def k_exponent(self, i, n) -> int:
        """k_i acts on basis vector n by q^{exponent}."""
        return self._weight_pair(self.basis[n][0], i)

    def _weight_pair(self, gamma, i) -> int:
        val = self.ct.pair_pq(self.lam, self.ct.alpha(i)) \
            + self.ct.pair_qq(gamma, self.ct.alpha(i))
        if val.denominator != 1:
            raise ValueError("non-integral pairing")
        return int(val)

    def k_matrix(self, i, power=1):
        m = _zeros(self.dim, self.dim)
        for n in range(self.dim):
            m[n][n] = Scalar.q_power(power * self.k_exponent(i, n))
        return m

    def _divided_e_power(self, i, n):
        m = _identity(self.dim)
        for _ in range(n):
            m = _mat_mul(self.e_mats[i], m)
        return _mat_scale(m, Scalar.from_laurent(qfact(n).subst_power(
            self.ct.qi(i))).inverse())

    def _divided_f_power(self, i, n):
        m = _identity(self.dim)
        for _ in range(n):
            m = _mat_mul(self.f_mats[i], m)
        return _mat_scale(m, Scalar.from_laurent(qfact(n).subst_power(
            self.ct.qi(i))).inverse())

    def _check_relations(self):
        ct = self.ct
        for i in range(ct.rank):
            ki, kiv = self.k_matrix(i), self.k_matrix(i, -1)
            for j in range(ct.rank):
                # k_i e_j k_i^{-1} = q^{(alpha_i, alpha_j)} e_j
                p = int(ct.pair_qq(ct.alpha(i), ct.alpha(j)))
                lhs = _mat_mul(ki, _mat_mul(self.e_mats[j], kiv))
                if not _mat_is_zero(_mat_sub(
                        lhs, _mat_scale(self.e_mats[j], Scalar.q_power(p)))):
                    raise AssertionError("k-e relation fails")
                lhs = _mat_mul(ki, _mat_mul(self.f_mats[j], kiv))
                if not _mat_is_zero(_mat_sub(
                        lhs, _mat_scale(self.f_mats[j],
                                        Scalar.q_power(-p)))):
                    raise AssertionError("k-f relation fails")
                # e_i f_j - f_j e_i = delta_ij (k_i - k_i^{-1})/(q_i-q_i^{-1})
                comm = _mat_sub(_mat_mul(self.e_mats[i], self.f_mats[j]),
                                _mat_mul(self.f_mats[j], self.e_mats[i]))
                if i == j:
                    d = ct.qi(i)
                    den = (Scalar.q_power(d) - Scalar.q_power(-d)).inverse()
                    comm = _mat_sub(comm, _mat_scale(_mat_sub(ki, kiv), den))
                if not _mat_is_zero(comm):
                    raise AssertionError("e-f relation fails")
                # Serre relations
                if i != j:
                    n = 1 - ct.a[i][j]
                    se = _zeros(self.dim, self.dim)
                    sf = _zeros(self.dim, self.dim)
                    for r in range(n + 1):
                        sgn = Scalar.from_int((-1) ** r)
                        term = _mat_mul(self._divided_e_power(i, r),
                                        _mat_mul(self.e_mats[j],
                                                 self._divided_e_power(
                                                     i, n - r)))
                        se = _mat_sub(se, _mat_scale(term, -sgn))
                        term = _mat_mul(self._divided_f_power(i, r),
                                        _mat_mul(self.f_mats[j],
                                                 self._divided_f_power(
                                                     i, n - r)))
                        sf = _mat_sub(sf, _mat_scale(term, -sgn))
                    if not (_mat_is_zero(se) and _mat_is_zero(sf)):
                        raise AssertionError("Serre relation fails")

    # -- action of algebra elements, matrix coefficients --------------------

    def act_mono(self, mono, col):
        """Column vector (dict row -> Scalar) of the normal-form monomial
        (F, kappa, E) applied to basis vector col."""
        F, kappa, E = mono
        vec = {col: ONE}
        for j in reversed(E):
            vec = self._apply_mat(self.e_mats[j], vec)
        if any(kappa):
            out = {}
            for n, c in vec.items():
                exp = sum(kappa[i] * self.k_exponent(i, n)
                          for i in range(self.ct.rank))
                out[n] = c * Scalar.q_power(exp)
            vec = out
        for j in reversed(F):
            vec = self._apply_mat(self.f_mats[j], vec)
        return vec

    def _apply_mat(self, m, vec):
        out = {}
        for col, c in vec.items():
            for row in range(self.dim):
                if not m[row][col].is_zero():
                    out[row] = out.get(row, ZERO) + c * m[row][col]
        return {r: c for r, c in out.items() if not c.is_zero()}


class MatCoef:
    """The matrix coefficient Phi_{s,t}: u -> (s-component of u . basis_t)."""

    __slots__ = ("module", "row", "col")

    def __init__(self, module: LWModule, row: int, col: int):
        self.module = module
        self.row = row
        self.col = col

    def eval(self, x) -> Scalar:
        """Value on a uqcore element."""
        total = ZERO
        for mono, c in x.terms.items():
            v = self.module.act_mono(mono, self.col)
            if self.row in v:
                total = total + c * v[self.row]
        return total

    def eval_product(self, other: "MatCoef", x) -> Scalar:
        """Value of the product (self * other) on x, through the coproduct
        <phi psi, x> = sum <phi, x_(0)> <psi, x_(1)>."""
        total = ZERO
        for (m1, m2), c in x.coproduct().terms.items():
            v1 = self.module.act_mono(m1, self.col)
            if self.row not in v1:
                continue
            v2 = other.module.act_mono(m2, other.col)
            if other.row in v2:
                total = total + c * v1[self.row] * v2[other.row]
        return total

    def __repr__(self):
        return "Phi[lam=%s; %d,%d]" % (list(self.module.lam),
                                       self.row, self.col)


def build_irrep(ct: CartanType, lam) -> LWModule:
    return LWModule(ct, lam)


# -- rank-1 strings and the a,b,c,d rewriting -------------------------------

@lru_cache(maxsize=None)
def _phi_poly(n: int, j: int, l: int, d: int):
    """The matrix coefficient Phi_{j,l} of the (n+1)-dimensional rank-1
    module (basis u_j = e^{(j)} u_0 from the lowest vector), written as a
    tuple of (Scalar, letter word) with letters in "abcd", through the
    embedding of the module into the n-th tensor power of the
    2-dimensional one.  d is the exponent scaling q -> q^d."""
    if n == 0:
        return ((ONE, ""),)
    if n == 1:
        letter = {(0, 0): "d", (1, 0): "b", (0, 1): "c", (1, 1): "a"}[(j, l)]
        return ((ONE, letter),)
    # basis of the tensor power: eps in {0,1}^n, v_0 highest, v_1 lowest;
    # lowest vector of the embedded module is v_1 x ... x v_1
    emb = [{(1,) * n: ONE}]
    for step in range(n):
        prev, nxt = emb[-1], {}
        for eps, c in prev.items():
            for r in range(n):
                if eps[r] == 1:
                    exp = sum(1 - 2 * eps[s] for s in range(r))
                    key = eps[:r] + (0,) + eps[r + 1:]
                    add = c * Scalar.q_power(exp)
                    nxt[key] = nxt.get(key, ZERO) + add
        fact = Scalar.from_laurent(qint(step + 1)).inverse()
        emb.append({k: v * fact for k, v in nxt.items() if not v.is_zero()})
    row = next(iter(sorted(emb[j])))
    norm = emb[j][row].inverse()
    letters = {(0, 0): "a", (0, 1): "b", (1, 0): "c", (1, 1): "d"}
    out = []
    for delta, c in sorted(emb[l].items()):
        word = "".join(letters[(row[r], delta[r])] for r in range(n))
        out.append(((norm * c).subst_q_power(d), word))
    return tuple(out)


def _strings(V: LWModule, i):
    """Decomposition of V under the rank-1 subalgebra at index i: returns
    (T, Tinv, slots) where slots[col] = (string length n, position j) and
    T's columns run over the adapted vectors u_j = e_i^{(j)} u_0."""
    if i in V._string_cache:
        return V._string_cache[i]
    ct = V.ct
    cols, slots = [], []
    for gamma in V.weights:
        idx = [V.index[(gamma, w)] for w in V.words[gamma]]
        # kernel of f_i on this weight block
        block = [[V.f_mats[i][r][c] for c in idx] for r in range(V.dim)]
        kern = _kernel(block)
        pair = -V._weight_pair(gamma, i)
        if pair % ct.qi(i):
            raise AssertionError("non-integral coroot pairing")
        n_str = pair // ct.qi(i)
        for kv in kern:
            u0 = {idx[t]: kv[t] for t in range(len(idx))
                  if not kv[t].is_zero()}
            vec = u0
            for j in range(n_str + 1):
                cols.append(vec)
                slots.append((n_str, j))
                vec = V._apply_mat(V.e_mats[i], vec)
                if j < n_str:
                    fact = Scalar.from_laurent(
                        qint(j + 1).subst_power(ct.qi(i))).inverse()
                    vec = {r: c * fact for r, c in vec.items()}
            if vec:
                raise AssertionError("string does not terminate")
    if len(cols) != V.dim:
        raise AssertionError("string decomposition is not a basis")
    T = _zeros(V.dim, V.dim)
    for c, vec in enumerate(cols):
        for r, val in vec.items():
            T[r][c] = val
    Tinv = _mat_inverse(T)
    V._string_cache[i] = (T, Tinv, slots)
    return V._string_cache[i]


def _kernel(block):
    """Basis of the kernel of the matrix (columns over Scalar)."""
    nrow = len(block)
    ncol = len(block[0]) if nrow else 0
    mat = [list(r) for r in block]
    pivots, row = {}, 0
    for col in range(ncol):
        piv = next((r for r in range(row, nrow)
                    if not mat[r][col].is_zero()), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = mat[row][col].inverse()
        mat[row] = [v * inv for v in mat[row]]
        for r in range(nrow):
            if r != row and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[row])]
        pivots[col] = row
        row += 1
    out = []
    for col in range(ncol):
        if col in pivots:
            continue
        vec = [ZERO] * ncol
        vec[col] = ONE
        for pcol, prow in pivots.items():
            vec[pcol] = -mat[prow][col]
        out.append(vec)
    return out


def _leg_poly(V: LWModule, i, u, w):
    """Phi_{u,w} restricted to the rank-1 subalgebra at i, as a list of
    (Scalar, letter word)."""
    key = (i, u, w)
    if key in V._leg_cache:
        return V._leg_cache[key]
    T, Tinv, slots = _strings(V, i)
    acc = {}
    col = 0
    while col < V.dim:
        n_str = slots[col][0]
        for j in range(n_str + 1):
            tval = T[u][col + j]
            if tval.is_zero():
                continue
            for l in range(n_str + 1):
                ival = Tinv[col + l][w]
                if ival.is_zero():
                    continue
                for c, word in _phi_poly(n_str, j, l, V.ct.qi(i)):
                    c2 = c * tval * ival
                    acc[word] = acc.get(word, ZERO) + c2
        col += n_str + 1
    poly = [(c, word) for word, c in sorted(acc.items())
            if not c.is_zero()]
    V._leg_cache[key] = poly
    return poly


def _apply_leg(V: LWModule, i, u, w, slot, vec: FockVector) -> FockVector:
    out = FockVector.zero(vec.ct, vec.word)
    for c, word in _leg_poly(V, i, u, w):
        piece = vec
        for g in reversed(word):
            piece = leg_act(vec.ct, g, slot, piece)
            if piece.is_zero():
                break
        else:
            out = out + piece.scale(c)
    return out


def act_on_tensor(phi: MatCoef, word, v: FockVector) -> FockVector:
    """Action of the matrix coefficient on the tensor module along the
    word, through the iterated coproduct with rank-1-restricted legs."""
    V = phi.module
    word = tuple(word)
    if v.word != word:
        raise ValueError("vector does not live on the word")
    m = len(word)

    def rec(r, u, vec):
        if r == m - 1:
            return _apply_leg(V, word[r], u, phi.col, r, vec)
        total = FockVector.zero(v.ct, word)
        for j in range(V.dim):
            piece = _apply_leg(V, word[r], u, j, r, vec)
            if not piece.is_zero():
                total = total + rec(r + 1, j, piece)
        return total

    if m == 0:
        raise ValueError("empty word")
    return rec(0, phi.row, v)


# -- the intertwiner oracle --------------------------------------------------

def fundamental_modules(ct: CartanType):
    out = []
    for i in range(ct.rank):
        lam = tuple(-1 if t == i else 0 for t in range(ct.rank))
        out.append(build_irrep(ct, lam))
    return out


def verify_intertwiner(ct: CartanType, from_word, to_word, heightbound,
                       d_reading: str = "qi", modules=None):
    """Check, for every matrix coefficient phi of the fundamental modules
    and every basis vector v up to the height bound, that

        act(phi, to_word, koy(v)) == koy(act(phi, from_word, v)).

    Returns a list of per-case report dicts (key "pass")."""
    from_word, to_word = tuple(from_word), tuple(to_word)
    if modules is None:
        modules = fundamental_modules(ct)
    inner = heightbound + 12
    report = []
    exps = []
    for h in range(heightbound + 1):
        for gamma in _weights_of_height(ct, h):
            exps.extend(indices_of_weight(ct, "ehat", from_word, gamma))
    for V in modules:
        for s in range(V.dim):
            for t in range(V.dim):
                phi = MatCoef(V, s, t)
                for n in exps:
                    v = FockVector.basis(ct, from_word, n)
                    lhs = act_on_tensor(
                        phi, to_word,
                        koy_transform(ct, from_word, to_word, v,
                                      d_reading, inner))
                    rhs = koy_transform(ct, from_word, to_word,
                                        act_on_tensor(phi, from_word, v),
                                        d_reading, inner)
                    ok = lhs == rhs
                    case = {"phi": repr(phi), "basis": list(n), "pass": ok}
                    if not ok:
                        case["lhs"] = lhs.to_json()
                        case["rhs"] = rhs.to_json()
                    report.append(case)
    return report


def _weights_of_height(ct: CartanType, h):
    out = []

    def rec(i, rem, acc):
        if i == ct.rank - 1:
            out.append(tuple(acc + [rem]))
            return
        for v in range(rem + 1):
            rec(i + 1, rem - v, acc + [v])

    rec(0, h, [])
    return sorted(out)
