"""PBW-type monomial bases and transition matrices between them.

For a reduced word i = (i_1, ..., i_m) the six monomial families are built
from the root vectors of the braid module with the following pinned
conventions (divided vs. plain powers, descending vs. ascending order):

    edot^(n) = edot_m^(n_m) ... edot_1^(n_1)      divided, descending
    fdot^n   = fdot_m^n_m   ... fdot_1^n_1        plain,   descending
    ehat^(n) = ehat_m^(n_m) ... ehat_1^(n_1)      divided, descending
    fhat^n   = fhat_m^n_m   ... fhat_1^n_1        plain,   descending
    etilde^n = etilde_1^n_1 ... etilde_m^n_m      plain,   ascending
    ftilde^(n) = ftilde_1^(n_1) ... ftilde_m^(n_m) divided, ascending

The index n has weight sum n_r beta_r, where beta_r is the r-th prefix root
for the dot/hat families and the r-th suffix root for the tilde families.

The ehat/fhat pair is tau-orthogonal:

    tau(ehat^(n), fhat^(n')) = delta_{nn'} prod_r c_{q_{i_r}}(n_r) / [n_r]!

(the pairing of equal plain powers is prod_r c_{q_{i_r}}(n_r)), so hat
coordinates are a single division and all transitions are routed through
them; other families are expressed in hat coordinates and inverted per
weight block by exact Gaussian elimination.
"""

from __future__ import annotations

from functools import lru_cache

from .braid import (E_FAMILIES, FAMILIES, FAMILY_ALIASES, F_FAMILIES,
                    root_vector_power)
from .pairing import Pairing
from .rootdata import CartanType, prefix_roots, suffix_roots
from .scalars import ONE, ZERO, Scalar, c_const, qfact_scalar
from .uqcore import UElement, _fword_weight


def normalize_family(family: str) -> str:
    family = FAMILY_ALIASES.get(family, family)
    if family not in FAMILIES:
        raise ValueError("unknown family %r" % family)
    return family


def family_roots(ct: CartanType, family: str, word):
    """Weight of the r-th index slot, for r = 1..m."""
    if normalize_family(family) in ("etilde", "ftilde"):
        return suffix_roots(ct, word)
    return prefix_roots(ct, word)


def pbw_monomial(ct: CartanType, family: str, word, n) -> UElement:
    """The PBW monomial of the family with exponent vector n."""
    family = normalize_family(family)
    word = tuple(word)
    if len(n) != len(word):
        raise ValueError("exponent vector length does not match the word")
    divided = family in ("edot", "ehat", "ftilde")
    ascending = family in ("etilde", "ftilde")
    order = range(1, len(word) + 1) if ascending \
        else range(len(word), 0, -1)
    x = UElement.one(ct)
    for r in order:
        if n[r - 1]:
            x = x * root_vector_power(ct, family, word, r, n[r - 1], divided)
    return x


def indices_of_weight(ct: CartanType, family: str, word, gamma):
    """All exponent vectors n >= 0 with sum n_r beta_r = gamma, sorted."""
    roots = family_roots(ct, normalize_family(family), word)
    m = len(roots)
    out = []

    def rec(r, rem, acc):
        if r == m:
            if all(c == 0 for c in rem):
                out.append(tuple(acc))
            return
        beta = roots[r]
        # remaining slots cannot reduce coordinates below zero
        k = 0
        while all(rem[t] - k * beta[t] >= 0 for t in range(ct.rank)):
            rec(r + 1, tuple(rem[t] - k * beta[t] for t in range(ct.rank)),
                acc + [k])
            k += 1

    rec(0, tuple(gamma), [])
    return sorted(out)


@lru_cache(maxsize=None)
def _hat_norm(ct_name: str, word, n) -> Scalar:
    """tau(ehat^(n), fhat^n) = prod_r c_{q_{i_r}}(n_r) / [n_r]_{q_{i_r}}!"""
    ct = CartanType(ct_name)
    total = ONE
    for r, nr in enumerate(n):
        if nr:
            d = ct.qi(word[r])
            total = total * c_const(nr, d) / qfact_scalar(nr, d)
    return total


def pbw_coords(ct: CartanType, x: UElement, word, eside=True) -> dict:
    """Coordinates of x in the hat-family PBW basis along the word.

    x must be a combination of pure e-words (eside) or f-words (not eside),
    weight homogeneous.  Returns {exponent vector: Scalar}."""
    word = tuple(word)
    if x.is_zero():
        return {}
    gammas = set()
    for (F, kappa, E) in x.terms:
        if any(kappa) or (F if eside else E):
            raise ValueError("element is not in the expected pure part")
        gammas.add(_fword_weight(ct, E if eside else F))
    if len(gammas) > 1:
        raise ValueError("element is not weight homogeneous")
    gamma = gammas.pop()
    pr = Pairing(ct)
    out = {}
    for n in indices_of_weight(ct, "ehat", word, gamma):
        if eside:
            val = pr.tau(x, pbw_monomial(ct, "fhat", word, n))
        else:
            val = pr.tau(pbw_monomial(ct, "ehat", word, n), x)
        if not val.is_zero():
            out[n] = val / _hat_norm(ct.name, word, n)
    return out


def from_coords(ct: CartanType, coords: dict, word, eside=True) -> UElement:
    family = "ehat" if eside else "fhat"
    x = UElement.zero(ct)
    for n, c in coords.items():
        x = x + pbw_monomial(ct, family, word, n).scale(c)
    return x


# -- exact linear algebra over the Scalar field ----------------------------

def solve_linear(columns, target):
    """Solve sum_j a_j columns[j] = target exactly; columns and target are
    dicts keyed by arbitrary row labels.  Returns the coefficient list or
    raises ValueError if the system is inconsistent or underdetermined."""
    rows = sorted({r for col in columns for r in col}
                  | set(target), key=repr)
    mat = [[col.get(r, ZERO) for col in columns] + [target.get(r, ZERO)]
           for r in rows]
    ncols = len(columns)
    piv_rows = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(mat))
                    if not mat[r][col].is_zero()), None)
        if piv is None:
            raise ValueError("underdetermined system (rank-deficient basis)")
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = mat[row][col].inverse()
        mat[row] = [v * inv for v in mat[row]]
        for r in range(len(mat)):
            if r != row and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[row])]
        piv_rows.append(row)
        row += 1
    for r in range(row, len(mat)):
        if not mat[r][ncols].is_zero():
            raise ValueError("inconsistent system (element not in span)")
    return [mat[r][ncols] for r in piv_rows]


def expand_in_family(ct, x: UElement, family: str, word, eside=None) -> dict:
    """Coefficients of x in the given PBW family basis along the word."""
    family = normalize_family(family)
    if eside is None:
        eside = family in E_FAMILIES
    word = tuple(word)
    coords = pbw_coords(ct, x, word, eside=eside)
    if family == ("ehat" if eside else "fhat"):
        return coords
    if not coords:
        return {}
    gamma = _weight_of_coords(ct, word, coords)
    idx = indices_of_weight(ct, family, word, gamma)
    columns = [pbw_coords(ct, pbw_monomial(ct, family, word, n),
                          word, eside=eside) for n in idx]
    sol = solve_linear(columns, coords)
    return {n: c for n, c in zip(idx, sol) if not c.is_zero()}


def _weight_of_coords(ct, word, coords):
    roots = family_roots(ct, "ehat", word)
    n = next(iter(coords))
    return tuple(sum(n[r] * roots[r][t] for r in range(len(n)))
                 for t in range(ct.rank))


def transition_matrix(ct: CartanType, family: str, from_word, to_word,
                      gamma) -> dict:
    """Rows {src index n: {tgt index n': Scalar}} expressing each PBW
    monomial of the family along from_word in the same family along
    to_word, at weight gamma."""
    family = normalize_family(family)
    eside = family in E_FAMILIES
    rows = {}
    for n in indices_of_weight(ct, family, from_word, gamma):
        mono = pbw_monomial(ct, family, from_word, n)
        rows[n] = expand_in_family(ct, mono, family, to_word, eside=eside)
    return rows


def emul_constants(ct: CartanType, word, i: int, gamma) -> dict:
    """Structure constants of right multiplication by e_i in the ehat basis:
    ehat^(n) e_i = sum_{n'} c_{n n'} ehat^(n'); returns {(n, n'): Scalar}
    over source indices n of weight gamma (targets have weight
    gamma + alpha_i)."""
    word = tuple(word)
    out = {}
    for n in indices_of_weight(ct, "ehat", word, gamma):
        prod = pbw_monomial(ct, "ehat", word, n) * UElement.e(ct, i)
        for n2, c in pbw_coords(ct, prod, word, eside=True).items():
            out[(n, n2)] = c
    return out
