"""Command-line front end: transition matrices and verification suites.

Two subcommands:

    qpbw transition --type A2 --from 2,1,2 --to 1,2,1 [--height H | --weight g]
    qpbw verify SUITE [--type T] [--height H] [--threads N] [--d-reading R]

Exit codes: 0 all checks pass / emission succeeded, 1 at least one check
failed (witnesses on stdout), 2 invalid usage (unknown suite, bad word,
unknown type).  JSON output is deterministic: identical configurations
produce byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from . import braid, coordring, fock, pbw
from .pairing import Pairing, canonical_coords, eq_mod_serre, words_of_weight
from .rootdata import (CartanType, all_reduced_words, format_word,
                       kostant_count, parse_word)
from .scalars import ONE, ZERO, Scalar, c_const, qfact_scalar
from .uqcore import UElement, UTensor

TYPE_NAMES = ("A1", "A2", "A3", "B2", "G2")

SUITES = ("hopf", "braid", "pairing", "pbw-orth", "transfer", "decomp",
          "koy", "conj1", "sl2", "oracle")


# ---------------------------------------------------------------------------
# small exact linear algebra helper

def _rank(rows):
    """Rank of a list of {key: Scalar} row vectors, by Gaussian elimination."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        piv = rows.pop()
        if not piv:
            continue
        rank += 1
        key = next(iter(piv))
        inv = piv[key].inverse()
        piv = {k: v * inv for k, v in piv.items()}
        reduced = []
        for r in rows:
            if key in r:
                c = r[key]
                r = {k: r.get(k, ZERO) - c * piv.get(k, ZERO)
                     for k in set(r) | set(piv)}
                r = {k: v for k, v in r.items() if not v.is_zero()}
            if r:
                reduced.append(r)
        rows = reduced
    return rank


# ---------------------------------------------------------------------------
# Hopf-axiom checks on normal forms

def _mono_elt(ct, mono):
    return UElement(ct, {mono: ONE})


class _MonoCache:
    """Memoized per-monomial Hopf data; the normal-form monomials of short
    generator words repeat massively across the corpus."""

    def __init__(self, ct):
        self.ct = ct
        self.cp = {}
        self.anti = {}
        self.anti_prod = {}

    def coproduct(self, m):
        t = self.cp.get(m)
        if t is None:
            t = self.cp[m] = _mono_elt(self.ct, m).coproduct()
        return t

    def antipode_product(self, a, b, s_left):
        """S(a)*b if s_left else a*S(b), as a UElement."""
        key = (a, b, s_left)
        out = self.anti_prod.get(key)
        if out is None:
            if s_left:
                out = self._anti(a) * _mono_elt(self.ct, b)
            else:
                out = _mono_elt(self.ct, a) * self._anti(b)
            self.anti_prod[key] = out
        return out

    def _anti(self, m):
        s = self.anti.get(m)
        if s is None:
            s = self.anti[m] = _mono_elt(self.ct, m).antipode()
        return s


def _coproduct_leg(cache, tensor, left):
    """(Delta x id) or (id x Delta) of a 2-tensor, as a 3-tensor dict."""
    out = {}
    for (a, b), c in tensor.terms.items():
        inner = cache.coproduct(a if left else b)
        for (m1, m2), c2 in inner.terms.items():
            key = (m1, m2, b) if left else (a, m1, m2)
            cur = out.get(key, ZERO) + c * c2
            if cur.is_zero():
                out.pop(key, None)
            else:
                out[key] = cur
    return out


def _counit_leg(ct, tensor, left):
    acc = UElement.zero(ct)
    for (a, b), c in tensor.terms.items():
        eps = _mono_elt(ct, a if left else b).counit()
        acc = acc + _mono_elt(ct, b if left else a).scale(c * eps)
    return acc


def _antipode_convolution(cache, tensor, s_left):
    """m (S x id) Delta(x)  or  m (id x S) Delta(x)."""
    terms = {}
    for (a, b), c in tensor.terms.items():
        for m, cm in cache.antipode_product(a, b, s_left).terms.items():
            cur = terms.get(m, ZERO) + c * cm
            if cur.is_zero():
                terms.pop(m, None)
            else:
                terms[m] = cur
    return UElement(cache.ct, terms)


def _hopf_case(cache, label, x, delta):
    ct = cache.ct
    ok = (_counit_leg(ct, delta, True) == x
          and _counit_leg(ct, delta, False) == x
          and _coproduct_leg(cache, delta, True)
          == _coproduct_leg(cache, delta, False))
    if ok:
        unit = UElement.one(ct).scale(x.counit())
        ok = (_antipode_convolution(cache, delta, True) == unit
              and _antipode_convolution(cache, delta, False) == unit)
    return {"check": "hopf %s %s" % (ct.name, label), "pass": ok}


def suite_hopf(types=("A2", "B2"), length=4, threads=1):
    """Counit, coassociativity and antipode axioms on all generator words."""
    cases = []
    for name in types:
        ct = CartanType(name)
        cache = _MonoCache(ct)
        alphabet = [("e%d" % (i + 1), UElement.e(ct, i)) for i in
                    range(ct.rank)]
        alphabet += [("f%d" % (i + 1), UElement.f(ct, i)) for i in
                     range(ct.rank)]
        alphabet += [("k%d" % (i + 1), UElement.k_i(ct, i)) for i in
                     range(ct.rank)]
        alphabet = [(tag, gen, gen.coproduct()) for tag, gen in alphabet]

        def walk(label, x, delta, depth, cache=cache, alphabet=alphabet):
            cases.append(lambda cache=cache, label=label, x=x, delta=delta:
                         _hopf_case(cache, label or "1", x, delta))
            if depth == 0:
                return
            for tag, gen, gencp in alphabet:
                walk(label + "." + tag if label else tag, x * gen,
                     delta * gencp, depth - 1)

        walk("", UElement.one(ct), UTensor.one(ct), length)
    return _run_cases(cases, threads)


# ---------------------------------------------------------------------------
# braid suite

def _random_element(ct, rng, max_len=2):
    """Random triangular element with short e/f words (braid images of long
    words explode combinatorially in G2)."""
    terms = {}
    for _ in range(rng.randint(1, 3)):
        fw = tuple(rng.randrange(ct.rank)
                   for _ in range(rng.randint(0, max_len)))
        ew = tuple(rng.randrange(ct.rank)
                   for _ in range(rng.randint(0, max_len)))
        kap = tuple(rng.randint(-1, 1) for _ in range(ct.rank))
        c = Scalar.q_power(rng.randint(-2, 2)) \
            * Scalar.from_int(rng.randint(-3, 3))
        x = (UElement.f_word(ct, fw) * UElement.k(ct, kap)
             * UElement.e_word(ct, ew)).scale(c)
        acc = UElement(ct, terms) + x
        terms = acc.terms
    return UElement(ct, terms)


def _braid_word_pair(ct, i, j):
    m = ct.braid_order(i, j)
    w1 = tuple((i, j)[r % 2] for r in range(m))
    w2 = tuple((j, i)[r % 2] for r in range(m))
    return w1, w2


def suite_braid(types=("A2", "B2", "G2"), n_random=100, threads=1, seed=11):
    """Braid relations on generators; hat = S^-1 dot S; counit invariance."""
    cases = []
    for name in types:
        ct = CartanType(name)
        gens = [("e%d" % (k + 1), UElement.e(ct, k)) for k in range(ct.rank)]
        gens += [("f%d" % (k + 1), UElement.f(ct, k)) for k in range(ct.rank)]
        gens += [("k%d" % (k + 1), UElement.k_i(ct, k)) for k in
                 range(ct.rank)]
        for i in range(ct.rank):
            for j in range(i + 1, ct.rank):
                w1, w2 = _braid_word_pair(ct, i, j)
                for kind in ("dot", "hat"):
                    for tag, g in gens:
                        def case(ct=ct, kind=kind, w1=w1, w2=w2, g=g,
                                 tag=tag):
                            lhs = braid.apply_word(ct, kind, w1, g)
                            rhs = braid.apply_word(ct, kind, w2, g)
                            return {"check": "braid %s %s %s on %s"
                                    % (ct.name, kind, format_word(w1), tag),
                                    "pass": eq_mod_serre(lhs, rhs)}
                        cases.append(case)
    rng = random.Random(seed)
    rank2 = [CartanType(n) for n in types if CartanType(n).rank == 2]
    for t in range(n_random):
        ct = rng.choice(rank2)
        u = _random_element(ct, rng, max_len=1 if ct.name == "G2" else 2)
        i = rng.randrange(ct.rank)

        def case(ct=ct, u=u, i=i, t=t):
            hat = braid.t_hat(ct, i, u)
            via_s = braid.t_dot(ct, i, u.antipode()).antipode_inv()
            eps_ok = (braid.t_dot(ct, i, u).counit() == u.counit()
                      and hat.counit() == u.counit())
            return {"check": "dThT/epsT %s #%d" % (ct.name, t),
                    "pass": eq_mod_serre(hat, via_s) and eps_ok}
        cases.append(case)
    return _run_cases(cases, threads)


# ---------------------------------------------------------------------------
# pairing suite

def _weights_up_to(ct, h):
    out = []
    for height in range(1, h + 1):
        out.extend(coordring._weights_of_height(ct, height))
    return out


def suite_pairing(types=("A2", "B2"), height=4, threads=1):
    """Generator pairings, weight orthogonality, per-weight Gram ranks."""
    cases = []
    for name in types:
        ct = CartanType(name)
        pr = Pairing(ct)
        for i in range(ct.rank):
            for j in range(ct.rank):
                def case(ct=ct, pr=pr, i=i, j=j):
                    got = pr.tau_words((i,), (j,))
                    if i == j:
                        want = (Scalar.q_power(ct.qi(i))
                                - Scalar.q_power(-ct.qi(i))).inverse()
                    else:
                        want = ZERO
                    return {"check": "tau(e%d,f%d) %s" % (i + 1, j + 1,
                                                          ct.name),
                            "pass": got == want, "got": str(got)}
                cases.append(case)
        weights = _weights_up_to(ct, height)
        for ga in weights:
            def gram_case(ct=ct, pr=pr, ga=ga):
                ews = words_of_weight(ct, ga)
                rows = []
                for ew in ews:
                    row = {}
                    for fw in ews:
                        v = pr.tau_words(ew, fw)
                        if not v.is_zero():
                            row[fw] = v
                    rows.append(row)
                want = kostant_count(ct, ga)
                got = _rank(rows)
                return {"check": "gram rank %s at %s" % (ct.name, list(ga)),
                        "pass": got == want, "got": got, "want": want}
            cases.append(gram_case)
        # mismatched weights pair to zero
        for ga in weights[:6]:
            for gb in weights[:6]:
                if ga == gb:
                    continue

                def zero_case(ct=ct, pr=pr, ga=ga, gb=gb):
                    ok = all(pr.tau_words(ew, fw).is_zero()
                             for ew in words_of_weight(ct, ga)[:3]
                             for fw in words_of_weight(ct, gb)[:3])
                    return {"check": "weight orthogonality %s %s/%s"
                            % (ct.name, list(ga), list(gb)), "pass": ok}
                cases.append(zero_case)
    return _run_cases(cases, threads)


# ---------------------------------------------------------------------------
# PBW orthogonality suite

def suite_pbw_orth(types=(("A2", 5), ("B2", 5), ("G2", 4)), threads=1):
    """tau(ehat^(n), fhat^n') = delta * prod c(n_r)/[n_r]! along every word.

    Equivalently, with plain (non-divided) powers on the e side the pairing
    is delta * prod c(n_r); both forms are asserted.
    """
    cases = []
    for name, height in types:
        ct = CartanType(name)
        pr = Pairing(ct)
        for word in sorted(all_reduced_words(ct, ct.longest_word())):
            for ga in _weights_up_to(ct, height):
                def case(ct=ct, pr=pr, word=word, ga=ga):
                    idx = pbw.indices_of_weight(ct, "ehat", word, ga)
                    ok = True
                    witness = None
                    for n in idx:
                        em_div = pbw.pbw_monomial(ct, "ehat", word, n)
                        for n2 in idx:
                            fm = pbw.pbw_monomial(ct, "fhat", word, n2)
                            got = pr.tau(em_div, fm)
                            want = ZERO
                            if n == n2:
                                want = ONE
                                for r, nr in enumerate(n):
                                    d = ct.qi(word[r])
                                    want = want * c_const(nr, d) \
                                        / qfact_scalar(nr, d)
                            if got != want:
                                ok = False
                                witness = {"n": list(n), "n2": list(n2),
                                           "got": str(got),
                                           "want": str(want)}
                                break
                        if not ok:
                            break
                    out = {"check": "pbw-orth %s %s at %s"
                           % (ct.name, format_word(word), list(ga)),
                           "pass": ok}
                    if witness:
                        out["witness"] = witness
                    return out
                cases.append(case)
    return _run_cases(cases, threads)


# ---------------------------------------------------------------------------
# transfer suite

def suite_transfer(types=("A2", "B2", "G2"), height=4, threads=1):
    """S^-1 T_w(etilde^n) = fhat^n along every reduced word of w0."""
    cases = []
    for name in types:
        ct = CartanType(name)
        for word in sorted(all_reduced_words(ct, ct.longest_word())):
            # T_w is an algebra map and S^-1 an anti-algebra map, so
            # S^-1 T_w(etilde_1^{n_1} ... etilde_m^{n_m}) is the reversed
            # product of the per-root images; computing those once per
            # word keeps the braid operators on single root vectors.
            imgs = [braid.apply_word(
                ct, "dot", word,
                braid.root_vector(ct, "etilde", word, r)).antipode_inv()
                for r in range(1, len(word) + 1)]
            for ga in _weights_up_to(ct, height):
                for n in pbw.indices_of_weight(ct, "etilde", word, ga):
                    def case(ct=ct, word=word, n=n, imgs=imgs):
                        lhs = UElement.one(ct)
                        for r in reversed(range(len(word))):
                            for _ in range(n[r]):
                                lhs = lhs * imgs[r]
                        rhs = pbw.pbw_monomial(ct, "fhat", word, n)
                        return {"check": "transfer %s %s n=%s"
                                % (ct.name, format_word(word), list(n)),
                                "pass": eq_mod_serre(lhs, rhs)}
                    cases.append(case)
    return _run_cases(cases, threads)


# ---------------------------------------------------------------------------
# decomposition suite

def suite_decomp(types=("A2", "B2", "G2"), height=4, threads=1):
    """Prefix x suffix products span each weight block (one word per type)."""
    cases = []
    for name in types:
        ct = CartanType(name)
        word = min(all_reduced_words(ct, ct.longest_word()))
        m = len(word)
        for cut in range(m + 1):
            for ga in _weights_up_to(ct, height):
                def case(ct=ct, word=word, cut=cut, ga=ga):
                    rows = []
                    for n in pbw.indices_of_weight(ct, "ehat", word, ga):
                        npre = n[:cut] + (0,) * (len(word) - cut)
                        nsuf = (0,) * cut + n[cut:]
                        prod = (pbw.pbw_monomial(ct, "ehat", word, npre)
                                * pbw.pbw_monomial(ct, "ehat", word, nsuf))
                        rows.append(canonical_coords(prod))
                    want = kostant_count(ct, ga)
                    got = _rank(rows)
                    return {"check": "decomp %s cut=%d at %s"
                            % (ct.name, cut, list(ga)),
                            "pass": got == want, "got": got, "want": want}
                cases.append(case)
    return _run_cases(cases, threads)


# ---------------------------------------------------------------------------
# transition / koy suite

def suite_koy(types=("A2", "B2"), height=3, count_height=5, threads=1,
              d_reading="qi"):
    """Kostant index counts, transition round trips, module basis-change
    round trips."""
    cases = []
    for name in types:
        ct = CartanType(name)
        words = sorted(all_reduced_words(ct, ct.longest_word()))
        ch = count_height if ct.rank <= 2 else min(count_height, 3)
        for word in words:
            def count_case(ct=ct, word=word, ch=ch):
                ok = all(len(pbw.indices_of_weight(ct, "ehat", word, ga))
                         == kostant_count(ct, ga)
                         for ga in _weights_up_to(ct, ch))
                return {"check": "kostant counts %s %s"
                        % (ct.name, format_word(word)), "pass": ok}
            cases.append(count_case)
        for wa in words:
            for wb in words:
                if wa == wb:
                    continue
                for ga in _weights_up_to(ct, height):
                    def rt_case(ct=ct, wa=wa, wb=wb, ga=ga):
                        fwd = pbw.transition_matrix(ct, "ehat", wa, wb, ga)
                        bwd = pbw.transition_matrix(ct, "ehat", wb, wa, ga)
                        ok = True
                        for n, row in fwd.items():
                            acc = {}
                            for n2, c in row.items():
                                for n3, c2 in bwd[n2].items():
                                    cur = acc.get(n3, ZERO) + c * c2
                                    acc[n3] = cur
                            for n3, c in acc.items():
                                want = ONE if n3 == n else ZERO
                                if c != want:
                                    ok = False
                        return {"check": "round trip %s %s<->%s at %s"
                                % (ct.name, format_word(wa), format_word(wb),
                                   list(ga)), "pass": ok}
                    cases.append(rt_case)
        # module-level basis change round trips on basis vectors
        wa, wb = words[0], words[1]
        for ga in _weights_up_to(ct, min(height, 3)):
            for n in pbw.indices_of_weight(ct, "ehat", wa, ga):
                def fock_case(ct=ct, wa=wa, wb=wb, n=n,
                              d_reading=d_reading):
                    v = fock.FockVector.basis(ct, wa, n)
                    rt = fock.koy_transform(
                        ct, wb, wa,
                        fock.koy_transform(ct, wa, wb, v, d_reading, 20),
                        d_reading, 20)
                    return {"check": "koy round trip %s n=%s"
                            % (ct.name, list(n)), "pass": rt == v}
                cases.append(fock_case)
    return _run_cases(cases, threads)


# ---------------------------------------------------------------------------
# conj1 suite

def suite_conj1(types=("A2", "B2"), height=3, threads=1, d_reading="qi",
                ladder_n=8):
    """Word-independence of the transported e_i operator; A1 ladder."""
    cases = []
    for name in types:
        ct = CartanType(name)
        words = sorted(all_reduced_words(ct, ct.longest_word()))
        base = words[0]
        inner = height + 12
        for other in words[1:]:
            for i in range(ct.rank):
                for ga in _weights_up_to(ct, height):
                    for n in pbw.indices_of_weight(ct, "ehat", base, ga):
                        def case(ct=ct, base=base, other=other, i=i, n=n,
                                 d_reading=d_reading, inner=inner):
                            v = fock.FockVector.basis(ct, base, n)
                            lhs = fock.koy_transform(
                                ct, base, other,
                                fock.conj1_operator(ct, base, i, v,
                                                    d_reading, inner),
                                d_reading, inner)
                            rhs = fock.conj1_operator(
                                ct, other, i,
                                fock.koy_transform(ct, base, other, v,
                                                   d_reading, inner),
                                d_reading, inner)
                            return {"check": "conj1 %s i=%d n=%s via %s"
                                    % (ct.name, i + 1, list(n),
                                       format_word(other)),
                                    "pass": lhs == rhs}
                        cases.append(case)
    a1 = CartanType("A1")
    for n in range(ladder_n + 1):
        def ladder(n=n, a1=a1, d_reading=d_reading):
            v = fock.FockVector.basis(a1, (0,), (n,))
            got = fock.conj1_operator(a1, (0,), 0, v, d_reading, n + 2)
            den = Scalar.q_power(n + 2) - Scalar.q_power(n)
            want = fock.FockVector.basis(a1, (0,), (n + 1,)).scale(
                -den.inverse())
            return {"check": "A1 ladder n=%d" % n, "pass": got == want,
                    "got": repr(got)}
        cases.append(ladder)
    return _run_cases(cases, threads)


# ---------------------------------------------------------------------------
# sl2 suite

_SL2_RELATIONS = (
    ("ab", "ba", 1), ("cd", "dc", 1), ("ac", "ca", 1), ("bd", "db", 1),
    ("bc", "cb", 0),
)


def _apply_letters(letters, act):
    """Compose letter actions, rightmost letter acting first."""
    def run(v):
        for g in reversed(letters):
            v = act(g, v)
        return v
    return run


def _sl2_relation_cases(act, vectors, label):
    cases = []
    for lhs, rhs, qpow in _SL2_RELATIONS:
        def case(lhs=lhs, rhs=rhs, qpow=qpow, act=act, vectors=vectors,
                 label=label):
            ok = all(_apply_letters(lhs, act)(v)
                     == _apply_letters(rhs, act)(v).scale(Scalar.q_power(qpow))
                     for v in vectors)
            return {"check": "sl2 %s=q^%d %s (%s)" % (lhs, qpow, rhs, label),
                    "pass": ok}
        cases.append(case)

    def det_case(act=act, vectors=vectors, label=label):
        qq = Scalar.q_power(1) - Scalar.q_power(-1)
        ok = all(
            (_apply_letters("ad", act)(v) - _apply_letters("da", act)(v))
            == _apply_letters("bc", act)(v).scale(qq)
            and (_apply_letters("ad", act)(v)
                 - _apply_letters("bc", act)(v).scale(Scalar.q_power(1))) == v
            for v in vectors)
        return {"check": "sl2 ad-da=(q-q^-1)bc, ad-qbc=1 (%s)" % label,
                "pass": ok}
    cases.append(det_case)
    return cases


def _sl2_matcoef_letters():
    """Identify a, b, c, d among the matrix coefficients of the 2-dim
    A1 module by their values on k, e, f."""
    ct = CartanType("A1")
    V = coordring.build_irrep(ct, (-1,))
    k = UElement.k_i(ct, 0)
    e = UElement.e(ct, 0)
    f = UElement.f(ct, 0)
    letters = {}
    for s in range(2):
        for t in range(2):
            phi = coordring.MatCoef(V, s, t)
            if s == t:
                val = phi.eval(k)
                letters["a" if val == Scalar.q_power(1) else "d"] = phi
            else:
                letters["b" if not phi.eval(e).is_zero() else "c"] = phi
    assert sorted(letters) == ["a", "b", "c", "d"]
    return ct, letters


def suite_sl2(max_n=10, threads=1):
    """The seven quantized-SL2 relations as operators on the rank-1 module,
    both through the direct slot rules and the matrix-coefficient
    realization."""
    ct = CartanType("A1")
    vectors = [fock.FockVector.basis(ct, (0,), (n,)) for n in
               range(max_n + 1)]

    def direct(g, v):
        return fock.sl2_act(ct, g, 0, v)
    cases = _sl2_relation_cases(direct, vectors, "slot rules")

    ctm, letters = _sl2_matcoef_letters()

    def realized(g, v):
        return coordring.act_on_tensor(letters[g], (0,), v)
    cases += _sl2_relation_cases(realized, vectors, "matrix coefficients")

    def agreement():
        ok = all(direct(g, v) == realized(g, v)
                 for g in "abcd" for v in vectors)
        return {"check": "sl2 slot rules = matrix coefficients",
                "pass": ok}
    cases.append(agreement)
    return _run_cases(cases, threads)


# ---------------------------------------------------------------------------
# oracle suite

def suite_oracle(types=(("A2", 3),), d_reading="qi", threads=1):
    """Intertwiner check of the basis-change operator against the tensor
    module built from matrix coefficients."""
    cases = []
    for name, height in types:
        ct = CartanType(name)
        words = sorted(all_reduced_words(ct, ct.longest_word()))

        def case(ct=ct, words=words, height=height, d_reading=d_reading):
            report = coordring.verify_intertwiner(ct, words[0], words[1],
                                                  height, d_reading)
            bad = [r for r in report if not r["pass"]]
            out = {"check": "oracle %s h<=%d (%d cases, %s reading)"
                   % (ct.name, height, len(report), d_reading),
                   "pass": not bad}
            if bad:
                out["witness"] = bad[0]
            return out
        cases.append(case)
    return _run_cases(cases, threads)


# ---------------------------------------------------------------------------
# runner plumbing

def _run_cases(cases, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            futures = [ex.submit(c) for c in cases]
            return [f.result() for f in futures]
    return [c() for c in cases]


def run_suite(name, type_name=None, height=None, threads=1,
              d_reading="qi"):
    """Dispatch a named suite with CLI-level defaults; returns case list."""
    if name == "hopf":
        return suite_hopf(types=(type_name,) if type_name else ("A2", "B2"),
                          threads=threads)
    if name == "braid":
        return suite_braid(types=(type_name,) if type_name
                           else ("A2", "B2", "G2"), threads=threads)
    if name == "pairing":
        return suite_pairing(types=(type_name,) if type_name
                             else ("A2", "B2"), height=height or 4,
                             threads=threads)
    if name == "pbw-orth":
        if type_name:
            types = ((type_name, height or (4 if type_name == "G2" else 5)),)
        else:
            types = (("A2", height or 5), ("B2", height or 5),
                     ("G2", height or 4))
        return suite_pbw_orth(types=types, threads=threads)
    if name == "transfer":
        return suite_transfer(types=(type_name,) if type_name
                              else ("A2", "B2", "G2"), height=height or 4,
                              threads=threads)
    if name == "decomp":
        return suite_decomp(types=(type_name,) if type_name
                            else ("A2", "B2", "G2"), height=height or 4,
                            threads=threads)
    if name == "koy":
        return suite_koy(types=(type_name,) if type_name else ("A2", "B2"),
                         height=height or 3, threads=threads,
                         d_reading=d_reading)
    if name == "conj1":
        return suite_conj1(types=(type_name,) if type_name
                           else ("A2", "B2"), height=height or 3,
                           threads=threads, d_reading=d_reading)
    if name == "sl2":
        return suite_sl2(max_n=height or 10, threads=threads)
    if name == "oracle":
        return suite_oracle(types=((type_name or "A2", height or 3),),
                            d_reading=d_reading, threads=threads)
    raise KeyError(name)


# ---------------------------------------------------------------------------
# transition emission

def _matrix_json(ct, family, from_word, to_word, ga):
    rows = pbw.transition_matrix(ct, family, from_word, to_word, ga)
    out_rows = []
    for n in sorted(rows):
        entries = [{"tgt": [int(v) for v in n2], "coeff": str(rows[n][n2])}
                   for n2 in sorted(rows[n])]
        out_rows.append({"src": [int(v) for v in n], "entries": entries})
    return {"type": ct.name, "family": family,
            "from": [i + 1 for i in from_word],
            "to": [i + 1 for i in to_word],
            "weight": list(ga), "rows": out_rows}


def cmd_transition(args):
    try:
        ct = CartanType(args.type)
    except (KeyError, ValueError):
        print("unknown type: %s" % args.type, file=sys.stderr)
        return 2
    try:
        from_word = parse_word(getattr(args, "from"))
        to_word = parse_word(args.to)
    except ValueError as exc:
        print("bad word: %s" % exc, file=sys.stderr)
        return 2
    for w in (from_word, to_word):
        if (not w or max(w) >= ct.rank
                or not ct.is_reduced(w)):
            print("word %s is not reduced for %s"
                  % (format_word(w), ct.name), file=sys.stderr)
            return 2
    if ct.perm_of_word(from_word) != ct.perm_of_word(to_word):
        print("words represent different Weyl group elements",
              file=sys.stderr)
        return 2
    family = args.family or "hat_e"
    try:
        pbw.normalize_family(family)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.weight:
        try:
            weights = [tuple(int(t) for t in args.weight.split(","))]
        except ValueError:
            print("bad weight: %s" % args.weight, file=sys.stderr)
            return 2
        if len(weights[0]) != ct.rank or min(weights[0]) < 0:
            print("weight must have %d nonnegative entries" % ct.rank,
                  file=sys.stderr)
            return 2
    else:
        weights = _weights_up_to(ct, args.height or 3)
    blocks = [_matrix_json(ct, family, from_word, to_word, ga)
              for ga in weights]
    if args.format == "json":
        print(json.dumps({"schema": 1, "blocks": blocks}, indent=2))
    else:
        for b in blocks:
            print("weight %s:" % b["weight"])
            for row in b["rows"]:
                terms = ", ".join("%s: %s" % (e["tgt"], e["coeff"])
                                  for e in row["entries"])
                print("  %s -> %s" % (row["src"], terms or "0"))
    return 0


def cmd_verify(args):
    if args.suite not in SUITES:
        print("unknown suite: %s (choose from %s)"
              % (args.suite, ", ".join(SUITES)), file=sys.stderr)
        return 2
    if args.type and args.type not in TYPE_NAMES:
        print("unknown type: %s" % args.type, file=sys.stderr)
        return 2
    if args.d_reading not in fock.D_READINGS:
        print("unknown d-reading: %s" % args.d_reading, file=sys.stderr)
        return 2
    report = run_suite(args.suite, type_name=args.type, height=args.height,
                       threads=args.threads, d_reading=args.d_reading)
    failures = [r for r in report if not r["pass"]]
    if args.format == "json":
        print(json.dumps({"schema": 1, "suite": args.suite,
                          "cases": len(report),
                          "failures": failures}, indent=2, default=str))
    else:
        for r in failures:
            print("FAIL %s %s" % (r["check"],
                                  {k: v for k, v in r.items()
                                   if k not in ("check", "pass")}))
        print("suite %s: %d cases, %d failures"
              % (args.suite, len(report), len(failures)))
    return 1 if failures else 0


def build_parser():
    p = argparse.ArgumentParser(prog="qpbw")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transition", help="emit transition matrices")
    t.add_argument("--type", required=True)
    t.add_argument("--from", required=True, dest="from")
    t.add_argument("--to", required=True)
    t.add_argument("--family", default="hat_e")
    t.add_argument("--height", type=int,
                   default=int(os.environ.get("QPBW_HEIGHT", 0)) or None)
    t.add_argument("--weight")
    t.add_argument("--format", choices=("text", "json"), default="json")
    t.add_argument("--threads", type=int,
                   default=int(os.environ.get("QPBW_THREADS", 1)))
    t.add_argument("--d-reading", choices=fock.D_READINGS, default="qi",
                   dest="d_reading")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite")
    v.add_argument("--type")
    v.add_argument("--word")
    v.add_argument("--family")
    v.add_argument("--weight")
    v.add_argument("--height", type=int,
                   default=int(os.environ.get("QPBW_HEIGHT", 0)) or None)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--threads", type=int,
                   default=int(os.environ.get("QPBW_THREADS", 1)))
    v.add_argument("--d-reading", choices=fock.D_READINGS, default="qi",
                   dest="d_reading")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "transition":
        return cmd_transition(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
