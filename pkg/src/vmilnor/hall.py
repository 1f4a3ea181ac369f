"""
Basic commutators on ``{a, v}`` and collection modulo ``F_q``
============================================================

The basis is a list of left-normed commutators ``[v, a, x3, ..., xw]``.  For
weights up to 5 it is the list used in the worked examples (``g1 = a``,
``g2 = v``, ``g3 = [v, a]`` ... ``g14 = [v, a, v, v, v]``); each later weight
consists of the one-letter extensions of a chosen subset of the previous
weight, ordered lexicographically with ``a < v``.  Each weight is checked to
give a Z-basis of the corresponding free Lie algebra component.

Collection does not shuffle letters.  It solves, weight by weight, for the
exponents that reproduce the degree-``w`` Magnus coefficients of what is left
and then peels the solved factors off on the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import sympy
from sympy.matrices.normalforms import smith_normal_form

from .magnus import expand
from .words import A, OMEGA, V, Word, left_normed

ALPHABET = {0: 1, OMEGA: 2}

# weight-6 suffixes that are extended to build weight 6 and 7 (after "v a")
_W6 = ('aaaa', 'aava', 'vaaa', 'vaav', 'vava', 'vvaa', 'vvav', 'vvva', 'vvvv')


class UnsupportedRank(ValueError):
    pass


@dataclass(frozen=True)
class BasicCommutator:
    index: int
    letters: str            # e.g. 'vaav' for [v, a, a, v]

    @property
    def weight(self):
        return len(self.letters)

    def word(self):
        gens = [Word.gen(A if c == 'a' else V) for c in self.letters]
        return left_normed(gens)

    def __str__(self):
        if self.weight == 1:
            return self.letters
        return '[%s]' % ', '.join(self.letters)


def _witt(n, k=2):
    return sum(sympy.mobius(d) * k ** (n // d) for d in sympy.divisors(n)) // n


def _lie_leading(letters):
    """Degree-|letters| part of the Magnus expansion, as a dense vector."""
    w = len(letters)
    idx = {'a': 0, 'v': 1}
    poly = {(idx[letters[0]],): 1}
    for c in letters[1:]:
        y = idx[c]
        new = {}
        for m, coef in poly.items():
            new[m + (y,)] = new.get(m + (y,), 0) + coef
            new[(y,) + m] = new.get((y,) + m, 0) - coef
        poly = new
    vec = [0] * (2 ** w)
    for m, coef in poly.items():
        i = 0
        for j in m:
            i = 2 * i + j
        vec[i] += coef
    return vec


def _saturated(vecs):
    M = sympy.Matrix(vecs).T
    if M.rank() != len(vecs):
        return False
    snf = smith_normal_form(M, domain=sympy.ZZ)
    return all(abs(snf[i, i]) == 1 for i in range(len(vecs)))


def _is_z_basis(suffix_words, w):
    """Leading parts of the given weight-``w`` commutators form a Z-basis."""
    if len(suffix_words) != _witt(w):
        return False
    # Smith invariants all 1 <=> the lattice is saturated in Z^(2^w)
    return _saturated([_lie_leading(s) for s in suffix_words])


@lru_cache(maxsize=None)
def _weight_letters(w):
    if w == 1:
        return ('a', 'v')
    if w == 2:
        return ('va',)
    if w <= 5:
        return tuple(s + x for s in _weight_letters(w - 1) for x in 'av'
                     if w != 4 or s + x != 'vaav')
    if w == 6:
        return tuple('va' + s for s in _W6)
    if w == 7:
        return tuple(s + x for s in _weight_letters(6) for x in 'av')
    # greedy over all [v, a, ...] words in lexicographic order, keeping the
    # span saturated so the final set is a Z-basis
    chosen = []
    vecs = []
    target = _witt(w)
    for tail in product('av', repeat=w - 2):
        cand = 'va' + ''.join(tail)
        vec = _lie_leading(cand)
        if _saturated(vecs + [vec]):
            chosen.append(cand)
            vecs.append(vec)
            if len(chosen) == target:
                break
    return tuple(chosen)


def basic_commutators(rank=2, max_weight=5):
    """The ordered basis ``g1, g2, ...`` up to ``max_weight``."""
    if rank != 2:
        raise UnsupportedRank('only the two-letter alphabet {a, v} is supported')
    out = []
    for w in range(1, max_weight + 1):
        for letters in _weight_letters(w):
            out.append(BasicCommutator(len(out) + 1, letters))
    return out


def verify_basis(max_weight=7):
    """Check every weight up to ``max_weight`` is a Z-basis of the Lie component."""
    return {w: _is_z_basis(_weight_letters(w), w) for w in range(2, max_weight + 1)}


@dataclass
class NormalForm:
    q: int
    exponents: dict          # basis index -> nonzero exponent
    basis: list

    def word(self):
        out = Word()
        for g in self.basis:
            e = self.exponents.get(g.index, 0)
            if e:
                out = out * g.word() ** e
        return out

    def format(self):
        parts = ['g%d^%d' % (i, e) for i, e in sorted(self.exponents.items())]
        return ' '.join(parts) if parts else '1'

    def __str__(self):
        return self.format()


class CollectionError(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def _solver(w):
    """Matrix of leading parts for weight ``w`` plus a pivot-row inverse."""
    letters = _weight_letters(w)
    M = sympy.Matrix([_lie_leading(s) for s in letters]).T
    _, pivots = M.T.rref()
    rows = list(pivots)
    sub = M.extract(rows, list(range(M.cols)))
    return M, rows, sub.inv()


def _solve_weight(block, w):
    M, rows, inv = _solver(w)
    rhs = sympy.Matrix([int(block[r]) for r in rows])
    sol = inv * rhs
    if any(not x.is_integer for x in sol):
        raise CollectionError('non-integral exponents at weight %d' % w)
    sol = [int(x) for x in sol]
    full = M * sympy.Matrix(sol)
    if any(int(full[i]) != int(block[i]) for i in range(M.rows)):
        raise CollectionError('degree-%d part is not a Lie element' % w)
    return sol


def collect_series(s, q):
    """Normal form from a two-variable series (``a`` = 1, ``v`` = 2)."""
    if s.nvars != 2 or s.degree < q - 1:
        raise ValueError('need a two-variable series of degree >= q - 1')
    D = q - 1
    basis = basic_commutators(2, max(D, 1))
    R = s.truncate(D)
    exps = {}
    for w in range(1, D + 1):
        sol = _solve_weight(R.blocks[w], w)
        gs = [g for g in basis if g.weight == w]
        for g, e in zip(gs, sol):
            if e:
                exps[g.index] = e
                inv = expand(g.word() ** (-e), D, ALPHABET, 2)
                R = inv * R
        if any(R.blocks[w]):
            raise CollectionError('weight %d did not clear' % w)
    return NormalForm(q, exps, basis)


def collect(u, q):
    """Write ``u`` (over ``a``, ``v``) as ``g1^e1 ... gt^et`` modulo ``F_q``."""
    if q < 2:
        raise ValueError('q must be >= 2')
    return collect_series(expand(u, q - 1, ALPHABET, 2), q)


def normal_form_series(nf, degree=None):
    degree = nf.q - 1 if degree is None else degree
    return expand(nf.word(), degree, ALPHABET, 2)


def parse_normal_form(text, q):
    """Parse ``'g4^4 g5^-2'`` (also ``g6`` for exponent 1)."""
    exps = {}
    for tok in text.split():
        base, _, e = tok.partition('^')
        exps[int(base[1:])] = exps.get(int(base[1:]), 0) + (int(e) if e else 1)
    basis = basic_commutators(2, max(q - 1, 1))
    if exps and max(exps) > len(basis):
        raise ValueError('g%d is beyond weight %d' % (max(exps), q - 1))
    return NormalForm(q, {k: v for k, v in exps.items() if v}, basis)


__all__ = ['BasicCommutator', 'NormalForm', 'basic_commutators', 'collect',
           'collect_series', 'verify_basis', 'normal_form_series',
           'parse_normal_form', 'CollectionError', 'UnsupportedRank']
