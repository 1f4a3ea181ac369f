"""
Truncated noncommutative power series and the Magnus expansion
==============================================================

A series in ``k`` noncommuting variables truncated above degree ``D`` is
stored dense-by-degree: block ``d`` is a numpy object array of length
``k**d`` holding arbitrary-precision integers.  The monomial
``X_{j1} X_{j2} ... X_{jr}`` sits at the big-endian index
``sum((j_t - 1) * k**(r - t))``, so concatenating monomials corresponds to
``np.outer(left, right).ravel()``.

Monomials are written as sequences of 1-based variable numbers, e.g. ``(2, 1)``
or ``'21'`` for ``X_2 X_1``.
"""

from __future__ import annotations

import numpy as np

from .words import OMEGA


class DegreeExceeded(ValueError):
    pass


class NonUnit(ValueError):
    pass


def _zeros(n):
    out = np.empty(n, dtype=object)
    out.fill(0)
    return out


def as_monomial(J):
    if isinstance(J, str):
        return tuple(int(c) for c in J)
    return tuple(int(j) for j in J)


class TruncatedSeries:
    """Element of Z<<X_1..X_k>> modulo monomials of degree > ``degree``."""

    __slots__ = ('nvars', 'degree', 'blocks')

    def __init__(self, nvars, degree, blocks=None):
        self.nvars = nvars
        self.degree = degree
        if blocks is None:
            blocks = [_zeros(nvars ** d) for d in range(degree + 1)]
        self.blocks = blocks

    @classmethod
    def one(cls, nvars, degree):
        s = cls(nvars, degree)
        s.blocks[0][0] = 1
        return s

    @classmethod
    def variable(cls, nvars, degree, i, coeff=1):
        """``1 + coeff * X_i`` (``i`` is 1-based)."""
        s = cls.one(nvars, degree)
        if degree >= 1:
            s.blocks[1][i - 1] = coeff
        return s

    def copy(self):
        return TruncatedSeries(self.nvars, self.degree,
                               [b.copy() for b in self.blocks])

    def _check(self, other):
        if self.nvars != other.nvars or self.degree != other.degree:
            raise ValueError('series shapes differ: (%d, %d) vs (%d, %d)'
                             % (self.nvars, self.degree,
                                other.nvars, other.degree))

    @property
    def constant(self):
        return self.blocks[0][0]

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.nvars, self.degree,
                                   [b * other for b in self.blocks])
        self._check(other)
        D = self.degree
        out = [_zeros(self.nvars ** d) for d in range(D + 1)]
        for i, a in enumerate(self.blocks):
            if not a.any():
                continue
            for j in range(D - i + 1):
                b = other.blocks[j]
                if b.any():
                    out[i + j] += np.outer(a, b).ravel()
        return TruncatedSeries(self.nvars, D, out)

    __rmul__ = __mul__

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(self.nvars, self.degree,
                               [a + b for a, b in zip(self.blocks, other.blocks)])

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(self.nvars, self.degree,
                               [a - b for a, b in zip(self.blocks, other.blocks)])

    def __neg__(self):
        return TruncatedSeries(self.nvars, self.degree, [-b for b in self.blocks])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.nvars == other.nvars and self.degree == other.degree
                and all((a == b).all() for a, b in zip(self.blocks, other.blocks)))

    __hash__ = None

    def inverse(self):
        """Multiplicative inverse; requires constant term +-1."""
        c = self.constant
        if c not in (1, -1):
            raise NonUnit('constant term %r is not a unit' % (c,))
        # s = c(1 + N)  =>  s^-1 = c * sum_k (-N)^k
        N = self * c
        N.blocks[0][0] = 0
        term = TruncatedSeries.one(self.nvars, self.degree)
        total = term.copy()
        for _ in range(self.degree):
            term = term * (-N)
            total = total + term
        return total * c

    def truncate(self, degree):
        return TruncatedSeries(self.nvars, degree,
                               [b.copy() for b in self.blocks[:degree + 1]])

    def mul_variable(self, i, exponent=1):
        """Right-multiply by ``(1 + X_i) ** exponent`` with exponent +-1."""
        k, D = self.nvars, self.degree
        out = [b.copy() for b in self.blocks]
        if exponent > 0:
            for d in range(D, 0, -1):
                out[d].reshape(-1, k)[:, i - 1] += self.blocks[d - 1]
        else:
            # t (1 + X) = s  =>  t_d = s_d - t_{d-1} X
            for d in range(1, D + 1):
                out[d].reshape(-1, k)[:, i - 1] -= out[d - 1]
        return TruncatedSeries(k, D, out)

    def coefficient(self, J):
        J = as_monomial(J)
        if len(J) > self.degree:
            raise DegreeExceeded('|J| = %d exceeds degree bound %d'
                                 % (len(J), self.degree))
        idx = 0
        for j in J:
            if not 1 <= j <= self.nvars:
                raise ValueError('variable %d outside 1..%d' % (j, self.nvars))
            idx = idx * self.nvars + (j - 1)
        return int(self.blocks[len(J)][idx])

    def __getitem__(self, J):
        return self.coefficient(J)

    def items(self, min_degree=0):
        """Nonzero ``(J, value)`` pairs sorted by (|J|, lexicographic J)."""
        k = self.nvars
        for d in range(min_degree, self.degree + 1):
            block = self.blocks[d]
            for idx in np.flatnonzero(block != 0):
                J = []
                x = int(idx)
                for _ in range(d):
                    x, r = divmod(x, k)
                    J.append(r + 1)
                yield tuple(reversed(J)), int(block[idx])

    def homogeneous(self, d):
        return self.blocks[d]

    def lowest_nonzero(self, min_degree=1):
        """First ``(J, value)`` of degree >= ``min_degree`` or None."""
        for item in self.items(min_degree):
            return item
        return None

    def is_one(self, upto=None):
        upto = self.degree if upto is None else upto
        return self.constant == 1 and not any(
            self.blocks[d].any() for d in range(1, upto + 1))

    def __repr__(self):
        terms = ['%d' % self.constant] if self.constant else []
        for J, c in self.items(1):
            mono = ''.join(str(j) for j in J)
            terms.append('%+d*[%s]' % (c, mono))
        return 'TruncatedSeries(%s; D=%d)' % (' '.join(terms) or '0', self.degree)


def default_alphabet(words):
    """Variable numbering for a collection of words: components then ``v``."""
    classes = set()
    for w in words:
        classes.update(g.cls for g in w.generators())
    comps = sorted(c for c in classes if c != OMEGA)
    m = max(comps) + 1 if comps else 1
    mapping = {c: c + 1 for c in range(m)}
    mapping[OMEGA] = m + 1
    return mapping, m + (1 if OMEGA in classes else 0)


def expand(u, degree, alphabet=None, nvars=None):
    """Magnus expansion of a word, truncated above ``degree``.

    Every generator is sent to ``1 + X_j`` where ``j = alphabet[g.cls]``: all
    arcs of a class collapse onto the class variable.  By default components
    ``0, 1, ...`` become variables ``1, 2, ...`` and ``v`` comes last.
    """
    if alphabet is None:
        alphabet, guess = default_alphabet([u])
        nvars = nvars or guess
    if nvars is None:
        nvars = max(alphabet.values())
    s = TruncatedSeries.one(nvars, degree)
    for g, e in u.letters:
        s = s.mul_variable(alphabet[g.cls], e)
    return s


def coefficient(s, J):
    return s.coefficient(J)


def multiply(s, t):
    return s * t


def invert(s):
    return s.inverse()


def in_lcs(u, q, alphabet=None, nvars=None):
    """Whether the word ``u`` lies in the ``q``-th lower central subgroup F_q.

    Uses the criterion that ``u`` is in F_q iff every Magnus coefficient of
    degree 1..q-1 vanishes.
    """
    if q < 1:
        raise ValueError('q must be >= 1')
    if q == 1 or not u:
        return True
    return expand(u, q - 1, alphabet, nvars).is_one()
