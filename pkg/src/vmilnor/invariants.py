"""
Milnor invariants of virtual links and the zh-bar invariants of virtual knots
============================================================================

Multi-indices are sequences of 1-based class numbers.  For an ``m``-component
link the auxiliary generator is class ``m + 1``; for a knot this means
``1 <-> a`` and ``2 <-> v``.  ``mu(J | k)`` is the Magnus coefficient
``eps_J`` of the longitude of component ``k`` after the Chen-Milnor map of
order ``|J| + 1``.

Shuffle relations, spanning sets and the reporting sets used for the
first non-vanishing order also live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .chenmilnor import phi_series_all
from .gauss import parse_gauss_code
from .magnus import as_monomial
from .presentation import extended_presentation, group_presentation


class SameComponent(ValueError):
    pass


class OrderOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class InvariantValue:
    raw: int
    modulus: int = 0

    @property
    def residue(self):
        return self.raw % self.modulus if self.modulus else self.raw

    def __str__(self):
        if self.modulus:
            return '%d (mod %d)' % (self.residue, self.modulus)
        return str(self.raw)

    def as_dict(self):
        return {'raw': self.raw, 'modulus': self.modulus, 'residue': self.residue}


@dataclass(frozen=True)
class AllVanish:
    max_order: int


@dataclass
class FirstNonvanishing:
    order: int
    values: dict = field(default_factory=dict)      # J string -> InvariantValue

    @property
    def obstructed(self):
        return any(v.residue for v in self.values.values())


# Reporting sets for the first non-vanishing order.  Each is checked by
# ``is_spanning`` in the test suite.
REPORTING_SETS = {
    2: ('21',),
    3: ('211', '221'),
    4: ('2111', '2211', '2221'),
    5: ('21111', '21211', '22111', '22121', '22211', '22221'),
    6: ('211111', '212111', '212211', '221111', '221211', '222111',
        '222121', '222211', '222221'),
    7: ('2111111', '2112111', '2121111', '2121211', '2122111', '2122211',
        '2211111', '2211211', '2212111', '2212121', '2212211', '2221111',
        '2221211', '2221221', '2222111', '2222121', '2222211', '2222221'),
    8: ('21111111', '21121111', '21122111', '21211111', '21211211',
        '21212111', '21212211', '21221111', '21221211', '21222111',
        '21222211', '22111111', '22112111', '22121111', '22121211',
        '22122111', '22122121', '22122211', '22211111', '22211211',
        '22212111', '22212121', '22212211', '22221111', '22221211',
        '22221221', '22222111', '22222121', '22222211', '22222221'),
}


def _diagram(d):
    return parse_gauss_code(d) if isinstance(d, str) else d


def vlk(d, i, j):
    """Signed count of crossings with over-passage on ``i`` and under on ``j``.

    Components are 0-based.
    """
    if i == j:
        raise SameComponent('vlk needs two different components')
    d = _diagram(d)
    return sum(sign for sign, (oc, _), (uc, _) in d.crossings().values()
               if oc == i and uc == j)


class LongitudeSeries:
    """Longitude expansions of every component at a fixed order, with caching.

    Coefficients of degree below ``q`` are stable in ``q``, so one series of
    degree ``D`` answers every ``mu`` with ``|J| <= D``.
    """

    def __init__(self, series, nclasses):
        self.series = series            # 1-based target -> TruncatedSeries
        self.nclasses = nclasses

    @classmethod
    def from_diagram(cls, d, degree, extended=True):
        d = _diagram(d)
        p = extended_presentation(d) if extended else group_presentation(d)
        raw = phi_series_all(p, degree + 1)
        series = {k + 1: s for k, s in raw.items()}
        return cls(series, len(d) + (1 if extended else 0))

    @classmethod
    def from_knot_series(cls, s):
        """Wrap a knot longitude series (``a`` = 1, ``v`` = 2)."""
        return cls({1: s}, 2)

    @property
    def degree(self):
        return min(s.degree for s in self.series.values())

    def mu(self, J, k):
        J = as_monomial(J)
        if k not in self.series:
            if 1 <= k <= self.nclasses:
                return 0        # the auxiliary class has trivial longitude
            raise ValueError('target %d outside 1..%d' % (k, self.nclasses))
        if any(not 1 <= j <= self.nclasses for j in J):
            raise ValueError('index outside 1..%d in %r' % (self.nclasses, J))
        return self.series[k].coefficient(J)

    def delta(self, J, k):
        J = as_monomial(J)
        full = J + (k,)
        g = 0
        seen = set()
        for r in range(2, len(full)):
            for keep in combinations(range(len(full)), r):
                sub = tuple(full[t] for t in keep)
                for s in range(r):
                    cyc = sub[s:] + sub[:s]
                    if cyc in seen:
                        continue
                    seen.add(cyc)
                    g = math.gcd(g, self.mu(cyc[:-1], cyc[-1]))
                    if g == 1:
                        return 1
        return g

    def value(self, J, k):
        return InvariantValue(self.mu(J, k), self.delta(J, k))


def _target_series(d, degree, extended):
    return LongitudeSeries.from_diagram(d, degree, extended)


def mu(d, J, k, extended=True):
    """``mu_{J|k}``; computed at order ``|J| + 1``."""
    J = as_monomial(J)
    return _target_series(d, max(len(J), 1), extended).mu(J, k)


def delta(d, J, k, extended=True):
    J = as_monomial(J)
    return _target_series(d, max(len(J), 1), extended).delta(J, k)


def mu_bar(d, J, k, extended=True):
    J = as_monomial(J)
    return _target_series(d, max(len(J), 1), extended).value(J, k)


def _require_knot(d):
    d = _diagram(d)
    if not d.is_knot():
        raise ValueError('zh-bar invariants need a closed one-component diagram')
    return d


def zh_bar(d, J):
    """zh-bar invariant ``eps_J`` of the extended longitude of a knot."""
    J = as_monomial(J)
    d = _require_knot(d)
    return mu_bar(d, J, 1, True)


def zh_bar_many(d, Js):
    """Several zh-bar invariants sharing one longitude computation."""
    Js = [as_monomial(J) for J in Js]
    ls = LongitudeSeries.from_diagram(_require_knot(d), max(map(len, Js)), True)
    return [ls.value(J, 1) for J in Js]


def zh_bar_from_series(s, J):
    """zh-bar invariant from an already computed knot longitude series."""
    return LongitudeSeries.from_knot_series(s).value(as_monomial(J), 1)


def first_nonvanishing_from_series(s, max_order):
    for n in range(2, min(max_order, s.degree) + 1):
        if s.blocks[n].any():
            ls = LongitudeSeries.from_knot_series(s)
            names = reporting_set(n)
            return FirstNonvanishing(n, {J: ls.value(J, 1) for J in names})
    return AllVanish(max_order)


def first_nonvanishing(d, max_order=5):
    """Least order with a non-zero zh-bar invariant, with reporting-set values."""
    if max_order < 2:
        raise OrderOutOfRange('max_order must be >= 2')
    d = _require_knot(d)
    # climb one order at a time: cheap orders settle most knots
    for n in range(2, max_order + 1):
        ls = LongitudeSeries.from_diagram(d, n, True)
        s = ls.series[1]
        if s.blocks[n].any():
            return FirstNonvanishing(
                n, {J: ls.value(J, 1) for J in reporting_set(n)})
    return AllVanish(max_order)


def reporting_set(n):
    if n in REPORTING_SETS:
        return REPORTING_SETS[n]
    return spanning_set(n).sequences


# -- shuffles and spanning sets ---------------------------------------------

def proper_shuffles(J1, J2):
    """All interleavings of ``J1`` and ``J2``, one per embedding of ``J1``."""
    J1, J2 = as_monomial(J1), as_monomial(J2)
    if not J1 or not J2:
        raise ValueError('proper shuffles need two non-empty sequences')
    n = len(J1) + len(J2)
    out = []
    for pos in combinations(range(n), len(J1)):
        seq = [0] * n
        it1, it2 = iter(J1), iter(J2)
        pset = set(pos)
        for t in range(n):
            seq[t] = next(it1) if t in pset else next(it2)
        out.append(tuple(seq))
    return out


def _all_sequences(n, k=2):
    return [tuple(s) for s in product(range(1, k + 1), repeat=n)]


def _index(J, k=2):
    i = 0
    for j in J:
        i = i * k + (j - 1)
    return i


def shuffle_relations(n, k=2):
    """Integer rows ``sum_{J in PS(J1, J2)} x_J = 0`` plus the constant words."""
    N = k ** n
    rows = set()
    for r in range(1, n):
        for J1 in _all_sequences(r, k):
            for J2 in _all_sequences(n - r, k):
                row = [0] * N
                for J in proper_shuffles(J1, J2):
                    row[_index(J, k)] += 1
                rows.add(tuple(row))
    for c in range(1, k + 1):
        row = [0] * N
        row[_index((c,) * n, k)] = 1
        rows.add(tuple(row))
    return sorted(rows)


@lru_cache(maxsize=None)
def _kernel(n):
    """Rational basis (N x E) of the solutions of all shuffle relations."""
    rows = shuffle_relations(n)
    M = DomainMatrix([[QQ(x) for x in r] for r in rows], (len(rows), 2 ** n), QQ)
    ns = M.nullspace()           # E x N, rows span the kernel
    return ns.transpose()


@dataclass(frozen=True)
class SpanningSet:
    order: int
    sequences: tuple
    rank: int


def rank_en(n):
    """``E_n``: free rank of the order-``n`` zh-bar invariants mod shuffles."""
    if not 2 <= n <= 8:
        raise OrderOutOfRange('order %d outside 2..8' % n)
    return _kernel(n).shape[1]


def _coords(S):
    return [_index(as_monomial(J)) for J in S]


def is_spanning(S, n=None):
    """Whether every order-``n`` invariant is a Z-combination of those in ``S``."""
    S = tuple(''.join(map(str, as_monomial(J))) for J in S)
    n = n or len(S[0])
    if any(len(J) != n for J in S):
        raise ValueError('mixed orders in spanning set')
    B = _kernel(n)
    E = B.shape[1]
    if len(S) != E:
        return False
    rows = _coords(S)
    BS = B.extract(rows, list(range(E)))
    if BS.rank() != E:
        return False
    C = B * BS.inv()
    return all(x.denominator == 1 for row in C.to_Matrix().tolist()
               for x in (QQ.convert(v) for v in row))


def spanning_set(n, lex_least=False):
    """A spanning set of order ``n``, verified over Z.

    By default this is the reporting set when it checks out; with
    ``lex_least`` (or if it does not) the lexicographically least one is
    computed from the shuffle lattice.
    """
    if not 2 <= n <= 8:
        raise OrderOutOfRange('order %d outside 2..8' % n)
    B = _kernel(n)
    E = B.shape[1]
    if not lex_least and n in REPORTING_SETS and is_spanning(REPORTING_SETS[n], n):
        return SpanningSet(n, REPORTING_SETS[n], E)
    chosen = []
    for J in _all_sequences(n):
        trial = chosen + [_index(J)]
        if B.extract(trial, list(range(E))).rank() == len(trial):
            chosen.append(_index(J))
            if len(chosen) == E:
                break
    seqs = tuple(''.join(str(j + 1) for j in _digits(i, n)) for i in chosen)
    if not is_spanning(seqs, n):
        seqs = _repair(seqs, n)
    return SpanningSet(n, seqs, E)


def _digits(i, n):
    out = []
    for _ in range(n):
        i, r = divmod(i, 2)
        out.append(r)
    return reversed(out)


def _repair(seqs, n):
    """Swap members for later sequences until the set spans over Z."""
    pool = [''.join(map(str, J)) for J in _all_sequences(n)]
    seqs = list(seqs)
    for pos in range(len(seqs) - 1, -1, -1):
        for cand in pool:
            if cand in seqs:
                continue
            trial = seqs[:pos] + [cand] + seqs[pos + 1:]
            if is_spanning(trial, n):
                return tuple(sorted(trial))
    raise ArithmeticError('no spanning set found by single swaps at order %d' % n)
