"""
Extended Artin representation and the concordance tests built on it
===================================================================

For a long virtual knot the extended Artin action of order ``q`` is
``a -> lam a lam^-1, v -> v`` with ``lam`` the Chen-Milnor image of the
extended longitude.  Two concordant long knots have longitudes that agree
modulo ``F_q``; a closed knot ``cl(K1 # K2)`` can only be slice if the
longitudes of ``K1`` and ``K2`` multiply into ``F_q``.

All membership tests go through Magnus coefficients at degree ``q - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chenmilnor import phi_series, phi_word
from .gauss import (NotLongError, BadCutError, factor_at, parse_gauss_code)
from .hall import collect_series
from .magnus import expand
from .presentation import extended_presentation
from .words import A, OMEGA, V, Word

KNOT_ALPHABET = {0: 1, OMEGA: 2}


def _long(d):
    d = parse_gauss_code(d) if isinstance(d, str) else d
    if not d.is_long_knot():
        raise NotLongError('expected a long knot, got %s' % d)
    return d


@dataclass
class ArtinAction:
    q: int
    longitude: Word

    def image(self, g):
        """Image of the generator ``a`` or ``v`` as a word."""
        if g == V or g == OMEGA:
            return Word.gen(V)
        return self.longitude * Word.gen(A) * ~self.longitude

    def series(self):
        return expand(self.longitude, self.q - 1, KNOT_ALPHABET, 2)

    def is_identity(self):
        return self.series().is_one()


def extended_artin(d, q, word=None):
    """The order-``q`` extended Artin action of a long knot.

    The longitude word is materialised, so keep ``q`` modest; the
    comparison functions below use series only.
    """
    d = _long(d)
    return ArtinAction(q, phi_word(extended_presentation(d), 0, q))


def longitude_series(d, q):
    d = _long(d)
    return phi_series(extended_presentation(d), 0, q)


@dataclass(frozen=True)
class Obstruction:
    q: int
    witness: tuple          # monomial J
    coefficient: int
    series: object = None

    def normal_form(self):
        """Commutator normal form of the obstruction (two-letter bases only)."""
        return collect_series(self.series, self.q)


@dataclass(frozen=True)
class Indistinguishable:
    max_q: int


@dataclass(frozen=True)
class Inconclusive:
    max_q: int


def _first_failure(product_at, max_q):
    for q in range(2, max_q + 1):
        s = product_at(q)
        hit = s.lowest_nonzero(1)
        if hit is not None:
            return Obstruction(q, hit[0], hit[1], s)
    return None


def concordance_obstruction(dA, dB, max_q=6):
    """Least ``q`` with ``lam_A^-1 lam_B`` outside ``F_q``, else Indistinguishable."""
    if max_q < 2:
        raise ValueError('max_q must be >= 2')
    dA, dB = _long(dA), _long(dB)
    found = _first_failure(
        lambda q: longitude_series(dA, q).inverse() * longitude_series(dB, q),
        max_q)
    return found or Indistinguishable(max_q)


def slice_factor_test(d, cut, max_q=6):
    """Test ``cl(K1 # K2)`` for sliceness through ``lam_1 lam_2`` in ``F_q``.

    ``cut`` is the passage position splitting the closed code into the two
    long factors; chords straddling it raise :class:`BadCutError`.
    """
    d = parse_gauss_code(d) if isinstance(d, str) else d
    if not d.is_knot():
        raise BadCutError('slice_factor_test needs a closed one-component diagram')
    k1, k2 = factor_at(d, cut)
    found = _first_failure(
        lambda q: longitude_series(k1, q) * longitude_series(k2, q), max_q)
    return found or Inconclusive(max_q)
