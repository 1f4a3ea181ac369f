"""
Chen-Milnor maps on serial presentations
========================================

``phi(q)`` sends every arc generator ``c_{i,j}`` to a word in the class
representatives ``c_{i,1}`` (and ``v``) that agrees with the true value in the
nilpotent quotient ``G / G_q``.  The recursion is

    Q1(c_{i,j})     = c_{i,1}
    Q(k+1)(c_{i,j+1}) = Qk(l_{i,j})^-1  c_{i,1}  Qk(l_{i,j})

with ``l_{i,j}`` the product of the first ``j`` conjugating words.

Two evaluation paths are provided.  :func:`phi_word` materialises the word
(its length grows exponentially in ``q``); :func:`phi_series` runs the same
recursion on truncated Magnus series and never builds the word.
"""

from __future__ import annotations

from .gauss import parse_gauss_code
from .magnus import TruncatedSeries, expand
from .presentation import (TRIVIAL, OmegaClass, extended_presentation,
                           longitude_pair)
from .words import OMEGA, Generator, Word


def _presentation(p):
    if isinstance(p, str):
        p = parse_gauss_code(p)
    if not hasattr(p, 'classes'):
        p = extended_presentation(p)
    return p


def alphabet_for(p):
    """Variable numbers: component ``i`` -> ``i + 1``, ``v`` -> last."""
    comps = p.components
    mapping = {c.class_id: c.class_id + 1 for c in comps}
    nvars = len(comps)
    if p.extended:
        nvars += 1
        mapping[OMEGA] = nvars
    return mapping, max(nvars, 1)


def _reps(p):
    return {c.class_id: Word.gen(c.generator(1)) for c in p.classes}


def phi_images(p, q):
    """Word images ``phi(q)(c_{i,j})`` for every generator of ``p``."""
    p = _presentation(p)
    reps = _reps(p)
    images = {g: reps[g.cls] for g in p.generators()}
    for _ in range(q - 1):
        new = {}
        for c in p.classes:
            rep = reps[c.class_id]
            new[c.generator(1)] = rep
            if c.kind == TRIVIAL:
                continue
            prefix = Word()
            for j in range(1, c.size):
                prefix = prefix * c.conjugators[j - 1].substitute(images)
                new[c.generator(j + 1)] = ~prefix * rep * prefix
        images = new
    return images


def phi_parallel_word(p, class_id, q):
    p = _presentation(p)
    if class_id == OMEGA:
        raise OmegaClass('the v class has no longitude')
    pair = longitude_pair(p, class_id)
    return pair.parallel.substitute(phi_images(p, q))


def phi_word(p, class_id=0, q=2):
    """``phi(q)`` of the longitude of ``class_id``, as a word in representatives."""
    p = _presentation(p)
    if q < 2:
        raise ValueError('q must be >= 2')
    pair = longitude_pair(p, class_id)
    return pair.longitude.substitute(phi_images(p, q))


class _SeriesState:
    """Series and inverse series attached to each generator."""

    def __init__(self, p, degree):
        self.p = p
        self.alphabet, self.nvars = alphabet_for(p)
        self.degree = degree
        self.rep = {}
        for c in p.classes:
            x = TruncatedSeries.variable(self.nvars, degree, self.alphabet[c.class_id])
            self.rep[c.class_id] = (x, x.inverse())
        self.values = {g: self.rep[g.cls] for g in p.generators()}

    def word(self, w):
        s = TruncatedSeries.one(self.nvars, self.degree)
        for g, e in w.letters:
            fwd, inv = self.values[g]
            s = s * (fwd if e > 0 else inv)
        return s

    def step(self):
        new = {}
        for c in self.p.classes:
            new[c.generator(1)] = self.rep[c.class_id]
            if c.kind == TRIVIAL:
                continue
            x, xi = self.rep[c.class_id]
            prefix = TruncatedSeries.one(self.nvars, self.degree)
            prefix_inv = prefix
            for j in range(1, c.size):
                w = c.conjugators[j - 1]
                ws = self.word(w)
                wsi = self.word(~w)
                prefix = prefix * ws
                prefix_inv = wsi * prefix_inv
                new[c.generator(j + 1)] = (prefix_inv * x * prefix,
                                           prefix_inv * xi * prefix)
        changed = any(not (new[g][0] == self.values[g][0]) for g in new)
        self.values = new
        return changed


def phi_series(p, class_id=0, q=2, check=True):
    """Magnus expansion of :func:`phi_word` at degree ``q - 1``."""
    p = _presentation(p)
    if q < 2:
        raise ValueError('q must be >= 2')
    if class_id == OMEGA:
        raise OmegaClass('the v class has no longitude')
    state = _SeriesState(p, q - 1)
    for _ in range(q - 1):
        state.step()
    if check and state.step():
        raise RuntimeError('series recursion did not stabilise')
    pair = longitude_pair(p, class_id)
    return state.word(pair.longitude)


def phi_series_all(p, q):
    """Longitude series for every non-omega class, sharing one fixpoint."""
    p = _presentation(p)
    state = _SeriesState(p, q - 1)
    for _ in range(q - 1):
        state.step()
    return {c.class_id: state.word(longitude_pair(p, c.class_id).longitude)
            for c in p.components}


def expand_in(p, u, degree):
    """Expand a word in representatives with the alphabet of ``p``."""
    alphabet, nvars = alphabet_for(_presentation(p))
    return expand(u, degree, alphabet, nvars)


__all__ = ['phi_word', 'phi_series', 'phi_series_all', 'phi_images',
           'phi_parallel_word', 'alphabet_for', 'expand_in', 'Generator']
