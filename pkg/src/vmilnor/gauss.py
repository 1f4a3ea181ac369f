"""
Gauss codes and Gauss diagrams
==============================

A Gauss diagram is stored as an ordered tuple of components.  Each
component is a sequence of passages (an over- or under-passage through a
signed classical crossing) together with a flag saying whether the
component is closed (cyclic) or long (linear, basepoint at the left end).

Text format::

    O1-O2-O3-U1-U2-U3-          closed knot 3.5
    L:O1-O2-U1-U2-              long knot 2.1
    O1+,U1+O2-U2-               two-component link
    ""                          the unknot (one closed, crossing-free component)

Crossing ids are renumbered to first-appearance order on construction, so two
diagrams compare equal exactly when their codes print identically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from pathlib import Path


class GaussCodeError(ValueError):
    """Base class for malformed or inconsistent Gauss codes."""


class GaussSyntaxError(GaussCodeError):
    pass


class UnbalancedCrossing(GaussCodeError):
    pass


class SignMismatch(GaussCodeError):
    pass


class LongComponentError(GaussCodeError):
    pass


class NotLongError(GaussCodeError):
    pass


class BadCutError(GaussCodeError):
    pass


@dataclass(frozen=True)
class Passage:
    crossing: int
    over: bool
    sign: int

    def __str__(self):
        return '%s%d%s' % ('O' if self.over else 'U', self.crossing,
                           '+' if self.sign > 0 else '-')

    def relabel(self, crossing):
        return Passage(crossing, self.over, self.sign)


@dataclass(frozen=True)
class Component:
    passages: tuple = ()
    closed: bool = True

    def __len__(self):
        return len(self.passages)

    def __str__(self):
        body = ''.join(str(p) for p in self.passages)
        return body if self.closed else 'L:' + body


_TOKEN = re.compile(r'([OU])(\d+)([+-])')


def _canonical(components):
    """Validate and renumber crossings to first-appearance order."""
    seen = {}
    for c in components:
        for p in c.passages:
            seen.setdefault(p.crossing, []).append(p)
    for label, ps in seen.items():
        if len(ps) != 2 or ps[0].over == ps[1].over:
            raise UnbalancedCrossing(
                'crossing %s must appear exactly once as O and once as U'
                % label)
        if ps[0].sign != ps[1].sign:
            raise SignMismatch('crossing %s has inconsistent signs' % label)
    order = {}
    for c in components:
        for p in c.passages:
            if p.crossing not in order:
                order[p.crossing] = len(order) + 1
    return tuple(
        Component(tuple(p.relabel(order[p.crossing]) for p in c.passages),
                  c.closed)
        for c in components)


class GaussDiagram:
    """Immutable Gauss diagram of a virtual link, long knot or string link.

    Parameters
    ----------
    components : iterable of Component
        Components in their (significant) order.
    """

    __slots__ = ('components', '_hash')

    def __init__(self, components=()):
        object.__setattr__(self, 'components', _canonical(tuple(components)))
        object.__setattr__(self, '_hash', hash(self.components))

    def __setattr__(self, name, value):
        raise AttributeError('GaussDiagram is immutable')

    @classmethod
    def from_code(cls, text):
        return parse_gauss_code(text)

    def __eq__(self, other):
        return (isinstance(other, GaussDiagram)
                and self.components == other.components)

    def __hash__(self):
        return self._hash

    def __str__(self):
        return ','.join(str(c) for c in self.components)

    def __repr__(self):
        return 'GaussDiagram(%r)' % str(self)

    def __len__(self):
        return len(self.components)

    @property
    def crossing_count(self):
        return sum(len(c) for c in self.components) // 2

    def crossings(self):
        """Map crossing id -> (sign, (comp, pos) of over, (comp, pos) of under)."""
        over, under, sign = {}, {}, {}
        for ci, c in enumerate(self.components):
            for pi, p in enumerate(c.passages):
                (over if p.over else under)[p.crossing] = (ci, pi)
                sign[p.crossing] = p.sign
        return {x: (sign[x], over[x], under[x]) for x in sign}

    def is_knot(self):
        return len(self.components) == 1 and self.components[0].closed

    def is_long_knot(self):
        return len(self.components) == 1 and not self.components[0].closed


def parse_gauss_code(text):
    """Parse a Gauss code string into a validated :class:`GaussDiagram`.

    >>> str(parse_gauss_code('O3-O7-U3-U7-'))
    'O1-O2-U1-U2-'
    """
    components = []
    for chunk in text.split(','):
        chunk = ''.join(chunk.split())
        closed = True
        if chunk.startswith('L:'):
            closed, chunk = False, chunk[2:]
        passages = []
        pos = 0
        for m in _TOKEN.finditer(chunk):
            if m.start() != pos:
                raise GaussSyntaxError('malformed token at %r' % chunk[pos:])
            passages.append(Passage(int(m.group(2)), m.group(1) == 'O',
                                    1 if m.group(3) == '+' else -1))
            pos = m.end()
        if pos != len(chunk):
            raise GaussSyntaxError('malformed token at %r' % chunk[pos:])
        components.append(Component(tuple(passages), closed))
    return GaussDiagram(components)


def serialize(d):
    return str(d)


def _replace(d, index, component):
    comps = list(d.components)
    comps[index] = component
    return GaussDiagram(comps)


def shift_basepoint(d, component, k):
    """Move the basepoint of a closed component forward by ``k`` endpoints.

    The passage that was at position ``k`` becomes the first one.
    """
    c = d.components[component]
    if not c.closed:
        raise LongComponentError('cannot shift the basepoint of a long component')
    if not c.passages:
        return d
    k %= len(c.passages)
    return _replace(d, component, Component(c.passages[k:] + c.passages[:k]))


def writhe(d, component=0):
    """Sum of signs of the crossings lying entirely on ``component``."""
    total = 0
    for sign, (oc, _), (uc, _) in d.crossings().values():
        if oc == uc == component:
            total += sign
    return total


def _require_long(d):
    if not d.is_long_knot():
        raise NotLongError('expected a one-component long diagram, got %s' % d)


def concatenate(a, b):
    """Concatenation a # b of two long knots (b placed to the right of a)."""
    _require_long(a)
    _require_long(b)
    offset = a.crossing_count
    shifted = tuple(p.relabel(p.crossing + offset)
                    for p in b.components[0].passages)
    return GaussDiagram([Component(a.components[0].passages + shifted, False)])


def closure(a):
    """Identify the endpoints of a long knot."""
    _require_long(a)
    return GaussDiagram([Component(a.components[0].passages, True)])


def split_closed(d, cut=0):
    """Open a closed knot into a long knot whose left end sits at ``cut``."""
    if not d.is_knot():
        raise BadCutError('split_closed needs a one-component closed diagram')
    n = len(d.components[0])
    if not 0 <= cut <= max(n - 1, 0):
        raise BadCutError('cut %d outside 0..%d' % (cut, n - 1))
    rotated = shift_basepoint(d, 0, cut) if n else d
    return GaussDiagram([Component(rotated.components[0].passages, False)])


def factor_at(d, position):
    """Split a one-component diagram at ``position`` into two long factors.

    Raises :class:`BadCutError` when some crossing has one passage on each
    side of the cut.
    """
    if len(d) != 1:
        raise BadCutError('factor_at needs a one-component diagram')
    ps = d.components[0].passages
    if not 0 <= position <= len(ps):
        raise BadCutError('cut position %d out of range' % position)
    left, right = ps[:position], ps[position:]
    if {p.crossing for p in left} & {p.crossing for p in right}:
        raise BadCutError('a chord straddles the cut at %d' % position)
    return (GaussDiagram([Component(left, False)]),
            GaussDiagram([Component(right, False)]))


def reverse_mirror(a):
    """Concordance inverse of a long knot: reverse orientation and mirror.

    Reflecting along ``x = 1`` and reversing the orientation of the strand
    reverses the passage order, keeps over/under and flips each sign.
    """
    _require_long(a)
    ps = a.components[0].passages
    return GaussDiagram([Component(
        tuple(Passage(p.crossing, p.over, -p.sign) for p in reversed(ps)),
        False)])


def equal_up_to_basepoints(d1, d2):
    """True when the diagrams agree after rotating closed components."""
    if len(d1) != len(d2) or d1.crossing_count != d2.crossing_count:
        return False
    choices = []
    for c1, c2 in zip(d1.components, d2.components):
        if c1.closed != c2.closed or len(c1) != len(c2):
            return False
        choices.append(range(len(c1)) if c1.closed and len(c1) else [0])
    for shifts in product(*choices):
        e = d1
        for i, k in enumerate(shifts):
            if k:
                e = shift_basepoint(e, i, k)
        if e == d2:
            return True
    return False


class KnotTable:
    """Ordered collection of named diagrams read from ``name<TAB>code`` lines."""

    def __init__(self, entries=()):
        self.entries = []
        self._index = {}
        for name, code in entries:
            self.add(name, code)

    def add(self, name, code):
        if name in self._index:
            raise ValueError('duplicate knot name %r' % name)
        if isinstance(code, str):
            code = parse_gauss_code(code)
        self._index[name] = len(self.entries)
        self.entries.append((name, code))

    def __getitem__(self, name):
        return self.entries[self._index[name]][1]

    def __contains__(self, name):
        return name in self._index

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @classmethod
    def from_text(cls, text, source='<string>'):
        table = cls()
        for lineno, line in enumerate(text.splitlines(), 1):
            stripped = line.strip()
            if not stripped or stripped.startswith('#'):
                continue
            parts = line.rstrip('\n').split('\t')
            if len(parts) < 2:
                raise GaussSyntaxError('%s:%d: expected name<TAB>code'
                                       % (source, lineno))
            try:
                table.add(parts[0].strip(), parts[1].strip())
            except GaussCodeError as exc:
                raise type(exc)('%s:%d: %s' % (source, lineno, exc)) from None
        return table

    @classmethod
    def read(cls, path):
        path = Path(path)
        return cls.from_text(path.read_text(encoding='utf-8'), str(path))

    def to_text(self):
        return ''.join('%s\t%s\n' % (name, d) for name, d in self.entries)
