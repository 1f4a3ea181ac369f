"""Free-group words over an indexed generator alphabet.

A generator is a pair ``(cls, index)``: ``cls`` is a component number
(0-based) or the string ``'v'`` for the auxiliary generator of the extended
group, ``index`` numbers the short arcs within that class (1 is the class
representative).  Words are immutable, freely reduced tuples of
``(generator, +-1)`` letters.
"""

from __future__ import annotations

import re
from typing import NamedTuple

OMEGA = 'v'
_NAMES = 'abcdefghijklmnopqrstu'


class Generator(NamedTuple):
    cls: object
    index: int = 1

    @property
    def is_omega(self):
        return self.cls == OMEGA

    def name(self, with_index=True):
        if self.is_omega:
            return 'v'
        base = _NAMES[self.cls]
        return '%s%d' % (base, self.index) if with_index else base


def _reduce(letters):
    out = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


class Word:
    """Freely reduced word; multiplication is ``*``, inversion ``~``."""

    __slots__ = ('letters',)

    def __init__(self, letters=()):
        self.letters = _reduce(letters)

    @classmethod
    def _raw(cls, letters):
        w = cls.__new__(cls)
        w.letters = letters
        return w

    @classmethod
    def gen(cls, g, exponent=1):
        if exponent not in (1, -1):
            return cls(((g, 1 if exponent > 0 else -1),) * abs(exponent))
        return cls._raw(((g, exponent),))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        a, b = self.letters, other.letters
        i = 0
        n = min(len(a), len(b))
        while i < n and a[-1 - i][0] == b[i][0] and a[-1 - i][1] == -b[i][1]:
            i += 1
        return Word._raw(a[:len(a) - i] + b[i:])

    def __invert__(self):
        return Word._raw(tuple((g, -e) for g, e in reversed(self.letters)))

    inverse = __invert__

    def __pow__(self, n):
        if n < 0:
            return (~self) ** (-n)
        out = Word()
        for _ in range(n):
            out = out * self
        return out

    def generators(self):
        return {g for g, _ in self.letters}

    def substitute(self, images):
        """Apply the homomorphism sending generator ``g`` to ``images[g]``.

        Generators missing from ``images`` are left fixed.
        """
        out = []
        for g, e in self.letters:
            img = images.get(g)
            if img is None:
                out.append((g, e))
            else:
                out.extend(img.letters if e > 0 else (~img).letters)
        return Word(out)

    def __str__(self):
        return self.format()

    def format(self, with_index=True):
        """Text form: whitespace-separated generators, ``^-1`` for inverses."""
        if not self.letters:
            return '1'
        return ' '.join(g.name(with_index) + ('' if e > 0 else '^-1')
                        for g, e in self.letters)

    def compact(self):
        """Run-length form such as ``v^2 a^-1 v^-2``, dropping arc indices."""
        if not self.letters:
            return '1'
        parts = []
        prev, count = None, 0
        for g, e in self.letters:
            key = g.name(False)
            if prev is not None and prev[0] == key and (prev[1] > 0) == (e > 0):
                count += e
                prev = (key, count)
                parts[-1] = prev
            else:
                count = e
                prev = (key, e)
                parts.append(prev)
        return ' '.join(k if c == 1 else '%s^%d' % (k, c) for k, c in parts)

    def __repr__(self):
        return 'Word(%r)' % self.format()


def multiply(u, v):
    return u * v


def invert(u):
    return ~u


def commutator(x, y):
    """``[x, y] = x^-1 y^-1 x y``."""
    return ~x * ~y * x * y


def left_normed(xs):
    """``[x1, ..., xk] = [[x1, ..., x(k-1)], xk]``; a single entry is itself."""
    xs = list(xs)
    out = xs[0]
    for x in xs[1:]:
        out = commutator(out, x)
    return out


def exponent_sum(u, cls):
    return sum(e for g, e in u.letters if g.cls == cls)


_TOK = re.compile(r'^([a-u]|v)(\d*)(\^(-?\d+))?$')


def parse_word(text):
    """Parse ``'a1 v a2^-1 v^2'`` style text.  Bare ``a`` means ``a1``."""
    letters = []
    for tok in text.split():
        if tok == '1':
            continue
        m = _TOK.match(tok)
        if not m:
            raise ValueError('bad word token %r' % tok)
        name, idx, _, power = m.groups()
        if name == 'v':
            g = Generator(OMEGA, 1)
        else:
            g = Generator(_NAMES.index(name), int(idx) if idx else 1)
        p = int(power) if power else 1
        letters.extend([(g, 1 if p > 0 else -1)] * abs(p))
    return Word(letters)


A = Generator(0, 1)
V = Generator(OMEGA, 1)
