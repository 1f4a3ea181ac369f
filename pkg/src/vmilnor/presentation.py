"""
Serial Wirtinger-type presentations read off a Gauss diagram
============================================================

Every component is traversed from its basepoint.  The component is cut into
short arcs at *every* passage (extended group) or only at under-passages
(ordinary link group).  Passage ``k`` turns the incoming arc ``c`` into the
outgoing arc ``w^-1 c w`` where the conjugating word ``w`` is

==========  =====================
over  -     ``v``
over  +     ``v^-1``
under -     ``v^-1 b^-1``
under +     ``v a``
==========  =====================

and ``a``/``b`` is the arc entering the over-passage of the same crossing.
The ordinary group is the specialisation ``v = 1`` with short arcs merged.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gauss import GaussDiagram, parse_gauss_code
from .words import OMEGA, Generator, Word, exponent_sum


class OmegaClass(ValueError):
    """Raised when a longitude of the auxiliary ``v`` class is requested."""


CYCLIC = 'cyclic'
SERIAL = 'serial'
TRIVIAL = 'trivially-cyclic'


@dataclass(frozen=True)
class ConjugacyClass:
    class_id: object
    size: int
    kind: str
    conjugators: tuple = ()     # w_{i,1..}; empty for trivial classes

    def generator(self, j=1):
        return Generator(self.class_id, j)

    def prefix(self, j):
        """``l_{i,j} = w_{i,1} ... w_{i,j}``."""
        out = Word()
        for w in self.conjugators[:j]:
            out = out * w
        return out

    def relations(self):
        """Relators ``c_{j+1}^-1 w_j^-1 c_j w_j``; cyclic classes wrap around."""
        rels = []
        n = self.size
        count = n if self.kind == CYCLIC else n - 1
        for j in range(1, count + 1):
            nxt = 1 if j == n else j + 1
            w = self.conjugators[j - 1]
            rels.append((Word.gen(self.generator(nxt)),
                         ~w * Word.gen(self.generator(j)) * w))
        return rels


@dataclass(frozen=True)
class SerialPresentation:
    classes: tuple
    extended: bool
    diagram: GaussDiagram = field(compare=False, default=None)

    def cls(self, class_id):
        for c in self.classes:
            if c.class_id == class_id:
                return c
        raise KeyError(class_id)

    @property
    def components(self):
        return [c for c in self.classes if c.class_id != OMEGA]

    def generators(self):
        out = []
        for c in self.classes:
            out.extend(c.generator(j) for j in range(1, c.size + 1))
        return out

    def relations(self):
        rels = []
        for c in self.classes:
            rels.extend(c.relations())
        return rels

    def format(self):
        gens = ', '.join(g.name() for g in self.generators())
        rels = ['%s = %s' % (lhs, rhs) for lhs, rhs in self.relations()]
        return '< %s | %s >' % (gens, ', '.join(rels))

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class MeridianLongitudePair:
    meridian: Generator
    parallel: Word
    longitude: Word
    correction: int


def _as_diagram(d):
    return parse_gauss_code(d) if isinstance(d, str) else d


def _short_arc_data(d):
    """For each component: list of (passage, short-arc index entering it)."""
    incoming_over = {}
    for ci, comp in enumerate(d.components):
        for pi, p in enumerate(comp.passages):
            if p.over:
                incoming_over[p.crossing] = Generator(ci, pi + 1)
    return incoming_over


def _build(d, extended):
    d = _as_diagram(d)
    incoming_over = _short_arc_data(d)
    v = Word.gen(Generator(OMEGA, 1))
    classes = []
    for ci, comp in enumerate(d.components):
        n = len(comp.passages)
        ws = []
        for p in comp.passages:
            if p.over:
                w = (v if p.sign < 0 else ~v) if extended else Word()
            else:
                x = Word.gen(incoming_over[p.crossing])
                if p.sign < 0:
                    w = ~x
                    if extended:
                        w = ~v * w
                else:
                    w = x
                    if extended:
                        w = v * w
            ws.append(w)
        if n == 0:
            classes.append(ConjugacyClass(ci, 1, TRIVIAL))
        elif comp.closed:
            classes.append(ConjugacyClass(ci, n, CYCLIC, tuple(ws)))
        else:
            classes.append(ConjugacyClass(ci, n + 1, SERIAL, tuple(ws)))
    if extended:
        classes.append(ConjugacyClass(OMEGA, 1, TRIVIAL))
        return SerialPresentation(tuple(classes), True, d)
    return _merge_arcs(d, tuple(classes))


def _merge_arcs(d, classes):
    """Collapse short arcs separated by over-passages (trivial relations)."""
    renames = {}
    merged = []
    for ci, (comp, cls) in enumerate(zip(d.components, classes)):
        if cls.kind == TRIVIAL:
            merged.append(cls)
            continue
        # arc index of each short arc: a new arc starts after every under-passage
        arc_of = [1]
        for p in comp.passages:
            arc_of.append(arc_of[-1] + (0 if p.over else 1))
        if comp.closed:
            total = arc_of[-1] - 1
            if total == 0:
                total = 1
            # the final short arc wraps onto the first
            arc_of = [((a - 1) % total) + 1 for a in arc_of]
        for j in range(1, cls.size + 1):
            renames[Generator(ci, j)] = Word.gen(Generator(ci, arc_of[j - 1]))
        merged.append((comp, cls, arc_of))
    out = []
    for item in merged:
        if isinstance(item, ConjugacyClass):
            out.append(item)
            continue
        comp, cls, arc_of = item
        ws = []
        for p, w in zip(comp.passages, cls.conjugators):
            if not p.over:
                ws.append(w.substitute(renames))
        ci = cls.class_id
        if not ws:
            out.append(ConjugacyClass(ci, 1, TRIVIAL))
        elif comp.closed:
            out.append(ConjugacyClass(ci, len(ws), CYCLIC, tuple(ws)))
        else:
            out.append(ConjugacyClass(ci, len(ws) + 1, SERIAL, tuple(ws)))
    return SerialPresentation(tuple(out), False, d)


def extended_presentation(d):
    """Presentation of the extended group (short arcs plus ``v``)."""
    return _build(d, True)


def group_presentation(d):
    """Presentation of the ordinary link group (arcs, no ``v``)."""
    return _build(d, False)


def longitude_pair(p, class_id=0):
    """Meridian, parallel and exponent-corrected longitude of one class.

    The correction is a trailing power of the class representative.
    """
    if class_id == OMEGA:
        raise OmegaClass('the v class has no longitude')
    c = p.cls(class_id)
    parallel = c.prefix(len(c.conjugators))
    k = -exponent_sum(parallel, class_id)
    meridian = c.generator(1)
    return MeridianLongitudePair(meridian, parallel,
                                 parallel * Word.gen(meridian, k) if k else parallel,
                                 k)
