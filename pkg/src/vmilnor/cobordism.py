"""
Gauss-diagram moves and slice-movie verification
================================================

Sites are written ``c:k`` (component ``c``, 0-based) or just ``k`` for
component 0.  A *gap* ``k`` is the slot just before passage ``k`` (``k = n``
is the end of a long component).  A *pair* ``k`` is the two adjacent passages
``k, k + 1`` (wrapping around on closed components).

Movie file format, one item per line, ``#`` starts a comment::

    INIT O1-O2-O3-U1-U2-U3-
    R1+ <gap> <sign> <OU|UO>
    R1- <pair>
    R2+ <gap1> <gap2> <signs>[r]      # e.g. +- or -+r
    R2- <pair1> <pair2>
    R3 <tag a-h> <pair1> <pair2> <pair3>
    SADDLE <gap1> <gap2>
    BIRTH
    DEATH <component>
    FINAL <code>|EMPTY

``R2+`` puts both over-passages (signs as given, in order) at ``gap1`` and
both under-passages at ``gap2``; a trailing ``r`` reverses the order of the
under-passages.  ``EMPTY`` stands for the crossing-free unknot.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from pathlib import Path

from .gauss import (Component, GaussCodeError, GaussDiagram, Passage,
                    parse_gauss_code)
from .invariants import vlk


class IllegalMove(ValueError):
    pass


class MovieSyntaxError(ValueError):
    pass


KINDS = ('R1+', 'R1-', 'R2+', 'R2-', 'R3', 'SADDLE', 'BIRTH', 'DEATH')


@dataclass(frozen=True)
class Move:
    kind: str
    site: tuple = ()        # tuple of (component, index) pairs
    sign: object = None     # R1+: +-1; R2+: sign string
    order: str = ''         # R1+: 'OU'/'UO'
    tag: str = ''           # R3 variant label

    def __str__(self):
        def fmt(s):
            return '%d:%d' % s
        if self.kind == 'R1+':
            return 'R1+ %s %s %s' % (fmt(self.site[0]),
                                     '+' if self.sign > 0 else '-', self.order)
        if self.kind == 'R2+':
            return 'R2+ %s %s %s' % (fmt(self.site[0]), fmt(self.site[1]), self.sign)
        if self.kind == 'R3':
            return 'R3 %s %s' % (self.tag or 'a', ' '.join(map(fmt, self.site)))
        if self.kind == 'DEATH':
            return 'DEATH %d' % self.site[0][0]
        if self.kind == 'BIRTH':
            return 'BIRTH'
        return '%s %s' % (self.kind, ' '.join(map(fmt, self.site)))


def _next_id(d):
    return d.crossing_count + 1


def _comp(d, c):
    if not 0 <= c < len(d.components):
        raise IllegalMove('no component %d' % c)
    return d.components[c]


def _check_gap(d, site):
    c, k = site
    comp = _comp(d, c)
    top = len(comp) if not comp.closed or not comp.passages else len(comp) - 1
    if comp.closed and not comp.passages:
        top = 0
    if not 0 <= k <= max(top, len(comp) if not comp.closed else top):
        raise IllegalMove('gap %d:%d out of range' % site)


def _pair_positions(d, site):
    c, k = site
    comp = _comp(d, c)
    n = len(comp)
    if n < 2:
        raise IllegalMove('component %d has no adjacent pair' % c)
    if comp.closed:
        if not 0 <= k < n:
            raise IllegalMove('pair %d:%d out of range' % site)
        return (c, k), (c, (k + 1) % n)
    if not 0 <= k < n - 1:
        raise IllegalMove('pair %d:%d out of range' % site)
    return (c, k), (c, k + 1)


def _rebuild(d, lists):
    return GaussDiagram([Component(tuple(ps), comp.closed)
                         for ps, comp in zip(lists, d.components)])


def _insert(d, inserts):
    """Insert passages at gaps; ``inserts`` is [(comp, gap, [passages])]."""
    lists = [list(c.passages) for c in d.components]
    # later gaps first so earlier indices stay valid
    for c, k, ps in sorted(inserts, key=lambda t: (t[0], t[1]), reverse=True):
        lists[c][k:k] = ps
    return _rebuild(d, lists)


def _delete(d, positions):
    lists = [list(c.passages) for c in d.components]
    for c, k in sorted(positions, reverse=True):
        del lists[c][k]
    return _rebuild(d, lists)


# -- R3 patterns --------------------------------------------------------------

def _r3_patterns():
    """Local signatures of all realisable three-strand triangles.

    A signature lists, for each strand, its two passages in order as
    ``(crossing label, over, sign)`` where the label is the frozenset of the
    two strands meeting there.
    """
    lines = [((0.0, 0.0), (1.0, 0.0)),
             ((0.0, -0.2), (1.0, 1.0)),
             ((1.0, -0.2), (-1.0, 1.0))]
    # the first line passes below or above the meeting point of the others
    variants = [lines, [((0.0, 0.5), (1.0, 0.0)), lines[1], lines[2]]]
    pats = set()
    for base, heights, flips, mirror in product(variants, permutations(range(3)),
                                                product((1, -1), repeat=3),
                                                (1, -1)):
        strands = []
        for (px, py), (dx, dy), f in zip([b[0] for b in base],
                                         [b[1] for b in base], flips):
            strands.append(((mirror * px, py), (mirror * dx * f, dy * f)))
        events = {i: [] for i in range(3)}
        for i, j in combinations(range(3), 2):
            (p, u), (r, w) = strands[i], strands[j]
            det = u[0] * (-w[1]) - u[1] * (-w[0])
            tx = ((r[0] - p[0]) * (-w[1]) - (r[1] - p[1]) * (-w[0])) / det
            ty = (u[0] * (r[1] - p[1]) - u[1] * (r[0] - p[0])) / det
            over, under = (i, j) if heights[i] > heights[j] else (j, i)
            uo, uu = strands[over][1], strands[under][1]
            sign = 1 if uo[0] * uu[1] - uo[1] * uu[0] > 0 else -1
            label = frozenset((i, j))
            events[i].append((tx, (label, over == i, sign)))
            events[j].append((ty, (label, over == j, sign)))
        for perm in permutations(range(3)):
            # strand perm[i] of the picture becomes strand i of the site
            inv = {perm[i]: i for i in range(3)}
            pats.add(tuple(
                tuple((frozenset(inv[x] for x in lab), o, sg)
                      for _, (lab, o, sg) in sorted(events[perm[i]]))
                for i in range(3)))
    return frozenset(pats)


_R3 = None


def _r3_set():
    global _R3
    if _R3 is None:
        _R3 = _r3_patterns()
    return _R3


def _r3_signature(d, sites):
    pairs = [_pair_positions(d, s) for s in sites]
    flat = [p for pr in pairs for p in pr]
    if len(set(flat)) != 6:
        raise IllegalMove('R3 pairs overlap')
    where = {}
    for idx, pr in enumerate(pairs):
        for c, k in pr:
            where.setdefault(d.components[c].passages[k].crossing, []).append(idx)
    if len(where) != 3 or any(len(v) != 2 or v[0] == v[1] for v in where.values()):
        raise IllegalMove('R3 pairs do not form a triangle of three crossings')
    sig = []
    for pr in pairs:
        row = []
        for c, k in pr:
            p = d.components[c].passages[k]
            row.append((frozenset(where[p.crossing]), p.over, p.sign))
        sig.append(tuple(row))
    return tuple(sig), pairs


# -- moves ----------------------------------------------------------------------

def apply_move(d, m):
    """Apply one move, raising :class:`IllegalMove` when the pattern fails."""
    if isinstance(d, str):
        d = parse_gauss_code(d)
    kind = m.kind
    if kind == 'BIRTH':
        return GaussDiagram(d.components + (Component((), True),))
    if kind == 'DEATH':
        c = m.site[0][0]
        comp = _comp(d, c)
        if comp.passages or not comp.closed:
            raise IllegalMove('DEATH needs a crossing-free closed component')
        return GaussDiagram(d.components[:c] + d.components[c + 1:])
    if kind == 'R1+':
        (c, k), = m.site
        _check_gap(d, (c, k))
        x = _next_id(d)
        pair = [Passage(x, True, m.sign), Passage(x, False, m.sign)]
        if m.order == 'UO':
            pair.reverse()
        elif m.order != 'OU':
            raise IllegalMove('R1+ order must be OU or UO')
        return _insert(d, [(c, k, pair)])
    if kind == 'R1-':
        a, b = _pair_positions(d, m.site[0])
        pa = d.components[a[0]].passages[a[1]]
        pb = d.components[b[0]].passages[b[1]]
        if pa.crossing != pb.crossing:
            raise IllegalMove('R1- needs both ends of one crossing adjacent')
        return _delete(d, [a, b])
    if kind == 'R2+':
        g1, g2 = m.site
        _check_gap(d, g1)
        _check_gap(d, g2)
        signs = m.sign.rstrip('r')
        if signs not in ('+-', '-+'):
            raise IllegalMove('R2+ needs opposite signs, got %r' % m.sign)
        s1, s2 = (1, -1) if signs == '+-' else (-1, 1)
        x, y = _next_id(d), _next_id(d) + 1
        overs = [Passage(x, True, s1), Passage(y, True, s2)]
        unders = [Passage(x, False, s1), Passage(y, False, s2)]
        if m.sign.endswith('r'):
            unders.reverse()
        if g1 == g2:
            return _insert(d, [(g1[0], g1[1], overs + unders)])
        return _insert(d, [(g1[0], g1[1], overs), (g2[0], g2[1], unders)])
    if kind == 'R2-':
        p1 = _pair_positions(d, m.site[0])
        p2 = _pair_positions(d, m.site[1])
        if set(p1) & set(p2):
            raise IllegalMove('R2- pairs overlap')
        ps1 = [d.components[c].passages[k] for c, k in p1]
        ps2 = [d.components[c].passages[k] for c, k in p2]
        if {p.crossing for p in ps1} != {p.crossing for p in ps2} or \
                ps1[0].crossing == ps1[1].crossing:
            raise IllegalMove('R2- pairs must share the same two crossings')
        if not (all(p.over for p in ps1) and not any(p.over for p in ps2)) and \
                not (all(p.over for p in ps2) and not any(p.over for p in ps1)):
            raise IllegalMove('R2- needs one over-pair and one under-pair')
        if ps1[0].sign == ps1[1].sign:
            raise IllegalMove('R2- crossings must have opposite signs')
        return _delete(d, list(p1) + list(p2))
    if kind == 'R3':
        sig, pairs = _r3_signature(d, m.site)
        if sig not in _r3_set():
            raise IllegalMove('R3 pattern is not a realisable triangle')
        lists = [list(c.passages) for c in d.components]
        for (c1, k1), (c2, k2) in pairs:
            lists[c1][k1], lists[c2][k2] = (d.components[c2].passages[k2],
                                            d.components[c1].passages[k1])
        return _rebuild(d, lists)
    if kind == 'SADDLE':
        return _saddle(d, m.site[0], m.site[1])
    raise IllegalMove('unknown move %r' % kind)


def _saddle(d, g1, g2):
    (c1, k1), (c2, k2) = g1, g2
    A, B = _comp(d, c1), _comp(d, c2)
    comps = list(d.components)
    if c1 == c2:
        if k1 == k2:
            raise IllegalMove('SADDLE needs two different gaps')
        k1, k2 = sorted((k1, k2))
        _check_gap(d, (c1, k1))
        _check_gap(d, (c1, k2))
        ps = A.passages
        inner = Component(ps[k1:k2], True)
        outer = Component(ps[k2:] + ps[:k1] if A.closed else ps[:k1] + ps[k2:],
                          A.closed)
        comps[c1:c1 + 1] = [outer, inner] if not A.closed else [inner, outer]
        return GaussDiagram(comps)
    _check_gap(d, g1)
    _check_gap(d, g2)
    if not A.closed and not B.closed:
        raise IllegalMove('SADDLE cannot merge two long components')
    if not A.closed or not B.closed:
        (lc, lk), (cc, ck) = (g1, g2) if not A.closed else (g2, g1)
        L, C = comps[lc], comps[cc]
        loop = C.passages[ck:] + C.passages[:ck]
        merged = Component(L.passages[:lk] + loop + L.passages[lk:], False)
    else:
        merged = Component(A.passages[k1:] + A.passages[:k1]
                           + B.passages[k2:] + B.passages[:k2], True)
        lc, cc = c1, c2
    comps[lc] = merged
    del comps[cc]
    return GaussDiagram(comps)


# -- site enumeration (used for random perturbations and script building) ------

def _gaps(d):
    for c, comp in enumerate(d.components):
        n = len(comp)
        top = n if not comp.closed else max(n - 1, 0)
        for k in range(top + 1):
            yield (c, k)


def _pairs(d):
    for c, comp in enumerate(d.components):
        n = len(comp)
        if n < 2:
            continue
        for k in range(n if comp.closed else n - 1):
            yield (c, k)


def _triangles(d, pairs):
    """Triples of pairs whose crossing sets look like {x,y}, {x,z}, {y,z}."""
    by = {}
    for site in pairs:
        a, b = _pair_positions(d, site)
        x = frozenset((d.components[a[0]].passages[a[1]].crossing,
                       d.components[b[0]].passages[b[1]].crossing))
        if len(x) == 2:
            by.setdefault(x, []).append(site)
    seen = set()
    for e1, e2 in combinations(by, 2):
        if len(e1 | e2) != 3:
            continue
        e3 = e1 ^ e2
        tri = frozenset((e1, e2, e3))
        if e3 not in by or tri in seen:
            continue
        seen.add(tri)
        for t in product(by[e1], by[e2], by[e3]):
            yield tuple(sorted(t))


def legal_moves(d, kinds=('R1-', 'R2-', 'R3')):
    """Enumerate legal deletion-type Reidemeister moves on ``d``."""
    out = []
    pairs = list(_pairs(d))
    for kind in kinds:
        if kind == 'R1-':
            cands = [Move('R1-', (p,)) for p in pairs]
        elif kind == 'R2-':
            cands = [Move('R2-', (p, q)) for p, q in combinations(pairs, 2)]
        elif kind == 'R3':
            cands = [Move('R3', t, tag='a') for t in _triangles(d, pairs)]
        else:
            continue
        for m in cands:
            try:
                apply_move(d, m)
            except IllegalMove:
                continue
            out.append(m)
    return out


def random_r_move(d, rng=None):
    """One random Reidemeister move (insertion, deletion or R3)."""
    rng = rng or random.Random()
    gaps = list(_gaps(d))
    choices = ['R1+', 'R2+']
    legal = legal_moves(d)
    if legal:
        choices.append('legal')
    pick = rng.choice(choices)
    if pick == 'R1+':
        return Move('R1+', (rng.choice(gaps),), rng.choice((1, -1)),
                    rng.choice(('OU', 'UO')))
    if pick == 'R2+':
        return Move('R2+', (rng.choice(gaps), rng.choice(gaps)),
                    rng.choice(('+-', '-+')) + rng.choice(('', 'r')))
    return rng.choice(legal)


# -- movies ---------------------------------------------------------------------

@dataclass
class MovieScript:
    initial: GaussDiagram
    moves: list = field(default_factory=list)
    claimed_final: GaussDiagram = None
    lines: list = field(default_factory=list)      # source line per move


@dataclass
class MovieReport:
    legal: bool
    euler: int
    final_matches: bool
    failed_step: int = None
    error: str = ''
    final: GaussDiagram = None
    births: int = 0
    saddles: int = 0
    deaths: int = 0

    @property
    def is_concordance(self):
        return self.legal and self.euler == 0 and self.final_matches

    def as_dict(self):
        return {'legal': self.legal, 'euler': self.euler,
                'final_matches': self.final_matches,
                'failed_step': self.failed_step, 'error': self.error,
                'births': self.births, 'saddles': self.saddles,
                'deaths': self.deaths,
                'final': None if self.final is None else str(self.final),
                'concordance': self.is_concordance}


def _parse_site(tok):
    try:
        if ':' in tok:
            c, k = tok.split(':')
            return (int(c), int(k))
        return (0, int(tok))
    except ValueError:
        raise MovieSyntaxError('bad site %r' % tok) from None


def parse_move(line):
    toks = line.split()
    kind = toks[0].upper()
    args = toks[1:]

    def need(n):
        if len(args) != n:
            raise MovieSyntaxError('%s expects %d arguments' % (kind, n))
    if kind == 'R1+':
        need(3)
        if args[1] not in '+-' or args[2].upper() not in ('OU', 'UO'):
            raise MovieSyntaxError('R1+ expects <gap> <+|-> <OU|UO>')
        return Move(kind, (_parse_site(args[0]),), 1 if args[1] == '+' else -1,
                    args[2].upper())
    if kind == 'R1-':
        need(1)
        return Move(kind, (_parse_site(args[0]),))
    if kind == 'R2+':
        need(3)
        return Move(kind, (_parse_site(args[0]), _parse_site(args[1])), args[2])
    if kind == 'R2-':
        need(2)
        return Move(kind, tuple(_parse_site(a) for a in args))
    if kind == 'R3':
        need(4)
        if args[0] not in 'abcdefgh' or len(args[0]) != 1:
            raise MovieSyntaxError('R3 tag must be one of a-h')
        return Move(kind, tuple(_parse_site(a) for a in args[1:]), tag=args[0])
    if kind == 'SADDLE':
        need(2)
        return Move(kind, tuple(_parse_site(a) for a in args))
    if kind == 'BIRTH':
        need(0)
        return Move(kind)
    if kind == 'DEATH':
        need(1)
        try:
            return Move(kind, ((int(args[0]), 0),))
        except ValueError:
            raise MovieSyntaxError('bad component %r' % args[0]) from None
    raise MovieSyntaxError('unknown move %r' % toks[0])


def parse_movie(text, source='<string>'):
    initial = final = None
    moves, lines = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        try:
            head, _, rest = line.partition(' ')
            if head.upper() == 'INIT':
                if initial is not None:
                    raise MovieSyntaxError('duplicate INIT')
                initial = parse_gauss_code(rest.strip())
            elif head.upper() == 'FINAL':
                rest = rest.strip()
                final = parse_gauss_code('' if rest.upper() == 'EMPTY' else rest)
            else:
                if initial is None:
                    raise MovieSyntaxError('moves before INIT')
                if final is not None:
                    raise MovieSyntaxError('moves after FINAL')
                moves.append(parse_move(line))
                lines.append(lineno)
        except (MovieSyntaxError, GaussCodeError) as exc:
            raise MovieSyntaxError('%s:%d: %s' % (source, lineno, exc)) from None
    if initial is None:
        raise MovieSyntaxError('%s: missing INIT line' % source)
    if final is None:
        raise MovieSyntaxError('%s: missing FINAL line' % source)
    return MovieScript(initial, moves, final, lines)


def read_movie(path):
    path = Path(path)
    return parse_movie(path.read_text(encoding='utf-8'), str(path))


def format_movie(script):
    out = ['INIT %s' % script.initial]
    out += [str(m) for m in script.moves]
    fin = script.claimed_final
    out.append('FINAL %s' % ('EMPTY' if fin is None or str(fin) == '' else fin))
    return '\n'.join(out) + '\n'


def verify_movie(script):
    """Replay a movie; failures are reported in the result, never raised."""
    d = script.initial
    births = saddles = deaths = 0
    for i, m in enumerate(script.moves):
        try:
            d = apply_move(d, m)
        except IllegalMove as exc:
            return MovieReport(False, births - saddles + deaths, False, i,
                               str(exc), d, births, saddles, deaths)
        births += m.kind == 'BIRTH'
        saddles += m.kind == 'SADDLE'
        deaths += m.kind == 'DEATH'
    from .gauss import equal_up_to_basepoints
    target = script.claimed_final
    matches = target is not None and equal_up_to_basepoints(d, target)
    return MovieReport(True, births - saddles + deaths, matches, None, '', d,
                       births, saddles, deaths)


def total_vlk(d, part_a, part_b=None):
    """Sum of ``vlk(i, j)`` over ``i`` in ``part_a`` and ``j`` in ``part_b``."""
    if isinstance(d, str):
        d = parse_gauss_code(d)
    part_a = set(part_a)
    if part_b is None:
        part_b = set(range(len(d))) - part_a
    return sum(vlk(d, i, j) for i in part_a for j in part_b if i != j)
