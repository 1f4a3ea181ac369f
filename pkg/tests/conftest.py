import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from vmilnor import bundled_knots
from vmilnor.gauss import Component, GaussDiagram, Passage, parse_gauss_code
from vmilnor.words import A, V, Generator, Word

DATA = Path(__file__).parent / 'data'

KNOT_35 = 'O1-O2-O3-U1-U2-U3-'
LINK_VLK = 'O1+,U1+O2-U2-O3-U3-'      # vlk(J,K) = 1, vlk(K,J) = 0, writhe(K) = -2


@pytest.fixture(scope='session')
def knots():
    return bundled_knots()


def random_diagram(rng, crossings, components=1, long=False):
    """Random valid Gauss diagram with the given number of crossings."""
    slots = []
    for x in range(1, crossings + 1):
        s = rng.choice((1, -1))
        slots += [Passage(x, True, s), Passage(x, False, s)]
    rng.shuffle(slots)
    cuts = sorted(rng.randint(0, len(slots)) for _ in range(components - 1))
    parts, prev = [], 0
    for c in cuts + [len(slots)]:
        parts.append(tuple(slots[prev:c]))
        prev = c
    return GaussDiagram([Component(p, not long) for p in parts])


def small_knot_corpus(max_crossings=4, per_size=6, seed=11):
    """Closed one-component diagrams with up to ``max_crossings`` crossings.

    Every diagram with at most two crossings is included; larger sizes are
    sampled.
    """
    from itertools import permutations, product
    seen = []
    keys = set()

    def add(d):
        k = str(d)
        if k not in keys:
            keys.add(k)
            seen.append(d)
    add(parse_gauss_code(''))
    for n in (1, 2):
        for perm in set(permutations([(x, o) for x in range(1, n + 1)
                                      for o in (True, False)])):
            for signs in product((1, -1), repeat=n):
                ps = tuple(Passage(x, o, signs[x - 1]) for x, o in perm)
                add(GaussDiagram([Component(ps)]))
    rng = random.Random(seed)
    for n in range(3, max_crossings + 1):
        for _ in range(per_size):
            add(random_diagram(rng, n))
    add(parse_gauss_code(KNOT_35))
    return seen


@st.composite
def diagrams(draw, max_crossings=5, max_components=2, allow_long=True):
    n = draw(st.integers(0, max_crossings))
    m = draw(st.integers(1, max_components))
    long = allow_long and m == 1 and draw(st.booleans())
    seed = draw(st.integers(0, 10 ** 9))
    return random_diagram(random.Random(seed), n, m, long)


@st.composite
def words(draw, max_len=12, gens=(A, V)):
    letters = draw(st.lists(st.tuples(st.sampled_from(gens),
                                      st.sampled_from((1, -1))), max_size=max_len))
    return Word(letters)


def link_gens(m):
    return [Generator(i, 1) for i in range(m)]
