import random

import pytest

from vmilnor.hall import (CollectionError, UnsupportedRank, basic_commutators,
                          collect, collect_series, normal_form_series,
                          parse_normal_form, verify_basis)
from vmilnor.magnus import expand
from vmilnor.words import A, V, Word, commutator, parse_word

a, v = Word.gen(A), Word.gen(V)
AL = {0: 1, 'v': 2}

WEIGHT_COUNTS = {1: 2, 2: 1, 3: 2, 4: 3, 5: 6, 6: 9, 7: 18}


def test_basis_counts():
    gs = basic_commutators(2, 7)
    assert len(gs) == 41
    for w, n in WEIGHT_COUNTS.items():
        assert sum(1 for g in gs if g.weight == w) == n
    assert [g.index for g in gs] == list(range(1, 42))


def test_first_generators():
    g = basic_commutators(2, 3)
    assert g[0].word() == a and g[1].word() == v
    assert g[2].word() == commutator(v, a)


def test_basis_is_z_basis():
    assert all(verify_basis(8).values())


def test_rank_other_than_two():
    with pytest.raises(UnsupportedRank):
        basic_commutators(3, 3)


def test_35_collection():
    w = parse_word('v^2 a^-1 v^-2 a^-1 v^-2 a^-1 v^2 a^3')
    assert collect(w, 4).format() == 'g4^4 g5^4'


def test_collect_rejects_non_lie():
    s = expand(a, 3, AL, 2) + expand(v, 3, AL, 2)
    with pytest.raises((CollectionError, ValueError)):
        collect_series(s, 3)


def test_parse_normal_form():
    nf = parse_normal_form('g6^2 g7^2 g9^-3 g11^-3 g13^-2', 6)
    assert nf.format() == 'g6^2 g7^2 g9^-3 g11^-3 g13^-2'
    assert collect(nf.word(), 6).exponents == nf.exponents
    with pytest.raises(ValueError):
        parse_normal_form('g20', 4)


def test_collect_soundness_random():
    rng = random.Random(5)
    for _ in range(500):
        q = rng.randint(2, 6)
        n = rng.randint(0, 24)
        u = Word([(rng.choice((A, V)), rng.choice((1, -1))) for _ in range(n)])
        nf = collect(u, q)
        assert normal_form_series(nf) == expand(u, q - 1, AL, 2)
