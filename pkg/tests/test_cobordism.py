import random

import pytest

from vmilnor.cobordism import (IllegalMove, Move, MovieScript,
                               MovieSyntaxError, apply_move, format_movie,
                               legal_moves, parse_move, parse_movie,
                               random_r_move, read_movie, total_vlk,
                               verify_movie)
from vmilnor.gauss import equal_up_to_basepoints, parse_gauss_code, writhe
from vmilnor.invariants import AllVanish, LongitudeSeries, first_nonvanishing

from conftest import DATA, KNOT_35, random_diagram

MOVIE = DATA / 'constructed_r3_saddle.movie'


def test_r1_roundtrip():
    d = parse_gauss_code(KNOT_35)
    e = apply_move(d, parse_move('R1+ 0:2 + OU'))
    assert e.crossing_count == 4
    assert writhe(e) == writhe(d) + 1
    back = [m for m in legal_moves(e, ('R1-',))]
    assert any(equal_up_to_basepoints(apply_move(e, m), d) for m in back)


def test_r2_roundtrip():
    d = parse_gauss_code(KNOT_35)
    e = apply_move(d, parse_move('R2+ 0:1 0:4 +-'))
    assert e.crossing_count == 5 and writhe(e) == writhe(d)
    assert any(equal_up_to_basepoints(apply_move(e, m), d)
               for m in legal_moves(e, ('R2-',)))


def test_illegal_moves():
    d = parse_gauss_code(KNOT_35)
    with pytest.raises(IllegalMove):
        apply_move(d, parse_move('R1- 0:0'))
    with pytest.raises(IllegalMove):
        apply_move(d, parse_move('R2- 0:0 0:3'))
    with pytest.raises(IllegalMove):
        apply_move(d, parse_move('DEATH 0'))
    with pytest.raises(IllegalMove):
        apply_move(d, parse_move('R3 a 0:0 0:1 0:2'))


def test_birth_death_saddle():
    d = apply_move(parse_gauss_code(''), Move('BIRTH'))
    assert len(d) == 2
    merged = apply_move(d, parse_move('SADDLE 0:0 1:0'))
    assert len(merged) == 1
    assert len(apply_move(d, parse_move('DEATH 1'))) == 1


def test_saddle_split():
    d = parse_gauss_code('O1-U2-U1-O2-')
    e = apply_move(d, parse_move('SADDLE 0:0 0:2'))
    assert len(e) == 2 and e.crossing_count == 2


def test_move_text_roundtrip():
    for line in ('R1+ 0:3 - UO', 'R1- 1:2', 'R2+ 0:1 0:4 -+r', 'R2- 0:0 1:1',
                 'R3 c 0:1 0:3 0:5', 'SADDLE 0:0 1:2', 'BIRTH', 'DEATH 1'):
        assert str(parse_move(line)) == line


def test_parse_errors_have_line():
    with pytest.raises(MovieSyntaxError, match='m.movie:2'):
        parse_movie('INIT O1-U1-\nR9 0\nFINAL EMPTY\n', 'm.movie')
    with pytest.raises(MovieSyntaxError, match='FINAL'):
        parse_movie('INIT O1-U1-\n')
    with pytest.raises(MovieSyntaxError, match=':1'):
        parse_movie('INIT O1-U1+\nFINAL EMPTY\n')


def test_constructed_movie():
    s = read_movie(MOVIE)
    r = verify_movie(s)
    assert r.legal and r.euler == 0 and r.final_matches and r.is_concordance
    assert parse_movie(format_movie(s)).moves == s.moves


def test_movie_without_moves():
    r = verify_movie(parse_movie('INIT O1+U1+\nR1- 0:0\nFINAL EMPTY\n'))
    assert r.is_concordance
    r = verify_movie(parse_movie('INIT O1+U1+\nFINAL EMPTY\n'))
    assert r.legal and not r.final_matches


def test_total_vlk():
    d = parse_gauss_code('O1+,U1+O2-U2-O3-U3-')
    assert total_vlk(d, [0]) == 1 and total_vlk(d, [1]) == 0


def _invariants(d, order):
    if order is None:
        return first_nonvanishing(d, 4)
    return LongitudeSeries.from_diagram(d, order, True).series[1]


def test_random_moves_preserve_invariants():
    rng = random.Random(23)
    for trial in range(6):
        d = random_diagram(rng, 3) if trial else parse_gauss_code(KNOT_35)
        base = first_nonvanishing(d, 4)
        order = None if isinstance(base, AllVanish) else base.order
        ref = _invariants(d, order)
        e = d
        for _ in range(15):
            try:
                e = apply_move(e, random_r_move(e, rng))
            except IllegalMove:
                continue
        assert _invariants(e, order) == ref


def test_birth_alone_breaks_euler():
    s = MovieScript(parse_gauss_code(''), [Move('BIRTH')], parse_gauss_code(''))
    r = verify_movie(s)
    assert r.euler == 1 and not r.is_concordance


def test_death_alone_breaks_euler():
    s = MovieScript(parse_gauss_code(''), [parse_move('DEATH 0')], parse_gauss_code(''))
    r = verify_movie(s)
    assert r.euler == 1 and not r.is_concordance
