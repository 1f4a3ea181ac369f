import pytest

from vmilnor.chenmilnor import (alphabet_for, expand_in, phi_images,
                                phi_series, phi_series_all, phi_word)
from vmilnor.presentation import OmegaClass, extended_presentation
from vmilnor.words import OMEGA, exponent_sum, parse_word

from conftest import KNOT_35, small_knot_corpus

ROWS_35 = ('111', '112', '121', '211', '122', '212', '221', '222')


def test_35_phi4_word():
    assert phi_word(KNOT_35, 0, 4) == parse_word(
        'v^2 a^-1 v^-2 a^-1 v^-2 a^-1 v^2 a^3')


def test_35_series_table_order():
    s = phi_series(KNOT_35, 0, 4)
    assert [s.coefficient(J) for J in ROWS_35] == [0, 4, -8, 4, -4, 8, -4, 0]


def test_images_are_conjugates_of_reps():
    p = extended_presentation(KNOT_35)
    for g, w in phi_images(p, 3).items():
        assert exponent_sum(w, g.cls) == 1


def test_alphabet():
    p = extended_presentation('O1+,U1+O2-U2-O3-U3-')
    assert alphabet_for(p) == ({0: 1, 1: 2, OMEGA: 3}, 3)


def test_bad_arguments():
    with pytest.raises(ValueError):
        phi_word(KNOT_35, 0, 1)
    with pytest.raises(OmegaClass):
        phi_series(KNOT_35, OMEGA, 3)


def test_series_all_matches_single():
    code = 'O1+,U1+O2-U2-O3-U3-'
    both = phi_series_all(code, 4)
    for k in (0, 1):
        assert both[k] == phi_series(code, k, 4)


@pytest.mark.parametrize('q', [2, 3, 4, 5, 6])
def test_word_vs_series_small_knots(q):
    for d in small_knot_corpus():
        p = extended_presentation(d)
        w = phi_word(p, 0, q)
        assert expand_in(p, w, q - 1) == phi_series(p, 0, q), str(d)


def test_word_vs_series_link():
    code = 'O1-U2+,U1-O2+O3-U3-'
    p = extended_presentation(code)
    for q in (2, 3, 4):
        for k in (0, 1):
            assert expand_in(p, phi_word(p, k, q), q - 1) == phi_series(p, k, q)
