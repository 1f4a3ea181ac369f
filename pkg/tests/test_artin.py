import pytest

from vmilnor.artin import (ArtinAction, Inconclusive, Indistinguishable,
                           Obstruction, concordance_obstruction,
                           extended_artin, longitude_series,
                           slice_factor_test)
from vmilnor.gauss import (BadCutError, NotLongError, closure, concatenate,
                          parse_gauss_code, reverse_mirror)
from vmilnor.words import A, V, Word

from conftest import KNOT_35


def test_trivial_long_knot():
    act = extended_artin('L:', 5)
    assert act.is_identity()
    assert act.image(A) == Word.gen(A) and act.image(V) == Word.gen(V)


def test_action_on_meridian():
    act = extended_artin('L:O1-O2-U1-U2-', 3)
    img = act.image(A)
    assert img == act.longitude * Word.gen(A) * ~act.longitude


def test_self_comparison():
    k = 'L:O1-O2-U1-U2-O3-O4-U3-O5+U4-U5+'
    assert concordance_obstruction(k, k, 6) == Indistinguishable(6)


def test_detects_difference():
    r = concordance_obstruction('L:', 'L:O1-O2-U1-U2-', 5)
    assert isinstance(r, Obstruction)
    assert r.coefficient != 0 and len(r.witness) == r.q - 1


def test_long_knot_required():
    with pytest.raises(NotLongError):
        concordance_obstruction(KNOT_35, 'L:', 3)
    with pytest.raises(NotLongError):
        extended_artin(KNOT_35, 3)


def test_slice_factor_on_trivial():
    assert slice_factor_test('', 0, 4) == Inconclusive(4)
    with pytest.raises(BadCutError):
        slice_factor_test('L:O1-U1-', 0, 4)


def test_inverse_factor_cancels(knots):
    k1 = knots['2.1']
    s1 = longitude_series(k1, 5)
    assert not s1.is_one()
    k2 = parse_gauss_code('L:O1-O2-U1-U2-')
    assert longitude_series(concatenate(k1, parse_gauss_code('L:')), 5) == s1
    assert longitude_series(k2, 5) == s1


def test_knot_with_its_inverse_concatenation_is_trivial():
    k = parse_gauss_code('L:O1-O2-U1-U2-')
    r = concordance_obstruction(concatenate(k, reverse_mirror(k)), 'L:', 6)
    assert isinstance(r, Indistinguishable)


def test_knot_with_its_inverse_product_test_inconclusive():
    # the product of longitudes drifts from the inverse at q = 5, see README
    k = parse_gauss_code('L:O1-O2-U1-U2-')
    r = slice_factor_test(closure(concatenate(k, reverse_mirror(k))), 4, 6)
    assert isinstance(r, Inconclusive), r
