"""Milnor-type concordance invariants of virtual knots and links from Gauss codes."""

from importlib import resources

from .gauss import (GaussDiagram, KnotTable, parse_gauss_code, serialize,
                    shift_basepoint, writhe, concatenate, closure,
                    split_closed, factor_at, reverse_mirror)
from .words import Word, Generator, parse_word, commutator, left_normed
from .magnus import TruncatedSeries, expand, in_lcs
from .presentation import (extended_presentation, group_presentation,
                           longitude_pair)
from .chenmilnor import phi_word, phi_series
from .hall import basic_commutators, collect
from .invariants import (InvariantValue, AllVanish, vlk, mu, delta, mu_bar,
                         zh_bar, first_nonvanishing, proper_shuffles,
                         spanning_set)
from .artin import (extended_artin, concordance_obstruction,
                    slice_factor_test)
from .cobordism import Move, apply_move, verify_movie, parse_movie, total_vlk

__version__ = '0.1.0'


def bundled_knots():
    """Knot table shipped with the package (worked examples)."""
    text = resources.files(__name__).joinpath('data/knots.tsv').read_text('utf-8')
    return KnotTable.from_text(text, 'knots.tsv')
