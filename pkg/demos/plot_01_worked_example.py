"""
From a Gauss code to order-three invariants
===========================================

A walk through every stage of the pipeline on the virtual knot 3.5,
``O1-O2-O3-U1-U2-U3-``: the extended presentation, its longitude, the
Chen-Milnor image, commutator collection and finally the zh-bar values.
"""

from vmilnor import extended_presentation, longitude_pair, phi_word, collect
from vmilnor.invariants import LongitudeSeries, first_nonvanishing
from vmilnor.gauss import parse_gauss_code

code = 'O1-O2-O3-U1-U2-U3-'
d = parse_gauss_code(code)

# %%
# The extended presentation has one generator per short arc plus the
# auxiliary generator ``v``.  Every relation conjugates one short arc into
# the next.
p = extended_presentation(d)
print(p)

# %%
# The parallel is the product of the conjugating words around the knot; a
# trailing power of the meridian brings its exponent sum to zero.
pair = longitude_pair(p)
print('parallel :', pair.parallel)
print('longitude:', pair.longitude)

# %%
# Substituting the order-4 Chen-Milnor images turns the longitude into a
# word in ``a`` and ``v`` alone.
lam = phi_word(p, 0, 4)
print(lam.compact())

# %%
# Modulo the fourth term of the lower central series the word collects to
# a product of weight-three basic commutators.
print(collect(lam, 4))

# %%
# The Magnus coefficients of degree three are the order-three invariants.
# Lower orders vanish, so the indeterminacy is zero and the values are
# integers.
ls = LongitudeSeries.from_diagram(d, 3, True)
for J in ('111', '112', '121', '211', '122', '212', '221', '222'):
    print(J, ls.value(J, 1))

# %%
# ``first_nonvanishing`` does all of the above and reports a spanning set.
print(first_nonvanishing(d, 5))
