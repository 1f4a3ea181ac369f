"""
Long knots: a non-commuting pair and a non-slice closure
========================================================

Long virtual knots compose by concatenation.  Comparing extended Artin
actions shows that ``2.1 # 3.1`` and ``3.1 # 2.1`` are not concordant,
even though their closures coincide.
"""

import time

from vmilnor import bundled_knots, concatenate, concordance_obstruction
from vmilnor.artin import slice_factor_test
from vmilnor.gauss import factor_at

knots = bundled_knots()
k = concatenate(knots['2.1'], knots['3.1'])
k_star = concatenate(knots['3.1'], knots['2.1'])
print(k)
print(k_star)

# %%
# The longitudes agree modulo every lower central series term below the
# eighth; at ``q = 8`` a degree-seven Magnus coefficient separates them.
t = time.perf_counter()
res = concordance_obstruction(k, k_star, 8)
print(res.q, res.witness, res.coefficient, '%.1fs' % (time.perf_counter() - t))
print(res.normal_form())

# %%
# A closed knot that splits as the closure of a product of two long knots
# can only be slice if the two longitudes multiply into ``F_q``.  The
# bundled code for 6.8451 splits after position six.
d = knots['6.8451']
print(*factor_at(d, 6))
res = slice_factor_test(d, 6, 6)
print('first failing q:', res.q, res.normal_form())

# %%
# The full product modulo ``F_6`` also carries weight-five terms.
from vmilnor.chenmilnor import phi_series
from vmilnor.hall import collect_series

k1, k2 = factor_at(d, 6)
print(collect_series(phi_series(k1, 0, 6) * phi_series(k2, 0, 6), 6))
