"""
Spanning sets and slice movies
==============================

At the first non-vanishing order the invariants satisfy shuffle relations,
so a handful of sequences determine all the others.  Separately, a slice
movie is a script of diagram moves that can be replayed and checked.
"""

from vmilnor.invariants import (REPORTING_SETS, is_spanning, rank_en,
                                spanning_set)
from vmilnor.cobordism import parse_movie, verify_movie

# %%
# Free rank of the order-n invariants modulo shuffles, and the sets used
# for reporting.  Each set is checked to span over the integers.
for n in range(2, 7):
    print(n, rank_en(n), is_spanning(REPORTING_SETS[n], n), ' '.join(REPORTING_SETS[n]))

# %%
# Any other spanning set works too; this one is lexicographically least.
print(spanning_set(5, lex_least=True).sequences)

# %%
# A five-crossing knot sliced by one saddle.  The R3 move sets up the
# saddle, Reidemeister moves clean up both resulting components and a
# death removes the split unknot.
movie = parse_movie('''
INIT O1-U2-U3+U1-U4-O3+O5+O4-O2-U5+
R3 a 0:2 0:5 0:9
SADDLE 0:0 0:2
R2- 1:1 1:4
R2- 0:0 1:1
R1- 1:0
DEATH 0
FINAL EMPTY
''')
report = verify_movie(movie)
print(report.as_dict())

# %%
# Deleting a move makes a later one illegal, and the report says where.
movie.moves.pop(2)
print(verify_movie(movie).as_dict())
