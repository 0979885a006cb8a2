"""
Trace ideals and big projectives
================================

Countably generated projectives that are not finitely generated are
pinned down by a trace ideal and a finitely generated class over the
quotient.  Their genera have an ``inf`` in every block.
"""

from projgenus import (
    AlgebraProfile,
    big_generators,
    enumerate_traces,
    from_genus,
    minimal_traces,
    parse_genus,
    quotient_profile,
    to_genus,
)
from projgenus.bigmonoid import add

profile = AlgebraProfile.from_ranks(12, ((2, 4), (2, 2)), ((3, 9), (1, 1)))

# %%
# A trace ideal picks a nonempty set of indecomposables in each block.
print(len(enumerate_traces(profile)), "traces including zero")
for t in minimal_traces(profile):
    print(" ", t, "survivors", quotient_profile(profile, t).survivors)

# %%
# Generators of the big genera depend only on the shape.
print([str(g) for g in big_generators(profile)][:4], "...")

# %%
# Pair representation.  Adding a finitely generated module to a big one only
# changes the multiplicities that survive the trace.
big = from_genus(profile, parse_genus("((inf,1),(inf,0))"))
fin = from_genus(profile, parse_genus("((1,1),(2,0))"))
other = from_genus(profile, parse_genus("((0,inf),(inf,0))"))
print(big)
print(add(profile, big, fin), "=", to_genus(profile, add(profile, big, fin)))
print(add(profile, big, other), "=", to_genus(profile, add(profile, big, other)))
