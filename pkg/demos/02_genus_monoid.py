"""
The genus monoid of finitely generated projectives
===================================================

A profile records, for each exceptional maximal ideal, the ranks of the
local indecomposable projectives.  A finitely generated projective is a
vector of multiplicities whose block ranks all agree.
"""

from projgenus import (
    AlgebraProfile,
    hilbert_basis_A,
    membership_A,
    parse_genus,
    rank_monoid,
    verify_hilbert_basis,
)

profile = AlgebraProfile.from_ranks(12, ((2, 4), (2, 2)), ((3, 9), (1, 1)))
print("shape", profile.shape, "ranks", profile.ranks)

# %%
# Attainable ranks: a rank must be reachable in every block at once.
print(rank_monoid(profile, 40))

# %%
# A genus vector is in A when its block ranks agree.
for text in ["((1,1),(2,0))", "((1,0),(1,0))"]:
    print(text, "->", membership_A(profile, parse_genus(text)))

# %%
# The minimal generators, tagged with their rank.  The bounded check
# confirms every member of A with small entries is a sum of them.
basis = hilbert_basis_A(profile)
for g in basis:
    print(" ", g)
print("problems:", verify_hilbert_basis(profile, basis, bound=9))
