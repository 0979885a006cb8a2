"""
Counting with infinity
======================

Multiplicities of indecomposable summands live in N0 extended by a single
absorbing element ``inf``.  Zero copies of infinitely many things is still
nothing, so ``0 * inf = 0``.
"""

from projgenus import INF, ExtNat, dot, ext

# %%
# Sums absorb, products respect zero.
print(ExtNat(3) + ExtNat(4), ExtNat(5) + INF, ExtNat(0) * INF, ExtNat(7) * INF)

# %%
# Text input accepts "inf" and the symbol.
print(ext("inf") is INF, ext("∞") is INF)

# %%
# A block rank is a dot product of ranks with multiplicities.  An infinite
# multiplicity at a positive rank makes the whole rank infinite.
print(dot((2, 4), (3, 0)), dot((2, 4), (1, INF)), dot((3, 9), (0, 0)))
