"""
Are all projectives sums of finitely generated ones?
====================================================

The answer is a gcd condition on the ranks.  When it fails, specific big
genera cannot be split and a congruence certifies why.
"""

from projgenus import (
    AlgebraProfile,
    coprime_criterion,
    decide_all_fg,
    decompose_big,
    parse_genus,
)

good = AlgebraProfile.from_ranks(12, ((2, 4), (2, 2)), ((3, 9), (1, 1)))
bad = AlgebraProfile.from_ranks(12, ((2, 8), (2, 1)), ((2, 4), (4, 1)))

# %%
# Ranks 2, 4 against 3, 9 are coprime across blocks, so everything splits.
print(bool(decide_all_fg(good)), coprime_criterion(good))
print(decompose_big(good, parse_genus("((inf,1),(inf,0))")))

# %%
# Ranks 2, 8 against 2, 4 fail, and the decision names a violating choice.
decision = decide_all_fg(bad)
print(bool(decision), decision.obstruction)

# %%
# One big genus has no finite completion: block ranks disagree mod 4.
result = decompose_big(bad, parse_genus("((0,inf),(1,inf))"))
print(type(result).__name__, result, result.verify(bad))

# %%
# Another one in the same profile does split.
print(decompose_big(bad, parse_genus("((0,inf),(2,inf))")))
