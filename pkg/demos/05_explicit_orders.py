"""
Local orders from idempotent matrices
=====================================

A local piece with ranks ``r_i`` and multiplicities ``m_i`` is realised
inside ``M_k(Q)`` by 0/1 matrix units.  Modulo ``p`` they span a product
of full matrix algebras.
"""

import numpy as np

from projgenus import (
    OrderSpec,
    build,
    lambda_membership,
    profile_from_orders,
    residue_structure_check,
    verify_relations,
)

spec = OrderSpec(p=2, k=12, parts=((2, 2), (4, 2)))
idems = build(spec)
print(len(idems.matrices), "matrix units on", idems.partition)

# %%
# The multiplication table and the residue algebra.
print("relations ok:", verify_relations(idems).ok)
report = residue_structure_check(idems, spec.p)
print(report.details)

# %%
# Membership in the order is a span test over F_p.
cross = np.zeros((12, 12), dtype=int)
cross[0, 5] = 1
print(lambda_membership(idems.matrices[(2, 1, 2)], idems, 2), lambda_membership(cross, idems, 2))

# %%
# Local pieces at different primes assemble into a global profile.
print(profile_from_orders([spec, OrderSpec(3, 12, ((3, 1), (9, 1)))]).to_dict())
