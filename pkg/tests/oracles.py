"""Independent brute-force oracles shared by the tests."""

from __future__ import annotations

import functools
import itertools
import math

import numpy as np

# filled by the acceptance tests, printed by the terminal summary hook in conftest
ACCEPTANCE_LINES: list[str] = []


@functools.lru_cache(maxsize=8)
def _grid(nvars, bound):
    axes = np.indices((bound + 1,) * nvars, dtype=np.int64)
    return axes.reshape(nvars, -1).T


def box_minimal_solutions(matrix, rhs, nvars, bound=30):
    """Minimal non-negative solutions of ``A x = b`` inside ``[0..bound]^n``."""
    grid = _grid(nvars, bound)
    A = np.array(matrix, dtype=np.int64).reshape(-1, nvars)
    b = np.array(rhs if rhs is not None else [0] * len(A), dtype=np.int64)
    ok = np.all(grid @ A.T == b, axis=1) if len(A) else np.ones(len(grid), bool)
    sols = grid[ok]
    sols = sols[sols.sum(axis=1) > 0]
    sols = sols[np.argsort(sols.sum(axis=1), kind="stable")]
    minimal = []
    while len(sols):
        m = sols[0]
        minimal.append(tuple(int(v) for v in m))
        sols = sols[~np.all(sols >= m, axis=1)]
    return sorted(minimal)


def lifting_solvable_by_search(ranks, choice, j, b):
    """Search x_j with r_{j,b} + x_j r_{j,a_j} divisible by every r_{i,a_i}, i != j.

    Divisibility depends on x_j only modulo the lcm of the other ranks,
    so searching ``0 <= x_j < lcm`` is exhaustive.
    """
    picked = [ranks[i][a] for i, a in enumerate(choice)]
    others = picked[:j] + picked[j + 1:]
    period = math.lcm(*others)
    rb = ranks[j][b]
    return any(all((rb + x * picked[j]) % r == 0 for r in others) for x in range(period))


def all_fg_by_search(ranks):
    shape = [len(r) for r in ranks]
    if len(ranks) <= 1:
        return True
    for choice in itertools.product(*(range(t) for t in shape)):
        for j in range(len(ranks)):
            for b in range(shape[j]):
                if b != choice[j] and not lifting_solvable_by_search(ranks, choice, j, b):
                    return False
    return True


def all_classes(profile, cap):
    """Every Fin and Big class with entries ``<= cap``, built from first principles."""
    from projgenus.bigmonoid import Big, Fin
    from projgenus.genus import GenusVector
    from projgenus.traces import enumerate_traces, quotient_profile

    out = []
    for flat in itertools.product(range(cap + 1), repeat=sum(profile.shape)):
        v = GenusVector.from_flat(profile, flat)
        ranks = {sum(r * x for r, x in zip(b.ranks, blk)) for b, blk in zip(profile.blocks, v.ints())}
        if len(ranks) <= 1:
            out.append(Fin(v))
    for trace in enumerate_traces(profile)[1:]:
        survivors = quotient_profile(profile, trace).survivors
        per_block = [list(itertools.product(range(cap + 1), repeat=len(c))) for c in survivors]
        for cls in itertools.product(*per_block):
            out.append(Big(trace, tuple(cls)))
    return out


def random_profile(rng, max_blocks=3, max_t=3, max_rank=12, force_unit=False):
    """Random consistent profile; multiplicities scale each block to a common k."""
    from projgenus.profile import AlgebraProfile

    ell = rng.randint(1, max_blocks)
    ranks = []
    for _ in range(ell):
        row = sorted(rng.sample(range(1, max_rank + 1), rng.randint(1, max_t)))
        if force_unit and 1 not in row:
            row[0] = 1
        ranks.append(tuple(row))
    k = math.lcm(*(sum(r) for r in ranks))
    return AlgebraProfile.from_ranks(k, *((r, [k // sum(r)] * len(r)) for r in ranks))


def finite_completion_exists(profile, target, bound):
    """Replace each inf by a value in ``0..bound`` so that all block ranks agree."""
    per_block = []
    for ranks, blk in zip(profile.ranks, target.blocks):
        fixed = sum(r * x.value for r, x in zip(ranks, blk) if x.is_finite)
        inf_ranks = [r for r, x in zip(ranks, blk) if x.is_inf]
        per_block.append({fixed + sum(c * r for c, r in zip(cs, inf_ranks))
                          for cs in itertools.product(range(bound + 1), repeat=len(inf_ranks))})
    return bool(set.intersection(*per_block))
