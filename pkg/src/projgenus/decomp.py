"""When are projectives direct sums of finitely generated ones?

A big genus ``Y`` comes from a direct sum of finitely generated projectives
exactly when ``Y = a + inf * a'`` with ``a, a'`` in A and ``a' != 0``.
Every projective decomposes this way iff finitely generated projectives
lift along each minimal trace, which reduces to a gcd condition on the
ranks: for every choice ``a_1..a_l`` of one indecomposable per block, every
block ``j`` and every ``b != a_j``,

    gcd(lcm(r_{i,a_i} : i != j), r_{j,a_j})  divides  r_{j,b}.

Block and indecomposable indices in certificates are 1-based.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .diophantine import DiophantineSystem, minimal_solutions
from .extnat import INF
from .genus import GenusVector, block_ranks, membership_A, membership_B
from .profile import AlgebraProfile, is_degenerate

__all__ = [
    "EquationsWitness",
    "lemma_equations_solvable",
    "LiftingObstruction",
    "FgDecision",
    "decide_all_fg",
    "coprime_criterion",
    "Witness",
    "CongruenceObstruction",
    "NotBig",
    "decompose_big",
]


class EquationsWitness(NamedTuple):
    """``m*y - s*x_last = r_last`` and the expanded solution ``xs``."""

    m: int
    y: int
    x_last: int
    xs: tuple[int, ...]


def lemma_equations_solvable(r: Sequence[int], s: int, r_last: int) -> EquationsWitness | None:
    """Solve ``r_i x_i - s x_l = r_last`` for all ``i < l`` over N0.

    Solvable iff ``gcd(lcm(r), s)`` divides ``r_last``.  The witness uses the
    least possible ``x_l``.
    """
    if not r or min(r) < 1 or s < 1 or r_last < 1:
        raise ValueError("need at least one positive r_i and positive s, r_last")
    m = math.lcm(*r)
    g = math.gcd(m, s)
    if r_last % g:
        return None
    mod = m // g
    x_last = (-(r_last // g) * pow(s // g, -1, mod)) % mod if mod > 1 else 0
    y = (r_last + s * x_last) // m
    return EquationsWitness(m, y, x_last, tuple(m // ri * y for ri in r) + (x_last,))


@dataclass(frozen=True)
class LiftingObstruction:
    """A choice ``a`` of indecomposables, a block ``j`` and ``b != a_j`` such
    that ``gcd(lcm_others, pivot)`` does not divide ``target``."""

    choice: tuple[int, ...]
    j: int
    b: int
    lcm_others: int
    pivot: int
    gcd: int
    target: int

    def verify(self, profile: AlgebraProfile) -> bool:
        ranks = profile.ranks
        j = self.j - 1
        if self.b == self.choice[j]:
            return False
        others = [ranks[i][a - 1] for i, a in enumerate(self.choice) if i != j]
        return (self.lcm_others == math.lcm(*others)
                and self.pivot == ranks[j][self.choice[j] - 1]
                and self.target == ranks[j][self.b - 1]
                and self.gcd == math.gcd(self.lcm_others, self.pivot)
                and self.target % self.gcd != 0)

    def __str__(self) -> str:
        return (f"choice a={self.choice}, j={self.j}, b={self.b}: "
                f"gcd({self.lcm_others},{self.pivot})={self.gcd} does not divide {self.target}")


@dataclass(frozen=True)
class FgDecision:
    holds: bool
    obstruction: LiftingObstruction | None = None

    def __bool__(self) -> bool:
        return self.holds


def decide_all_fg(profile: AlgebraProfile) -> FgDecision:
    """Is every projective a direct sum of finitely generated ones?

    On failure the lexicographically least violating ``(a, j, b)`` is reported.
    """
    if is_degenerate(profile):
        return FgDecision(True)
    ranks = profile.ranks
    for choice in itertools.product(*(range(t) for t in profile.shape)):
        picked = [ranks[i][a] for i, a in enumerate(choice)]
        for j, row in enumerate(ranks):
            others = math.lcm(*(picked[:j] + picked[j + 1:]))
            g = math.gcd(others, picked[j])
            for b, rb in enumerate(row):
                if b != choice[j] and rb % g:
                    return FgDecision(False, LiftingObstruction(
                        tuple(a + 1 for a in choice), j + 1, b + 1, others, picked[j], g, rb))
    return FgDecision(True)


def coprime_criterion(profile: AlgebraProfile) -> bool:
    """Ranks in different blocks are pairwise coprime."""
    for bi, bj in itertools.combinations(profile.blocks, 2):
        if any(math.gcd(x, y) != 1 for x in bi.ranks for y in bj.ranks):
            return False
    return True


class NotBig(ValueError):
    """The target is not the genus of a big projective."""


@dataclass(frozen=True)
class Witness:
    """``target = a + inf * aprime`` with ``a, aprime`` in A, ``aprime != 0``."""

    a: GenusVector
    aprime: GenusVector
    target: GenusVector

    def problems(self, profile: AlgebraProfile) -> list[str]:
        out = []
        if not self.a.is_finite or membership_A(profile, self.a) is None:
            out.append(f"a={self.a} is not in A")
        if not self.aprime.is_finite or membership_A(profile, self.aprime) is None:
            out.append(f"a'={self.aprime} is not in A")
        elif self.aprime.is_zero:
            out.append("a' is zero")
        elif self.a.is_finite and self.a + self.aprime.scale(INF) != self.target:
            out.append(f"{self.a} + inf*{self.aprime} != {self.target}")
        return out

    def verify(self, profile: AlgebraProfile) -> bool:
        return not self.problems(profile)

    def __str__(self) -> str:
        return f"{self.target} = {self.a} + inf*{self.aprime}"


@dataclass(frozen=True)
class CongruenceObstruction:
    """Blocks ``i`` and ``j`` whose attainable ranks lie in disjoint residue
    classes modulo ``modulus``.

    In block ``i`` the rank of any finite completion of the target is
    ``fixed_i`` plus a combination of the ranks at the infinite positions,
    all of which ``modulus`` divides.
    """

    target: GenusVector
    blocks: tuple[int, int]
    modulus: int
    fixed: tuple[int, int]
    residues: tuple[int, int]
    congruences: tuple[str, str]

    def verify(self, profile: AlgebraProfile) -> bool:
        g = self.modulus
        supp = self.target.infinite_support()
        for bi, c, res in zip(self.blocks, self.fixed, self.residues):
            i = bi - 1
            ranks = profile.ranks[i]
            finite = sum(r * x.value for r, x in zip(ranks, self.target.blocks[i]) if x.is_finite)
            if finite != c or c % g != res:
                return False
            if any(ranks[j - 1] % g for j in supp[i]):
                return False
        return g > 1 and self.residues[0] != self.residues[1]

    def __str__(self) -> str:
        return f"{self.congruences[0]} vs {self.congruences[1]}"


def _congruence(i: int, c: int, ranks: Sequence[int], positions, g: int) -> str:
    terms = [str(c)] if c else []
    terms += [f"{ranks[j - 1]}x_{{{i},{j}}}" for j in sorted(positions)]
    return f"{' + '.join(terms)} ≡ {c % g} mod {g}"


def _restricted_rows(profile, supp, rhs_fixed):
    """Equations ``R_i x_i - R_{i+1} x_{i+1} = c_{i+1} - c_i`` on the infinite positions."""
    cols = [(i, j) for i, s in enumerate(supp) for j in sorted(s)]
    rows, rhs = [], []
    for i in range(profile.ell - 1):
        row = [0] * len(cols)
        for n, (bi, j) in enumerate(cols):
            if bi == i:
                row[n] = profile.ranks[i][j - 1]
            elif bi == i + 1:
                row[n] = -profile.ranks[i + 1][j - 1]
        rows.append(row)
        rhs.append(rhs_fixed[i + 1] - rhs_fixed[i])
    return cols, rows, rhs


def _place(profile, cols, values, base=None) -> GenusVector:
    blocks = [[0] * t for t in profile.shape] if base is None else [list(b) for b in base]
    for (i, j), v in zip(cols, values):
        blocks[i][j - 1] = v
    return GenusVector.of(*blocks)


def decompose_big(profile: AlgebraProfile, target: GenusVector) -> Witness | CongruenceObstruction:
    """Write a big genus as ``a + inf * a'`` or certify that it cannot be."""
    if not membership_B(profile, target):
        raise NotBig(f"{target} is not the genus of a big projective")
    supp = target.infinite_support()
    fixed = [sum(r * x.value for r, x in zip(ranks, blk) if x.is_finite)
             for ranks, blk in zip(profile.ranks, target.blocks)]
    finite_part = [[x.value if x.is_finite else 0 for x in blk] for blk in target.blocks]

    cols, rows, _ = _restricted_rows(profile, supp, [0] * profile.ell)
    basis = minimal_solutions(DiophantineSystem(rows, nvars=len(cols)))
    chosen = []
    for n in range(len(cols)):
        sol = next(s for s in basis if s[n] > 0)
        if sol not in chosen:
            chosen.append(sol)
    aprime = _place(profile, cols, [sum(c) for c in zip(*chosen)])

    cols, rows, rhs = _restricted_rows(profile, supp, fixed)
    sols = minimal_solutions(DiophantineSystem(rows, rhs, nvars=len(cols)))
    if sols:
        def rank_of(s):
            return block_ranks(profile, _place(profile, cols, s, finite_part))[0].value
        best = min(sols, key=lambda s: (rank_of(s), s))
        witness = Witness(_place(profile, cols, best, finite_part), aprime, target)
        problems = witness.problems(profile)
        if problems:
            raise AssertionError(f"internal error, witness failed: {problems}")
        return witness

    d = [math.gcd(*(profile.ranks[i][j - 1] for j in s)) for i, s in enumerate(supp)]
    for i, j in itertools.combinations(range(profile.ell), 2):
        g = math.gcd(d[i], d[j])
        if fixed[i] % g != fixed[j] % g:
            obstruction = CongruenceObstruction(
                target, (i + 1, j + 1), g, (fixed[i], fixed[j]),
                (fixed[i] % g, fixed[j] % g),
                (_congruence(i + 1, fixed[i], profile.ranks[i], supp[i], g),
                 _congruence(j + 1, fixed[j], profile.ranks[j], supp[j], g)))
            if not obstruction.verify(profile):
                raise AssertionError(f"internal error, obstruction failed to verify: {obstruction}")
            return obstruction
    raise AssertionError(f"no finite completion of {target} found, yet no congruence obstruction")
