"""Genus vectors and the monoids they form.

The genus of a countably generated projective is recorded, block by block,
as the multiplicities ``x_{i,j}`` in N0* of the indecomposables of each
exceptional localization.  Finitely generated projectives have genera in

    A = { X finite : sum_j r_{i,j} x_{i,j} is the same r for every block i }

and the remaining (big) projectives have genera in

    B = { Y : every block has at least one entry equal to inf }.

Every such vector is realized by some projective module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .config import coordinate_bound
from .diophantine import DiophantineSystem, minimal_solutions
from .extnat import INF, ExtNat, ExtNatLike, dot, ext
from .profile import AlgebraProfile

__all__ = [
    "GenusVector",
    "RankedGenus",
    "ShapeMismatch",
    "block_ranks",
    "membership_A",
    "membership_B",
    "rank_monoid_contains",
    "rank_monoid",
    "minimal_solutions",
    "genus_system",
    "hilbert_basis_A",
    "big_generators",
    "verify_big_generators",
    "verify_hilbert_basis",
    "parse_genus",
]


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class GenusVector:
    """Element of prod_i (N0*)^{t_i}.  Ordered lexicographically, inf last."""

    blocks: tuple[tuple[ExtNat, ...], ...]

    @classmethod
    def of(cls, *blocks: Iterable[ExtNatLike]) -> GenusVector:
        return cls(tuple(tuple(ext(x) for x in b) for b in blocks))

    @classmethod
    def zero(cls, profile: AlgebraProfile) -> GenusVector:
        return cls.of(*((0,) * t for t in profile.shape))

    @classmethod
    def from_flat(cls, profile: AlgebraProfile, flat: Sequence[ExtNatLike]) -> GenusVector:
        it = iter(flat)
        return cls.of(*([next(it) for _ in range(t)] for t in profile.shape))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def flat(self) -> tuple[ExtNat, ...]:
        return tuple(x for b in self.blocks for x in b)

    @property
    def is_finite(self) -> bool:
        return all(x.is_finite for x in self.flat())

    @property
    def is_zero(self) -> bool:
        return not any(self.flat())

    def infinite_support(self) -> tuple[frozenset[int], ...]:
        """``S_i = {j : x_{i,j} = inf}`` per block, 1-based."""
        return tuple(frozenset(j + 1 for j, x in enumerate(b) if x.is_inf) for b in self.blocks)

    def support(self) -> tuple[frozenset[int], ...]:
        """Nonzero positions per block, 1-based."""
        return tuple(frozenset(j + 1 for j, x in enumerate(b) if x) for b in self.blocks)

    def __add__(self, other: GenusVector) -> GenusVector:
        if not isinstance(other, GenusVector):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add genus vectors of shapes {self.shape} and {other.shape}")
        return GenusVector(tuple(tuple(a + b for a, b in zip(x, y))
                                 for x, y in zip(self.blocks, other.blocks)))

    def scale(self, c: ExtNatLike) -> GenusVector:
        c = ext(c)
        return GenusVector(tuple(tuple(c * x for x in b) for b in self.blocks))

    def ints(self) -> tuple[tuple[int, ...], ...]:
        """Entries as plain ints; raises on inf."""
        return tuple(tuple(x.value for x in b) for b in self.blocks)

    def to_json(self) -> list[list[int | str]]:
        return [[x.value if x.is_finite else "inf" for x in b] for b in self.blocks]

    def __str__(self) -> str:
        return "(" + ",".join("(" + ",".join(str(x) for x in b) + ")" for b in self.blocks) + ")"


def parse_genus(text: str) -> GenusVector:
    """Parse ``"((inf,1),(inf,0))"``.  Also accepts ``∞`` and whitespace."""
    tokens = []
    atom = ""
    for ch in text:
        if ch in "(),":
            if atom.strip():
                tokens.append(atom.strip())
            atom = ""
            tokens.append(ch)
        elif ch.isspace():
            if atom.strip():
                tokens.append(atom.strip())
            atom = ""
        else:
            atom += ch
    if atom.strip():
        tokens.append(atom.strip())

    pos = 0

    def expect(tok):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            got = tokens[pos] if pos < len(tokens) else "end of input"
            raise ValueError(f"malformed genus {text!r}: expected {tok!r}, got {got!r}")
        pos += 1

    def group(parse_item):
        nonlocal pos
        expect("(")
        items = []
        if pos < len(tokens) and tokens[pos] == ")":
            pos += 1
            return items
        while True:
            items.append(parse_item())
            if pos < len(tokens) and tokens[pos] == ",":
                pos += 1
                continue
            expect(")")
            return items

    def entry():
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] in "(),":
            raise ValueError(f"malformed genus {text!r}: expected a number or inf")
        tok = tokens[pos]
        pos += 1
        try:
            return ext(tok)
        except ValueError:
            raise ValueError(f"malformed genus {text!r}: bad entry {tok!r}") from None

    blocks = group(lambda: group(entry))
    if pos != len(tokens):
        raise ValueError(f"malformed genus {text!r}: trailing input")
    return GenusVector(tuple(tuple(b) for b in blocks))


def _check_shape(profile: AlgebraProfile, v: GenusVector) -> None:
    if v.shape != profile.shape:
        raise ShapeMismatch(f"genus of shape {v.shape} does not match profile shape {profile.shape}")


def block_ranks(profile: AlgebraProfile, v: GenusVector) -> tuple[ExtNat, ...]:
    """``sum_j r_{i,j} x_{i,j}`` for each block ``i``."""
    _check_shape(profile, v)
    return tuple(dot(r, x) for r, x in zip(profile.ranks, v.blocks))


def membership_A(profile: AlgebraProfile, v: GenusVector) -> int | None:
    """The rank ``r`` if ``v`` is the genus of a finitely generated projective, else None."""
    _check_shape(profile, v)
    if not v.is_finite:
        raise ValueError(f"membership in A needs a finite genus, got {v}")
    ranks = {x.value for x in block_ranks(profile, v)}
    if len(ranks) > 1:
        return None
    return ranks.pop() if ranks else 0


def membership_B(profile: AlgebraProfile, v: GenusVector) -> bool:
    """True iff every block has an infinite entry."""
    _check_shape(profile, v)
    return all(x.is_inf for x in block_ranks(profile, v))


def _numerical_monoid_table(gens: Sequence[int], n: int) -> bytearray:
    table = bytearray(n + 1)
    table[0] = 1
    for g in sorted(set(gens)):
        for s in range(g, n + 1):
            if table[s - g]:
                table[s] = 1
    return table


def rank_monoid_contains(profile: AlgebraProfile, r: int) -> bool:
    """Is ``r`` the rank of some finitely generated projective?"""
    if r < 0:
        return False
    return all(_numerical_monoid_table(b.ranks, r)[r] for b in profile.blocks)


def rank_monoid(profile: AlgebraProfile, upto: int) -> list[int]:
    """All ranks ``0 <= r <= upto`` of finitely generated projectives."""
    tables = [_numerical_monoid_table(b.ranks, upto) for b in profile.blocks]
    return [r for r in range(upto + 1) if all(t[r] for t in tables)]


class RankedGenus(NamedTuple):
    vector: GenusVector
    rank: int

    def __str__(self) -> str:
        return f"{self.vector}_{self.rank}"


def genus_system(profile: AlgebraProfile) -> DiophantineSystem:
    """Homogeneous equations saying consecutive block ranks agree.

    Variables are the genus entries, flattened block by block.
    """
    n = sum(profile.shape)
    offsets = list(itertools.accumulate(profile.shape, initial=0))
    rows = []
    for i in range(profile.ell - 1):
        row = [0] * n
        for j, r in enumerate(profile.blocks[i].ranks):
            row[offsets[i] + j] = r
        for j, r in enumerate(profile.blocks[i + 1].ranks):
            row[offsets[i + 1] + j] = -r
        rows.append(row)
    return DiophantineSystem(rows, nvars=n)


def hilbert_basis_A(profile: AlgebraProfile) -> list[RankedGenus]:
    """Minimal generating set of A, each generator tagged with its rank."""
    if profile.ell < 1:
        raise ValueError("the genus monoid needs at least one exceptional block")
    out = []
    for x in minimal_solutions(genus_system(profile)):
        v = GenusVector.from_flat(profile, x)
        out.append(RankedGenus(v, membership_A(profile, v)))
    return sorted(out)


def big_generators(profile: AlgebraProfile) -> list[GenusVector]:
    """Minimal generating set of the semigroup B.

    One inf per block with all other entries 0, or with a single further 1.
    Depends only on the shape ``(t_1, ..., t_l)``; correctness beyond the
    two-by-two case is checked by ``verify_big_generators``.
    """
    if profile.ell < 2:
        raise ValueError("big generators are defined for at least two exceptional blocks")
    shape = profile.shape
    gens = []
    for pattern in itertools.product(*(range(t) for t in shape)):
        base = [[0] * t for t in shape]
        for i, j in enumerate(pattern):
            base[i][j] = INF
        gens.append(GenusVector.of(*base))
        for i, t in enumerate(shape):
            for j in range(t):
                if j == pattern[i]:
                    continue
                bumped = [list(b) for b in base]
                bumped[i][j] = 1
                gens.append(GenusVector.of(*bumped))
    return sorted(gens)


def _big_box(shape: Sequence[int], bound: int) -> list[GenusVector]:
    values = [ext(v) for v in range(bound + 1)] + [INF]
    per_block = [[b for b in itertools.product(values, repeat=t) if any(x.is_inf for x in b)]
                 for t in shape]
    return [GenusVector(tuple(c)) for c in itertools.product(*per_block)]


def verify_big_generators(profile: AlgebraProfile, gens: Sequence[GenusVector] | None = None,
                          bound: int | None = None) -> list[str]:
    """Bounded check that ``gens`` is a minimal generating set of B.

    Checks that every element of B with finite entries ``<= bound`` is a
    sum of generators, and that no generator is a sum of two elements of B
    both different from it (the idempotents ``Y + Y = Y`` with only inf and
    0 entries make the naive test vacuous).  Returns a list of problems.
    """
    if gens is None:
        gens = big_generators(profile)
    if bound is None:
        bound = min(4, coordinate_bound(profile))
    problems = []
    for g in gens:
        if not membership_B(profile, g):
            problems.append(f"{g} is not in B")
    box = _big_box(profile.shape, bound)
    inbox = set(box)

    reach = {g for g in gens if g in inbox}
    frontier = set(reach)
    while frontier:
        new = set()
        for x in frontier:
            for g in gens:
                y = x + g
                if y in inbox and y not in reach:
                    new.add(y)
        reach |= new
        frontier = new
    for v in box:
        if v not in reach:
            problems.append(f"{v} is not a sum of generators")

    for g in gens:
        s = g.infinite_support()
        cands = [y for y in box
                 if y != g
                 and all(a <= b for a, b in zip(y.infinite_support(), s))
                 and all(x <= gx for x, gx in zip(y.flat(), g.flat()) if gx.is_finite)]
        for y, z in itertools.combinations_with_replacement(cands, 2):
            if y + z == g:
                problems.append(f"{g} = {y} + {z} is decomposable")
                break
    return problems


def verify_hilbert_basis(profile: AlgebraProfile, basis: Sequence[RankedGenus] | None = None,
                         bound: int | None = None) -> list[str]:
    """Soundness, irreducibility and bounded completeness of a basis of A.

    Completeness is checked for every member of A with entries ``<= bound``.
    Returns a list of problems.
    """
    if basis is None:
        basis = hilbert_basis_A(profile)
    if bound is None:
        bound = coordinate_bound(profile)
    problems = []
    gens = []
    for g in basis:
        v = g.vector
        if not v.is_finite or membership_A(profile, v) != g.rank or v.is_zero:
            problems.append(f"{g} is not a nonzero member of A with that rank")
            continue
        gens.append(v.ints())
    flat_gens = [tuple(x for b in g for x in b) for g in gens]

    for g in flat_gens:
        for h in flat_gens:
            if h != g and all(a <= b for a, b in zip(h, g)):
                rest = GenusVector.from_flat(profile, [b - a for a, b in zip(h, g)])
                if membership_A(profile, rest) is not None:
                    problems.append(f"{GenusVector.from_flat(profile, g)} is reducible")
                    break

    reach = {tuple([0] * sum(profile.shape))}
    for x in itertools.product(range(bound + 1), repeat=sum(profile.shape)):
        if not any(x):
            continue
        v = GenusVector.from_flat(profile, x)
        if membership_A(profile, v) is None:
            continue
        if any(all(a <= b for a, b in zip(g, x)) and tuple(b - a for a, b in zip(g, x)) in reach
               for g in flat_gens):
            reach.add(x)
        else:
            problems.append(f"{v} is in A but not a sum of basis elements")
    return problems
