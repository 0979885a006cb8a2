"""Profile data of a locally semiperfect algebra.

An ``AlgebraProfile`` records the length ``k`` of the simple artinian ring
of fractions and, for each of the finitely many exceptional maximal ideals,
a ``Block`` listing the ranks ``r_j`` and multiplicities ``m_j`` of the
indecomposable projectives of the localization.  Each block must satisfy
``sum_j r_j * m_j == k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence

__all__ = [
    "Block",
    "AlgebraProfile",
    "ProfileError",
    "ZeroRank",
    "ZeroMultiplicity",
    "BlockSumMismatch",
    "DuplicateLabel",
    "EmptyBlock",
    "validate",
    "is_degenerate",
]


class ProfileError(ValueError):
    """Base class for profile validation failures."""


class ZeroRank(ProfileError):
    pass


class ZeroMultiplicity(ProfileError):
    pass


class EmptyBlock(ProfileError):
    pass


class DuplicateLabel(ProfileError):
    pass


class BlockSumMismatch(ProfileError):
    def __init__(self, index: int, actual: int, k: int):
        super().__init__(f"block {index}: sum of rank*multiplicity is {actual}, expected k={k}")
        self.index = index
        self.actual = actual
        self.k = k


@dataclass(frozen=True)
class Block:
    label: str
    ranks: tuple[int, ...]
    multiplicities: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.ranks)

    @property
    def length(self) -> int:
        return sum(r * m for r, m in zip(self.ranks, self.multiplicities))


@dataclass(frozen=True)
class AlgebraProfile:
    k: int
    blocks: tuple[Block, ...] = ()

    @property
    def ell(self) -> int:
        return len(self.blocks)

    @property
    def shape(self) -> tuple[int, ...]:
        """``(t_1, ..., t_l)``."""
        return tuple(b.t for b in self.blocks)

    @property
    def ranks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b.ranks for b in self.blocks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "blocks": [
                {"label": b.label, "ranks": list(b.ranks), "multiplicities": list(b.multiplicities)}
                for b in self.blocks
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> AlgebraProfile:
        """Parse and validate the JSON-style mapping produced by ``to_dict``."""
        return validate(data)

    @classmethod
    def from_ranks(cls, k: int, *blocks: tuple[Sequence[int], Sequence[int]]) -> AlgebraProfile:
        """Build from ``(ranks, multiplicities)`` pairs with labels ``m1, m2, ...``."""
        raw = {
            "k": k,
            "blocks": [
                {"label": f"m{i + 1}", "ranks": list(r), "multiplicities": list(m)}
                for i, (r, m) in enumerate(blocks)
            ],
        }
        return validate(raw)


def _positive_ints(values, what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ProfileError(f"{what} must be integers, got {v!r}")
        out.append(v)
    return tuple(out)


def validate(raw: AlgebraProfile | Mapping[str, Any]) -> AlgebraProfile:
    """Check a raw profile and return an ``AlgebraProfile``.

    ``raw`` is either an ``AlgebraProfile`` or a mapping with keys ``k`` and
    ``blocks``.  Raises the ``ProfileError`` subclass of the first violated
    invariant.
    """
    if isinstance(raw, AlgebraProfile):
        raw = raw.to_dict()
    k = raw.get("k")
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ProfileError(f"k must be a positive integer, got {k!r}")

    blocks = []
    seen = set()
    for i, b in enumerate(raw.get("blocks", ())):
        if isinstance(b, Block):
            label, ranks, mults = b.label, b.ranks, b.multiplicities
        else:
            label = str(b.get("label", f"m{i + 1}"))
            ranks, mults = b.get("ranks", ()), b.get("multiplicities", ())
        ranks = _positive_ints(ranks, "ranks")
        mults = _positive_ints(mults, "multiplicities")
        if not ranks or not mults:
            raise EmptyBlock(f"block {i} ({label}) has no indecomposables")
        if len(ranks) != len(mults):
            raise EmptyBlock(
                f"block {i} ({label}): {len(ranks)} ranks but {len(mults)} multiplicities")
        if min(ranks) < 1:
            raise ZeroRank(f"block {i} ({label}): ranks must be positive, got {list(ranks)}")
        if min(mults) < 1:
            raise ZeroMultiplicity(
                f"block {i} ({label}): multiplicities must be positive, got {list(mults)}")
        actual = sum(r * m for r, m in zip(ranks, mults))
        if actual != k:
            raise BlockSumMismatch(i, actual, k)
        if label in seen:
            raise DuplicateLabel(f"label {label!r} used twice")
        seen.add(label)
        blocks.append(Block(label, ranks, mults))
    return AlgebraProfile(k, tuple(blocks))


def is_degenerate(profile: AlgebraProfile) -> bool:
    """At most one exceptional block.

    With ``l <= 1`` every projective is a direct sum of finitely generated
    ones and the genus monoid is free.
    """
    return profile.ell <= 1
