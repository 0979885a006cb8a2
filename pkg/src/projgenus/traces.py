"""Trace ideals of countably generated projectives.

A nonzero trace ideal is identified with its localizations at the
exceptional maximal ideals: one nonempty subset ``A_i`` of the
indecomposables ``{1, ..., t_i}`` per block.  Indices here are 1-based, as
they name indecomposables ``U_{i,j}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .profile import AlgebraProfile

__all__ = [
    "TraceIdeal",
    "ZERO_TRACE",
    "enumerate_traces",
    "minimal_traces",
    "full_trace",
    "trace_sum",
    "quotient_profile",
    "QuotientDescription",
]


@dataclass(frozen=True)
class TraceIdeal:
    """``subsets is None`` encodes the zero ideal."""

    subsets: tuple[frozenset[int], ...] | None = None

    @classmethod
    def of(cls, *subsets: Iterable[int]) -> TraceIdeal:
        return cls(tuple(frozenset(s) for s in subsets))

    @property
    def is_zero(self) -> bool:
        return self.subsets is None

    def check(self, profile: AlgebraProfile) -> None:
        if self.subsets is None:
            return
        if len(self.subsets) != profile.ell:
            raise ValueError(f"trace has {len(self.subsets)} blocks, profile has {profile.ell}")
        for i, (a, t) in enumerate(zip(self.subsets, profile.shape)):
            if not a:
                raise ValueError(f"block {i}: nonzero trace needs a nonempty subset")
            if min(a) < 1 or max(a) > t:
                raise ValueError(f"block {i}: indices {sorted(a)} outside 1..{t}")

    def __le__(self, other: TraceIdeal) -> bool:  # inclusion
        if self.subsets is None:
            return True
        if other.subsets is None:
            return False
        return all(a <= b for a, b in zip(self.subsets, other.subsets))

    def __add__(self, other: TraceIdeal) -> TraceIdeal:
        return trace_sum(self, other)

    def __str__(self) -> str:
        if self.subsets is None:
            return "0"
        return "(" + ",".join("{" + ",".join(map(str, sorted(a))) + "}" for a in self.subsets) + ")"

    def sort_key(self):
        if self.subsets is None:
            return (0, ())
        return (1, tuple(tuple(sorted(a)) for a in self.subsets))


ZERO_TRACE = TraceIdeal(None)


def _nonempty_subsets(t: int) -> list[frozenset[int]]:
    subs = [frozenset(c) for n in range(1, t + 1) for c in itertools.combinations(range(1, t + 1), n)]
    return sorted(subs, key=lambda s: tuple(sorted(s)))


def enumerate_traces(profile: AlgebraProfile) -> list[TraceIdeal]:
    """Zero followed by every choice of nonempty subsets, in lexicographic order."""
    if profile.ell < 1:
        raise ValueError("trace enumeration needs at least one exceptional block")
    choices = [_nonempty_subsets(t) for t in profile.shape]
    return [ZERO_TRACE] + [TraceIdeal(tuple(c)) for c in itertools.product(*choices)]


def minimal_traces(profile: AlgebraProfile) -> list[TraceIdeal]:
    """The atoms of the trace lattice: a singleton in every block."""
    if profile.ell < 1:
        raise ValueError("minimal traces need at least one exceptional block")
    return [TraceIdeal.of(*({j} for j in c))
            for c in itertools.product(*(range(1, t + 1) for t in profile.shape))]


def full_trace(profile: AlgebraProfile) -> TraceIdeal:
    """The trace of the regular module."""
    return TraceIdeal.of(*(range(1, t + 1) for t in profile.shape))


def trace_sum(x: TraceIdeal, y: TraceIdeal) -> TraceIdeal:
    """Trace of a direct sum: blockwise union, zero is neutral."""
    if x.subsets is None:
        return y
    if y.subsets is None:
        return x
    if len(x.subsets) != len(y.subsets):
        raise ValueError("traces belong to different profiles")
    return TraceIdeal(tuple(a | b for a, b in zip(x.subsets, y.subsets)))


@dataclass(frozen=True)
class QuotientDescription:
    """Survivor indices ``C_i`` of the semiperfect quotient by a trace.

    The finitely generated projectives of the quotient form the free monoid
    on the survivors.
    """

    survivors: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(len(c) for c in self.survivors)

    @property
    def is_zero_ring(self) -> bool:
        return self.rank == 0


def quotient_profile(profile: AlgebraProfile, trace: TraceIdeal) -> QuotientDescription:
    if trace.is_zero:
        raise ValueError("quotient by the zero trace is the algebra itself")
    trace.check(profile)
    return QuotientDescription(tuple(
        tuple(j for j in range(1, t + 1) if j not in a)
        for a, t in zip(trace.subsets, profile.shape)))
