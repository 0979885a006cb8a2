"""Projectives as pairs (quotient class, trace ideal).

A countably generated projective ``P`` is either finitely generated
(``Fin``) or relatively big for its nonzero trace ``I`` (``Big``), in which
case it is determined by ``I`` and the finitely generated projective
``P/PI`` over the semiperfect quotient.  That quotient class is a vector
of multiplicities indexed by the survivors ``C_i = {1..t_i} \\ A_i``.

Addition pushes both summands to the quotient by the sum of the traces:

    (P1, I) + (P2, J) = (P1/P1J + P2/P2I, I + J)

The classes are modeled at genus level.  That is faithful for big
projectives; for finitely generated ones the genus need not determine the
module unless the algebra is module-finite over a semilocal domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .extnat import INF
from .genus import GenusVector, membership_A, membership_B
from .profile import AlgebraProfile
from .traces import TraceIdeal, quotient_profile, trace_sum

__all__ = ["Fin", "Big", "BigClass", "NotAGenus", "add", "to_genus", "from_genus"]


class NotAGenus(ValueError):
    """The vector lies in neither A nor B."""


@dataclass(frozen=True)
class Fin:
    vector: GenusVector

    def __str__(self) -> str:
        return f"Fin{self.vector}"


@dataclass(frozen=True)
class Big:
    trace: TraceIdeal
    quotient_class: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        cls = "(" + ",".join("(" + ",".join(map(str, c)) + ")" for c in self.quotient_class) + ")"
        return f"Big[{self.trace}; {cls}]"


BigClass = Union[Fin, Big]


def check(profile: AlgebraProfile, x: BigClass) -> None:
    """Raise ``ValueError`` unless ``x`` is a valid class for ``profile``."""
    if isinstance(x, Fin):
        if not x.vector.is_finite or membership_A(profile, x.vector) is None:
            raise ValueError(f"{x.vector} is not the genus of a finitely generated projective")
        return
    if x.trace.is_zero:
        raise ValueError("a big class needs a nonzero trace")
    survivors = quotient_profile(profile, x.trace).survivors
    if tuple(len(c) for c in x.quotient_class) != tuple(len(c) for c in survivors):
        raise ValueError(f"quotient class {x.quotient_class} does not fit survivors {survivors}")
    if any(v < 0 for c in x.quotient_class for v in c):
        raise ValueError("quotient multiplicities are non-negative")


def _restrict(profile: AlgebraProfile, x: BigClass, trace: TraceIdeal) -> tuple[tuple[int, ...], ...]:
    """The class of ``P / P trace`` as multiplicities on the survivors of ``trace``."""
    survivors = quotient_profile(profile, trace).survivors
    if isinstance(x, Fin):
        return tuple(tuple(block[j - 1].value for j in c)
                     for block, c in zip(x.vector.blocks, survivors))
    own = quotient_profile(profile, x.trace).survivors
    out = []
    for vals, mine, c in zip(x.quotient_class, own, survivors):
        lookup = dict(zip(mine, vals))
        out.append(tuple(lookup[j] for j in c))  # c is a subset of mine
    return tuple(out)


def add(profile: AlgebraProfile, x: BigClass, y: BigClass) -> BigClass:
    if isinstance(x, Fin) and isinstance(y, Fin):
        return Fin(x.vector + y.vector)
    tx = x.trace if isinstance(x, Big) else TraceIdeal(None)
    ty = y.trace if isinstance(y, Big) else TraceIdeal(None)
    trace = trace_sum(tx, ty)
    a = _restrict(profile, x, trace)
    b = _restrict(profile, y, trace)
    return Big(trace, tuple(tuple(u + v for u, v in zip(p, q)) for p, q in zip(a, b)))


def to_genus(profile: AlgebraProfile, x: BigClass) -> GenusVector:
    if isinstance(x, Fin):
        return x.vector
    survivors = quotient_profile(profile, x.trace).survivors
    blocks = []
    for t, c, vals in zip(profile.shape, survivors, x.quotient_class):
        lookup = dict(zip(c, vals))
        blocks.append([lookup.get(j, INF) for j in range(1, t + 1)])
    return GenusVector.of(*blocks)


def from_genus(profile: AlgebraProfile, v: GenusVector) -> BigClass:
    if v.is_finite:
        if membership_A(profile, v) is None:
            raise NotAGenus(f"{v}: block ranks differ, so it is not in A")
        return Fin(v)
    if not membership_B(profile, v):
        raise NotAGenus(f"{v}: some block is finite while another is infinite")
    trace = TraceIdeal(v.infinite_support())
    cls = tuple(tuple(x.value for x in block if x.is_finite) for block in v.blocks)
    return Big(trace, cls)
