"""The semiring N0* = {0, 1, 2, ...} U {inf}.

Addition and multiplication extend those of the natural numbers with

    x + inf = inf + x = inf
    x * inf = inf * x = inf   for x != 0
    0 * inf = inf * 0 = 0

Finite values are plain Python integers, so there is no overflow.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence, Union

__all__ = ["ExtNat", "INF", "ext", "dot"]


@functools.total_ordering
class ExtNat:
    """An element of N0*.  Immutable and hashable.

    Finite values compare and hash equal to the corresponding ``int``.
    ``INF`` is the only infinite value and is greater than every finite one.
    """

    __slots__ = ("_value",)

    def __init__(self, value: int | None):
        if value is not None:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"ExtNat needs an int or None, got {value!r}")
            if value < 0:
                raise ValueError(f"ExtNat values are non-negative, got {value}")
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("ExtNat is immutable")

    def __reduce__(self):
        return (ExtNat, (self._value,))

    @property
    def is_inf(self) -> bool:
        return self._value is None

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> int:
        """The finite value; raises ``ValueError`` on ``INF``."""
        if self._value is None:
            raise ValueError("INF has no finite value")
        return self._value

    def __add__(self, other) -> ExtNat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._value is None or other._value is None:
            return INF
        return ExtNat(self._value + other._value)

    __radd__ = __add__

    def __mul__(self, other) -> ExtNat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._value == 0 or other._value == 0:
            return ZERO
        if self._value is None or other._value is None:
            return INF
        return ExtNat(self._value * other._value)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._value is None:
            return False
        if other._value is None:
            return True
        return self._value < other._value

    def __hash__(self) -> int:
        return hash(self._value) if self._value is not None else hash(float("inf"))

    def __bool__(self) -> bool:
        return self._value != 0

    def __repr__(self) -> str:
        return "INF" if self._value is None else f"ExtNat({self._value})"

    def __str__(self) -> str:
        return "inf" if self._value is None else str(self._value)


def _coerce(x):
    if isinstance(x, ExtNat):
        return x
    if isinstance(x, int) and not isinstance(x, bool) and x >= 0:
        return ExtNat(x)
    return NotImplemented


INF = object.__new__(ExtNat)
object.__setattr__(INF, "_value", None)
ZERO = ExtNat(0)

ExtNatLike = Union[ExtNat, int, str, float]


def ext(x: ExtNatLike) -> ExtNat:
    """Coerce ``x`` to an ``ExtNat``.

    Accepts ``ExtNat``, non-negative ``int``, ``float('inf')`` and the
    strings ``"inf"``, ``"∞"`` or a decimal literal.
    """
    if isinstance(x, ExtNat):
        return x
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "∞", "infinity"):
            return INF
        return ExtNat(int(s))
    if isinstance(x, float):
        if x == float("inf"):
            return INF
        if x.is_integer():
            return ExtNat(int(x))
        raise ValueError(f"{x!r} is not in N0*")
    return ExtNat(x)


def dot(coeffs: Sequence[int], vec: Sequence[ExtNatLike]) -> ExtNat:
    """Sum of ``coeffs[j] * vec[j]`` in N0*; the empty sum is 0."""
    if len(coeffs) != len(vec):
        raise ValueError(f"length mismatch: {len(coeffs)} coefficients, {len(vec)} entries")
    total = ZERO
    for c, v in zip(coeffs, vec):
        total = total + ExtNat(c) * ext(v)
    return total


def ext_tuple(xs: Iterable[ExtNatLike]) -> tuple[ExtNat, ...]:
    return tuple(ext(x) for x in xs)
