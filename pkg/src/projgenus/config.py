"""Search bounds for the bounded verification routines."""

from __future__ import annotations

import os

from .profile import AlgebraProfile

ENV_BOUND = "PROJGENUS_BOUND"
MIN_COORDINATE_BOUND = 12


class BoundError(ValueError):
    """A configured bound is not a non-negative integer."""


def coordinate_bound(profile: AlgebraProfile | None = None, override: int | None = None) -> int:
    """Per-coordinate bound: ``override``, else ``$PROJGENUS_BOUND``, else
    ``max(12, 2 * largest rank)``."""
    if override is not None:
        return _check(override, "bounds.coordinate")
    env = os.environ.get(ENV_BOUND)
    if env:
        try:
            return _check(int(env), f"${ENV_BOUND}")
        except ValueError:
            raise BoundError(f"${ENV_BOUND} must be a non-negative integer, got {env!r}") from None
    top = max((r for b in profile.blocks for r in b.ranks), default=0) if profile else 0
    return max(MIN_COORDINATE_BOUND, 2 * top)


def _check(value: int, source: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise BoundError(f"{source} must be a non-negative integer, got {value!r}")
    return value
