"""Minimal non-negative solutions of linear Diophantine systems.

The solver is the Contejean-Devie completion procedure.  Starting from the
unit vectors, a frontier of non-solutions is grown one unit at a time, but a
vector ``x`` is only increased along a coordinate ``j`` when the residual
``A x`` points "against" column ``j`` (``<A x, A e_j> < 0``).  Candidates
that dominate an already found solution are dropped.  For homogeneous
systems the procedure terminates with the Hilbert basis.

Inhomogeneous systems ``A x = b`` are homogenized with an extra variable
``x0`` carrying the column ``-b``; the minimal solutions are exactly the
Hilbert basis elements with ``x0 = 1``, and the search never lets ``x0``
exceed 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = ["DiophantineSystem", "minimal_solutions", "dominates"]

Vector = tuple[int, ...]


@dataclass(frozen=True)
class DiophantineSystem:
    """The system ``A x = b`` over the non-negative integers.

    ``matrix`` holds the rows of ``A`` (entries may be negative).  ``rhs``
    defaults to zero.  ``nvars`` must be given when ``A`` has no rows.
    """

    matrix: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...] = ()
    nvars: int | None = None

    def __init__(self, matrix: Sequence[Sequence[int]], rhs: Sequence[int] | None = None,
                 nvars: int | None = None):
        rows = tuple(tuple(int(a) for a in row) for row in matrix)
        if nvars is None:
            if not rows:
                raise ValueError("nvars is required for a system without equations")
            nvars = len(rows[0])
        if any(len(row) != nvars for row in rows):
            raise ValueError("all rows must have the same number of columns")
        rhs = tuple(int(c) for c in rhs) if rhs is not None else (0,) * len(rows)
        if len(rhs) != len(rows):
            raise ValueError(f"right-hand side has {len(rhs)} entries for {len(rows)} equations")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "nvars", nvars)

    @property
    def homogeneous(self) -> bool:
        return not any(self.rhs)

    def residual(self, x: Sequence[int]) -> tuple[int, ...]:
        """``A x - b``."""
        return tuple(sum(a * v for a, v in zip(row, x)) - c
                     for row, c in zip(self.matrix, self.rhs))

    def is_solution(self, x: Sequence[int]) -> bool:
        return len(x) == self.nvars and min(x, default=0) >= 0 and not any(self.residual(x))


def dominates(y: Sequence[int], x: Sequence[int]) -> bool:
    """True when ``y >= x`` componentwise."""
    return all(a >= b for a, b in zip(y, x))


def minimal_solutions(system: DiophantineSystem) -> list[Vector]:
    """All componentwise-minimal non-negative solutions, sorted lexicographically.

    For a homogeneous system this is the Hilbert basis of the solution
    monoid (the zero vector is excluded).  For ``b != 0`` an empty list
    means the system has no non-negative solution.
    """
    n = system.nvars
    homogeneous = system.homogeneous
    # Columns of the homogenized matrix; index 0 is the -b column.
    cols = [tuple(-c for c in system.rhs)]
    cols += [tuple(row[j] for row in system.matrix) for j in range(n)]
    m = n + 1

    def image(x: Vector) -> tuple[int, ...]:
        return tuple(sum(col[i] * x[j] for j, col in enumerate(cols) if x[j])
                     for i in range(len(system.matrix)))

    def unit(j: int) -> Vector:
        return tuple(1 if i == j else 0 for i in range(m))

    found: list[Vector] = []
    start = range(1, m) if homogeneous else range(m)
    frontier = {unit(j) for j in start}
    while frontier:
        pending = []
        for x in sorted(frontier):
            ax = image(x)
            if not any(ax):
                found.append(x)
            else:
                pending.append((x, ax))
        nxt = set()
        for x, ax in pending:
            for j in start:
                if j == 0 and x[0] >= 1:
                    continue
                if sum(a * c for a, c in zip(ax, cols[j])) >= 0:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1:]
                if y in nxt or any(dominates(y, s) for s in found):
                    continue
                nxt.add(y)
        frontier = nxt

    if homogeneous:
        return sorted(x[1:] for x in found)
    return sorted(x[1:] for x in found if x[0] == 1)
