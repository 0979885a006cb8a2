"""Explicit semiperfect Z_(p)-orders in M_k(Q).

Given ``parts = ((r_1, m_1), ..., (r_t, m_t))`` with ``sum m_i r_i = k``,
``{1..k}`` is cut into blocks ``A_{i,a}`` of size ``r_i`` (``a = 1..m_i``)
and order-preserving bijections ``f_{i,a,b}: A_{i,a} -> A_{i,b}`` define
0/1 matrices

    e_{i,a,b} = sum_{j in A_{i,a}} E_{f_{i,a,b}(j), j}.

The order is ``Lambda = M_k(p Z_(p)) + sum Z_(p) e_{i,a,b}``.  Its residue
algebra modulo the radical ``J = M_k(p Z_(p))`` is the F_p-span of the
reduced ``e``'s, isomorphic to ``prod_i M_{m_i}(F_p)`` via
``e_{i,a,b} -> E_{b,a}`` in factor ``i``.

Matrix indices and the labels ``(i, a, b)`` are 1-based to match the
construction; numpy arrays are indexed from 0 as usual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .fp import DenominatorDivisibleByP, in_row_span_mod_p, rank_mod_p, reduce_mod_p
from .profile import AlgebraProfile, Block, validate

__all__ = [
    "OrderSpec",
    "IdempotentSet",
    "Report",
    "InvalidOrderSpec",
    "DenominatorDivisibleByP",
    "build",
    "verify_relations",
    "residue_structure_check",
    "lambda_membership",
    "order_to_profile_block",
    "profile_from_orders",
]

Key = tuple[int, int, int]


class InvalidOrderSpec(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class OrderSpec:
    p: int
    k: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple((int(r), int(m)) for r, m in self.parts))
        if not is_prime(self.p):
            raise InvalidOrderSpec(f"p={self.p} is not prime")
        if not self.parts:
            raise InvalidOrderSpec("at least one part is required")
        if any(r < 1 or m < 1 for r, m in self.parts):
            raise InvalidOrderSpec(f"parts must be positive pairs (r, m), got {self.parts}")
        total = sum(r * m for r, m in self.parts)
        if total != self.k:
            raise InvalidOrderSpec(f"sum of m*r is {total}, expected k={self.k}")

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> OrderSpec:
        try:
            return cls(int(data["p"]), int(data["k"]), tuple(tuple(x) for x in data["parts"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidOrderSpec):
                raise
            raise InvalidOrderSpec(f"malformed order spec: {exc}") from exc

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.p, "k": self.k, "parts": [list(x) for x in self.parts]}


@dataclass
class IdempotentSet:
    k: int
    partition: dict[tuple[int, int], tuple[int, ...]]
    matrices: dict[Key, np.ndarray]
    multiplicities: tuple[int, ...]

    def keys(self) -> list[Key]:
        return sorted(self.matrices)

    def diagonal_keys(self) -> list[Key]:
        return [key for key in self.keys() if key[1] == key[2]]

    def copy(self) -> IdempotentSet:
        return IdempotentSet(self.k, dict(self.partition),
                             {key: m.copy() for key, m in self.matrices.items()}, self.multiplicities)


def build(spec: OrderSpec) -> IdempotentSet:
    """Contiguous partition, parts in input order, copies ascending."""
    partition = {}
    start = 1
    for i, (r, m) in enumerate(spec.parts, 1):
        for a in range(1, m + 1):
            partition[(i, a)] = tuple(range(start, start + r))
            start += r
    matrices = {}
    for i, (r, m) in enumerate(spec.parts, 1):
        for a in range(1, m + 1):
            for b in range(1, m + 1):
                e = np.zeros((spec.k, spec.k), dtype=np.int64)
                for src, dst in zip(partition[(i, a)], partition[(i, b)]):
                    e[dst - 1, src - 1] = 1
                matrices[(i, a, b)] = e
    return IdempotentSet(spec.k, partition, matrices, tuple(m for _, m in spec.parts))


@dataclass
class Report:
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, message: str) -> None:
        self.checks += 1
        if not passed:
            self.failures.append(message)


def _expected_product(left: Key, right: Key) -> Key | None:
    """``e_{i,a,b} e_{j,c,d}`` is ``e_{i,c,b}`` when ``i == j`` and ``d == a``, else 0."""
    i, a, b = left
    j, c, d = right
    if i == j and d == a:
        return (i, c, b)
    return None


def _kind(left: Key, right: Key) -> str:
    if left == right and left[1] == left[2]:
        return "idempotency"
    if _expected_product(left, right) is not None:
        return "composition"
    return "vanishing"


def _product_table(idems: IdempotentSet, p: int | None, report: Report) -> None:
    keys = idems.keys()
    k, n = idems.k, len(keys)
    index = {key: pos for pos, key in enumerate(keys)}
    # stack[n] is the zero matrix
    stack = np.zeros((n + 1, k, k), dtype=object if _needs_bigint(idems) else np.int64)
    for pos, key in enumerate(keys):
        stack[pos] = idems.matrices[key] % p if p else idems.matrices[key]
    # all right factors side by side: column block ``pos`` holds stack[pos]
    wide = np.concatenate(list(stack[:n]), axis=1)
    for left in keys:
        prods = (stack[index[left]] @ wide).reshape(k, n, k).transpose(1, 0, 2)
        if p:
            prods = prods % p
        want = [index.get(_expected_product(left, right), n) for right in keys]
        bad = np.nonzero((prods != stack[want]).reshape(n, -1).any(axis=1))[0]
        report.checks += n
        for pos in bad:
            right = keys[pos]
            target = "e{}".format(keys[want[pos]]) if want[pos] < n else "0"
            report.failures.append(f"{_kind(left, right)}: e{left}*e{right} != {target}")


def _needs_bigint(idems: IdempotentSet) -> bool:
    top = max((int(np.abs(m).max()) for m in idems.matrices.values()), default=0)
    return top * top * idems.k >= 2**62


def verify_relations(idems: IdempotentSet) -> Report:
    """Check the full multiplication table and ``sum_{i,a} e_{i,a,a} = I`` exactly."""
    report = Report()
    _product_table(idems, None, report)
    total = sum(idems.matrices[key] for key in idems.diagonal_keys())
    report.record(np.array_equal(total, np.eye(idems.k, dtype=np.int64)),
                  "sum of diagonal idempotents is not the identity")
    return report


def residue_structure_check(idems: IdempotentSet, p: int) -> Report:
    """Certify ``Lambda/J = prod_i M_{m_i}(F_p)`` and the cross-block vanishing."""
    report = Report()
    keys = idems.keys()
    flat = np.array([idems.matrices[key].reshape(-1) % p for key in keys], dtype=np.int64)
    dim = rank_mod_p(flat, p)
    expected = sum(m * m for m in idems.multiplicities)
    report.details["dimension"] = dim
    report.details["expected_dimension"] = expected
    report.details["structure"] = " x ".join(
        f"M_{m}(F_{p})" if m > 1 else f"F_{p}" for m in idems.multiplicities)
    report.record(dim == expected, f"residue span has dimension {dim}, expected {expected}")
    _product_table(idems, p, report)

    diag = idems.diagonal_keys()
    reduced = {key: idems.matrices[key] % p for key in keys}
    for d1 in diag:
        for d2 in diag:
            if d1[0] == d2[0]:
                continue
            for key in keys:
                prod = reduced[d1] @ reduced[key] @ reduced[d2] % p
                report.record(not prod.any(),
                              f"cross-block: e{d1}*e{key}*e{d2} is nonzero mod {p}")
    return report


def lambda_membership(matrix: Sequence[Sequence], idems: IdempotentSet, p: int) -> bool:
    """Is a p-integral rational matrix in the order?

    It is iff its reduction mod p lies in the F_p-span of the ``e``'s.
    Raises ``DenominatorDivisibleByP`` for matrices outside M_k(Z_(p)).
    """
    target = reduce_mod_p(matrix, p)
    if target.shape != (idems.k, idems.k):
        raise ValueError(f"expected a {idems.k}x{idems.k} matrix, got shape {target.shape}")
    rows = np.array([idems.matrices[key].reshape(-1) % p for key in idems.keys()])
    return in_row_span_mod_p(rows, target.reshape(-1), p)


def order_to_profile_block(spec: OrderSpec, label: str | None = None) -> Block:
    return Block(label or f"p{spec.p}",
                 tuple(r for r, _ in spec.parts),
                 tuple(m for _, m in spec.parts))


def profile_from_orders(specs: Iterable[OrderSpec]) -> AlgebraProfile:
    """Assemble local orders at distinct primes into a global profile."""
    specs = list(specs)
    if not specs:
        raise InvalidOrderSpec("at least one order spec is required")
    ks = {s.k for s in specs}
    if len(ks) != 1:
        raise InvalidOrderSpec(f"all orders must share k, got {sorted(ks)}")
    primes = [s.p for s in specs]
    if len(set(primes)) != len(primes):
        raise InvalidOrderSpec(f"primes must be distinct, got {primes}")
    return validate(AlgebraProfile(specs[0].k, tuple(order_to_profile_block(s) for s in specs)))
