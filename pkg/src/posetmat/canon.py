"""Canonical forms and isomorphism for poset matrices.

The canonical key of a matrix is the lexicographically smallest row-major
bit-string over all simultaneous row/column relabelings.  A relabeling
achieving the minimum is always a linear extension: if the matrix had a 1
above the diagonal, take the first row r with one, at column c; moving the
element at c to position r (shifting the block between them right) leaves
rows above r untouched and strictly shrinks row r, so the string was not
minimal.  The search below therefore walks linear extensions only, with
branch-and-bound pruning against the best string found so far, and skips
interchangeable twin elements (equal strict down- and up-sets), which is
an automorphism and cannot change the outcome.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import PosetMatrix, Rows, default_labels


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Isomorphism-class key: order plus the minimal bit-string packed MSB-first."""

    order: int
    packed: int

    @property
    def hex(self) -> str:
        digits = (self.order * self.order + 3) // 4
        return format(self.packed, f"0{digits}x")

    def render(self) -> str:
        return f"{self.order}:{self.hex}"

    __str__ = render

    @staticmethod
    def parse(text: str) -> "CanonicalKey":
        order_part, _, hex_part = text.partition(":")
        order = int(order_part)
        packed = int(hex_part, 16)
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        if packed >> (order * order):
            raise ValueError(f"bit-string too long for order {order}")
        return CanonicalKey(order, packed)

    def rows(self) -> Rows:
        n = self.order
        return tuple(
            tuple(self.packed >> (n * n - 1 - (y * n + z)) & 1 for z in range(n))
            for y in range(n)
        )

    def matrix(self) -> PosetMatrix:
        """The canonical representative itself, default labels."""
        return PosetMatrix(self.rows(), default_labels(self.order))


def _minimal_row_ints(n: int, down: tuple[int, ...], up: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest output rows over all linear extensions; row ints are MSB=col 0."""
    sentinel = 1 << (n + 1)
    best = [sentinel] * n
    chosen = [0] * n

    def rec(k: int, used: int) -> None:
        candidates = []
        seen_twins = set()
        for e in range(n):
            if used >> e & 1:
                continue
            if down[e] & ~used:
                continue
            twin = (down[e], up[e])
            if twin in seen_twins:
                continue
            seen_twins.add(twin)
            row = 1 << (n - 1 - k)
            de = down[e]
            for j in range(k):
                if de >> chosen[j] & 1:
                    row |= 1 << (n - 1 - j)
            candidates.append((row, e))
        candidates.sort()
        for row, e in candidates:
            if row > best[k]:
                break
            if row < best[k]:
                best[k] = row
                for j in range(k + 1, n):
                    best[j] = sentinel
            chosen[k] = e
            if k + 1 == n:
                continue
            rec(k + 1, used | 1 << e)

    rec(0, 0)
    return tuple(best)


def packed_from_masks(n: int, row_masks: Sequence[int]) -> int:
    """Canonical packed bit-string for a matrix given as low-bit row masks."""
    down = tuple(row_masks[y] & ~(1 << y) for y in range(n))
    up = tuple(
        sum(1 << y for y in range(n) if y != z and row_masks[y] >> z & 1)
        for z in range(n)
    )
    rows = _minimal_row_ints(n, down, up)
    packed = 0
    for row in rows:
        packed = (packed << n) | row
    return packed


@lru_cache(maxsize=None)
def _canonical_packed(rel: Rows) -> int:
    n = len(rel)
    masks = tuple(sum(1 << z for z in range(n) if rel[y][z]) for y in range(n))
    return packed_from_masks(n, masks)


def canonical_form(m: PosetMatrix) -> CanonicalKey:
    """Canonical key of the isomorphism class of `m`; labels are ignored."""
    return CanonicalKey(m.order, _canonical_packed(m.rel))


def are_isomorphic(a: PosetMatrix, b: PosetMatrix) -> bool:
    if a.order != b.order:
        return False
    return canonical_form(a) == canonical_form(b)
