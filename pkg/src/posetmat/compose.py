"""Partial composition of poset matrices.

All three operations replace the element at position i of A (1-based) by
the whole of B.  The result has order n+m-1 and storage order

    A positions 1..i-1, then all of B, then A positions i+1..n.

A's two diagonal blocks and B's block are copied verbatim; everything
above the diagonal outside those blocks is 0.  The operations differ only
in the two cross blocks U (B rows over the left A columns) and V (right A
rows over the B columns), written here with a = A.rel and d = i-1 the
0-based deleted position:

  square: every element of B inherits all of i's relations.
      U[y][z] = a[d][z]            V[y][z] = a[y][d]

  tri_up, i maximal in A: only B's maximal elements inherit.
      U[y][z] = a[d][z] if y in max(B) else 0
      V[y][z] = a[y][d] if z in max(B) else 0
  tri_up, otherwise: inherit by default, except pairs of minimal
  elements (one from B, one from A) stay unrelated.
      U[y][z] = 0 if (y in min(B) and z in min(A)) else a[d][z]
      V[y][z] = 0 if (y in min(A) and z in min(B)) else a[y][d]

  tri_down mirrors tri_up with min/max swapped.

The square operation always yields a valid poset matrix.  The triangle
operations need not: the default-inherit cases can break transitivity
(for example chain_4 tri_up@3 chain_2).  Nothing is repaired silently;
the assembled table comes back with its validation report and a `valid`
flag.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    InvalidPosetError,
    PosetMatrix,
    Rows,
    ValidationReport,
    default_labels,
    maximal_elements,
    minimal_elements,
    validate_axioms,
)


class CompositionKind(enum.Enum):
    SQUARE = "sq"
    TRI_UP = "up"
    TRI_DOWN = "dn"


@dataclass(frozen=True)
class CompositionResult:
    """Assembled composition output plus its validation outcome."""

    rows: Rows
    labels: tuple[str, ...]
    report: ValidationReport

    @property
    def valid(self) -> bool:
        return self.report.ok

    @property
    def order(self) -> int:
        return len(self.rows)

    def poset(self) -> PosetMatrix:
        if not self.valid:
            raise InvalidPosetError(
                "composition output violates the order axioms:\n" + self.report.summary(),
                self.report,
            )
        return PosetMatrix(self.rows, self.labels)


def _provenance_labels(a: PosetMatrix, d: int, b: PosetMatrix) -> tuple[str, ...]:
    """A's surviving labels around B's labels; clashes get primed."""
    left = [a.labels[z] for z in range(d)]
    right = [a.labels[y] for y in range(d + 1, a.order)]
    taken = set(left) | set(right)
    middle = []
    for lab in b.labels:
        fresh = lab
        while fresh in taken:
            fresh += "'"
        taken.add(fresh)
        middle.append(fresh)
    return tuple(left + middle + right)


def compose(
    a: PosetMatrix,
    kind: CompositionKind,
    i: int,
    b: PosetMatrix,
    relabel: bool = False,
) -> CompositionResult:
    """Replace position i (1-based) of `a` by `b` under the given kind."""
    n, m = a.order, b.order
    if not 1 <= i <= n:
        raise ValueError(f"position {i} out of range 1..{n}")
    d = i - 1
    size = n + m - 1
    out = [[0] * size for _ in range(size)]

    # Diagonal blocks: left A block, B block, right A block.
    for y in range(d):
        for z in range(d):
            out[y][z] = a.rel[y][z]
    for y in range(m):
        for z in range(m):
            out[d + y][d + z] = b.rel[y][z]
    for y in range(d + 1, n):
        for z in range(d + 1, n):
            out[y + m - 1][z + m - 1] = a.rel[y][z]
    # Lower-left A block (right A rows over left A columns).
    for y in range(d + 1, n):
        for z in range(d):
            out[y + m - 1][z] = a.rel[y][z]

    if kind is CompositionKind.SQUARE:
        u_zero = lambda y, z: False
        v_zero = lambda y, z: False
    else:
        p = set(minimal_elements(a).positions)
        q = set(minimal_elements(b).positions)
        r = set(maximal_elements(a).positions)
        s = set(maximal_elements(b).positions)
        if kind is CompositionKind.TRI_UP:
            if d in r:
                u_zero = lambda y, z: y not in s
                v_zero = lambda y, z: z not in s
            else:
                u_zero = lambda y, z: y in q and z in p
                v_zero = lambda y, z: y in p and z in q
        else:
            if d in p:
                u_zero = lambda y, z: y not in q
                v_zero = lambda y, z: z not in q
            else:
                u_zero = lambda y, z: y in s and z in r
                v_zero = lambda y, z: y in r and z in s

    # U block: B rows (y, B position) over left A columns (z, A position).
    for y in range(m):
        for z in range(d):
            if a.rel[d][z] and not u_zero(y, z):
                out[d + y][z] = 1
    # V block: right A rows (y, A position) over B columns (z, B position).
    for y in range(d + 1, n):
        for z in range(m):
            if a.rel[y][d] and not v_zero(y, z):
                out[y + m - 1][d + z] = 1

    rows = tuple(tuple(row) for row in out)
    labels = default_labels(size) if relabel else _provenance_labels(a, d, b)
    return CompositionResult(rows, labels, validate_axioms(rows))


def compose_square(a: PosetMatrix, i: int, b: PosetMatrix, relabel: bool = False) -> CompositionResult:
    """Uniform inheritance; closed on poset matrices."""
    return compose(a, CompositionKind.SQUARE, i, b, relabel)


def compose_tri_up(a: PosetMatrix, i: int, b: PosetMatrix, relabel: bool = False) -> CompositionResult:
    return compose(a, CompositionKind.TRI_UP, i, b, relabel)


def compose_tri_down(a: PosetMatrix, i: int, b: PosetMatrix, relabel: bool = False) -> CompositionResult:
    return compose(a, CompositionKind.TRI_DOWN, i, b, relabel)
