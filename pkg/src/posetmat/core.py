"""Finite posets encoded as square 0/1 matrices.

Convention: ``rel[y][z] == 1`` means the element stored at position z lies
at or below the element stored at position y (z <= y).  Row y therefore
lists the down-set of y.  Storage order is required to be a linear
extension, so every accepted matrix is lower-triangular; candidates that
satisfy the order axioms under some other row order can be repaired with
`normalize_linear_extension`.

Positions are 0-based internally.  Labels are arbitrary distinct strings
riding along for display; they default to "1".."n".
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Rows = tuple[tuple[int, ...], ...]


class PosetError(Exception):
    """Base class for poset matrix errors."""


class MalformedMatrixError(PosetError):
    """Input is not a square 0/1 matrix with sane labels."""


class InvalidPosetError(PosetError):
    """A candidate matrix violates the order axioms."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        super().__init__(message)
        self.report = report


class StorageOrderError(InvalidPosetError):
    """Axioms hold but storage order is not a linear extension."""


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking the three order axioms on a candidate matrix.

    `violations` holds every failure as (axiom name, witness positions):
    ("reflexive", (k,)), ("antisymmetric", (i, j)) with i < j, or
    ("transitive", (y, z, w)) meaning z <= y and w <= z but not w <= y.
    Lower-triangularity is a storage convention, not an axiom, so it is
    reported separately and never appears in `violations`.
    """

    reflexive_ok: bool
    antisymmetric_ok: bool
    transitive_ok: bool
    lower_triangular_ok: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return self.reflexive_ok and self.antisymmetric_ok and self.transitive_ok

    def summary(self) -> str:
        bits = [
            f"reflexive: {'ok' if self.reflexive_ok else 'FAIL'}",
            f"antisymmetric: {'ok' if self.antisymmetric_ok else 'FAIL'}",
            f"transitive: {'ok' if self.transitive_ok else 'FAIL'}",
            f"lower-triangular: {'yes' if self.lower_triangular_ok else 'no'}",
        ]
        lines = ["; ".join(bits)]
        for axiom, witness in self.violations:
            lines.append(f"  {axiom} violated at {witness}")
        return "\n".join(lines)


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(k + 1) for k in range(n))


def _coerce_rows(candidate: Sequence[Sequence[int]]) -> Rows:
    """Check shape and entries, return an immutable copy."""
    rows = tuple(tuple(row) for row in candidate)
    n = len(rows)
    if n == 0:
        raise MalformedMatrixError("order 0 matrix rejected; need at least one element")
    for y, row in enumerate(rows):
        if len(row) != n:
            raise MalformedMatrixError(
                f"row {y} has length {len(row)}, expected {n} (matrix must be square)"
            )
        for z, cell in enumerate(row):
            if cell not in (0, 1):
                raise MalformedMatrixError(f"entry ({y},{z}) is {cell!r}, expected 0 or 1")
    return rows


def _coerce_labels(n: int, labels: Sequence[str] | None) -> tuple[str, ...]:
    if labels is None:
        return default_labels(n)
    out = tuple(str(x) for x in labels)
    if len(out) != n:
        raise MalformedMatrixError(f"{len(out)} labels for order {n}")
    if len(set(out)) != n:
        raise MalformedMatrixError("labels must be distinct")
    return out


def validate_axioms(candidate: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> ValidationReport:
    """Check reflexivity, antisymmetry and transitivity on a raw candidate.

    Collects every violation with a concrete witness; raises
    MalformedMatrixError only when the input is not a square 0/1 matrix.
    """
    rows = _coerce_rows(candidate)
    _coerce_labels(len(rows), labels)
    n = len(rows)
    violations: list[tuple[str, tuple[int, ...]]] = []
    for k in range(n):
        if rows[k][k] != 1:
            violations.append(("reflexive", (k,)))
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] and rows[j][i]:
                violations.append(("antisymmetric", (i, j)))
    for y in range(n):
        for z in range(n):
            if z == y or not rows[y][z]:
                continue
            for w in range(n):
                if w == z:
                    continue
                if rows[z][w] and not rows[y][w]:
                    violations.append(("transitive", (y, z, w)))
    lower = all(rows[y][z] == 0 for y in range(n) for z in range(y + 1, n))
    kinds = {axiom for axiom, _ in violations}
    return ValidationReport(
        reflexive_ok="reflexive" not in kinds,
        antisymmetric_ok="antisymmetric" not in kinds,
        transitive_ok="transitive" not in kinds,
        lower_triangular_ok=lower,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class PosetMatrix:
    """A validated, lower-triangular poset matrix.

    Build through `from_rows` (full validation) rather than the bare
    constructor; anything that reaches the constructor is trusted.
    """

    rel: Rows
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.rel):
            raise MalformedMatrixError("label count does not match order")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> "PosetMatrix":
        rel = _coerce_rows(rows)
        labs = _coerce_labels(len(rel), labels)
        report = validate_axioms(rel)
        if not report.ok:
            raise InvalidPosetError(
                "candidate violates the order axioms:\n" + report.summary(), report
            )
        if not report.lower_triangular_ok:
            raise StorageOrderError(
                "storage order is not a linear extension; "
                "apply normalize_linear_extension first",
                report,
            )
        return PosetMatrix(rel, labs)

    @property
    def order(self) -> int:
        return len(self.rel)

    def position_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def relabelled(self, labels: Sequence[str] | None = None) -> "PosetMatrix":
        """Same relation with fresh labels (default "1".."n")."""
        return PosetMatrix(self.rel, _coerce_labels(self.order, labels))

    def strict_down_masks(self) -> tuple[int, ...]:
        """Per position: bitmask of positions strictly below it."""
        return tuple(
            sum(1 << z for z in range(self.order) if z != y and self.rel[y][z])
            for y in range(self.order)
        )

    def strict_up_masks(self) -> tuple[int, ...]:
        """Per position: bitmask of positions strictly above it."""
        return tuple(
            sum(1 << y for y in range(self.order) if y != z and self.rel[y][z])
            for z in range(self.order)
        )

    def __str__(self) -> str:
        width = max(len(lab) for lab in self.labels)
        head = " " * (width + 1) + " ".join(lab.rjust(width) for lab in self.labels)
        body = [
            self.labels[y].rjust(width) + "  " + " ".join(
                str(c).rjust(width) for c in row
            )
            for y, row in enumerate(self.rel)
        ]
        return "\n".join([head] + body)


@dataclass(frozen=True)
class LabelSet:
    """A subset of positions of some matrix, displayed through its labels."""

    positions: tuple[int, ...]
    labels: tuple[str, ...]

    @staticmethod
    def of(matrix: PosetMatrix, positions: Iterable[int]) -> "LabelSet":
        pos = tuple(sorted(set(positions)))
        for p in pos:
            if not 0 <= p < matrix.order:
                raise ValueError(f"position {p} out of range for order {matrix.order}")
        return LabelSet(pos, matrix.labels)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.labels[p] for p in self.positions)

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions)

    def __len__(self) -> int:
        return len(self.positions)

    def __contains__(self, position: int) -> bool:
        return position in self.positions

    def __str__(self) -> str:
        return "{" + ", ".join(self.names) + "}"


def minimal_elements(m: PosetMatrix) -> LabelSet:
    """Positions whose row is zero off the diagonal (nothing below them)."""
    pos = [y for y, mask in enumerate(m.strict_down_masks()) if mask == 0]
    return LabelSet(tuple(pos), m.labels)


def maximal_elements(m: PosetMatrix) -> LabelSet:
    """Positions whose column is zero off the diagonal (nothing above them)."""
    pos = [z for z, mask in enumerate(m.strict_up_masks()) if mask == 0]
    return LabelSet(tuple(pos), m.labels)


def dual(m: PosetMatrix) -> PosetMatrix:
    """Order-reversed poset: transpose plus index reversal, labels reversed.

    Keeps the storage lower-triangular (the reversed order of a linear
    extension is a linear extension of the reversed poset).  Involution:
    dual(dual(m)) == m bit for bit.
    """
    n = m.order
    rel = tuple(
        tuple(m.rel[n - 1 - q][n - 1 - p] for q in range(n)) for p in range(n)
    )
    return PosetMatrix(rel, tuple(reversed(m.labels)))


def induced_subposet(m: PosetMatrix, subset: LabelSet | Iterable[int]) -> PosetMatrix:
    """Principal submatrix on the given positions, relative order retained."""
    pos = tuple(subset.positions) if isinstance(subset, LabelSet) else tuple(sorted(set(subset)))
    if not pos:
        raise ValueError("empty subset has no induced subposet")
    for p in pos:
        if not 0 <= p < m.order:
            raise ValueError(f"position {p} out of range for order {m.order}")
    rel = tuple(tuple(m.rel[y][z] for z in pos) for y in pos)
    return PosetMatrix(rel, tuple(m.labels[p] for p in pos))


def is_connected(m: PosetMatrix) -> bool:
    """Connectivity of the comparability graph; order 1 is connected."""
    n = m.order
    down = m.strict_down_masks()
    up = m.strict_up_masks()
    adj = [down[k] | up[k] for k in range(n)]
    seen = 1
    frontier = 1
    while frontier:
        grown = seen
        for k in range(n):
            if frontier >> k & 1:
                grown |= adj[k]
        frontier = grown & ~seen
        seen = grown
    return seen == (1 << n) - 1


def hasse_edges(m: PosetMatrix) -> tuple[tuple[int, int], ...]:
    """Covering pairs (lower, upper) as positions, lexicographically sorted."""
    n = m.order
    down = m.strict_down_masks()
    up = m.strict_up_masks()
    edges = []
    for y in range(n):
        for z in range(n):
            if z == y or not m.rel[y][z]:
                continue
            between = down[y] & up[z] & ~(1 << y) & ~(1 << z)
            if between == 0:
                edges.append((z, y))
    return tuple(sorted(edges))


def normalize_linear_extension(
    candidate: Sequence[Sequence[int]], labels: Sequence[str] | None = None
) -> PosetMatrix:
    """Reorder a valid candidate so storage becomes a linear extension.

    Rows/columns are permuted simultaneously by a topological sort that
    breaks ties on the smallest original position, so the result is
    deterministic.  Fails with the validation report if the axioms do not
    hold under any order.
    """
    rows = _coerce_rows(candidate)
    labs = _coerce_labels(len(rows), labels)
    report = validate_axioms(rows)
    if not report.ok:
        raise InvalidPosetError(
            "candidate violates the order axioms:\n" + report.summary(), report
        )
    n = len(rows)
    below = {
        y: {z for z in range(n) if z != y and rows[y][z]} for y in range(n)
    }
    placed: list[int] = []
    ready = [y for y in range(n) if not below[y]]
    heapq.heapify(ready)
    done: set[int] = set()
    while ready:
        y = heapq.heappop(ready)
        placed.append(y)
        done.add(y)
        for v in range(n):
            if v not in done and v not in ready and below[v] <= done:
                heapq.heappush(ready, v)
    rel = tuple(tuple(rows[y][z] for z in placed) for y in placed)
    return PosetMatrix(rel, tuple(labs[y] for y in placed))
