"""Enumeration of poset matrices up to isomorphism.

Two independent routes:

* `enumerate_oracle` walks every lower-triangular reflexive candidate and
  keeps the transitive ones, deduplicating by canonical key.  Because the
  storage order of a valid matrix is a linear extension and every finite
  poset has one, this sees every class.  Candidates are generated row by
  row; the strict down-set of each new row must be a down-closed subset
  (an ideal) of the part built so far, which prunes the search to exactly
  the valid matrices.

* `enumerate_by_composition` closes the order-2 generators under the
  three partial composition operations, recording one shortest recipe per
  class reached.

Both routes partition their candidate space into independent chunks whose
per-chunk results merge associatively, so the outcome does not depend on
the worker count.
"""
from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

from .canon import CanonicalKey, canonical_form, packed_from_masks
from .compose import CompositionKind, compose
from .core import PosetMatrix, dual, is_connected
from .generators import (
    C2,
    I2,
    ORDER5_DUAL_PAIRS,
    ORDER5_RECIPES,
    ORDER5_SELF_DUAL_ROWS,
    named_operands,
)
from .io import RecipeError, eval_recipe, parse_recipe, serialize_matrix

# Published counts of non-isomorphic posets (total, connected) by order.
KNOWN_COUNTS: dict[int, tuple[int, int]] = {
    1: (1, 1),
    2: (2, 1),
    3: (5, 3),
    4: (16, 10),
    5: (63, 44),
    6: (318, 238),
    7: (2045, 1650),
}

MAX_ORACLE_ORDER = 8

ALL_KINDS: tuple[CompositionKind, ...] = (
    CompositionKind.SQUARE,
    CompositionKind.TRI_UP,
    CompositionKind.TRI_DOWN,
)


class CatalogIntegrityError(Exception):
    """A recorded construction table failed one of its guarantees."""


@dataclass(frozen=True)
class CatalogEntry:
    representative: PosetMatrix
    connected: bool
    recipe: str | None = None


@dataclass
class ClassCatalog:
    """Isomorphism classes of one order, keyed by canonical form."""

    order: int
    entries: dict[CanonicalKey, CatalogEntry] = field(default_factory=dict)
    invalid_outputs: int = 0

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def connected_count(self) -> int:
        return sum(1 for e in self.entries.values() if e.connected)

    def keys(self) -> set[CanonicalKey]:
        return set(self.entries)

    def connected_keys(self) -> set[CanonicalKey]:
        return {k for k, e in self.entries.items() if e.connected}

    def restricted_to_connected(self) -> "ClassCatalog":
        return ClassCatalog(
            self.order,
            {k: e for k, e in self.entries.items() if e.connected},
            self.invalid_outputs,
        )


def _ideals(masks: Sequence[int], k: int) -> Iterator[int]:
    """Down-closed subsets of positions 0..k-1, ascending as bitmasks.

    masks[z] is the full row mask of z (diagonal bit included), so a
    subset s is down-closed iff the union of masks over its members stays
    inside s.
    """
    for s in range(1 << k):
        need = 0
        t = s
        while t:
            z = (t & -t).bit_length() - 1
            need |= masks[z]
            t &= t - 1
        if need & ~s == 0:
            yield s


def _complete(prefix: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    """Extend a stack of rows to all full matrices of order n."""
    k = len(prefix)
    if k == n:
        yield prefix
        return
    for s in _ideals(prefix, k):
        yield from _complete(prefix + (s | 1 << k,), n)


def iter_matrices(n: int) -> Iterator[tuple[int, ...]]:
    """All valid lower-triangular matrices of order n, as row-mask tuples."""
    if not 1 <= n <= MAX_ORACLE_ORDER:
        raise ValueError(f"order must be 1..{MAX_ORACLE_ORDER}, got {n}")
    yield from _complete((1,), n)


def _oracle_chunk(args: tuple[int, list[tuple[int, ...]]]) -> set[int]:
    n, prefixes = args
    found: set[int] = set()
    for prefix in prefixes:
        for rows in _complete(prefix, n):
            found.add(packed_from_masks(n, rows))
    return found


def _partition(items: list, workers: int) -> list[list]:
    chunks: list[list] = [[] for _ in range(max(1, workers))]
    for idx, item in enumerate(items):
        chunks[idx % len(chunks)].append(item)
    return chunks


def _map_chunks(func, tasks: list, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [func(t) for t in tasks]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(func, tasks)


def _catalog_from_packed(order: int, packed_keys: Iterable[int]) -> ClassCatalog:
    catalog = ClassCatalog(order)
    for packed in sorted(set(packed_keys)):
        key = CanonicalKey(order, packed)
        rep = key.matrix()
        catalog.entries[key] = CatalogEntry(rep, is_connected(rep))
    return catalog


def enumerate_oracle(n: int, workers: int = 1) -> ClassCatalog:
    """Every isomorphism class of order n, by exhaustive generation."""
    if not 1 <= n <= MAX_ORACLE_ORDER:
        raise ValueError(f"order must be 1..{MAX_ORACLE_ORDER}, got {n}")
    depth = 4 if n > 4 else n
    prefixes = list(_complete((1,), depth))
    tasks = [(n, chunk) for chunk in _partition(prefixes, workers) if chunk]
    results = _map_chunks(_oracle_chunk, tasks, workers)
    merged: set[int] = set()
    for part in results:
        merged |= part
    return _catalog_from_packed(n, merged)


def _wrap(recipe: str) -> str:
    return f"({recipe})" if " " in recipe else recipe


def _compose_chunk(
    args: tuple[int, list[tuple[PosetMatrix, str, str, int, PosetMatrix, str]]]
) -> tuple[dict[int, str], int]:
    n, tasks = args
    best: dict[int, str] = {}
    invalid = 0
    for left, left_recipe, kind_value, i, right, right_recipe in tasks:
        result = compose(left, CompositionKind(kind_value), i, right)
        if not result.valid:
            invalid += 1
            continue
        packed = canonical_form(result.poset()).packed
        recipe = f"{_wrap(left_recipe)} {kind_value}@{i} {_wrap(right_recipe)}"
        held = best.get(packed)
        if held is None or (len(recipe), recipe) < (len(held), held):
            best[packed] = recipe
    return best, invalid


def base_catalog() -> ClassCatalog:
    """The order-2 generators as a seed catalog."""
    catalog = ClassCatalog(2)
    for matrix, recipe in ((C2, "C2"), (I2, "I2")):
        key = canonical_form(matrix)
        catalog.entries[key] = CatalogEntry(key.matrix(), is_connected(matrix), recipe)
    catalog.entries = dict(sorted(catalog.entries.items()))
    return catalog


def enumerate_by_composition(
    n: int,
    seeds: Mapping[int, ClassCatalog],
    kinds: Sequence[CompositionKind] = ALL_KINDS,
    workers: int = 1,
) -> ClassCatalog:
    """Classes of order n reachable by one composition of seed classes.

    Seeds must cover all classes of orders 2..n-1.  Invalid triangle
    outputs are tallied in `invalid_outputs` and dropped.  Each class
    keeps the shortest recipe over every route that reached it (ties to
    the lexicographically smaller), so the result does not depend on
    iteration order or worker count.
    """
    if n == 2:
        return base_catalog()
    if n < 2:
        raise ValueError("composition enumeration starts at order 2")
    tasks = []
    for a_order in range(2, n):
        b_order = n + 1 - a_order
        if b_order < 2 or a_order not in seeds or b_order not in seeds:
            continue
        for a_entry in seeds[a_order].entries.values():
            for b_entry in seeds[b_order].entries.values():
                for kind in kinds:
                    for i in range(1, a_order + 1):
                        tasks.append(
                            (
                                a_entry.representative,
                                a_entry.recipe or "?",
                                kind.value,
                                i,
                                b_entry.representative,
                                b_entry.recipe or "?",
                            )
                        )
    chunked = [(n, chunk) for chunk in _partition(tasks, workers) if chunk]
    results = _map_chunks(_compose_chunk, chunked, workers)
    best: dict[int, str] = {}
    invalid = 0
    for part, bad in results:
        invalid += bad
        for packed, recipe in part.items():
            held = best.get(packed)
            if held is None or (len(recipe), recipe) < (len(held), held):
                best[packed] = recipe
    catalog = ClassCatalog(n, invalid_outputs=invalid)
    for packed in sorted(best):
        key = CanonicalKey(n, packed)
        # Re-run the winning recipe so the stored representative is exactly
        # what the recipe text rebuilds; composition positions refer to the
        # operands' own storage orders, so replaying any other member of
        # the class could land elsewhere.  Seeds without recipes leave
        # placeholders that cannot replay; those classes keep the
        # canonical representative.
        try:
            rep = eval_recipe(parse_recipe(best[packed])).poset().relabelled()
        except RecipeError:
            rep = key.matrix()
        catalog.entries[key] = CatalogEntry(rep, is_connected(rep), best[packed])
    return catalog


def composition_closure(
    max_n: int,
    kinds: Sequence[CompositionKind] = ALL_KINDS,
    workers: int = 1,
) -> dict[int, ClassCatalog]:
    """Seed catalogs for orders 2..max_n, grown recursively."""
    if max_n < 2:
        raise ValueError("closure starts at order 2")
    catalogs: dict[int, ClassCatalog] = {2: base_catalog()}
    for n in range(3, max_n + 1):
        catalogs[n] = enumerate_by_composition(n, catalogs, kinds, workers)
    return catalogs


def run_order5_table() -> ClassCatalog:
    """Execute the 44 recorded order-5 recipes and check their guarantees.

    Each row must compose to a valid, connected order-5 matrix, and no two
    rows may land in the same isomorphism class.  The paired rows must
    realize mutually dual classes and the unpaired rows self-dual ones.
    Any failure raises CatalogIntegrityError naming the offending row.
    """
    operands = named_operands()
    catalog = ClassCatalog(5)
    row_key: dict[int, CanonicalKey] = {}
    for row_number, recipe in enumerate(ORDER5_RECIPES, start=1):
        result = eval_recipe(parse_recipe(recipe, operands))
        if not result.valid:
            raise CatalogIntegrityError(
                f"row {row_number} ({recipe}): output is not a valid poset matrix"
            )
        matrix = result.poset()
        if matrix.order != 5:
            raise CatalogIntegrityError(
                f"row {row_number} ({recipe}): order {matrix.order}, expected 5"
            )
        if not is_connected(matrix):
            raise CatalogIntegrityError(
                f"row {row_number} ({recipe}): output is disconnected"
            )
        key = canonical_form(matrix)
        if key in catalog.entries:
            earlier = catalog.entries[key].recipe
            raise CatalogIntegrityError(
                f"row {row_number} ({recipe}): same class as earlier row ({earlier})"
            )
        row_key[row_number] = key
        catalog.entries[key] = CatalogEntry(matrix.relabelled(), True, recipe)
    for first, second in ORDER5_DUAL_PAIRS:
        if canonical_form(dual(row_key[first].matrix())) != row_key[second]:
            raise CatalogIntegrityError(
                f"rows {first} and {second} do not realize dual classes"
            )
    for row_number in ORDER5_SELF_DUAL_ROWS:
        if canonical_form(dual(row_key[row_number].matrix())) != row_key[row_number]:
            raise CatalogIntegrityError(
                f"row {row_number} is not a self-dual class"
            )
    return catalog


def emit_catalog(catalog: ClassCatalog, directory) -> None:
    """Write one matrix file per class plus a tab-separated index.

    Index columns: canonical key, connected flag, recipe ("-" when there
    is none), relative file name.  Output is sorted by key, so repeated
    runs are byte-identical.
    """
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    lines = []
    for key in sorted(catalog.entries):
        entry = catalog.entries[key]
        name = f"m{key.order}_{key.hex}.pm"
        (path / name).write_text(serialize_matrix(entry.representative))
        recipe = entry.recipe if entry.recipe is not None else "-"
        flag = "connected" if entry.connected else "disconnected"
        lines.append(f"{key.render()}\t{flag}\t{recipe}\t{name}")
    (path / "index.tsv").write_text("\n".join(lines) + "\n")


@dataclass(frozen=True)
class CountRow:
    order: int
    method: str
    total: int
    connected: int
    expected_total: int | None = None
    expected_connected: int | None = None

    @property
    def matches(self) -> bool | None:
        if self.expected_total is None:
            return None
        return (self.total, self.connected) == (
            self.expected_total,
            self.expected_connected,
        )


@dataclass(frozen=True)
class CountTable:
    rows: tuple[CountRow, ...]

    @property
    def all_match(self) -> bool:
        return all(r.matches in (True, None) for r in self.rows)

    def render(self) -> str:
        header = f"{'order':>5}  {'method':<8}{'total':>7}{'connected':>11}"
        has_expected = any(r.expected_total is not None for r in self.rows)
        if has_expected:
            header += f"{'expected':>12}  match"
        lines = [header]
        for r in self.rows:
            line = f"{r.order:>5}  {r.method:<8}{r.total:>7}{r.connected:>11}"
            if has_expected:
                if r.expected_total is None:
                    line += f"{'-':>12}  -"
                else:
                    line += (
                        f"{f'{r.expected_total}/{r.expected_connected}':>12}"
                        f"  {'yes' if r.matches else 'NO'}"
                    )
            lines.append(line)
        return "\n".join(lines)


def count_table(
    max_n: int,
    method: str = "oracle",
    expected: Mapping[int, tuple[int, int]] | None = None,
    workers: int = 1,
) -> CountTable:
    """Class counts per order for the chosen method ("oracle", "compose", "both")."""
    if method not in ("oracle", "compose", "both"):
        raise ValueError(f"unknown method {method!r}")
    if max_n < 1:
        raise ValueError("max order must be at least 1")
    rows: list[CountRow] = []
    methods = ("oracle", "compose") if method == "both" else (method,)
    closure: dict[int, ClassCatalog] = {}
    if "compose" in methods and max_n >= 2:
        closure = composition_closure(max_n, workers=workers)
    for n in range(1, max_n + 1):
        for name in methods:
            if name == "compose" and n < 2:
                continue  # order 1 is the composition identity, not a product
            catalog = enumerate_oracle(n, workers) if name == "oracle" else closure[n]
            exp = expected.get(n) if expected else None
            rows.append(
                CountRow(
                    n,
                    name,
                    catalog.total,
                    catalog.connected_count,
                    exp[0] if exp else None,
                    exp[1] if exp else None,
                )
            )
    rows.sort(key=lambda r: (r.order, r.method))
    return CountTable(tuple(rows))
