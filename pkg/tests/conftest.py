"""Shared strategies and independent brute-force oracles for the suite.

The oracles here deliberately avoid the library's own clever code paths:
canonicalization is done by trying every permutation, validity by checking
the axioms with nested loops over a full (not lower-triangular) relation.
"""
import itertools
import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from posetmat import PosetMatrix

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def close_down(subset, down):
    """Downward closure of a position set under already-built strict downs."""
    out = subset
    for p in range(len(down)):
        if subset >> p & 1:
            out |= down[p]
    return out


def rows_from_downsets(n, down):
    return tuple(
        tuple(1 if y == z or (down[y] >> z & 1) else 0 for z in range(n))
        for y in range(n)
    )


@st.composite
def poset_matrices(draw, min_order=1, max_order=6):
    """A random naturally-labeled poset matrix.

    Row k's strict down-set is a randomly chosen subset of the prefix,
    closed downward, so every candidate is valid by construction and every
    naturally-labeled matrix can be produced.
    """
    n = draw(st.integers(min_order, max_order))
    down = []
    for k in range(n):
        raw = draw(st.integers(0, (1 << k) - 1)) if k else 0
        down.append(close_down(raw, down))
    return PosetMatrix.from_rows(rows_from_downsets(n, down))


def random_poset(rng: random.Random, n: int) -> PosetMatrix:
    """Same construction as the strategy, driven by a seeded RNG."""
    down = []
    for k in range(n):
        raw = rng.randrange(1 << k) if k else 0
        down.append(close_down(raw, down))
    return PosetMatrix.from_rows(rows_from_downsets(n, down))


def iter_all_posets(n):
    """Every naturally-labeled poset matrix of order n, by brute filter.

    Walks all 2^(n(n-1)/2) lower-triangular candidates and keeps those
    whose relation is transitive.  Reflexivity and antisymmetry hold by
    construction.  Only usable for small n.
    """
    below = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(below)):
        rel = [[1 if y == z else 0 for z in range(n)] for y in range(n)]
        for idx, (z, y) in enumerate(below):
            if bits >> idx & 1:
                rel[y][z] = 1
        ok = True
        for y in range(n):
            for z in range(n):
                if not rel[y][z]:
                    continue
                for w in range(n):
                    if rel[z][w] and not rel[y][w]:
                        ok = False
        if ok:
            yield PosetMatrix.from_rows(tuple(tuple(r) for r in rel))


def brute_canonical_packed(m: PosetMatrix) -> int:
    """Row-major bit-string minimum over all n! relabelings."""
    n = m.order
    best = None
    for perm in itertools.permutations(range(n)):
        value = 0
        for y in range(n):
            for z in range(n):
                value = value << 1 | m.rel[perm[y]][perm[z]]
        if best is None or value < best:
            best = value
    return best


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
