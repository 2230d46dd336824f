#!/usr/bin/env python3
"""Execute the 44 recorded order-5 recipes and print the verified table.

Every row is re-composed from its recipe, checked (valid, connected,
order 5, no repeated class, dual pairing intact), and listed with its
canonical key.  With ``--emit DIR`` the resulting catalog is written to
disk as one matrix file per class plus an index.
"""
import argparse

from posetmat.enumeration import emit_catalog, run_order5_table
from posetmat.generators import (
    ORDER5_DUAL_PAIRS,
    ORDER5_RECIPES,
    ORDER5_SELF_DUAL_ROWS,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--emit", help="write the catalog to this directory")
    args = parser.parse_args()

    catalog = run_order5_table()

    partner = {}
    for first, second in ORDER5_DUAL_PAIRS:
        partner[first] = f"dual of row {second}"
        partner[second] = f"dual of row {first}"
    for row in ORDER5_SELF_DUAL_ROWS:
        partner[row] = "self-dual"

    by_recipe = {entry.recipe: key for key, entry in catalog.entries.items()}
    for row, recipe in enumerate(ORDER5_RECIPES, start=1):
        key = by_recipe[recipe]
        print(f"{row:>3}  {recipe:<14} {key.render():<12} {partner[row]}")
    print(f"{catalog.total} classes, all valid, connected, pairwise non-isomorphic")

    if args.emit:
        emit_catalog(catalog, args.emit)
        print(f"catalog written to {args.emit}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
