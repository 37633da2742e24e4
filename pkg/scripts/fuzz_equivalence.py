#!/usr/bin/env python3
"""Fuzz the three polybox-equality routes against each other at scale.

Every drawn pair of proper suits is decided by the canonical form, by the
index criterion, and by literal point enumeration; any split verdict is a
bug and stops the run with a reproduction recipe.
"""

from __future__ import annotations

import argparse
import random
import time

from polybox import polybox_equal_by_index, suits_equivalent
from polybox.generate import mutate_suit, random_proper_suit, random_space
from polybox.oracle import points_equal


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-d", type=int, default=3)
    parser.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4])
    args = parser.parse_args()

    rng = random.Random(args.seed)
    equal_count = 0
    started = time.monotonic()
    for k in range(args.pairs):
        space = random_space(rng, max_d=args.max_d, dim_choices=tuple(args.dims))
        f = random_proper_suit(space, rng, max_size=1 << space.d)
        if k % 2 == 0:
            g = mutate_suit(f, rng, moves=3)
        else:
            g = random_proper_suit(space, rng, max_size=1 << space.d)
        verdicts = {
            "canon": suits_equivalent(f, g),
            "index": polybox_equal_by_index(f, g),
            "oracle": points_equal(f, g),
        }
        if len(set(verdicts.values())) != 1:
            print(f"DISAGREEMENT at pair {k}: {verdicts}")
            print(f"dims={space.dims}")
            print(f"f={[b.factors for b in f.boxes]}")
            print(f"g={[b.factors for b in g.boxes]}")
            return 1
        if verdicts["canon"]:
            equal_count += 1
    elapsed = time.monotonic() - started
    print(f"pairs:   {args.pairs} ({equal_count} equal)")
    print(f"elapsed: {elapsed:.2f}s ({1e3 * elapsed / args.pairs:.3f} ms/pair)")
    print("all three routes agreed on every pair")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
