"""Cyclic colourings with a sum-free blue class and a b0/b1 split search.

A symmetric sum-free set of residues gives a triangle-free blue graph on
Z/N.  The search tries to split it into two shades so every need is met and
reports how many (pair, need) checks still fail.

Run: python demos/06_cyclic_search.py [--modulus N] [--budget B] [--seed S]
"""

import argparse

from goodcolor.search import DifferenceSet, extend_to_maximal, is_sum_free, search_split

parser = argparse.ArgumentParser()
parser.add_argument("--modulus", type=int, default=41)
parser.add_argument("--budget", type=int, default=2000)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

n = args.modulus
blue = extend_to_maximal(DifferenceSet(n, [1, n - 1]))
print(f"Z/{n}: blue {sorted(blue.diffs)} sum-free={is_sum_free(blue)}")
print("orbits:", blue.orbits())

result = search_split(blue, blue.complement(), budget=args.budget, seed=args.seed)
print("found:", result.found, "|", result.reason, "|", result.evaluations, "evaluations")
if result.best:
    print("best deficiency:", result.best.deficiency)
    print("  b0:", sorted(result.best.b0.diffs))
    print("  b1:", sorted(result.best.b1.diffs))
print("trace head:", [e["deficiency"] for e in result.trace[:12]])
