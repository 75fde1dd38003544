"""Composition of colour relations.

R_a o R_b holds for (x, z) when some y has c(xy) = a and c(yz) = b.  The
colours behave as atoms when each composite either misses a colour class
entirely or covers all of it.

Run: python demos/05_atoms.py
"""

import numpy as np

from goodcolor import build_m2_coloring, default_splitting
from goodcolor.construct import EdgeColoring, build_cyclic_coloring
from goodcolor.verify import check_atom_property

pentagon = build_cyclic_coloring(5, {"r": [1, 4], "b0": [2, 3]})
print("pentagon:", check_atom_property(pentagon).passed)

# A path-like colouring of K4 fails: one red edge has a red-red detour, another does not.
m = np.array([[0, 0, 1, 1], [0, 0, 0, 1], [1, 0, 0, 0], [1, 1, 0, 0]], dtype=np.uint8)
report = check_atom_property(EdgeColoring(["r", "b"], m))
print("K4 example:", report.to_dict()["violations"][:2])

report = check_atom_property(build_m2_coloring(default_splitting()))
print("3432-vertex colouring:", report.passed)
for t in report.to_dict()["triples"][:6]:
    print(f"  {t['compose']} -> {t['target']}: {t['covered']}/{t['total']}")
