"""Shade the 2-edges: a cyclic two-colouring of K17 and its 14-point restriction.

Run: python demos/01_splitting_graph.py
"""

from goodcolor.splitgraph import (DEFAULT_CLASS0, BlueShade, build_cyclic_splitting, find_mono_biclique,
                                  find_mono_clique, default_splitting, validate_splitting)

k17 = build_cyclic_splitting(17, DEFAULT_CLASS0)
print("b0 residues:", sorted(DEFAULT_CLASS0))
print("b0 edges in K17:", len(k17.b0_edges()), "of", 17 * 16 // 2)

# Neither shade may contain K4, K4,3 or K5,2.
print("K17:", validate_splitting(k17).to_dict())

g = default_splitting()  # drop points 15, 16, 17
print("points kept:", g.points)
print("14 points:", validate_splitting(g).to_dict())

# A denser class breaks the property and the search names a witness.
dense = build_cyclic_splitting(17, DEFAULT_CLASS0 | {3, 14})
print("with 3 and 14 added to b0:")
for shade in BlueShade:
    print(f"  {shade.label} K4:  ", find_mono_clique(dense, 4, shade))
    print(f"  {shade.label} K4,3:", find_mono_biclique(dense, 4, 3, shade))
