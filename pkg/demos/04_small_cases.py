"""Small colourings checked by both verifiers.

The fast verifier counts witnesses with matrix products; the oracle walks
every (x, y, z) directly.  They must agree to the last failure.

Run: python demos/04_small_cases.py
"""

from goodcolor import build_affine_coloring, build_cyclic_coloring, mandatory_lyndon, mandatory_mn
from goodcolor.oracle import naive_verify
from goodcolor.verify import verify_good


def show(title, c, m):
    fast = verify_good(c, m, failure_cap=None)
    slow = naive_verify(c, m)
    same = fast.to_dict() == slow.to_dict()
    print(f"{title}: pass={fast.passed} oracle agrees={same}")
    for x, y, need in fast.condition1.failures[:4]:
        print(f"    edge ({x},{y}) misses {tuple(c.labels[i] for i in need)}")


# Parallel classes of lines in the affine plane of order 3 colour K9.
show("AG(2,3) on K9 vs Lyndon(4)", build_affine_coloring(3), mandatory_lyndon(4))

# Order 2: lines have two points, so no triangle is monochromatic.
show("AG(2,2) on K4 vs Lyndon(3)", build_affine_coloring(2), mandatory_lyndon(3))

# The pentagon: red sides, blue diagonals; no red triangle exists.
pentagon = build_cyclic_coloring(5, {"r": [1, 4], "b0": [2, 3]})
show("pentagon vs M1", pentagon, mandatory_mn(1))
