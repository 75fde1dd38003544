"""Replay the hand-picked witness families edge by edge.

Every ordered pair is relabelled so that X = {1..7} and Y overlaps X in
its last j points.  Each need then has a short list of candidate witnesses;
the replay maps them back and checks their real colours.

Run: python demos/03_replay.py
"""

from goodcolor import PointSet, build_m2_coloring, default_splitting
from goodcolor.replay import candidate_family, canonical_map, replay_all, replay_edge

g = default_splitting()
c = build_m2_coloring(g)

x = PointSet.of([2, 3, 5, 7, 11, 13, 14])
y = PointSet.of([1, 2, 3, 4, 5, 6, 7])
cmap = canonical_map(x, y)
print(f"X={x} Y={y} overlap j={cmap.j}")
print("canonical X:", cmap.apply(x), "canonical Y:", cmap.apply(y))

for r in replay_edge(c, g, x, y):
    need = tuple(c.labels[i] for i in r.need)
    print(f"  need {need}: {r.family_size} candidates, witness {r.witness}")

print("family for a 4-edge needing (r, b0, b1):", len(candidate_family(4, ("r", "b0", "b1"))), "sets")

report = replay_all(c, g)
for entry in report.to_dict()["per_j"]:
    print(f"  j={entry['j']}: {entry['passed_pairs']}/{entry['ordered_pairs']} pairs")
print("pass:", report.passed, f"({report.wall_time:.1f}s)")
