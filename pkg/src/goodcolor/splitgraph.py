"""Two-shade colourings of a complete graph on ground points.

The splitting graph decides the shade of every 2-edge of the big graph: if
``X & Y == {p, q}`` the edge gets the shade of ``pq`` here.  The construction
needs a splitting graph with no monochromatic K4, K4,3 or K5,2; the
searches below are exhaustive and return the first witness in ascending
point order.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional

import numpy as np


class BlueShade(enum.IntEnum):
    B0 = 0
    B1 = 1

    @property
    def label(self) -> str:
        return f"b{int(self)}"


DEFAULT_MODULUS = 17
DEFAULT_CLASS0 = frozenset({1, 2, 4, 8, 9, 13, 15, 16})
DEFAULT_DELETIONS = frozenset({15, 16, 17})


@dataclass(frozen=True)
class CyclicProvenance:
    modulus: int
    class0: frozenset
    deleted: frozenset


@dataclass(frozen=True, eq=False)
class SplittingGraph:
    """Complete graph on ``points`` with every edge shaded b0 or b1.

    ``shades`` is indexed by point label (row/column 0 unused) and holds -1
    off the retained points and on the diagonal.  Deleted points keep their
    labels.
    """

    points: tuple[int, ...]
    shades: np.ndarray
    provenance: Optional[CyclicProvenance] = None
    _masks: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def point_count(self) -> int:
        return len(self.points)

    def edge_color(self, p: int, q: int) -> BlueShade:
        if p == q:
            raise ValueError(f"no edge from point {p} to itself")
        for v in (p, q):
            if v not in self.points:
                raise ValueError(f"point {v} is not in the splitting graph")
        return BlueShade(int(self.shades[p, q]))

    def neighbour_mask(self, p: int, shade: BlueShade) -> int:
        """Points joined to ``p`` by ``shade``, as a mask with point q at bit q."""
        key = (p, int(shade))
        if key not in self._masks:
            row = np.flatnonzero(self.shades[p] == int(shade))
            self._masks[key] = sum(1 << int(q) for q in row)
        return self._masks[key]

    def restricted(self, keep: Iterable[int]) -> "SplittingGraph":
        """Induced subgraph on ``keep``; labels unchanged."""
        keep = tuple(sorted(set(keep)))
        missing = set(keep) - set(self.points)
        if missing:
            raise ValueError(f"points {sorted(missing)} are not in the graph")
        shades = np.full_like(self.shades, -1)
        idx = np.array(keep)
        shades[np.ix_(idx, idx)] = self.shades[np.ix_(idx, idx)]
        prov = None
        if self.provenance is not None:
            p = self.provenance
            prov = CyclicProvenance(p.modulus, p.class0,
                                    frozenset(range(1, p.modulus + 1)) - frozenset(keep))
        return SplittingGraph(keep, shades, prov)

    def relabeled(self, mapping: dict[int, int]) -> "SplittingGraph":
        """Copy with point ``p`` renamed ``mapping[p]`` (must be injective on the points)."""
        new_points = [mapping[p] for p in self.points]
        if len(set(new_points)) != len(new_points) or min(new_points) < 1:
            raise ValueError("relabelling must be injective onto positive labels")
        size = max(new_points) + 1
        shades = np.full((size, size), -1, dtype=np.int8)
        for p in self.points:
            for q in self.points:
                if p != q:
                    shades[mapping[p], mapping[q]] = self.shades[p, q]
        return SplittingGraph(tuple(sorted(new_points)), shades)

    def compact(self) -> "SplittingGraph":
        """Relabel the retained points to 1..n in ascending order."""
        return self.relabeled({p: i + 1 for i, p in enumerate(self.points)})

    def b0_edges(self) -> list[tuple[int, int]]:
        return [(p, q) for p, q in combinations(self.points, 2) if self.shades[p, q] == 0]


def build_cyclic_splitting(modulus: int, class0: Iterable[int],
                           deletions: Iterable[int] = ()) -> SplittingGraph:
    """Cyclic shading of K_modulus: ``pq`` is b0 iff ``(q - p) % modulus`` is in ``class0``."""
    class0 = frozenset(int(d) for d in class0)
    deletions = frozenset(int(p) for p in deletions)
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    bad = [d for d in class0 if not 1 <= d < modulus]
    if bad:
        raise ValueError(f"residues {sorted(bad)} outside [1, {modulus - 1}]")
    asym = sorted(d for d in class0 if modulus - d not in class0)
    if asym:
        raise ValueError(
            f"class0 is not closed under negation mod {modulus}: "
            f"{asym[0]} present but {modulus - asym[0]} missing")
    bad = [p for p in deletions if not 1 <= p <= modulus]
    if bad:
        raise ValueError(f"deleted points {sorted(bad)} outside [1, {modulus}]")

    points = tuple(p for p in range(1, modulus + 1) if p not in deletions)
    shades = np.full((modulus + 1, modulus + 1), -1, dtype=np.int8)
    for p in points:
        for q in points:
            if p != q:
                shades[p, q] = 0 if (q - p) % modulus in class0 else 1
    return SplittingGraph(points, shades, CyclicProvenance(modulus, class0, deletions))


def build_explicit_splitting(point_count: int, b0_edges: Iterable[tuple[int, int]]) -> SplittingGraph:
    """Graph on points 1..point_count; listed edges b0, every other edge b1."""
    if point_count < 1:
        raise ValueError("need at least one point")
    shades = np.full((point_count + 1, point_count + 1), -1, dtype=np.int8)
    pts = np.arange(1, point_count + 1)
    shades[np.ix_(pts, pts)] = 1
    for p, q in b0_edges:
        if p == q or not (1 <= p <= point_count and 1 <= q <= point_count):
            raise ValueError(f"bad edge ({p}, {q})")
        shades[p, q] = shades[q, p] = 0
    np.fill_diagonal(shades, -1)
    return SplittingGraph(tuple(range(1, point_count + 1)), shades)


def default_splitting(deleted: Iterable[int] = DEFAULT_DELETIONS) -> SplittingGraph:
    """The cyclic K17 shading with class b0 = {1,2,4,8,9,13,15,16}, minus ``deleted``."""
    return build_cyclic_splitting(DEFAULT_MODULUS, DEFAULT_CLASS0, deleted)


def splitting_from_dict(spec: dict, extra_deletions: Iterable[int] = ()) -> SplittingGraph:
    keys = set(spec)
    if keys == {"modulus", "class0", "delete"}:
        deleted = set(spec["delete"]) | set(extra_deletions)
        return build_cyclic_splitting(int(spec["modulus"]), spec["class0"], deleted)
    if keys == {"points", "b0_edges"}:
        g = build_explicit_splitting(int(spec["points"]), [tuple(e) for e in spec["b0_edges"]])
        extra = set(extra_deletions)
        return g.restricted(set(g.points) - extra) if extra else g
    raise ValueError(
        "splitting spec must have exactly the keys {modulus, class0, delete} "
        f"or {{points, b0_edges}}; got {sorted(keys)}")


def load_splitting(path: str | Path, extra_deletions: Iterable[int] = ()) -> SplittingGraph:
    with open(path, encoding="utf-8") as fh:
        return splitting_from_dict(json.load(fh), extra_deletions)


def splitting_to_dict(g: SplittingGraph) -> dict:
    if g.provenance is not None:
        p = g.provenance
        return {"modulus": p.modulus, "class0": sorted(p.class0), "delete": sorted(p.deleted)}
    if g.points != tuple(range(1, g.point_count + 1)):
        g = g.compact()
    return {"points": g.point_count, "b0_edges": [list(e) for e in g.b0_edges()]}


def find_mono_clique(g: SplittingGraph, k: int, shade: BlueShade) -> Optional[frozenset]:
    """First k-set (lexicographic over sorted points) whose edges all have ``shade``."""
    if not 1 <= k <= g.point_count:
        raise ValueError(f"clique size {k} outside [1, {g.point_count}]")
    shade = BlueShade(shade)
    nbr = {p: g.neighbour_mask(p, shade) for p in g.points}
    for combo in combinations(g.points, k):
        if all(nbr[p] >> q & 1 for i, p in enumerate(combo) for q in combo[i + 1:]):
            return frozenset(combo)
    return None


def find_mono_biclique(g: SplittingGraph, a: int, b: int,
                       shade: BlueShade) -> Optional[tuple[frozenset, frozenset]]:
    """Disjoint A, B with |A| = a, |B| = b and every A-B edge of ``shade``.

    A runs over a-subsets in lexicographic order; B is the b smallest common
    ``shade``-neighbours of A.  Points of A are never their own neighbours,
    so B is automatically disjoint from A.
    """
    if not a >= b >= 1:
        raise ValueError(f"need a >= b >= 1, got a={a}, b={b}")
    if a + b > g.point_count:
        raise ValueError(f"K{a},{b} does not fit in {g.point_count} points")
    shade = BlueShade(shade)
    nbr = {p: g.neighbour_mask(p, shade) for p in g.points}
    for combo in combinations(g.points, a):
        common = nbr[combo[0]]
        for p in combo[1:]:
            common &= nbr[p]
        if common.bit_count() >= b:
            side = []
            while len(side) < b:
                low = common & -common
                side.append(low.bit_length() - 1)
                common ^= low
            return frozenset(combo), frozenset(side)
    return None


@dataclass
class SplittingReport:
    mono_k4: Optional[tuple[frozenset, BlueShade]] = None
    mono_k43: Optional[tuple[tuple[frozenset, frozenset], BlueShade]] = None
    mono_k52: Optional[tuple[tuple[frozenset, frozenset], BlueShade]] = None

    @property
    def passed(self) -> bool:
        return self.mono_k4 is None and self.mono_k43 is None and self.mono_k52 is None

    def to_dict(self) -> dict:
        def clique(w):
            return None if w is None else {"points": sorted(w[0]), "shade": w[1].label}

        def biclique(w):
            if w is None:
                return None
            (left, right), shade = w
            return {"left": sorted(left), "right": sorted(right), "shade": shade.label}

        return {"pass": self.passed, "mono_k4": clique(self.mono_k4),
                "mono_k43": biclique(self.mono_k43), "mono_k52": biclique(self.mono_k52)}


def validate_splitting(g: SplittingGraph) -> SplittingReport:
    """Search both shades for monochromatic K4, K4,3 and K5,2."""
    report = SplittingReport()
    for shade in BlueShade:
        if report.mono_k4 is None and g.point_count >= 4:
            w = find_mono_clique(g, 4, shade)
            if w is not None:
                report.mono_k4 = (w, shade)
        if report.mono_k43 is None and g.point_count >= 7:
            w = find_mono_biclique(g, 4, 3, shade)
            if w is not None:
                report.mono_k43 = (w, shade)
        if report.mono_k52 is None and g.point_count >= 7:
            w = find_mono_biclique(g, 5, 2, shade)
            if w is not None:
                report.mono_k52 = (w, shade)
    return report
