"""Edge-by-edge replay of the case analysis behind the 3432-vertex colouring.

Every ordered pair (X, Y) is mapped to canonical coordinates where
X = {1..7} and Y overlaps X in its last j points.  Each need of the edge has
a small family of candidate witnesses written in those coordinates; the
replay maps each candidate back to the original points, evaluates its true
colours there (the colouring is not invariant under the relabelling,
because the splitting graph is fixed) and reports the first candidate that
works.

Families are written in a compact notation: ``"1 2 3 4 5 [8 9 10 11]2"``
is every set containing 1..5 plus two of 8..11.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional

import numba
import numpy as np

from .construct import EdgeColoring, base_color, build_m2_coloring, intersection_color_table
from .core import PointSet, intersection_size, vertex_masks
from .mandate import Need, mandatory_mn
from .splitgraph import SplittingGraph

# the system TBB is often too old for numba; try the other layers first
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

M2 = mandatory_mn(2)
R, B0, B1 = 0, 1, 2
NAMES = M2.names
GROUND = 14
K = 7


@dataclass(frozen=True)
class Choose:
    count: int
    points: tuple[int, ...]


@dataclass(frozen=True)
class CandidateFamily:
    """Union of patterns; each pattern is a tuple of fixed points and :class:`Choose` blocks."""

    patterns: tuple[tuple, ...]
    members: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        masks = set()
        for pattern in self.patterns:
            fixed = [b for b in pattern if isinstance(b, int)]
            choices = [combinations(b.points, b.count) for b in pattern if isinstance(b, Choose)]
            for picked in product(*choices):
                pts = fixed + [p for part in picked for p in part]
                if len(set(pts)) != K:
                    raise ValueError(f"pattern {pattern!r} yields a set of size {len(set(pts))}")
                masks.add(PointSet.of(pts).mask)
        object.__setattr__(self, "members", tuple(sorted(masks)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return (PointSet(m) for m in self.members)

    def __contains__(self, z: PointSet) -> bool:
        return z.mask in self.members


_TOKEN = re.compile(r"\[([\d\s]+)\](\d+)|(\d+)")


def parse_pattern(text: str) -> tuple:
    blocks = []
    for chosen, count, single in _TOKEN.findall(text):
        if single:
            blocks.append(int(single))
        else:
            blocks.append(Choose(int(count), tuple(int(p) for p in chosen.split())))
    return tuple(blocks)


def family(*patterns: str) -> CandidateFamily:
    return CandidateFamily(tuple(parse_pattern(p) for p in patterns))


ALL_RED = "5 6 7 8 9 10 14"

# (j, (c2, c3)) -> patterns; c1 is b0 for j=0, b1 for j=1, either shade for j=2, r for j>=3
_PATTERNS: dict[tuple[int, tuple[int, int]], tuple[str, ...]] = {}


def _add(j: int, pairs, *patterns: str) -> None:
    for pair in pairs:
        _PATTERNS[j, pair] = patterns


_add(0, [(R, B0), (R, B1)], "1 2 3 4 5 [8 9 10 11]2")
_add(0, [(B0, R), (B1, R)], "[1 2 3 4]2 8 9 10 11 12")
_add(0, [(R, R)], ALL_RED)

_add(1, [(R, B0)], "1 2 3 4 5 6 14")
_add(1, [(R, B1)], "1 2 3 4 5 6 8")
_add(1, [(B0, R)], "8 9 10 11 12 13 14")
_add(1, [(B1, R)], "6 8 9 10 11 12 13")
_add(1, [(R, R)], ALL_RED)

_add(2, [(R, B0)], "1 2 3 4 5 13 14")
_add(2, [(R, B1)], "1 2 3 4 5 8 14")
_add(2, [(B0, R)], "8 9 10 11 12 13 14")
_add(2, [(B1, R)], "7 8 9 10 11 12 13")
_add(2, [(R, R)], ALL_RED)

_add(3, [(B0, B0), (B0, B1), (B1, B0), (B1, B1)], "[1 2 3 4]2 [8 9 10 11]2 12 13 14")
_add(3, [(R, B0), (R, B1)], "1 2 3 [8 9 10 11]2 12 13", "1 2 3 [8 9 10 11]2 13 14")
_add(3, [(B0, R), (B1, R)], "[1 2 3 4]2 8 9 10 12 13", "[1 2 3 4]2 9 10 11 13 14")
_add(3, [(R, R)], ALL_RED)

_add(4, [(R, B0)], "1 2 3 11 12 13 14")
_add(4, [(R, B1)], "1 2 3 10 11 12 13")
_add(4, [(B0, R)], "8 9 10 11 12 13 14")
# Y & Z must have at least three points for c(YZ) = r
_add(4, [(B1, R)], "1 8 9 10 [11 12 13 14]3")
# two points of each wing, or one point each of wing X, spine, wing Y
_add(4, [(B0, B0), (B0, B1), (B1, B0), (B1, B1)],
     "[1 2 3]2 [8 9 10]2 [11 12 13 14]3",
     "[1 2 3]1 [4 5 6 7]1 [8 9 10]1 11 12 13 14")
_add(4, [(R, R)], ALL_RED)

_add(5, [(R, B0), (R, B1)], "1 2 [3 4 5 6]2 12 13 14")
_add(5, [(B0, R), (B1, R)], "[3 4 5 6]2 8 9 12 13 14")
_add(5, [(B0, B0), (B1, B1)], "[3 4 5 6]2 10 11 12 13 14")
_add(5, [(B0, B1), (B1, B0)],
     "1 2 8 11 12 13 14", "1 8 9 11 12 13 14", "8 9 10 11 12 13 14",
     "1 2 10 11 12 13 14", "1 2 8 9 12 13 14",
     "[3 4 5 6 7]1 [8 9]1 10 11 12 13 14", "[1 2]1 [3 4 5 6 7]1 10 11 12 13 14")
_add(5, [(R, R)], ALL_RED)

_add(6, [(B1, B0)], "1 9 10 11 12 13 14")
_add(6, [(B0, B1)], "8 9 10 11 12 13 14")
_add(6, [(B0, B0), (B1, B1)], "[2 3 4 5]2 10 11 12 13 14")
_add(6, [(R, B0), (R, B1)], "1 [2 3 4 5]2 11 12 13 14")
_add(6, [(B0, R), (B1, R)], "[2 3 4 5]2 8 11 12 13 14")
_add(6, [(R, R)], ALL_RED)

_FAMILIES = {key: family(*pats) for key, pats in _PATTERNS.items()}


def edge_label_for(j: int) -> tuple[int, ...]:
    """Colours an edge of overlap j can carry."""
    if j == 0:
        return (B0,)
    if j == 1:
        return (B1,)
    if j == 2:
        return (B0, B1)
    if 3 <= j <= 6:
        return (R,)
    raise ValueError(f"overlap {j} outside [0, 6]")


def _need_ids(need) -> Need:
    return Need(*(M2.label_id(t) for t in need))


def candidate_family(j: int, need) -> CandidateFamily:
    """Candidate witnesses (canonical coordinates) for a need of a j-edge."""
    need = _need_ids(need)
    if need.c1 not in edge_label_for(j):
        raise ValueError(f"a {j}-edge is never coloured {NAMES[need.c1]}")
    if not M2.contains(need):
        raise ValueError(f"{M2.format(need)} is not a need")
    return _FAMILIES[j, (need.c2, need.c3)]


@dataclass(frozen=True)
class CanonicalMap:
    """Relabelling of [14]: ``forward[p - 1]`` is the canonical name of point p."""

    forward: tuple[int, ...]
    j: int

    def apply(self, x: PointSet) -> PointSet:
        return PointSet.of(self.forward[p - 1] for p in x)

    def inverse(self, z: PointSet) -> PointSet:
        back = {q: p + 1 for p, q in enumerate(self.forward)}
        return PointSet.of(back[q] for q in z)


def canonical_map(x: PointSet, y: PointSet) -> CanonicalMap:
    """Send X-Y, X&Y, Y-X, rest (each ascending) to consecutive canonical points."""
    if len(x) != K or len(y) != K:
        raise ValueError("both vertices must be 7-subsets")
    if not (x.within(GROUND) and y.within(GROUND)):
        raise ValueError("vertices must be subsets of [14]")
    if x == y:
        raise ValueError("X and Y must differ")
    full = PointSet((1 << GROUND) - 1)
    order = (x - y).points() + (x & y).points() + (y - x).points() + (full - (x | y)).points()
    forward = [0] * GROUND
    for canon, p in enumerate(order, start=1):
        forward[p - 1] = canon
    return CanonicalMap(tuple(forward), intersection_size(x, y))


@dataclass(frozen=True)
class SpineWings:
    spine: PointSet
    wing_x: PointSet
    wing_y: PointSet

    @classmethod
    def of(cls, x: PointSet, y: PointSet) -> "SpineWings":
        return cls(x & y, x - y, y - x)


@dataclass
class NeedReplay:
    need: Need
    family_size: int
    witness: Optional[PointSet]

    @property
    def met(self) -> bool:
        return self.witness is not None


def replay_edge(c: EdgeColoring, g: SplittingGraph, x: PointSet, y: PointSet) -> list[NeedReplay]:
    """Search each need's candidate family for a witness, in ascending canonical order."""
    cmap = canonical_map(x, y)
    c1 = M2.label_id(c.color_name(c.index_of(x), c.index_of(y)))
    out = []
    for need in M2.needs_of(c1):
        fam = candidate_family(cmap.j, need)
        witness = None
        for cand in fam:
            z = cmap.inverse(cand)
            if z == x or z == y:
                continue
            if (base_color(x, z, g), base_color(y, z, g)) == (NAMES[need.c2], NAMES[need.c3]):
                witness = z
                break
        out.append(NeedReplay(need, len(fam), witness))
    return out


# Flat family tables for the compiled kernel: [j, c1, need_index] -> candidate rows
def _family_tables():
    need_c2 = np.full((3, 9), -1, dtype=np.int64)
    need_c3 = np.full((3, 9), -1, dtype=np.int64)
    need_count = np.zeros(3, dtype=np.int64)
    for c1 in range(3):
        needs = M2.needs_of(c1)
        need_count[c1] = len(needs)
        for i, nd in enumerate(needs):
            need_c2[c1, i], need_c3[c1, i] = nd.c2, nd.c3
    start = np.full((7, 3, 9), -1, dtype=np.int64)
    end = np.full((7, 3, 9), -1, dtype=np.int64)
    rows: list[list[int]] = []
    for j in range(7):
        for c1 in edge_label_for(j):
            for i, nd in enumerate(M2.needs_of(c1)):
                fam = candidate_family(j, nd)
                start[j, c1, i] = len(rows)
                rows.extend(PointSet(m).points() for m in fam.members)
                end[j, c1, i] = len(rows)
    return need_c2, need_c3, need_count, start, end, np.array(rows, dtype=np.int64)


@numba.njit(cache=True)
def _popcount(v):
    n = 0
    while v:
        v &= v - 1
        n += 1
    return n


@numba.njit(cache=True)
def _replay_pair(xm, ym, c1, table, need_c2, need_c3, need_count, start, end, cand, inv, unmet):
    """Fill ``unmet[i]`` for each need i of the pair; return the overlap j."""
    pos = 0
    for part in range(4):
        for p in range(1, 15):
            bit = 1 << (p - 1)
            inx = (xm & bit) != 0
            iny = (ym & bit) != 0
            if ((part == 0 and inx and not iny) or (part == 1 and inx and iny)
                    or (part == 2 and iny and not inx) or (part == 3 and not inx and not iny)):
                inv[pos] = p
                pos += 1
    j = _popcount(xm & ym)
    unmet[:] = False
    for i in range(need_count[c1]):
        found = False
        for k in range(start[j, c1, i], end[j, c1, i]):
            zm = 0
            for t in range(7):
                zm |= 1 << (inv[cand[k, t] - 1] - 1)
            if zm == xm or zm == ym:
                continue
            if table[xm & zm] == need_c2[c1, i] and table[ym & zm] == need_c3[c1, i]:
                found = True
                break
        unmet[i] = not found
    return j


@numba.njit(parallel=True, cache=True)
def _replay_kernel(masks, cmat, table, need_c2, need_c3, need_count, start, end, cand,
                   pairs, bad_pairs, bad_needs, checks):
    n = masks.shape[0]
    for x in numba.prange(n):
        inv = np.zeros(14, dtype=np.int64)
        unmet = np.zeros(9, dtype=np.bool_)
        for y in range(n):
            if y == x:
                continue
            c1 = cmat[x, y]
            j = _replay_pair(masks[x], masks[y], c1, table, need_c2, need_c3, need_count,
                             start, end, cand, inv, unmet)
            pairs[x, j] += 1
            checks[x, j] += need_count[c1]
            missed = 0
            for i in range(need_count[c1]):
                if unmet[i]:
                    missed += 1
            if missed:
                bad_pairs[x, j] += 1
                bad_needs[x, j] += missed


@numba.njit(cache=True)
def _replay_row(x, masks, cmat, table, need_c2, need_c3, need_count, start, end, cand):
    n = masks.shape[0]
    out = np.zeros((n, 9), dtype=np.bool_)
    inv = np.zeros(14, dtype=np.int64)
    unmet = np.zeros(9, dtype=np.bool_)
    for y in range(n):
        if y == x:
            continue
        _replay_pair(masks[x], masks[y], cmat[x, y], table, need_c2, need_c3, need_count,
                     start, end, cand, inv, unmet)
        out[y, :] = unmet
    return out


@dataclass
class ReplayReport:
    pairs_by_j: list[int]
    passed_pairs_by_j: list[int]
    need_checks_by_j: list[int]
    unmet_needs: int
    failures: list = field(default_factory=list)
    truncated: bool = False
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.unmet_needs == 0

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "per_j": [{"j": j, "ordered_pairs": p, "passed_pairs": ok, "need_checks": nc}
                      for j, (p, ok, nc) in enumerate(zip(self.pairs_by_j, self.passed_pairs_by_j,
                                                          self.need_checks_by_j))],
            "unmet_needs": self.unmet_needs,
            "failures": self.failures,
            "truncated": self.truncated,
        }


def _set_threads(threads: Optional[int]) -> None:
    limit = numba.config.NUMBA_NUM_THREADS
    numba.set_num_threads(limit if threads is None else max(1, min(int(threads), limit)))


def replay_all(c: EdgeColoring, g: SplittingGraph, threads: Optional[int] = None,
               failure_cap: Optional[int] = 100) -> ReplayReport:
    """Replay every ordered pair of the 3432-vertex colouring built from ``g``."""
    if c.ground != (GROUND, K) or c.labels != NAMES:
        raise ValueError("replay needs the colouring of the 7-subsets of [14] with labels r, b0, b1")
    if not c.same_as(build_m2_coloring(g)):
        raise ValueError("colouring was not built from this splitting graph")
    start_time = time.perf_counter()
    masks = vertex_masks(GROUND, K)
    table = intersection_color_table(g).astype(np.int64)
    tables = _family_tables()
    n = len(masks)
    pairs = np.zeros((n, 7), dtype=np.int64)
    bad_pairs = np.zeros_like(pairs)
    bad_needs = np.zeros_like(pairs)
    checks = np.zeros_like(pairs)
    _set_threads(threads)
    _replay_kernel(masks, c.matrix, table, *tables, pairs, bad_pairs, bad_needs, checks)

    failures: list = []
    total_unmet = int(bad_needs.sum())
    for x in np.flatnonzero(bad_needs.sum(axis=1)):
        if failure_cap is not None and len(failures) >= failure_cap:
            break
        row = _replay_row(int(x), masks, c.matrix, table, *tables)
        for y, i in zip(*np.nonzero(row)):
            c1 = int(c.matrix[x, y])
            need = M2.needs_of(c1)[i]
            j = int(masks[x] & masks[y]).bit_count()
            failures.append({"x": int(x), "y": int(y), "j": j,
                             "need": [NAMES[t] for t in need],
                             "family_size": len(candidate_family(j, need))})
    if failure_cap is not None:
        failures = failures[:failure_cap]
    pairs_j = pairs.sum(axis=0)
    return ReplayReport(
        pairs_by_j=[int(v) for v in pairs_j],
        passed_pairs_by_j=[int(v) for v in pairs_j - bad_pairs.sum(axis=0)],
        need_checks_by_j=[int(v) for v in checks.sum(axis=0)],
        unmet_needs=total_unmet,
        failures=failures,
        truncated=len(failures) < total_unmet,
        wall_time=time.perf_counter() - start_time,
    )
