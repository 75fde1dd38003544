"""Edge colourings of complete graphs.

An :class:`EdgeColoring` is a dense symmetric ``uint8`` matrix of label
indices (diagonal set to :data:`NO_COLOR`).  For the 3432-vertex colouring
this is about 12 MB and is built in one vectorised pass: the colour of
``XY`` depends only on the mask ``X & Y``, so a lookup table over all
intersection masks is indexed by ``masks[:, None] & masks[None, :]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from .core import PointSet, intersection_size, popcount_table, vertex_index, vertex_masks
from .splitgraph import SplittingGraph

NO_COLOR = 255
MAX_TABLE_POINTS = 20


class EdgeColoring:
    """Total symmetric colouring of K_N.

    ``matrix[u, v]`` is the label index of edge ``uv``.  ``vertices`` (masks
    in canonical order) and ``ground`` = (m, k) are set when vertices are
    k-subsets of [m].
    """

    def __init__(self, labels: Sequence[str], matrix: np.ndarray,
                 vertices: Optional[np.ndarray] = None,
                 ground: Optional[tuple[int, int]] = None):
        matrix = np.ascontiguousarray(matrix, dtype=np.uint8)
        n = matrix.shape[0]
        if matrix.shape != (n, n):
            raise ValueError("colour matrix must be square")
        if len(labels) > NO_COLOR:
            raise ValueError("too many labels")
        off = ~np.eye(n, dtype=bool)
        if np.any(matrix[off] >= len(labels)):
            raise ValueError("colour index out of range")
        if not np.array_equal(matrix, matrix.T):
            raise ValueError("colour matrix is not symmetric")
        matrix = matrix.copy()
        np.fill_diagonal(matrix, NO_COLOR)
        matrix.setflags(write=False)
        self.labels = tuple(labels)
        self.matrix = matrix
        self.vertices = vertices
        self.ground = ground

    @property
    def N(self) -> int:
        return self.matrix.shape[0]

    def __len__(self) -> int:
        return self.N

    def __repr__(self) -> str:
        return f"EdgeColoring(N={self.N}, labels={list(self.labels)})"

    def label_id(self, name: str) -> int:
        return self.labels.index(name)

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("a vertex has no edge to itself")
        return int(self.matrix[u, v])

    def color_name(self, u: int, v: int) -> str:
        return self.labels[self.color(u, v)]

    def index_of(self, x: PointSet) -> int:
        if self.ground is None:
            raise ValueError("this colouring has no point-set vertices")
        return vertex_index(x, *self.ground)

    def vertex(self, i: int) -> PointSet:
        if self.vertices is None:
            raise ValueError("this colouring has no point-set vertices")
        return PointSet(int(self.vertices[i]))

    def edge_counts(self) -> dict[str, int]:
        """Number of unordered edges per label."""
        iu = np.triu_indices(self.N, 1)
        counts = np.bincount(self.matrix[iu], minlength=len(self.labels))
        return {name: int(counts[i]) for i, name in enumerate(self.labels)}

    def same_as(self, other: "EdgeColoring") -> bool:
        return self.labels == other.labels and np.array_equal(self.matrix, other.matrix)


SPLIT = "split"
RuleValue = Union[str, int]


@dataclass(frozen=True)
class IntersectionRule:
    """Colour of a j-edge (|X & Y| = j) for every j in [0, k].

    Values are label names, or :data:`SPLIT` to take the splitting-graph shade
    of the two shared points (only meaningful for j = 2).
    """

    by_size: Mapping[int, str]
    k: int

    def __post_init__(self):
        missing = [j for j in range(self.k + 1) if j not in self.by_size]
        if missing:
            raise ValueError(f"rule undefined for intersection sizes {missing}")
        for j, v in self.by_size.items():
            if v == SPLIT and j != 2:
                raise ValueError("only 2-edges can consult the splitting graph")


M2_LABELS = ("r", "b0", "b1")
M2_RULE = IntersectionRule({0: "b0", 1: "b1", 2: SPLIT, 3: "r", 4: "r", 5: "r", 6: "r", 7: "r"}, k=7)


def _rule_table(m: int, rule: IntersectionRule, labels: Sequence[str],
                g: Optional[SplittingGraph]) -> np.ndarray:
    """Colour index for every mask over [m], according to its popcount."""
    if m > MAX_TABLE_POINTS:
        raise ValueError(f"intersection colourings support at most {MAX_TABLE_POINTS} points")
    ids = {name: i for i, name in enumerate(labels)}
    pc = popcount_table(m)
    table = np.full(1 << m, NO_COLOR, dtype=np.uint8)
    for j, value in rule.by_size.items():
        if value != SPLIT:
            table[pc == j] = ids[value]
    if SPLIT in rule.by_size.values():
        if g is None:
            raise ValueError("rule consults a splitting graph but none was given")
        missing = [p for p in range(1, m + 1) if p not in g.points]
        if missing:
            raise ValueError(f"splitting graph lacks points {missing}")
        for p in range(1, m + 1):
            for q in range(p + 1, m + 1):
                table[(1 << (p - 1)) | (1 << (q - 1))] = ids[f"b{int(g.shades[p, q])}"]
    return table


def intersection_color_table(g: SplittingGraph, m: int = 14) -> np.ndarray:
    """Lookup table: mask of X & Y -> label index of the m2 colouring."""
    return _rule_table(m, M2_RULE, M2_LABELS, g)


def build_intersection_coloring(m: int, k: int, rule: IntersectionRule, labels: Sequence[str],
                                g: Optional[SplittingGraph] = None) -> EdgeColoring:
    """Colour the k-subsets of [m] by the size (and, for 2-edges, content) of pairwise intersections."""
    if rule.k != k:
        raise ValueError(f"rule is for {rule.k}-subsets, not {k}-subsets")
    table = _rule_table(m, rule, labels, g)
    masks = vertex_masks(m, k)
    matrix = table[masks[:, None] & masks[None, :]]
    return EdgeColoring(labels, matrix, vertices=masks, ground=(m, k))


def base_color(x: PointSet, y: PointSet, g: SplittingGraph) -> str:
    """Label name of edge XY in the m2 colouring."""
    if x == y:
        raise ValueError("X and Y must differ")
    j = intersection_size(x, y)
    if j == 0:
        return "b0"
    if j == 1:
        return "b1"
    if j == 2:
        p, q = (x & y).points()
        return g.edge_color(p, q).label
    return "r"


def build_m2_coloring(g: SplittingGraph) -> EdgeColoring:
    """The 3432-vertex colouring on the 7-subsets of [14]."""
    return build_intersection_coloring(14, 7, M2_RULE, M2_LABELS, g)


def _symmetric_classes(modulus: int, classes: Mapping[str, Sequence[int]]) -> np.ndarray:
    owner = np.full(modulus, -1, dtype=np.int64)
    for i, (name, residues) in enumerate(classes.items()):
        for d in residues:
            d = int(d)
            if not 1 <= d < modulus:
                raise ValueError(f"residue {d} of class {name!r} outside [1, {modulus - 1}]")
            if owner[d] != -1:
                raise ValueError(f"residue {d} appears in more than one class")
            owner[d] = i
    uncovered = [d for d in range(1, modulus) if owner[d] == -1]
    if uncovered:
        raise ValueError(f"classes do not cover residues {uncovered}")
    for d in range(1, modulus):
        if owner[d] != owner[modulus - d]:
            name = list(classes)[owner[d]]
            raise ValueError(f"class {name!r} is not closed under negation: has {d}, lacks {modulus - d}")
    return owner


def build_cyclic_coloring(modulus: int, classes: Mapping[str, Sequence[int]]) -> EdgeColoring:
    """K_modulus on residues; ``xy`` gets the class containing ``(y - x) % modulus``."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    owner = _symmetric_classes(modulus, classes)
    v = np.arange(modulus)
    diff = (v[None, :] - v[:, None]) % modulus
    matrix = owner[diff]
    matrix[diff == 0] = NO_COLOR
    return EdgeColoring(list(classes), matrix.astype(np.uint8))


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, math.isqrt(q) + 1))


def build_affine_coloring(q: int) -> EdgeColoring:
    """K_{q^2} on the points of AG(2, q), q prime; ``xy`` gets the parallel class of line xy.

    Point (a, b) is vertex ``a * q + b``.  Class i < q is slope i; class q is
    the vertical direction.  Labels are r1..r{q+1}.
    """
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    pts = np.arange(q * q)
    a, b = pts // q, pts % q
    da = (a[None, :] - a[:, None]) % q
    db = (b[None, :] - b[:, None]) % q
    inv = np.zeros(q, dtype=np.int64)
    for t in range(1, q):
        inv[t] = pow(t, -1, q)
    matrix = np.where(da == 0, q, (db * inv[da]) % q)
    np.fill_diagonal(matrix, NO_COLOR)
    return EdgeColoring([f"r{i + 1}" for i in range(q + 1)], matrix.astype(np.uint8))


def intersection_size_counts(c: EdgeColoring) -> dict[int, int]:
    """Unordered edge counts by |X & Y| for point-set colourings."""
    if c.vertices is None:
        raise ValueError("this colouring has no point-set vertices")
    m, k = c.ground
    pc = popcount_table(m) if m <= MAX_TABLE_POINTS else None
    masks = c.vertices
    counts = np.zeros(k + 1, dtype=np.int64)
    for i in range(c.N - 1):
        inter = masks[i] & masks[i + 1:]
        if pc is not None:
            sizes = pc[inter]
        else:
            sizes = np.array([int(t).bit_count() for t in inter])
        counts += np.bincount(sizes, minlength=k + 1)[: k + 1]
    return {j: int(counts[j]) for j in range(k + 1)}
