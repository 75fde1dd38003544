"""Point sets over a small ground set and the canonical vertex order.

A point set over ``[m] = {1, ..., m}`` is a bitmask with point ``p`` at bit
``p - 1``.  Vertices of the big graph are the ``k``-subsets of ``[m]`` listed in
ascending mask order; :func:`vertex_index` ranks a subset in that order
without scanning.

Bit rows (the per-vertex neighbour sets of a colour) are plain numpy boolean
arrays, which already give intersection, union, complement, popcount and
iteration over set positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

MAX_POINTS = 64


@dataclass(frozen=True, order=True)
class PointSet:
    """A subset of the ground points, stored as a bitmask."""

    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> MAX_POINTS:
            raise ValueError(f"mask {self.mask:#x} does not fit {MAX_POINTS} points")

    @classmethod
    def of(cls, points: Iterable[int]) -> "PointSet":
        mask = 0
        for p in points:
            if not 1 <= p <= MAX_POINTS:
                raise ValueError(f"point {p} outside 1..{MAX_POINTS}")
            mask |= 1 << (p - 1)
        return cls(mask)

    def points(self) -> list[int]:
        return [i + 1 for i in range(self.mask.bit_length()) if self.mask >> i & 1]

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.points())

    def __contains__(self, p: int) -> bool:
        return p >= 1 and bool(self.mask >> (p - 1) & 1)

    def __and__(self, other: "PointSet") -> "PointSet":
        return PointSet(self.mask & other.mask)

    def __or__(self, other: "PointSet") -> "PointSet":
        return PointSet(self.mask | other.mask)

    def __sub__(self, other: "PointSet") -> "PointSet":
        return PointSet(self.mask & ~other.mask)

    def within(self, m: int) -> bool:
        return self.mask >> m == 0

    def __repr__(self) -> str:
        return "PointSet({" + ", ".join(map(str, self.points())) + "})"


def intersection_size(x: PointSet, y: PointSet) -> int:
    return (x.mask & y.mask).bit_count()


def _check_mk(m: int, k: int) -> None:
    if not 0 <= m <= MAX_POINTS:
        raise ValueError(f"ground set size must be in [0, {MAX_POINTS}], got {m}")
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")


def iter_masks(m: int, k: int) -> Iterator[int]:
    """Yield all k-subsets of [m] as masks in strictly ascending order (Gosper's hack)."""
    _check_mk(m, k)
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << m
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def enumerate_vertices(m: int, k: int) -> list[PointSet]:
    return [PointSet(mask) for mask in iter_masks(m, k)]


def vertex_masks(m: int, k: int) -> np.ndarray:
    """The vertex masks of ``enumerate_vertices(m, k)`` as an integer array."""
    dtype = np.int64 if m < 63 else np.uint64
    return np.fromiter(iter_masks(m, k), dtype=dtype, count=math.comb(m, k))


def vertex_index(x: PointSet, m: int, k: int) -> int:
    """Rank of ``x`` among the k-subsets of [m] in ascending mask order.

    Ascending mask order is colex order on the points, so the rank is
    ``sum(C(b_i, i + 1))`` over the set bit positions ``b_0 < b_1 < ...``.
    """
    _check_mk(m, k)
    if len(x) != k:
        raise ValueError(f"expected a {k}-subset, got {len(x)} points")
    if not x.within(m):
        raise ValueError(f"{x!r} is not a subset of [{m}]")
    rank = 0
    i = 0
    mask = x.mask
    while mask:
        b = (mask & -mask).bit_length() - 1
        i += 1
        rank += math.comb(b, i)
        mask &= mask - 1
    return rank


def vertex_from_index(index: int, m: int, k: int) -> PointSet:
    """Inverse of :func:`vertex_index`."""
    _check_mk(m, k)
    total = math.comb(m, k)
    if not 0 <= index < total:
        raise IndexError(f"vertex index {index} outside [0, {total})")
    mask = 0
    r = index
    n = m
    while k > 0:
        n -= 1
        c = math.comb(n, k)
        if r >= c:
            r -= c
            mask |= 1 << n
            k -= 1
    return PointSet(mask)


def popcount_table(bits: int) -> np.ndarray:
    """Popcounts of all integers below ``2**bits``."""
    table = np.zeros(1 << bits, dtype=np.uint8)
    for b in range(bits):
        table[1 << b: 1 << (b + 1)] = table[: 1 << b] + 1
    return table


def set_positions(row: np.ndarray) -> list[int]:
    return np.flatnonzero(row).tolist()
