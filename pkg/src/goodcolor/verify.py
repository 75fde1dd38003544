"""Fast verification of the three goodness conditions and the atom property.

For a vertex block ``B`` the count matrices ``K[a][b] = A_a[B] @ A_b.T``
give, for every ordered pair (x, y), the number of third vertices z with
``c(xz) = a`` and ``c(yz) = b`` (``A_l`` is the 0/1 adjacency matrix of
label ``l``).  Condition (1) is "K[a][b][x, y] > 0 for every need
(c(xy), a, b)"; condition (2) is "K[a][b][x, y] == 0 for every non-member
(c(xy), a, b)".  Counts are exact in float32 for N < 2**24.

Blocks are independent, read shared immutable arrays and return private
results that are merged in block order, so reports do not depend on the
thread count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .construct import NO_COLOR, EdgeColoring
from .mandate import MandatorySet, Need

DEFAULT_FAILURE_CAP = 100
BLOCK_ROWS = 256
ORIENTATION = "need (c1,c2,c3) at ordered pair (x,y) is witnessed by z with c(xz)=c2 and c(yz)=c3"


class ColorRows:
    """Per-label neighbour rows: ``rows[l, v]`` is the boolean row R_l[v]."""

    def __init__(self, c: EdgeColoring):
        self.coloring = c
        self.labels = c.labels
        levels = np.arange(len(c.labels), dtype=np.uint8)[:, None, None]
        self.rows = c.matrix[None, :, :] == levels
        self.rows.setflags(write=False)

    def __getitem__(self, key) -> np.ndarray:
        label, v = key
        return self.rows[self._lid(label), v]

    def _lid(self, label) -> int:
        return self.labels.index(label) if isinstance(label, str) else int(label)

    def degree(self, label, v: int) -> int:
        return int(self.rows[self._lid(label), v].sum())


def color_rows(c: EdgeColoring) -> ColorRows:
    return ColorRows(c)


def witness_set(rows: ColorRows, x: int, y: int, need) -> np.ndarray:
    """R_{c2}[x] & R_{c3}[y] without x and y, for a need (c1, c2, c3) of edge xy.

    Labels may be given as ids of the colouring or as names.
    """
    c1, c2, c3 = (rows._lid(t) for t in need)
    if x == y:
        raise ValueError("x and y must differ")
    actual = rows.coloring.color(x, y)
    if actual != c1:
        raise ValueError(f"edge ({x}, {y}) has colour {rows.labels[actual]}, "
                         f"not {rows.labels[c1]}")
    out = rows.rows[c2, x] & rows.rows[c3, y]
    out[[x, y]] = False
    return out


@dataclass
class ConditionResult:
    passed: bool = True
    failure_count: int = 0
    failures: list = field(default_factory=list)
    truncated: bool = False


@dataclass
class VerificationReport:
    labels: tuple[str, ...]
    condition1: ConditionResult
    condition2: ConditionResult
    condition3: ConditionResult
    stats: dict
    permutation_closed: bool
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.condition1.passed and self.condition2.passed and self.condition3.passed

    def _names(self, triple) -> list[str]:
        return [self.labels[i] for i in triple]

    def to_dict(self, timing: bool = False) -> dict:
        c1, c2, c3 = self.condition1, self.condition2, self.condition3
        out = {
            "pass": self.passed,
            "convention": {"orientation": ORIENTATION,
                           "mandate_permutation_closed": self.permutation_closed},
            "condition1": {
                "pass": c1.passed, "failure_count": c1.failure_count,
                "failures": [{"x": x, "y": y, "need": self._names(n)} for x, y, n in c1.failures],
                "truncated": c1.truncated},
            "condition2": {
                "pass": c2.passed, "failure_count": c2.failure_count,
                "failures": [{"x": x, "y": y, "z": z, "triple": self._names(t)}
                             for x, y, z, t in c2.failures],
                "truncated": c2.truncated},
            "condition3": {
                "pass": c3.passed, "failure_count": c3.failure_count,
                "failures": [{"x": x, "label": self.labels[l]} for x, l in c3.failures],
                "truncated": c3.truncated},
            "stats": dict(self.stats),
        }
        if timing:
            out["stats"]["wall_time_s"] = round(self.wall_time, 3)
        return out


def _mapped_matrix(c: EdgeColoring, M: MandatorySet) -> np.ndarray:
    lut = np.full(256, NO_COLOR, dtype=np.uint8)
    for i, name in enumerate(c.labels):
        if name not in M.names:
            raise ValueError(f"colouring label {name!r} is not a label of the mandatory set")
        lut[i] = M.label_id(name)
    return lut[c.matrix]


def _one_hot(mapped: np.ndarray, n_labels: int) -> np.ndarray:
    dtype = np.float32 if mapped.shape[0] < (1 << 24) else np.float64
    return np.stack([(mapped == l).astype(dtype) for l in range(n_labels)])


def _blocks(n: int, rows: int = BLOCK_ROWS) -> list[slice]:
    return [slice(s, min(s + rows, n)) for s in range(0, n, rows)]


def _resolve_threads(threads: Optional[int]) -> int:
    if threads is None:
        return os.cpu_count() or 1
    if threads < 1:
        raise ValueError("threads must be positive")
    return threads


def _map_blocks(fn, blocks, threads: int) -> list:
    if threads == 1 or len(blocks) == 1:
        return [fn(b) for b in blocks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, blocks))


@dataclass
class _BlockResult:
    fail1: int
    list1: list
    fail2: int
    list2: list


def verify_good(c: EdgeColoring, M: MandatorySet, threads: Optional[int] = None,
                failure_cap: Optional[int] = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """Check conditions (1)-(3) on every ordered pair / vertex.

    ``failure_cap`` bounds each stored failure list (None keeps all);
    verdicts and failure counts are always exact.
    """
    start = time.perf_counter()
    threads = _resolve_threads(threads)
    cap = None if failure_cap is None else int(failure_cap)
    n = c.N
    L = len(M.labels)
    member = M.member
    mapped = _mapped_matrix(c, M)
    A = _one_hot(mapped, L)

    # not_member[c1][a, b] as lookups on the colour of xy (NO_COLOR -> False)
    need_lut = np.zeros((L, L, 256), dtype=bool)
    bad_lut = np.zeros((L, L, 256), dtype=bool)
    for a in range(L):
        for b in range(L):
            need_lut[a, b, :L] = member[:, a, b]
            bad_lut[a, b, :L] = ~member[:, a, b]

    def run(block: slice) -> _BlockResult:
        col = mapped[block]
        unmet = np.zeros((L, L) + col.shape, dtype=bool)
        bad = np.zeros(col.shape, dtype=np.int64)
        for a in range(L):
            Aa = A[a, block]
            for b in range(L):
                if not (need_lut[a, b].any() or bad_lut[a, b].any()):
                    continue
                counts = Aa @ A[b].T
                unmet[a, b] = need_lut[a, b][col] & (counts == 0)
                wrong = bad_lut[a, b][col]
                if wrong.any():
                    bad += np.where(wrong, counts, 0).astype(np.int64)
        fail1 = int(unmet.sum())
        fail2 = int(bad.sum())
        list1: list = []
        if fail1:
            per_row = unmet.sum(axis=(0, 1, 3))
            for r in np.flatnonzero(per_row):
                if cap is not None and len(list1) >= cap:
                    break
                ab, ys = np.nonzero(unmet[:, :, r, :].reshape(L * L, n))
                order = np.lexsort((ab, ys))
                x = block.start + int(r)
                for i in order:
                    a, b = divmod(int(ab[i]), L)
                    list1.append((x, int(ys[i]), Need(int(col[r, ys[i]]), a, b)))
        list2: list = []
        if fail2:
            for r in np.flatnonzero(bad.sum(axis=1)):
                if cap is not None and len(list2) >= cap:
                    break
                x = block.start + int(r)
                for y in np.flatnonzero(bad[r]):
                    c_xy = int(col[r, y])
                    row_x, row_y = mapped[x], mapped[y]
                    zs = np.ones(n, dtype=bool)
                    zs[[x, y]] = False
                    zs &= ~member[c_xy, np.minimum(row_x, L - 1), np.minimum(row_y, L - 1)]
                    for z in np.flatnonzero(zs):
                        list2.append((x, int(y), int(z), Need(c_xy, int(row_x[z]), int(row_y[z]))))
        if cap is not None:
            list1, list2 = list1[:cap], list2[:cap]
        return _BlockResult(fail1, list1, fail2, list2)

    results = _map_blocks(run, _blocks(n), threads)

    cond1, cond2, cond3 = ConditionResult(), ConditionResult(), ConditionResult()
    for res in results:
        cond1.failure_count += res.fail1
        cond1.failures.extend(res.list1)
        cond2.failure_count += res.fail2
        cond2.failures.extend(res.list2)
    degrees = A.sum(axis=2)
    for x, l in sorted((int(x), int(l)) for l, x in zip(*np.nonzero(degrees == 0))):
        cond3.failure_count += 1
        cond3.failures.append((x, l))
    for cond in (cond1, cond2, cond3):
        cond.passed = cond.failure_count == 0
        if cap is not None and len(cond.failures) > cap:
            cond.failures = cond.failures[:cap]
        cond.truncated = len(cond.failures) < cond.failure_count

    iu = np.triu_indices(n, 1)
    edge_counts = np.bincount(mapped[iu], minlength=L)[:L]
    needs_per_label = member.sum(axis=(1, 2))
    stats = {
        "vertices": n,
        "ordered_pairs": n * (n - 1),
        "edge_counts": {M.labels[l].name: int(edge_counts[l]) for l in range(L)},
        "need_checks": int(2 * (edge_counts * needs_per_label).sum()),
    }
    return VerificationReport(M.names, cond1, cond2, cond3, stats,
                              M.is_permutation_closed(), time.perf_counter() - start)


@dataclass
class AtomReport:
    labels: tuple[str, ...]
    # (alpha, beta, gamma) -> (gamma pairs with an alpha-beta path, all gamma pairs)
    coverage: dict
    violations: list

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        names = self.labels
        return {
            "pass": self.passed,
            "orientation": "(x,z) is in R_a o R_b iff some y has c(xy)=a and c(zy)=b",
            "triples": [{"compose": [names[a], names[b]], "target": names[g],
                         "covered": cov, "total": tot}
                        for (a, b, g), (cov, tot) in sorted(self.coverage.items())],
            "violations": [{"compose": [names[a], names[b]], "target": names[g],
                            "uncovered_example": list(ex)}
                           for (a, b, g), ex in self.violations],
        }


def check_atom_property(c: EdgeColoring, threads: Optional[int] = None) -> AtomReport:
    """For every (a, b, g): if some g-pair lies in R_a o R_b then every g-pair does."""
    threads = _resolve_threads(threads)
    L = len(c.labels)
    n = c.N
    A = _one_hot(c.matrix, L)

    def run(block: slice):
        col = c.matrix[block]
        covered = np.zeros((L, L, L), dtype=np.int64)
        first_gap: dict = {}
        for a in range(L):
            for b in range(L):
                path = (A[a, block] @ A[b].T) > 0
                for g in range(L):
                    target = col == g
                    covered[a, b, g] = np.count_nonzero(path & target)
                    gaps = np.argwhere(target & ~path)
                    if len(gaps):
                        r, z = gaps[0]
                        first_gap[a, b, g] = (block.start + int(r), int(z))
        return covered, first_gap

    results = _map_blocks(run, _blocks(n), threads)
    covered = sum(r[0] for r in results)
    totals = np.array([np.count_nonzero(c.matrix == g) for g in range(L)])
    coverage, violations = {}, []
    for a in range(L):
        for b in range(L):
            for g in range(L):
                cov, tot = int(covered[a, b, g]), int(totals[g])
                coverage[a, b, g] = (cov, tot)
                if 0 < cov < tot:
                    example = next(r[1][a, b, g] for r in results if (a, b, g) in r[1])
                    violations.append(((a, b, g), example))
    return AtomReport(c.labels, coverage, violations)
