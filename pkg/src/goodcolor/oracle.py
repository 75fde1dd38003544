"""Brute-force reference verifier.

Literal triple loops over Python lists.  Produces the same report type and
failure ordering as :func:`goodcolor.verify.verify_good` so the two can be
compared entry by entry.
"""

from __future__ import annotations

import time
from itertools import product

from .construct import EdgeColoring
from .mandate import MandatorySet, Need
from .verify import ConditionResult, VerificationReport

MAX_ORACLE_VERTICES = 2000


def naive_verify(c: EdgeColoring, M: MandatorySet, failure_cap: int | None = None) -> VerificationReport:
    start = time.perf_counter()
    n = c.N
    if n > MAX_ORACLE_VERTICES:
        raise ValueError(f"oracle is limited to {MAX_ORACLE_VERTICES} vertices, got {n}")
    names = list(M.names)
    to_m = []
    for name in c.labels:
        if name not in names:
            raise ValueError(f"colouring label {name!r} is not a label of the mandatory set")
        to_m.append(names.index(name))
    color = [[None if u == v else to_m[int(c.matrix[u, v])] for v in range(n)] for u in range(n)]
    L = len(names)
    allowed = {t for t in product(range(L), repeat=3) if M.member[t]}

    cond1, cond2, cond3 = ConditionResult(), ConditionResult(), ConditionResult()
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            c1 = color[x][y]
            seen = set()
            for z in range(n):
                if z == x or z == y:
                    continue
                triple = (c1, color[x][z], color[y][z])
                seen.add(triple)
                if triple not in allowed:
                    cond2.failure_count += 1
                    cond2.failures.append((x, y, z, Need(*triple)))
            for j in range(L):
                for k in range(L):
                    if (c1, j, k) in allowed and (c1, j, k) not in seen:
                        cond1.failure_count += 1
                        cond1.failures.append((x, y, Need(c1, j, k)))
    for x in range(n):
        present = {color[x][y] for y in range(n) if y != x}
        for l in range(L):
            if l not in present:
                cond3.failure_count += 1
                cond3.failures.append((x, l))

    for cond in (cond1, cond2, cond3):
        cond.passed = cond.failure_count == 0
        if failure_cap is not None:
            cond.failures = cond.failures[:failure_cap]
        cond.truncated = len(cond.failures) < cond.failure_count

    edge_counts = [0] * L
    need_checks = 0
    for x in range(n):
        for y in range(x + 1, n):
            edge_counts[color[x][y]] += 1
            need_checks += 2 * sum(1 for t in allowed if t[0] == color[x][y])
    stats = {
        "vertices": n,
        "ordered_pairs": n * (n - 1),
        "edge_counts": {names[l]: edge_counts[l] for l in range(L)},
        "need_checks": need_checks,
    }
    closed = all((t[p[0]], t[p[1]], t[p[2]]) in allowed
                 for t in allowed for p in ((0, 2, 1), (1, 0, 2), (2, 1, 0)))
    return VerificationReport(tuple(names), cond1, cond2, cond3, stats, closed,
                              time.perf_counter() - start)
