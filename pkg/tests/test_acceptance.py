"""End-to-end acceptance checks; each test logs one PASS/FAIL summary line."""

import json
import math
import random
import time

import numpy as np
import pytest

from conftest import random_instance
from goodcolor.construct import build_affine_coloring, build_cyclic_coloring, intersection_size_counts
from goodcolor.mandate import mandatory_lyndon, mandatory_mn
from goodcolor.oracle import naive_verify
from goodcolor.replay import replay_all
from goodcolor.search import DifferenceSet, extend_to_maximal, search_split, split_coloring
from goodcolor.splitgraph import validate_splitting
from goodcolor.verify import check_atom_property, verify_good

pytestmark = pytest.mark.acceptance


def test_1_m2_coloring_is_good(m2_report, record):
    r = m2_report
    ok = (r.passed and r.stats["vertices"] == 3432
          and r.stats["ordered_pairs"] == 2 * 5887596
          and r.stats["need_checks"] == 2 * (5 * 842556 + 9 * 5045040)
          and r.wall_time <= 3600)
    record("1 m2 colouring good w.r.t. M2", ok,
           f"{r.stats['ordered_pairs']} ordered pairs, {r.wall_time:.1f}s single-threaded")
    assert ok


def test_2_splitting_graph_properties(k17, gs, record):
    details, ok = [], True
    for name, g in (("K17", k17), ("14-point", gs)):
        start = time.perf_counter()
        report = validate_splitting(g)
        elapsed = time.perf_counter() - start
        ok &= report.passed and elapsed <= 1.0
        details.append(f"{name} {'clean' if report.passed else report.to_dict()} {elapsed:.3f}s")
    record("2 no monochromatic K4, K4,3, K5,2", ok, "; ".join(details))
    assert ok


def test_3_replay(replay_report, record):
    r = replay_report
    ok = (r.passed and r.pairs_by_j == [3432, 168168, 1513512, 4204200, 4204200, 1513512, 168168]
          and r.passed_pairs_by_j == r.pairs_by_j and r.wall_time <= 3600)
    record("3 witness-family replay", ok,
           f"unmet needs {r.unmet_needs}, per-j pairs {r.pairs_by_j}, {r.wall_time:.1f}s single-threaded")
    assert ok


def test_4_oracle_equivalence(record):
    mismatches = 0
    verdicts = set()
    for seed in range(200):
        c, m = random_instance(np.random.default_rng(seed))
        fast = verify_good(c, m, failure_cap=None)
        slow = naive_verify(c, m)
        mismatches += fast.to_dict() != slow.to_dict()
        verdicts.add(slow.passed)
    ok = mismatches == 0 and verdicts == {True, False}
    record("4 fast verifier matches brute force", ok, f"200 instances, {mismatches} mismatches")
    assert ok


def test_5_known_small_cases(record):
    checks = {}
    ag3, m4 = build_affine_coloring(3), mandatory_lyndon(4)
    checks["AG(2,3) vs Lyndon M4 passes"] = verify_good(ag3, m4).passed
    checks["AG(2,3) oracle agrees"] = (verify_good(ag3, m4, failure_cap=None).to_dict()
                                       == naive_verify(ag3, m4).to_dict())

    k4, m3 = build_affine_coloring(2), mandatory_lyndon(3)
    rk4 = verify_good(k4, m3, failure_cap=None)
    checks["K4 fails only (ri,ri,ri)"] = (
        not rk4.condition1.passed and rk4.condition2.passed and rk4.condition3.passed
        and {tuple(f[2]) for f in rk4.condition1.failures} == {(i, i, i) for i in range(3)}
        and rk4.condition1.failure_count == 12)
    checks["K4 oracle agrees"] = rk4.to_dict() == naive_verify(k4, m3).to_dict()

    pent, m1 = build_cyclic_coloring(5, {"r": [1, 4], "b0": [2, 3]}), mandatory_mn(1)
    rp = verify_good(pent, m1, failure_cap=None)
    red_pairs = {(x, y) for x in range(5) for y in range(5)
                 if x != y and pent.color_name(x, y) == "r"}
    checks["pentagon fails (r,r,r) on every red edge"] = (
        rp.condition2.passed and rp.condition3.passed
        and {(x, y) for x, y, _ in rp.condition1.failures} == red_pairs
        and {tuple(f[2]) for f in rp.condition1.failures} == {(0, 0, 0)})
    checks["pentagon oracle agrees"] = rp.to_dict() == naive_verify(pent, m1).to_dict()

    ok = all(checks.values())
    record("5 known small cases", ok, ", ".join(k for k, v in checks.items() if not v) or "all 6 checks")
    assert ok, checks


def test_6_structural_statistics(m2_coloring, record):
    m = m2_coloring.matrix
    red_deg = (m == 0).sum(axis=1)
    blue_deg = ((m == 1) | (m == 2)).sum(axis=1)
    by_j = intersection_size_counts(m2_coloring)
    expected = [3432 * math.comb(7, j) * math.comb(7, 7 - j) // 2 for j in range(7)]
    ok = (np.all(red_deg == 2940) and np.all(blue_deg == 491)
          and [by_j[j] for j in range(7)] == expected
          == [1716, 84084, 756756, 2102100, 2102100, 756756, 84084])
    record("6 degrees and edge counts by overlap", bool(ok),
           f"red {red_deg.min()}..{red_deg.max()}, blue {blue_deg.min()}..{blue_deg.max()}")
    assert ok


def test_7_no_blue_triangles(m2_report, m2_coloring, record):
    cond2 = m2_report.condition2
    # independent route: trace of B^3 over the blue adjacency matrix
    blue = (m2_coloring.matrix > 0) & (m2_coloring.matrix != 255)
    b = blue.astype(np.float32)
    closed_walks = float(np.einsum("ij,ij->", b @ b, b))
    ok = cond2.passed and cond2.failure_count == 0 and closed_walks == 0.0
    record("7 no all-blue triangle", ok,
           f"condition-2 violations {cond2.failure_count}, trace(B^3) = {closed_walks:.0f}")
    assert ok


def test_8_atom_property(m2_coloring, record):
    report = check_atom_property(m2_coloring)
    ok = report.passed
    record("8 atom property", ok, f"{len(report.violations)} violations over {len(report.coverage)} triples")
    assert ok


def test_9_determinism(m2_coloring, m2, gs, m2_report, replay_report, record):
    def dump(d):
        return json.dumps(d, sort_keys=False).encode()

    verify_runs = {dump(m2_report.to_dict())}
    for threads in (2, 4):
        verify_runs.add(dump(verify_good(m2_coloring, m2, threads=threads).to_dict()))
    replay_runs = {dump(replay_report.to_dict())}
    for threads in (2, 4):
        replay_runs.add(dump(replay_all(m2_coloring, gs, threads=threads).to_dict()))
    split_runs = {dump(validate_splitting(gs).to_dict()) for _ in range(3)}
    ok = len(verify_runs) == len(replay_runs) == len(split_runs) == 1
    record("9 reports byte-identical across threads and runs", ok,
           f"distinct reports: verify {len(verify_runs)}, replay {len(replay_runs)}, "
           f"splitting {len(split_runs)}")
    assert ok


def test_10_search_behaviour(record):
    m2 = mandatory_mn(2)
    rng = random.Random(10)
    deterministic, triangle_free, matches, compared = True, True, True, 0
    for n in (11, 17, 23, 29, 35, 41, 47, 53, 60):
        d = extend_to_maximal(DifferenceSet(n, [1, n - 1]))
        seed = rng.randrange(10_000)
        a = search_split(d, d.complement(), budget=60, seed=seed)
        b = search_split(d, d.complement(), budget=60, seed=seed)
        deterministic &= a.trace == b.trace
        for entry in a.trace[:10]:
            c = split_coloring(d.complement(), DifferenceSet(n, entry["b0"]),
                               DifferenceSet(n, entry["b1"]))
            report = verify_good(c, m2, failure_cap=None)
            triangle_free &= report.condition2.passed
            matches &= report.condition1.failure_count == entry["deficiency"]
            compared += 1
    ok = deterministic and triangle_free and matches
    record("10 cyclic split search", ok,
           f"deterministic={deterministic}, triangle-free={triangle_free}, "
           f"deficiency matches verifier on {compared} candidates")
    assert ok
