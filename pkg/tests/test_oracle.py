import numpy as np
import pytest

from goodcolor.construct import EdgeColoring, build_affine_coloring, build_cyclic_coloring
from goodcolor.mandate import MandatorySet, Need, mandatory_lyndon, mandatory_mn
from goodcolor.oracle import naive_verify
from goodcolor.verify import verify_good

PENTAGON = build_cyclic_coloring(5, {"r": [1, 4], "b0": [2, 3]})


def same_report(a, b):
    return a.to_dict() == b.to_dict()


def test_pentagon():
    m1 = mandatory_mn(1)
    report = naive_verify(PENTAGON, m1)
    assert report.condition1.failures[0] == (0, 1, Need(0, 0, 0))
    assert same_report(report, verify_good(PENTAGON, m1, failure_cap=None))


def test_all_red_k3():
    c = EdgeColoring(["r"], np.zeros((3, 3), dtype=np.uint8))
    assert naive_verify(c, MandatorySet.from_triples(["r"], [("r", "r", "r")])).passed


def test_affine_plane_order_3_realizes_lyndon_4():
    c, m = build_affine_coloring(3), mandatory_lyndon(4)
    assert naive_verify(c, m).passed
    assert verify_good(c, m).passed


def test_affine_plane_order_2_misses_monochromatic_needs():
    c, m = build_affine_coloring(2), mandatory_lyndon(3)
    report = naive_verify(c, m)
    assert not report.passed
    assert {f[2] for f in report.condition1.failures} == {Need(i, i, i) for i in range(3)}
    assert report.condition2.passed and report.condition3.passed
    assert same_report(report, verify_good(c, m, failure_cap=None))


def test_guard():
    c = EdgeColoring(["r"], np.zeros((2001, 2001), dtype=np.uint8))
    with pytest.raises(ValueError):
        naive_verify(c, MandatorySet.from_triples(["r"], [("r", "r", "r")]))


def test_matches_fast_verifier(instance_factory):
    rng = np.random.default_rng(123)
    verdicts = set()
    for _ in range(60):
        c, m = instance_factory(rng)
        slow = naive_verify(c, m)
        fast = verify_good(c, m, failure_cap=None)
        assert same_report(slow, fast)
        verdicts.add(slow.passed)
    assert verdicts == {True, False}
