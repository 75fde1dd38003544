import pytest

from goodcolor.construct import build_m2_coloring
from goodcolor.mandate import mandatory_mn
from goodcolor.splitgraph import DEFAULT_CLASS0, build_cyclic_splitting, default_splitting

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def k17():
    return build_cyclic_splitting(17, DEFAULT_CLASS0)


@pytest.fixture(scope="session")
def gs():
    return default_splitting()


@pytest.fixture(scope="session")
def m2():
    return mandatory_mn(2)


@pytest.fixture(scope="session")
def m2_coloring(gs):
    return build_m2_coloring(gs)


@pytest.fixture(scope="session")
def m2_report(m2_coloring, m2):
    from goodcolor.verify import verify_good
    return verify_good(m2_coloring, m2, threads=1)


@pytest.fixture(scope="session")
def replay_report(m2_coloring, gs):
    from goodcolor.replay import replay_all
    return replay_all(m2_coloring, gs, threads=1)


@pytest.fixture
def record():
    """Log one PASS/FAIL line for an acceptance criterion."""
    def _record(criterion: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}".rstrip())
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_instance(rng):
    """A random colouring of K_N (N in [3, 40]) and a random mandatory set over 2 or 3 labels."""
    import numpy as np
    from goodcolor.construct import EdgeColoring
    from goodcolor.mandate import MandatorySet

    n = int(rng.integers(3, 41))
    n_labels = int(rng.integers(2, 4))
    names = ["r", "b0", "b1"][:n_labels]
    upper = rng.integers(0, n_labels, size=(n, n))
    matrix = np.triu(upper, 1)
    matrix = (matrix + matrix.T).astype(np.uint8)
    density = rng.choice([0.3, 0.7, 0.95, 1.0])
    member = rng.random((n_labels,) * 3) < density
    return EdgeColoring(names, matrix), MandatorySet(names, member)


@pytest.fixture
def instance_factory():
    return random_instance
