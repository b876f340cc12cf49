import numpy as np
import pytest

from qgraphs.qalg import make_quantum_set, random_quantum_set, tracial_form

# block profiles kept small enough for B (x) B checks
PROFILES = [[1], [2], [1, 1], [1, 2], [2, 2], [1, 1, 2], [3], [1, 3]]


def qset_cases():
    out = []
    for blocks in PROFILES:
        out.append(pytest.param(("tracial", tuple(blocks)), id=f"tr{blocks}"))
        if any(n > 1 for n in blocks) or len(blocks) > 1:
            out.append(pytest.param(("random", tuple(blocks)), id=f"nt{blocks}"))
    out.append(pytest.param(("m2_13", (2,)), id="m2(1/3,2/3)"))
    return out


def build_qset(spec):
    kind, blocks = spec
    if kind == "tracial":
        return tracial_form(blocks)
    if kind == "m2_13":
        return make_quantum_set([2], [[1 / 3, 2 / 3]])
    return random_quantum_set(np.random.default_rng(sum(blocks) * 31 + len(blocks)), blocks)


@pytest.fixture(params=qset_cases())
def qset(request):
    return build_qset(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one summary line per acceptance criterion."""

    def record(label, ok, detail=""):
        line = f"{label}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
