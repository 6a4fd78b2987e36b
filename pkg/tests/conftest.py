import numpy as np
import pytest

from sepspec import kernels
from sepspec.sampling import rng_for

_ACCEPTANCE = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture(autouse=True)
def _tag_criterion(request):
    marker = request.node.get_closest_marker("acceptance")
    if marker is not None:
        request.node.user_properties.append(("criterion", marker.args[0]))


@pytest.fixture(params=["numpy", "numba"])
def backend(request):
    if request.param == "numba" and kernels.numba_backend is None:
        pytest.skip("numba disabled")
    return kernels.numpy_backend if request.param == "numpy" else kernels.numba_backend


def random_states(seed, count, dims=(2, 2)):
    from sepspec.sampling import random_state

    return [random_state(dims, rng_for(seed, i)) for i in range(count)]


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, n in report.user_properties:
        if key == "criterion":
            prev = _ACCEPTANCE.get(n, ("PASS", []))
            status = "PASS" if report.passed and prev[0] == "PASS" else "FAIL"
            _ACCEPTANCE[n] = (status, prev[1] + [report.nodeid.split("::")[-1]])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        status, names = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  ({', '.join(names)})")
