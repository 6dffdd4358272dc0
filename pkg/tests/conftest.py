import csv

import numpy as np
import pytest

from hypershape import _fallback
from hypershape.binning import PointCloud
from hypershape.io import IRIS_FEATURES, bundled_iris
from hypershape.grid import GridImage

try:
    from hypershape import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKENDS = [pytest.param(_fallback, id="python")]
if _kernels is not None:
    BACKENDS.append(pytest.param(_kernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


def plus_shape():
    a = np.zeros((3, 3), dtype=np.uint8)
    a[1, :] = 1
    a[:, 1] = 1
    return GridImage(a)


def full(shape):
    return GridImage(np.ones(shape, dtype=np.uint8))


IRIS_SUBSETS = {
    "setosa": ("setosa",),
    "versicolor": ("versicolor",),
    "not_setosa": ("versicolor", "virginica"),
    "all": ("setosa", "versicolor", "virginica"),
}


def iris_cloud(subset):
    with open(bundled_iris(), newline="") as fh:
        rows = [r for r in csv.DictReader(fh) if r["species"] in IRIS_SUBSETS[subset]]
    return PointCloud([[float(r[c]) for c in IRIS_FEATURES] for r in rows])


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                name = nodeid.split("::")[-1][len("test_criterion_"):]
                lines.append((int(name.split("_")[0]), name, outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  criterion {name}")
