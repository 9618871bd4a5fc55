import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from treekit import _pykernels  # noqa: E402

DATA = Path(__file__).parent / "data"

try:
    from treekit import _ckernels
except ImportError:
    _ckernels = None

KERNEL_MODULES = [pytest.param(_pykernels, id="python")]
KERNEL_MODULES.append(
    pytest.param(_ckernels, id="cython", marks=pytest.mark.skipif(_ckernels is None, reason="extension not built"))
)


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(params=KERNEL_MODULES)
def kernel(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
