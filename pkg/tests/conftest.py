import pytest
from hypothesis import HealthCheck, settings

from idsballs import Sequence
from idsballs import _kernels_py

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

_BACKENDS = [_kernels_py]
try:
    from idsballs import _kernels_c

    _BACKENDS.append(_kernels_c)
except ImportError:
    _kernels_c = None

COMPILED_AVAILABLE = _kernels_c is not None


@pytest.fixture(params=[b.BACKEND for b in _BACKENDS])
def kernels(request):
    """Each available kernel backend in turn."""
    return next(b for b in _BACKENDS if b.BACKEND == request.param)


@pytest.fixture
def seq():
    def make(text, q=2):
        return Sequence.from_text(text, q)

    return make
