"""The compiled kernels must be indistinguishable from the pure-Python twin."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import COMPILED_AVAILABLE
from idsballs import _kernels_py

if COMPILED_AVAILABLE:
    from idsballs import _kernels_c
else:  # pragma: no cover
    _kernels_c = None

pytestmark = pytest.mark.skipif(
    not COMPILED_AVAILABLE, reason="compiled kernels not built"
)


def all_params(q, n, budget):
    for x in itertools.product(range(q), repeat=n):
        for t in range(budget + 1):
            for s in range(min(budget, n) + 1):
                for p in range(budget + 1):
                    yield x, t, s, p


@pytest.mark.parametrize("q,n", [(1, 3), (2, 3), (3, 2), (4, 2)])
def test_exhaustive_agreement_small(q, n):
    for x, t, s, p in all_params(q, n, 2):
        space = q ** (len(x) + t - s)
        assert _kernels_py.insertion_ball(x, t, q) == _kernels_c.insertion_ball(x, t, q)
        assert _kernels_py.deletion_ball(x, s) == _kernels_c.deletion_ball(x, s)
        assert _kernels_py.substitution_ball(x, p, q) == _kernels_c.substitution_ball(x, p, q)
        got_py = _kernels_py.ball(x, t, s, p, q, space)
        got_c = _kernels_c.ball(x, t, s, p, q, space)
        assert got_py == got_c
        assert _kernels_py.ball_size(x, t, s, p, q, space) == len(got_c)
        assert _kernels_c.ball_size(x, t, s, p, q, space) == len(got_c)
        assert _kernels_py.definitional_ball(x, t, s, p, q) == _kernels_c.definitional_ball(
            x, t, s, p, q
        )


@given(st.data())
def test_randomized_agreement(data):
    q = data.draw(st.integers(1, 6))
    n = data.draw(st.integers(0, 5))
    x = tuple(data.draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n)))
    t = data.draw(st.integers(0, 3))
    s = data.draw(st.integers(0, n))
    p = data.draw(st.integers(0, 3))
    space = q ** (n + t - s)
    if space > 10**6:
        return
    assert _kernels_py.ball(x, t, s, p, q, space) == _kernels_c.ball(x, t, s, p, q, space)
    m = n + t - s
    for z in itertools.islice(itertools.product(range(q), repeat=m), 40):
        assert _kernels_py.is_member(z, x, s, p) == _kernels_c.is_member(z, x, s, p)


def test_backend_markers():
    assert _kernels_py.BACKEND == "python"
    assert _kernels_c.BACKEND == "c"
