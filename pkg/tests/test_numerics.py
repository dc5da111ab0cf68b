import numpy as np
import pytest

from equidist._numerics import (bisect_monotone_root, bisect_predicate, bisect_sign,
                                central_difference, golden_section)
from equidist.errors import ConvergenceError


def test_golden_section_finds_vertex():
    x, a, b = golden_section(lambda s: (s - 0.3) ** 2, np.array(-1.0), np.array(2.0), tol=1e-12)
    assert abs(x - 0.3) < 1e-6
    assert a <= 0.3 <= b


def test_golden_section_vectorized():
    c = np.array([-0.5, 0.0, 0.7])
    x, _, _ = golden_section(lambda s: np.abs(s - c), np.full(3, -1.0), np.full(3, 1.0), tol=1e-12)
    np.testing.assert_allclose(x, c, atol=1e-10)


def test_bisect_sign_root_of_cubic():
    r = bisect_sign(lambda s: s ** 3 - 2.0, np.array(0.0), np.array(2.0), tol=1e-14)
    assert abs(r - 2 ** (1 / 3)) < 1e-12


def test_bisect_sign_needs_a_sign_change():
    with pytest.raises(ValueError):
        bisect_sign(lambda s: s * s + 1, np.array(-1.0), np.array(1.0))


def test_bisect_sign_budget_exhausted():
    with pytest.raises(ConvergenceError):
        bisect_sign(lambda s: s - 0.3, np.array(0.0), np.array(1.0), tol=0.0, maxiter=5)


def test_bisect_predicate_descending_bracket():
    # predicate true at the first end, false at the second
    edge = bisect_predicate(lambda s: s > 0.25, np.array(1.0), np.array(0.0), tol=1e-12)
    assert abs(edge - 0.25) < 1e-11


def test_bisect_monotone_root_to_machine_precision():
    root, ok = bisect_monotone_root(lambda s: np.tanh(s - 0.1), np.array(-3.0), np.array(3.0))
    assert ok
    assert abs(root - 0.1) <= 4e-16


@pytest.mark.parametrize("order,bound", [(2, 2e-5), (4, 1e-9), (6, 1e-12)])
def test_central_difference_orders(order, bound):
    h = 1e-2
    t = np.arange(0, 1 + h / 2, h)
    d = central_difference(np.sin(t), h, order=order)
    k = order // 2
    assert d.size == t.size - 2 * k
    assert np.max(np.abs(d - np.cos(t[k:t.size - k]))) < bound
