import math

import numpy as np
import pytest
from merisurf import calculus


def test_central_derivatives_of_sin():
    for order, expected in ((1, math.cos(0.7)), (2, -math.sin(0.7)), (3, -math.cos(0.7))):
        assert calculus.derivative(math.sin, 0.7, order) == pytest.approx(expected, abs=1e-7)


def test_derivative_of_vector_function():
    d = calculus.derivative(lambda x: np.array([x ** 2, x ** 3]), 2.0, 1)
    assert np.allclose(d, [4.0, 12.0], atol=1e-9)


def test_derivative_on_arrays():
    x = np.linspace(0.0, 1.0, 5)
    assert np.allclose(calculus.derivative(np.exp, x, 1), np.exp(x), atol=1e-9)


def test_one_sided_near_bounds():
    calls = []

    def func(x):
        calls.append(x)
        return x ** 3

    value = calculus.derivative(func, 0.0, 1, bounds=(0.0, 1.0))
    assert min(calls) >= 0.0
    assert value == pytest.approx(0.0, abs=1e-6)

    calls.clear()
    value = calculus.derivative(func, 1.0, 2, bounds=(0.0, 1.0))
    assert max(calls) <= 1.0
    assert value == pytest.approx(6.0, abs=1e-4)


def test_unsupported_order():
    with pytest.raises(ValueError) as e_info:
        calculus.derivative(math.sin, 0.0, 4)


def test_mixed_derivative():
    value = calculus.mixed_derivative(lambda u, v: math.sin(u) * math.exp(v), 0.3, 0.2)
    assert value == pytest.approx(math.cos(0.3) * math.exp(0.2), abs=1e-7)


def test_mixed_derivative_higher_orders_near_bounds():
    value = calculus.mixed_derivative(lambda u, v: u ** 3 * v ** 2, 0.5, 1.0, orders=(2, 1),
                                      bounds=((0.0, 2.0), (0.0, 1.0)))
    assert value == pytest.approx(6 * 0.5 * 2 * 1.0, abs=1e-6)


def test_relative_step_scales_with_x():
    assert calculus.relative_step(0.5, 1e-3) == 1e-3
    assert calculus.relative_step(-20.0, 1e-3) == pytest.approx(2e-2)
    assert calculus.stencil_reach(3) == pytest.approx(3e-2)


def test_chebyshev_fit_is_accurate():
    series = calculus.chebyshev_fit(np.cos, (0.0, 3.0))
    x = np.linspace(0.0, 3.0, 101)
    assert np.abs(series(x) - np.cos(x)).max() < 1e-12


def test_antiderivative_starts_at_value():
    series = calculus.antiderivative(np.cos, (1.0, 2.0), value=5.0)
    assert series(1.0) == pytest.approx(5.0, abs=1e-13)
    assert series(2.0) == pytest.approx(5.0 + math.sin(2.0) - math.sin(1.0), abs=1e-12)


def test_vectorize():
    square = calculus.vectorize(lambda x: x * x)
    assert square(3.0) == 9.0
    assert np.array_equal(square(np.array([1.0, 2.0])), [1.0, 4.0])
