"""
merisurf.calculus

Finite-difference stencils and Chebyshev series helpers shared by the curve,
profile and patch code.

Central stencils are fourth-order accurate. Steps are relative:
``h = STEPS[order] * max(1, |x|)``. With fourth-order truncation the total
error bottoms out near h = 1e-3 (1e-2 for third derivatives); steps of
1e-5 / 1e-4 would leave round-off of order eps/h³ dominant. For the same
reason a profile's g is a Chebyshev series rather than a PCHIP table: the
patch pipeline differentiates g, and a piecewise cubic has no usable third
derivative.
"""

import logging

import numpy as np
from numpy.polynomial import Chebyshev

logger = logging.getLogger('merisurf.calculus')

CENTRAL = {
    1: ((-2, -1, 1, 2), (1 / 12, -2 / 3, 2 / 3, -1 / 12)),
    2: ((-2, -1, 0, 1, 2), (-1 / 12, 4 / 3, -5 / 2, 4 / 3, -1 / 12)),
    3: ((-3, -2, -1, 1, 2, 3), (1 / 8, -1, 13 / 8, -13 / 8, 1, -1 / 8)),
}

# one-sided, 4 points
FORWARD = {
    1: ((0, 1, 2, 3), (-11 / 6, 3, -3 / 2, 1 / 3)),
    2: ((0, 1, 2, 3), (2, -5, 4, -1)),
    3: ((0, 1, 2, 3), (-1, 3, -3, 1)),
}

STEPS = {1: 1e-3, 2: 1e-3, 3: 1e-2}


def relative_step(x, base):
    return base * np.maximum(1.0, np.abs(x))


def stencil_reach(order, step=None, x=0.0):
    offsets, _ = CENTRAL[order]
    return max(abs(o) for o in offsets) * relative_step(x, step or STEPS[order])


def _apply(func, x, h, offsets, coeffs):
    total = 0.0
    for o, c in zip(offsets, coeffs):
        total = total + c * func(x + o * h)
    return total


def derivative(func, x, order=1, step=None, bounds=None):
    """Differentiate ``func`` at ``x`` by finite differences.

    ``func`` may return scalars or arrays. ``x`` may be an array when no
    ``bounds`` are given. With ``bounds=(lo, hi)`` a one-sided stencil is
    used when the central one would leave the interval.
    """
    if order not in CENTRAL:
        raise ValueError('unsupported derivative order %r' % (order,))
    h = relative_step(x, step or STEPS[order])
    offsets, coeffs = CENTRAL[order]

    if bounds is not None:
        lo, hi = bounds
        reach = stencil_reach(order, step, x)
        if x - reach < lo:
            offsets, coeffs = FORWARD[order]
        elif x + reach > hi:
            offsets, coeffs = FORWARD[order]
            offsets = tuple(-o for o in offsets)
            coeffs = tuple(c * (-1) ** order for c in coeffs)

    return _apply(func, x, h, offsets, coeffs) / h ** order


def mixed_derivative(func, u, v, orders=(1, 1), steps=(None, None), bounds=(None, None)):
    """Mixed partial of ``func(u, v)``, ``orders[0]`` times in u then ``orders[1]`` in v."""
    du, dv = orders

    def inner(s):
        return derivative(lambda t: func(t, s), u, du, steps[0], bounds[0])

    return derivative(inner, v, dv, steps[1], bounds[1])


def chebyshev_fit(func, domain, tol=1e-13, max_degree=1024):
    """Chebyshev interpolant of ``func`` on ``domain``, trimmed to ``tol``.

    ``func`` must accept an array of abscissae. The degree doubles from 32
    until the tail coefficients fall below ``tol`` relative to the largest.
    """
    degree = 32
    while True:
        series = Chebyshev.interpolate(func, degree, domain=list(domain))
        coef = np.abs(series.coef)
        scale = max(coef.max(), np.finfo(float).tiny)
        if coef[-8:].max() <= tol * scale:
            break
        if degree >= max_degree:
            logger.debug('Chebyshev fit stopped at degree %d (tail %.2e)',
                         degree, coef[-8:].max() / scale)
            break
        degree *= 2
    return series.trim(tol * scale)


def antiderivative(func, domain, value=0.0, tol=1e-13):
    """Chebyshev antiderivative of ``func`` taking ``value`` at domain[0]."""
    series = chebyshev_fit(func, domain, tol=tol)
    return series.integ(lbnd=domain[0], k=[value])


def vectorize(func):
    """Wrap a scalar function so it maps over arrays."""
    def wrapped(x):
        x = np.asarray(x, dtype=float)
        if x.ndim == 0:
            return func(float(x))
        return np.array([func(float(xi)) for xi in x])
    return wrapped
