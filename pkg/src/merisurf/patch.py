"""
merisurf.patch

Curvature of an immersed patch X(u, v) in E⁴ from its partial derivatives
alone: first fundamental form, second fundamental coefficients in an
orthonormal normal frame, shape operators, Gauss curvature and the mean
curvature vector.

This pipeline knows nothing about meridian surfaces and is the independent
check on their closed forms.
"""

from collections import namedtuple

import numpy as np

from . import calculus
from .euclid import gram_schmidt
from .exceptions import NonRegular

REGULARITY_TOL = 1e-10

FirstForm = namedtuple('FirstForm', 'E F G W2')
SecondForm = namedtuple('SecondForm', 'N1 N2 c')
CurvaturePoint = namedtuple('CurvaturePoint', 'K Hvec H A1 A2')

# multi-indices (order in u, order in v) up to the third order
MULTI_INDICES = {
    1: ((1, 0), (0, 1)),
    2: ((2, 0), (1, 1), (0, 2)),
    3: ((3, 0), (2, 1), (1, 2), (0, 3)),
}


class Patch:
    """A parametric patch X: I × J → E⁴.

    :param evaluator: ``X(u, v)`` returning a 4-vector
    :param domain: ``((u0, u1), (v0, v1))``
    :param partials: optional analytic partials keyed by ``(i, j)``, the
        number of u and v derivatives
    :param frame: optional ``frame(u, v) -> (N1, N2)`` orthonormal normal frame
    :param steps: optional ``{order: relative step}`` overriding the
        finite-difference defaults
    """

    def __init__(self, evaluator, domain, partials=None, frame=None, steps=None):
        self.evaluator = evaluator
        self.domain = (tuple(map(float, domain[0])), tuple(map(float, domain[1])))
        self.analytic = dict(partials or {})
        self.frame = frame
        self.steps = dict(steps or {})

    def __call__(self, u, v):
        return np.asarray(self.evaluator(u, v), dtype=float)

    def _step(self, order):
        return self.steps.get(order, calculus.STEPS[order])

    def partial(self, u, v, index):
        if index == (0, 0):
            return self(u, v)
        if index in self.analytic:
            return np.asarray(self.analytic[index](u, v), dtype=float)

        du, dv = index
        u_bounds, v_bounds = self.domain
        if dv == 0:
            return calculus.derivative(lambda s: self(s, v), u, du, self._step(du), u_bounds)
        if du == 0:
            return calculus.derivative(lambda s: self(u, s), v, dv, self._step(dv), v_bounds)

        return calculus.mixed_derivative(self, u, v, index, (self._step(du), self._step(dv)),
                                         self.domain)


def partials(p, u, v, order=2):
    """Jets of X at (u, v) up to ``order`` as ``{(i, j): vector}``."""
    if order not in MULTI_INDICES:
        raise ValueError('partials supports orders 1 to 3, got %r' % (order,))
    jets = {(0, 0): p(u, v)}
    for k in range(1, order + 1):
        for index in MULTI_INDICES[k]:
            jets[index] = p.partial(u, v, index)
    return jets


def _first_form(xu, xv):
    E = float(np.dot(xu, xu))
    F = float(np.dot(xu, xv))
    G = float(np.dot(xv, xv))
    W2 = E * G - F * F
    if W2 < REGULARITY_TOL:
        raise NonRegular('W^2 = EG - F^2 = %.3e below %.0e' % (W2, REGULARITY_TOL))
    return FirstForm(E, F, G, W2)


def first_form(p, u, v):
    return _first_form(p.partial(u, v, (1, 0)), p.partial(u, v, (0, 1)))


def _second_form(p, u, v, jets):
    if p.frame is not None:
        N1, N2 = (np.asarray(n, dtype=float) for n in p.frame(u, v))
    else:
        N1, N2 = gram_schmidt([jets[(1, 0)], jets[(0, 1)]])
    second = {(1, 1): jets[(2, 0)], (1, 2): jets[(1, 1)], (2, 2): jets[(0, 2)]}
    c = np.zeros((2, 2, 2))
    for k, N in enumerate((N1, N2)):
        for (i, j), x in second.items():
            c[k, i - 1, j - 1] = c[k, j - 1, i - 1] = np.dot(x, N)
    return SecondForm(N1, N2, c)


def second_form(p, u, v):
    jets = partials(p, u, v, 2)
    _first_form(jets[(1, 0)], jets[(0, 1)])
    return _second_form(p, u, v, jets)


def tangent_change(first):
    """Rows express the orthonormal tangent frame {e1, e2} in {X_u, X_v}."""
    E, F, _, W2 = first
    n2 = np.sqrt(W2 / E)
    return np.array([[1.0 / np.sqrt(E), 0.0],
                     [-F / (E * n2), 1.0 / n2]])


def curvature_from(first, second):
    E, F, G, W2 = first
    c = second.c
    K = sum(c[k, 0, 0] * c[k, 1, 1] - c[k, 0, 1] ** 2 for k in range(2)) / W2
    Hvec = tuple(float(c[k, 0, 0] * G + c[k, 1, 1] * E - 2.0 * c[k, 0, 1] * F) / (2.0 * W2)
                 for k in range(2))
    H = float(np.hypot(*Hvec))
    P = tangent_change(first)
    A1, A2 = (P @ c[k] @ P.T for k in range(2))
    return CurvaturePoint(float(K), Hvec, H, A1, A2)


def curvature(p, u, v):
    jets = partials(p, u, v, 2)
    first = _first_form(jets[(1, 0)], jets[(0, 1)])
    return curvature_from(first, _second_form(p, u, v, jets))
