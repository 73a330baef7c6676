"""
merisurf.spherical_curve

Arc-length parametrized curves r(v) on the unit sphere S²(1) with the moving
frame {t, n, r} and spherical curvature κ:

    r' = t,    t' = κ n − r,    n' = −κ t

The spherical normal is n = r × t (times ``orientation``), so a small circle
above the equator has κ = +cot θ₀.
"""

import functools
import logging
import math
from collections import namedtuple

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import PchipInterpolator

from . import calculus
from .euclid import cross3, vec3
from .exceptions import NotUnitSpeed, OffSphere, ZeroSpeed

logger = logging.getLogger('merisurf.spherical_curve')

GREAT_CIRCLE = 'great'
SMALL_CIRCLE = 'small'
REPARAMETRIZED = 'reparametrized'

ON_SPHERE_TOL = 1e-9
UNIT_SPEED_TOL = 1e-7
ZERO_SPEED = 1e-10
ARCLENGTH_SAMPLES = 1025

# colatitude margin kept from the poles by spherical spirals
POLE_MARGIN = 0.2

FrenetSample = namedtuple('FrenetSample', 't n r kappa kappa_prime')


class SphericalCurve:
    """Curve on S²(1) parametrized by arc length.

    ``derivatives`` maps orders 1..3 to analytic evaluators; missing orders
    fall back to central differences of ``position``.
    """

    def __init__(self, position, domain, kind=REPARAMETRIZED, derivatives=None,
                 params=None, orientation=1):
        if orientation not in (1, -1):
            raise ValueError('orientation must be +1 or -1, got %r' % (orientation,))
        self.position = position
        self.domain = (float(domain[0]), float(domain[1]))
        if not self.domain[1] > self.domain[0]:
            raise ValueError('empty curve domain %r' % (self.domain,))
        self.kind = kind
        self.params = dict(params or {})
        self.orientation = orientation
        self._derivatives = dict(derivatives or {})
        self._frenet = functools.lru_cache(maxsize=8192)(self._frenet_sample)

    def __repr__(self):
        return '<SphericalCurve %s %s on [%g, %g]>' % (
            self.kind, self.params, self.domain[0], self.domain[1])

    def __call__(self, v):
        return np.asarray(self.position(v), dtype=float)

    def derivative(self, v, order):
        if order == 0:
            return self(v)
        if order in self._derivatives:
            return np.asarray(self._derivatives[order](v), dtype=float)
        return calculus.derivative(self, v, order)

    def with_orientation(self, orientation):
        return SphericalCurve(self.position, self.domain, self.kind,
                              self._derivatives, self.params, orientation)

    def _frenet_sample(self, v):
        r = self(v)
        t = self.derivative(v, 1)
        off = abs(np.linalg.norm(r) - 1.0)
        if off > ON_SPHERE_TOL:
            raise OffSphere('|r(%g)| deviates from 1 by %.3e' % (v, off))
        drift = abs(np.linalg.norm(t) - 1.0)
        if drift > UNIT_SPEED_TOL:
            raise NotUnitSpeed("|r'(%g)| deviates from 1 by %.3e" % (v, drift))

        n = self.orientation * cross3(r, t)
        kappa = float(np.dot(self.derivative(v, 2), n))
        # for unit speed, (<r'', r x r'>)' = <r''', r x r'>
        kappa_prime = float(np.dot(self.derivative(v, 3), n))
        return FrenetSample(t, n, r, kappa, kappa_prime)


def frenet(curve, v):
    return curve._frenet(float(v))


def great_circle(domain=(0.0, 2 * math.pi)):
    """The equator r(v) = (cos v, sin v, 0)."""
    derivatives = {
        1: lambda v: vec3(-math.sin(v), math.cos(v), 0.0),
        2: lambda v: vec3(-math.cos(v), -math.sin(v), 0.0),
        3: lambda v: vec3(math.sin(v), -math.cos(v), 0.0),
    }
    return SphericalCurve(lambda v: vec3(math.cos(v), math.sin(v), 0.0),
                          domain, GREAT_CIRCLE, derivatives)


def small_circle(theta0, domain=None):
    """Circle of colatitude ``theta0``, arc-length parametrized."""
    if not 0.0 < theta0 < math.pi:
        raise ValueError('colatitude must lie in (0, pi), got %r' % (theta0,))
    rho = math.sin(theta0)
    height = math.cos(theta0)
    if domain is None:
        domain = (0.0, 2 * math.pi * rho)

    def position(v):
        phi = v / rho
        return vec3(rho * math.cos(phi), rho * math.sin(phi), height)

    derivatives = {
        1: lambda v: vec3(-math.sin(v / rho), math.cos(v / rho), 0.0),
        2: lambda v: vec3(-math.cos(v / rho), -math.sin(v / rho), 0.0) / rho,
        3: lambda v: vec3(math.sin(v / rho), -math.cos(v / rho), 0.0) / rho ** 2,
    }
    return SphericalCurve(position, domain, SMALL_CIRCLE, derivatives,
                          params={'theta0': theta0})


def _spiral_jet(theta0, slope, order):
    """order-th w-derivative of P(w) = (sin θ cos w, sin θ sin w, cos θ), θ = θ0 − slope w."""
    quarter = math.pi / 2

    def evaluate(w):
        theta = theta0 - slope * w
        x = y = 0.0
        for j in range(order + 1):
            a_j = math.sin(theta + j * quarter) * (-slope) ** j
            weight = math.comb(order, j) * a_j
            x += weight * math.cos(w + (order - j) * quarter)
            y += weight * math.sin(w + (order - j) * quarter)
        z = math.cos(theta + order * quarter) * (-slope) ** order
        return vec3(x, y, z)

    return evaluate


def spherical_spiral(slope, theta0=math.pi / 2, domain=None):
    """Spiral whose colatitude drifts linearly with longitude, in arc length.

    The longitude range stops where the colatitude comes within
    ``POLE_MARGIN`` of a pole (at most one full turn).
    """
    if domain is None:
        if slope > 0:
            w_max = (theta0 - POLE_MARGIN) / slope
        elif slope < 0:
            w_max = (math.pi - POLE_MARGIN - theta0) / -slope
        else:
            w_max = 2 * math.pi
        domain = (0.0, min(2 * math.pi, w_max))
    if not domain[1] > domain[0]:
        raise ValueError('spiral colatitude %r leaves no room before the pole' % (theta0,))

    derivatives = {k: _spiral_jet(theta0, slope, k) for k in (1, 2, 3)}
    curve = reparametrize_arclength(_spiral_jet(theta0, slope, 0), domain, derivatives)
    curve.params.update({'source': 'spiral', 'slope': slope, 'theta0': theta0})
    return curve


def reparametrize_arclength(raw, domain, derivatives=None, samples=ARCLENGTH_SAMPLES):
    """Reparametrize a curve on S² by arc length.

    ds/dw = |raw'(w)| is integrated by an adaptive RK45 into a table of s(w);
    the monotone (PCHIP) inverse of the table seeds Newton's method on a
    Chebyshev antiderivative of the speed, which defines w(v).
    """
    derivatives = dict(derivatives or {})
    w0, w1 = float(domain[0]), float(domain[1])

    def raw_derivative(w, order):
        if order in derivatives:
            return np.asarray(derivatives[order](w), dtype=float)
        return calculus.derivative(lambda x: np.asarray(raw(x), dtype=float), w, order)

    def speed(w):
        return float(np.linalg.norm(raw_derivative(w, 1)))

    w_samples = np.linspace(w0, w1, samples)
    radii = np.array([np.linalg.norm(raw(w)) for w in w_samples])
    off = np.abs(radii - 1.0).max()
    if off > ON_SPHERE_TOL:
        raise OffSphere('raw curve leaves S^2 by %.3e' % off)
    speeds = np.array([speed(w) for w in w_samples])
    if speeds.min() < ZERO_SPEED:
        raise ZeroSpeed('raw speed %.3e at w=%g' % (speeds.min(), w_samples[speeds.argmin()]))

    solution = solve_ivp(lambda w, s: [speed(w)], (w0, w1), [0.0], method='RK45',
                         t_eval=w_samples, rtol=1e-12, atol=1e-14)
    if not solution.success:
        raise ZeroSpeed('arc length integration failed: %s' % solution.message)
    s_table = solution.y[0]
    inverse = PchipInterpolator(s_table, w_samples, extrapolate=True)

    arclength = calculus.antiderivative(calculus.vectorize(speed), (w0, w1))
    length = float(arclength(w1))
    mismatch = abs(length - s_table[-1])
    logger.debug('arc length %.12f (RK45 table %.12f, Chebyshev degree %d)',
                 length, s_table[-1], arclength.degree())
    if mismatch > 1e-8 * max(1.0, length):
        logger.warning('arc length tables disagree by %.3e', mismatch)

    @functools.lru_cache(maxsize=8192)
    def parameter(v):
        w = float(inverse(v))
        for _ in range(12):
            ds = float(arclength(w)) - v
            if abs(ds) <= 4e-16 * max(1.0, abs(v)):
                break
            w -= ds / speed(w)
        return w

    @functools.lru_cache(maxsize=8192)
    def jet(v):
        w = parameter(v)
        d1, d2, d3 = (raw_derivative(w, k) for k in (1, 2, 3))
        sigma = np.linalg.norm(d1)
        sigma1 = np.dot(d1, d2) / sigma
        sigma2 = (np.dot(d2, d2) + np.dot(d1, d3) - sigma1 ** 2) / sigma
        w1 = 1.0 / sigma
        w2 = -sigma1 * w1 ** 3
        w3 = -sigma2 * w1 ** 4 - 3.0 * sigma1 * w1 ** 2 * w2
        return (np.asarray(raw(w), dtype=float),
                d1 * w1,
                d2 * w1 ** 2 + d1 * w2,
                d3 * w1 ** 3 + 3.0 * d2 * w1 * w2 + d1 * w3)

    def component(order):
        return lambda v: jet(float(v))[order]

    return SphericalCurve(component(0), (0.0, length), REPARAMETRIZED,
                          {k: component(k) for k in (1, 2, 3)},
                          params={'raw_domain': (w0, w1)})
