"""
merisurf.meridian

Meridian surfaces X(u, v) = f(u) r(v) + g(u) e₄ over a unit-speed profile
(f, g) and a curve r on S²(1), with their closed-form geometry.

In the frame {X, Y, N₁, N₂} = {X_u, t, n, −g′ r + f′ e₄} the shape operators
are diagonal::

    A₁ = diag(0, κ/f)        A₂ = diag(κ_α, g′/f)

so K = κ_α g′/f and H⃗ = κ/(2f) N₁ + (κ_α f + g′)/(2f) N₂.
"""

import math
from collections import namedtuple

import numpy as np

from . import calculus
from . import defaultconfig
from .euclid import E4, lift
from .exceptions import GPrimeZero, MinimalPoint, NonRegular
from .patch import Patch, SecondForm
from .spherical_curve import frenet

MIN_RADIUS = 1e-6
MIN_SLOPE = 1e-6
MINIMAL_TOL = 1e-20
SCAN_SAMPLES = 401

ANALYTIC = 'analytic'
GRAM_SCHMIDT = 'gram_schmidt'

MeridianFrame = namedtuple('MeridianFrame', 'X Y N1 N2')
MeridianCurvature = namedtuple('MeridianCurvature', 'K H1 H2 H A1 A2')
WeingartenPartials = namedtuple('WeingartenPartials', 'K_u K_v H_u H_v')


class MeridianSurface:
    def __init__(self, curve, profile, domain=None):
        self.curve = curve
        self.profile = profile
        if domain is None:
            domain = (profile.domain, curve.domain)
        self.domain = (tuple(map(float, domain[0])), tuple(map(float, domain[1])))

        u = np.linspace(self.domain[0][0], self.domain[0][1], SCAN_SAMPLES)
        smallest = float(np.min(profile.f(u)))
        if smallest <= MIN_RADIUS:
            raise NonRegular('f drops to %.3e on u in %r; need f > %.0e'
                             % (smallest, self.domain[0], MIN_RADIUS))
        flattest = float(np.abs(profile.g1(u)).min())
        if flattest <= MIN_SLOPE:
            raise GPrimeZero("|g'| drops to %.3e on u in %r" % (flattest, self.domain[0]))

    def __repr__(self):
        return '<MeridianSurface %r x %r>' % (self.profile, self.curve)

    def frenet(self, v):
        return frenet(self.curve, v)


def embed(m, u, v):
    r = lift(m.curve(v))
    return m.profile.f(u) * r + m.profile.g(u) * E4


def analytic_frame(m, u, v):
    p = m.profile
    sample = m.frenet(v)
    r = lift(sample.r)
    f1, g1 = p.f1(u), p.g1(u)
    return MeridianFrame(X=f1 * r + g1 * E4,
                         Y=lift(sample.t),
                         N1=lift(sample.n),
                         N2=-g1 * r + f1 * E4)


def _checked_jet(m, u):
    jet = m.profile.jet(u)
    if jet.f <= MIN_RADIUS:
        raise NonRegular('f(%g) = %.3e' % (u, jet.f))
    if abs(jet.g1) <= MIN_SLOPE:
        raise GPrimeZero("g'(%g) = %.3e" % (u, jet.g1))
    return jet


def closed_coefficients(m, u, v):
    """Second fundamental coefficients ⟨X_ij, N_k⟩ in the analytic frame."""
    jet = _checked_jet(m, u)
    kappa = m.frenet(v).kappa
    frame = analytic_frame(m, u, v)
    c = np.zeros((2, 2, 2))
    c[0, 1, 1] = jet.f * kappa
    c[1, 0, 0] = jet.kappa_alpha
    c[1, 1, 1] = jet.f * jet.g1
    return SecondForm(frame.N1, frame.N2, c)


def _mean_curvature(jet, kappa):
    return math.sqrt(kappa ** 2 + (jet.kappa_alpha * jet.f + jet.g1) ** 2) / (2.0 * jet.f)


def closed_curvature(m, u, v):
    jet = _checked_jet(m, u)
    kappa = m.frenet(v).kappa
    f, g1, ka = float(jet.f), float(jet.g1), float(jet.kappa_alpha)
    H1 = kappa / (2.0 * f)
    H2 = (ka * f + g1) / (2.0 * f)
    return MeridianCurvature(
        K=ka * g1 / f,
        H1=H1,
        H2=H2,
        H=math.hypot(H1, H2),
        A1=np.diag([0.0, kappa / f]),
        A2=np.diag([ka, g1 / f]),
    )


def gauss_curvature(m, u, v):
    return closed_curvature(m, u, v).K


def mean_curvature(m, u, v):
    return closed_curvature(m, u, v).H


def weingarten_partials(m, u, v, hu_step=None):
    """(K_u, K_v, H_u, H_v) at (u, v).

    K_u and H_v are closed forms, K_v is exactly zero and H_u is a central
    difference of H in u with relative step ``hu_step``.
    """
    jet = _checked_jet(m, u)
    sample = m.frenet(v)
    radicand = sample.kappa ** 2 + (jet.kappa_alpha * jet.f + jet.g1) ** 2
    if radicand < MINIMAL_TOL:
        raise MinimalPoint('H vanishes at (%g, %g): radicand %.3e' % (u, v, radicand))

    f = jet.f
    K_u = -(f * jet.f3 - jet.f1 * jet.f2) / f ** 2
    H_v = sample.kappa * sample.kappa_prime / (2.0 * f * math.sqrt(radicand))
    step = hu_step or defaultconfig.hu_step
    H_u = calculus.derivative(lambda s: _mean_curvature(m.profile.jet(s), sample.kappa),
                              u, 1, step, m.domain[0])
    return WeingartenPartials(float(K_u), 0.0, float(H_u), float(H_v))


def meridian_patch(m, analytic_partials=False, frame=ANALYTIC):
    """The surface as a generic :class:`~merisurf.patch.Patch`.

    By default partials are finite differences of :func:`embed` and the
    normal frame is {N₁, N₂}; ``frame=GRAM_SCHMIDT`` leaves the frame to
    :func:`~merisurf.euclid.gram_schmidt`.
    """
    if frame not in (ANALYTIC, GRAM_SCHMIDT):
        raise ValueError('frame must be %r or %r, got %r' % (ANALYTIC, GRAM_SCHMIDT, frame))
    p = m.profile

    def normals(u, v):
        f = analytic_frame(m, u, v)
        return f.N1, f.N2

    partials = None
    if analytic_partials:
        def rt(v):
            s = m.frenet(v)
            return lift(s.r), lift(s.t), lift(s.n), s.kappa

        partials = {
            (1, 0): lambda u, v: p.f1(u) * rt(v)[0] + p.g1(u) * E4,
            (0, 1): lambda u, v: p.f(u) * rt(v)[1],
            (2, 0): lambda u, v: p.f2(u) * rt(v)[0] + p.g2(u) * E4,
            (1, 1): lambda u, v: p.f1(u) * rt(v)[1],
            (0, 2): lambda u, v: p.f(u) * (rt(v)[3] * rt(v)[2] - rt(v)[0]),
        }
    return Patch(lambda u, v: embed(m, u, v), m.domain, partials,
                 normals if frame == ANALYTIC else None)
