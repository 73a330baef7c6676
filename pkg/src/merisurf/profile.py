"""
merisurf.profile

Unit-speed meridian profiles α(u) = (f(u), g(u)), f′² + g′² = 1, and the
solution families of the constant-meridian-curvature and cosh cases.

Every evaluator on a :class:`Profile` is vectorized: it accepts a float or a
``numpy`` array of u values.

g is never taken from a closed formula that ignores the constraint. It is
rebuilt from g′ = sign·√(1 − f′²), analytically for the circle family and as a
Chebyshev antiderivative otherwise (see :func:`merisurf.audit` for the check
of the printed formulas).
"""

import logging
import math
from collections import namedtuple

import numpy as np
from scipy.integrate import quad_vec

from . import calculus
from .exceptions import BranchViolation, NonRegular, SpeedViolation

logger = logging.getLogger('merisurf.profile')

LINE = 'line'
CIRCLE_ARC = 'circle'
COSH = 'cosh'
GENERIC_FROM_F = 'fromf'
FROM_CURVATURE = 'kappa'

BRANCH_MARGIN = 1e-3
COSH_SPEED_LIMIT = 1 - 1e-3
GENERIC_SPEED_LIMIT = 1 - 1e-6
MIN_RADIUS = 1e-6
QUADRATURE_NODES = 2049
QUADRATURE_TOL = 1e-10
SCAN_SAMPLES = 2001

FamilyParams = namedtuple('FamilyParams', 'a c1 c2 A b c beta',
                          defaults=(None, 0.0, 0.0, None, None, 0.0, math.pi / 4))
FamilyParams.__doc__ = """Constants of the solution families.

a, c1, c2 -- circle family f = cos(a u + a c1)/a + c2
A, b, c   -- cosh family f = A cosh((u + c)/b)
beta      -- slope angle of the straight meridians
"""

ProfileJet = namedtuple('ProfileJet', 'f f1 f2 f3 g g1 g2 kappa_alpha')


class Profile:
    def __init__(self, f, f1, f2, f3, g, g1, g2, domain, kind, params=None,
                 sign=1, g_table=None):
        self.f = f
        self.f1 = f1
        self.f2 = f2
        self.f3 = f3
        self.g = g
        self.g1 = g1
        self.g2 = g2
        self.domain = (float(domain[0]), float(domain[1]))
        if not self.domain[1] > self.domain[0]:
            raise ValueError('empty profile domain %r' % (self.domain,))
        self.kind = kind
        self.params = dict(params or {})
        self.sign = sign
        self.g_table = g_table

    def __repr__(self):
        return '<Profile %s %s on [%g, %g]>' % (
            self.kind, self.params, self.domain[0], self.domain[1])

    def jet(self, u):
        return ProfileJet(self.f(u), self.f1(u), self.f2(u), self.f3(u),
                          self.g(u), self.g1(u), self.g2(u), kappa_alpha(self, u))

    def samples(self, count=SCAN_SAMPLES):
        return np.linspace(self.domain[0], self.domain[1], count)


def kappa_alpha(p, u):
    """Curvature f′g″ − g′f″ of the meridian."""
    return p.f1(u) * p.g2(u) - p.g1(u) * p.f2(u)


def constraint_residual(p, count=SCAN_SAMPLES):
    u = p.samples(count)
    return float(np.abs(p.f1(u) ** 2 + p.g1(u) ** 2 - 1.0).max())


def ode_residual(p, u):
    """f f‴ − f′ f″, which vanishes exactly on the cosh family."""
    return p.f(u) * p.f3(u) - p.f1(u) * p.f2(u)


def _check_radius(f, domain, kind):
    u = np.linspace(domain[0], domain[1], SCAN_SAMPLES)
    smallest = float(np.min(f(u)))
    if smallest < MIN_RADIUS:
        raise NonRegular('%s profile has f = %.3e < %.0e on %r' % (kind, smallest, MIN_RADIUS, domain))


def _slope_g(f1, f2, sign):
    def g1(u):
        return sign * np.sqrt(1.0 - f1(u) ** 2)

    def g2(u):
        d1 = f1(u)
        return -sign * d1 * f2(u) / np.sqrt(1.0 - d1 ** 2)

    return g1, g2


def tabulate_g(g1, domain, g0=0.0, nodes=QUADRATURE_NODES, tol=QUADRATURE_TOL):
    """g at ``nodes`` equispaced points by adaptive Gauss-Kronrod quadrature.

    All nodes are integrated at once: g(u_i) − g0 = ∫₀¹ (u_i − u0) g′(u0 + t(u_i − u0)) dt.
    """
    u0 = domain[0]
    grid = np.linspace(domain[0], domain[1], nodes)
    spans = grid - u0
    values, error = quad_vec(lambda t: spans * g1(u0 + t * spans), 0.0, 1.0,
                             epsabs=tol, norm='max')
    logger.debug('g quadrature over %d nodes, error estimate %.2e', nodes, error)
    return grid, g0 + values


def _integrated_g(g1, domain, g0, kind):
    series = calculus.antiderivative(g1, domain, value=g0)
    grid, table = tabulate_g(g1, domain, g0)
    mismatch = float(np.abs(series(grid) - table).max())
    if mismatch > 1e-9:
        logger.warning('%s profile: g series and quadrature differ by %.3e', kind, mismatch)
    return series, (grid, table)


def line_profile(beta, domain, f0=1.0, g0=0.0):
    """Straight meridian f = u cos β + f0, g = u sin β + g0."""
    cb, sb = math.cos(beta), math.sin(beta)

    def zero(u):
        return np.zeros(np.shape(u))

    profile = Profile(
        f=lambda u: np.asarray(u) * cb + f0,
        f1=lambda u: np.full(np.shape(u), cb),
        f2=zero,
        f3=zero,
        g=lambda u: np.asarray(u) * sb + g0,
        g1=lambda u: np.full(np.shape(u), sb),
        g2=zero,
        domain=domain,
        kind=LINE,
        params={'beta': beta, 'f0': f0, 'g0': g0},
    )
    _check_radius(profile.f, profile.domain, LINE)
    return profile


def circle_arc_domain(params, margin=0.1):
    """u-interval mapping onto θ = a u + a c1 ∈ [−π/2 + margin, π/2 − margin]."""
    a, c1 = params.a, params.c1
    ends = sorted(((-math.pi / 2 + margin) / a - c1, (math.pi / 2 - margin) / a - c1))
    return tuple(ends)


def circle_arc_profile(params, domain=None, c3=0.0, sign=1):
    """Circle family with κ_α ≡ a.

    f = cos θ / a + c2, g = sin θ / a + c3 with θ = a u + a c1, kept on a
    branch where cos θ ≥ 1e-3 so g′ = sign·cos θ.
    """
    a, c1, c2 = params.a, params.c1, params.c2
    if not a:
        raise ValueError('circle family needs a != 0')
    if domain is None:
        domain = circle_arc_domain(params)

    lo, hi = sorted((a * domain[0] + a * c1, a * domain[1] + a * c1))
    crosses = math.ceil((lo - math.pi / 2) / math.pi) <= math.floor((hi - math.pi / 2) / math.pi)
    if crosses or min(math.cos(lo), math.cos(hi)) < BRANCH_MARGIN:
        raise BranchViolation('cos(a u + a c1) leaves [%.0e, 1] on u in %r' % (BRANCH_MARGIN, tuple(domain)))

    def theta(u):
        return a * np.asarray(u) + a * c1

    profile = Profile(
        f=lambda u: np.cos(theta(u)) / a + c2,
        f1=lambda u: -np.sin(theta(u)),
        f2=lambda u: -a * np.cos(theta(u)),
        f3=lambda u: a ** 2 * np.sin(theta(u)),
        g=lambda u: sign * np.sin(theta(u)) / a + c3,
        g1=lambda u: sign * np.cos(theta(u)),
        g2=lambda u: -sign * a * np.sin(theta(u)),
        domain=domain,
        kind=CIRCLE_ARC,
        params={'a': a, 'c1': c1, 'c2': c2, 'c3': c3},
        sign=sign,
    )
    _check_radius(profile.f, profile.domain, CIRCLE_ARC)
    return profile


def cosh_domain(params):
    """Interval around the vertex u = −c on which |f′| ≤ 1/2."""
    A, b, c = params.A, params.b, params.c
    half = min(1.0, abs(b) * math.asinh(0.5 * abs(b) / A))
    return (-c - half, -c + half)


def cosh_profile(params, domain=None, g0=0.0, sign=1):
    """Solutions f = A cosh((u + c)/b) of f f‴ − f′ f″ = 0.

    g = ∫ sign·√(1 − f′²) has no elementary form and is integrated.
    """
    A, b, c = params.A, params.b, params.c
    if A is None or A <= 0:
        raise ValueError('cosh family needs A > 0, got %r' % (A,))
    if not b:
        raise ValueError('cosh family needs b != 0')
    if domain is None:
        domain = cosh_domain(params)

    steepest = max(abs(math.sinh((u + c) / b)) for u in domain) * A / abs(b)
    if steepest > COSH_SPEED_LIMIT:
        raise SpeedViolation("|f'| reaches %.6f > %.6f on u in %r" % (steepest, COSH_SPEED_LIMIT, tuple(domain)))

    def x(u):
        return (np.asarray(u) + c) / b

    f1 = lambda u: (A / b) * np.sinh(x(u))
    f2 = lambda u: (A / b ** 2) * np.cosh(x(u))
    g1, g2 = _slope_g(f1, f2, sign)
    g, table = _integrated_g(g1, domain, g0, COSH)

    return Profile(
        f=lambda u: A * np.cosh(x(u)),
        f1=f1,
        f2=f2,
        f3=lambda u: (A / b ** 3) * np.sinh(x(u)),
        g=g,
        g1=g1,
        g2=g2,
        domain=domain,
        kind=COSH,
        params={'A': A, 'b': b, 'c': c, 'g0': g0},
        sign=sign,
        g_table=table,
    )


def profile_from_f(f, domain, sign=1, g0=0.0, derivatives=None):
    """Profile from an arbitrary f; missing derivatives by central differences.

    ``f`` must be vectorized and defined a little beyond ``domain``.
    """
    derivatives = dict(derivatives or {})

    def fd(order):
        return derivatives.get(order) or (lambda u: calculus.derivative(f, np.asarray(u, dtype=float), order))

    f1, f2, f3 = fd(1), fd(2), fd(3)
    u = np.linspace(domain[0], domain[1], SCAN_SAMPLES)
    steepest = float(np.abs(f1(u)).max())
    if steepest > GENERIC_SPEED_LIMIT:
        raise SpeedViolation("|f'| reaches %.9f > %.9f on u in %r" % (steepest, GENERIC_SPEED_LIMIT, tuple(domain)))
    smallest = float(np.min(f(u)))
    if smallest < MIN_RADIUS:
        raise NonRegular('f drops to %.3e < %.0e on u in %r' % (smallest, MIN_RADIUS, tuple(domain)))

    g1, g2 = _slope_g(f1, f2, sign)
    g, table = _integrated_g(g1, domain, g0, GENERIC_FROM_F)
    return Profile(f, f1, f2, f3, g, g1, g2, domain, GENERIC_FROM_F,
                   params={'g0': g0}, sign=sign, g_table=table)


def profile_from_curvature(kappa, domain, f0=2.0, g0=0.0, psi0=math.pi / 2):
    """Unit-speed profile whose meridian curvature is ``kappa(u)``.

    The turning angle ψ has ψ′ = κ_α, and (f′, g′) = (cos ψ, sin ψ), with
    f(u0) = f0, g(u0) = g0, ψ(u0) = psi0.
    """
    u0 = domain[0]
    curvature = calculus.chebyshev_fit(kappa, domain)
    dcurvature = curvature.deriv()
    psi = curvature.integ(lbnd=u0, k=[psi0])
    f = calculus.antiderivative(lambda u: np.cos(psi(u)), domain, value=f0)
    g = calculus.antiderivative(lambda u: np.sin(psi(u)), domain, value=g0)
    _check_radius(f, domain, FROM_CURVATURE)

    return Profile(
        f=f,
        f1=lambda u: np.cos(psi(u)),
        f2=lambda u: -np.sin(psi(u)) * curvature(u),
        f3=lambda u: -np.cos(psi(u)) * curvature(u) ** 2 - np.sin(psi(u)) * dcurvature(u),
        g=g,
        g1=lambda u: np.sin(psi(u)),
        g2=lambda u: np.cos(psi(u)) * curvature(u),
        domain=domain,
        kind=FROM_CURVATURE,
        params={'f0': f0, 'g0': g0, 'psi0': psi0},
    )
