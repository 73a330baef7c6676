"""
merisurf.weingarten

The Weingarten residual Φ = K_u H_v − K_v H_u of a meridian surface and the
evidence-based classification into the five families of meridian Weingarten
surfaces.

Since K_v ≡ 0 the residual factors as::

    Φ = −κ κ′ (f f‴ − f′ f″) / (2 f³ √(κ² + (κ_α f + g′)²))

so Φ vanishes exactly when the directrix has constant curvature or the profile
solves f f‴ = f′ f″.
"""

import json
import logging
import math
from collections import namedtuple

import numpy as np

from . import calculus
from . import checks
from . import utils
from .exceptions import MinimalPoint
from .grid import GridEngine, GridSpec
from .meridian import MeridianSurface, gauss_curvature, mean_curvature, weingarten_partials
from .profile import (FamilyParams, circle_arc_domain, circle_arc_profile, cosh_domain,
                      cosh_profile, kappa_alpha, line_profile, ode_residual)
from .spherical_curve import frenet, great_circle, small_circle, spherical_spiral

logger = logging.getLogger('merisurf.weingarten')

SCHEMA = 1

PLANAR_CASE_I = 'PlanarCaseI'
RULED_E3_IIA = 'RuledE3_IIa'
CIRCLE_FAMILY_IIB = 'CircleFamily_IIb'
RULED_E4_IIIA = 'RuledE4_IIIa'
COSH_FAMILY_IIIB = 'CoshFamily_IIIb'
NOT_WEINGARTEN = 'NotWeingarten'
INDETERMINATE = 'Indeterminate'

POSITIVE_CASES = (PLANAR_CASE_I, RULED_E3_IIA, CIRCLE_FAMILY_IIB,
                  RULED_E4_IIIA, COSH_FAMILY_IIIB)

# family names accepted by the verify command
FAMILIES = {
    'i': PLANAR_CASE_I,
    'iia': RULED_E3_IIA,
    'iib': CIRCLE_FAMILY_IIB,
    'iiia': RULED_E4_IIIA,
    'iiib': COSH_FAMILY_IIIB,
}

# numeric and analytic residuals must agree to this, absolutely
AGREEMENT_TOL = 1e-5
FAMILY_RESIDUAL_TOL = 1e-8
CONSTANCY_TOL = 1e-8
ODE_TOL = 1e-9

LINE_DOMAIN = (0.5, 3.0)
SPIRAL_SLOPE = 0.2
DIRECTRIX_COLATITUDE = math.pi / 4


class Tolerances(namedtuple('Tolerances', 'kappa alpha ode residual band')):
    @classmethod
    def from_settings(cls, settings=None, **overrides):
        values = {
            'kappa': utils.setting(settings, 'tol_kappa'),
            'alpha': utils.setting(settings, 'tol_alpha'),
            'ode': utils.setting(settings, 'tol_ode'),
            'residual': utils.setting(settings, 'residual_threshold'),
            'band': utils.setting(settings, 'indeterminate_band'),
        }
        values.update((k, float(v)) for k, v in overrides.items() if v is not None)
        return cls(**values)

    def to_dict(self):
        return {'tol_kappa': self.kappa, 'tol_alpha': self.alpha, 'tol_ode': self.ode,
                'residual_threshold': self.residual, 'indeterminate_band': self.band}


ResidualGrid = namedtuple('ResidualGrid', 'values numeric max_abs argmax grid minimal_points max_disagreement')
ResidualGrid.__doc__ = """Φ over an interior grid.

``values`` holds the factored form, ``numeric`` the finite-difference
Jacobian; both are nu × nv arrays with NaN where H vanishes.
"""


def _json_number(value):
    if value is None or (isinstance(value, float) and not math.isfinite(value)):
        return None
    return value


class WeingartenVerdict(namedtuple('WeingartenVerdict', 'case evidence tolerances grid max_residual')):
    @property
    def positive(self):
        return self.case in POSITIVE_CASES

    def to_dict(self):
        return {
            'schema': SCHEMA,
            'case': self.case,
            'evidence': {k: _json_number(v) for k, v in self.evidence.items()},
            'tolerances': self.tolerances.to_dict(),
            'grid': self.grid.to_dict(),
            'max_residual': _json_number(self.max_residual),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def _numeric_jacobian(m, u, v):
    bounds_u, bounds_v = m.domain
    K_u = calculus.derivative(lambda s: gauss_curvature(m, s, v), u, 1, bounds=bounds_u)
    K_v = calculus.derivative(lambda s: gauss_curvature(m, u, s), v, 1, bounds=bounds_v)
    H_u = calculus.derivative(lambda s: mean_curvature(m, s, v), u, 1, bounds=bounds_u)
    H_v = calculus.derivative(lambda s: mean_curvature(m, u, s), v, 1, bounds=bounds_v)
    return K_u * H_v - K_v * H_u


def residual(m, grid, engine=None, hu_step=None):
    """Φ on the interior nodes of ``grid``, by both routes."""
    engine = engine or GridEngine()

    def point(u, v):
        try:
            wp = weingarten_partials(m, u, v, hu_step)
        except MinimalPoint as exc:
            logger.debug('%s', exc)
            return (math.nan, math.nan)
        return (wp.K_u * wp.H_v - wp.K_v * wp.H_u, _numeric_jacobian(m, u, v))

    table = np.array(engine.sweep(point, grid), dtype=float)
    values, numeric = table[..., 0], table[..., 1]
    us, vs = grid.nodes()
    minimal = [(float(us[i]), float(vs[j])) for i, j in zip(*np.nonzero(np.isnan(values)))]

    if np.all(np.isnan(values)):
        max_abs, argmax, disagreement = math.nan, None, math.nan
    else:
        i, j = np.unravel_index(np.nanargmax(np.abs(values)), values.shape)
        max_abs = float(abs(values[i, j]))
        argmax = (float(us[i]), float(vs[j]))
        disagreement = float(np.nanmax(np.abs(values - numeric)))
        if disagreement > AGREEMENT_TOL:
            logger.warning('factored and finite-difference residuals differ by %.3e', disagreement)
    return ResidualGrid(values, numeric, max_abs, argmax, grid, minimal, disagreement)


def _sample_std(values):
    return float(np.std(values, ddof=1)) if len(values) > 1 else 0.0


def evidence(m, grid):
    """Statistics of κ on the v nodes and of the profile on the u nodes."""
    us, vs = grid.nodes()
    kappa = np.array([frenet(m.curve, v).kappa for v in vs])
    p = m.profile
    ka = kappa_alpha(p, us)
    return {
        'max_abs_kappa': float(np.abs(kappa).max()),
        'std_kappa': _sample_std(kappa),
        'max_abs_kappa_alpha': float(np.abs(ka).max()),
        'std_kappa_alpha': _sample_std(ka),
        'max_abs_f2': float(np.abs(p.f2(us)).max()),
        'max_abs_ode': float(np.abs(ode_residual(p, us)).max()),
    }


def _vanishes(value, tol, band):
    """True when ≤ tol, False when > band·tol, None in between."""
    if value <= tol:
        return True
    if value > band * tol:
        return False
    return None


def decide(stats, tol):
    """Walk the case split; returns the case and the statistics consulted."""
    steps = []

    def test(key, limit):
        steps.append(key)
        return _vanishes(stats[key], limit, tol.band)

    flat = test('max_abs_kappa', tol.kappa)
    if flat is None:
        return INDETERMINATE, steps
    if flat:
        return PLANAR_CASE_I, steps

    constant = test('std_kappa', tol.kappa)
    if constant is None:
        return INDETERMINATE, steps
    if constant:
        straight = test('max_abs_kappa_alpha', tol.alpha)
        if straight is None:
            return INDETERMINATE, steps
        if straight:
            return RULED_E3_IIA, steps
        circular = test('std_kappa_alpha', tol.alpha)
        if circular is None:
            return INDETERMINATE, steps
        return (CIRCLE_FAMILY_IIB if circular else NOT_WEINGARTEN), steps

    linear = test('max_abs_f2', tol.alpha)
    if linear is None:
        return INDETERMINATE, steps
    if linear:
        return RULED_E4_IIIA, steps
    ode = test('max_abs_ode', tol.ode)
    if ode is None:
        return INDETERMINATE, steps
    return (COSH_FAMILY_IIIB if ode else NOT_WEINGARTEN), steps


def classify(m, grid, tolerances=None, engine=None, hu_step=None, residual_grid=None):
    tol = tolerances or Tolerances.from_settings()
    stats = evidence(m, grid)
    if residual_grid is None:
        residual_grid = residual(m, grid, engine, hu_step)
    case, consumed = decide(stats, tol)

    max_residual = residual_grid.max_abs
    if case in POSITIVE_CASES:
        supports = bool(max_residual <= tol.residual)
    elif case == NOT_WEINGARTEN:
        supports = bool(max_residual >= tol.residual)
    else:
        supports = None

    stats.update({
        'max_residual': max_residual,
        'max_residual_disagreement': residual_grid.max_disagreement,
        'minimal_points': len(residual_grid.minimal_points),
        'decided_on': consumed,
        'residual_supports_verdict': supports,
    })
    logger.info('%s classified %s (max |Phi| %.3e)', m, case, max_residual)
    if supports is False:
        logger.info('residual %.3e does not support %s', max_residual, case)
    return WeingartenVerdict(case, stats, tol, grid, max_residual)


def canonical_surface(tag, params=None):
    """The surface verify_family builds for ``tag``."""
    params = params or FamilyParams()
    circle = params._replace(a=1.0 if params.a is None else params.a,
                             c1=-math.pi / 2 if params.a is None else params.c1)
    if tag == PLANAR_CASE_I:
        return MeridianSurface(great_circle(), circle_arc_profile(circle, circle_arc_domain(circle)))
    if tag == RULED_E3_IIA:
        return MeridianSurface(small_circle(DIRECTRIX_COLATITUDE),
                               line_profile(params.beta, LINE_DOMAIN))
    if tag == CIRCLE_FAMILY_IIB:
        return MeridianSurface(small_circle(DIRECTRIX_COLATITUDE),
                               circle_arc_profile(circle, circle_arc_domain(circle)))
    if tag == RULED_E4_IIIA:
        return MeridianSurface(spherical_spiral(SPIRAL_SLOPE), line_profile(params.beta, LINE_DOMAIN))
    if tag == COSH_FAMILY_IIIB:
        cosh = params._replace(A=0.5 if params.A is None else params.A,
                               b=2.0 if params.b is None else params.b)
        return MeridianSurface(spherical_spiral(SPIRAL_SLOPE), cosh_profile(cosh, cosh_domain(cosh)))
    raise ValueError('not a positive case: %r' % (tag,))


def family_checks(tag, tol):
    """Checks run by verify_family for ``tag``."""
    family = {
        PLANAR_CASE_I: [checks.EvidenceCheck('directrix curvature vanishes', 'max_abs_kappa', tol.kappa),
                        checks.ConstantNormalCheck()],
        RULED_E3_IIA: [checks.EvidenceCheck('directrix curvature constant', 'std_kappa', tol.kappa),
                       checks.EvidenceCheck('meridian curvature vanishes', 'max_abs_kappa_alpha', tol.alpha)],
        CIRCLE_FAMILY_IIB: [checks.EvidenceCheck('meridian curvature constant', 'std_kappa_alpha', CONSTANCY_TOL)],
        RULED_E4_IIIA: [checks.EvidenceCheck("f'' vanishes", 'max_abs_f2', tol.alpha),
                        checks.FlatCheck()],
        COSH_FAMILY_IIIB: [checks.EvidenceCheck('cosh ODE residual', 'max_abs_ode', ODE_TOL)],
    }[tag]
    return [checks.ConstraintCheck()] + family + [
        checks.ResidualCheck(FAMILY_RESIDUAL_TOL, AGREEMENT_TOL),
        checks.RoundTripCheck(),
    ]


class FamilyReport(namedtuple('FamilyReport', 'tag params surface verdict residual results')):
    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def to_dict(self):
        return {
            'schema': SCHEMA,
            'family': self.tag,
            'params': {k: _json_number(v) for k, v in self.params._asdict().items()},
            'passed': self.passed,
            'checks': [r.to_dict() for r in self.results],
            'verdict': self.verdict.to_dict(),
            'max_residual': _json_number(self.residual.max_abs),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def format(self):
        lines = ['family %s: %s' % (self.tag, 'PASS' if self.passed else 'FAIL')]
        lines.extend('  ' + r.format() for r in self.results)
        lines.append('  max |Phi| = %.3e' % self.residual.max_abs)
        return '\n'.join(lines)


def verify_family(tag, params=None, grid=None, tolerances=None, engine=None, settings=None,
                  shape=None):
    """Build the canonical surface of ``tag`` and run its checks.

    Without ``grid`` the surface's own domain is sampled with ``shape``
    (nu, nv) nodes, falling back to the configured grid size per axis.
    """
    if tag not in POSITIVE_CASES:
        raise ValueError('verify_family needs one of %s, got %r' % (', '.join(POSITIVE_CASES), tag))
    params = params or FamilyParams()
    tol = tolerances or Tolerances.from_settings(settings)
    engine = engine or GridEngine(settings)
    surface = canonical_surface(tag, params)

    if grid is None:
        size = utils.setting(settings, 'grid')
        nu, nv = shape or (None, None)
        grid = GridSpec(surface.domain[0], surface.domain[1],
                        size['nu'] if nu is None else nu, size['nv'] if nv is None else nv)
    hu_step = utils.setting(settings, 'hu_step')
    residual_grid = residual(surface, grid, engine, hu_step)
    verdict = classify(surface, grid, tol, engine, hu_step, residual_grid)

    context = {'tag': tag, 'grid': grid, 'tolerances': tol, 'engine': engine,
               'residual': residual_grid, 'verdict': verdict}
    manager = checks.CheckManager(*family_checks(tag, tol))
    results = manager.check_surface(surface, context)
    return FamilyReport(tag, params, surface, verdict, residual_grid, results)
