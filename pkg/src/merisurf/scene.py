"""
merisurf.scene

Builds meridian surfaces from the command-line scene description: a curve
spec, a profile spec and the u and v ranges.

Curves: ``great``, ``small:<theta0>``, ``spiral:<slope>``.

Profiles: ``line:<beta>[,<f0>[,<g0>]]``, ``circle:<a>,<c1>,<c2>``,
``cosh:<A>,<b>,<c>``, ``fromf:<expr>``, ``kappa:<expr>``.

Numbers are plain C-locale decimals; angles are radians.
"""

import math
import re
from collections import namedtuple

from .exceptions import SpecParseError
from .expr import Expression
from .grid import MIN_NODES, GridSpec
from .meridian import MeridianSurface
from .profile import (FamilyParams, circle_arc_profile, cosh_profile, line_profile,
                      profile_from_curvature, profile_from_f)
from .spherical_curve import great_circle, small_circle, spherical_spiral

NUMBER_RE = re.compile(r'[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?')

SceneSpec = namedtuple('SceneSpec', 'curve profile u_range v_range nu nv sign')


def parse_number(text):
    text = text.strip()
    if not NUMBER_RE.fullmatch(text):
        raise SpecParseError('not a number: %r' % text)
    return float(text)


def _numbers(spec, args, least, most):
    values = [parse_number(a) for a in args.split(',')] if args else []
    if not least <= len(values) <= most:
        raise SpecParseError('%r takes %d to %d numbers, got %d' % (spec, least, most, len(values)))
    return values


def parse_range(text):
    """'a:b' -> (a, b) with a < b."""
    parts = text.split(':')
    if len(parts) != 2:
        raise SpecParseError('range must look like a:b, got %r' % text)
    lo, hi = (parse_number(p) for p in parts)
    if not hi > lo:
        raise SpecParseError('empty range %r' % text)
    return lo, hi


def _split(spec):
    name, _, args = spec.partition(':')
    return name.strip().lower(), args.strip()


def parse_curve(spec, v_range):
    name, args = _split(spec)
    if name == 'great':
        _numbers(spec, args, 0, 0)
        return great_circle(v_range)
    if name == 'small':
        theta0, = _numbers(spec, args, 1, 1)
        if not 0.0 < theta0 < math.pi:
            raise SpecParseError('small circle colatitude must lie in (0, pi), got %g' % theta0)
        return small_circle(theta0, v_range)
    if name == 'spiral':
        slope, = _numbers(spec, args, 1, 1)
        curve = spherical_spiral(slope)
        lo, hi = curve.domain
        if v_range[0] < lo or v_range[1] > hi:
            raise SpecParseError('v range %r leaves the spiral arc length [%g, %g]' % (v_range, lo, hi))
        return curve
    raise SpecParseError('unknown curve %r' % spec)


def parse_profile(spec, u_range, sign=1):
    name, args = _split(spec)
    try:
        if name == 'line':
            values = _numbers(spec, args, 1, 3)
            beta = sign * values[0]
            return line_profile(beta, u_range, *values[1:])
        if name == 'circle':
            a, c1, c2 = _numbers(spec, args, 3, 3)
            return circle_arc_profile(FamilyParams(a=a, c1=c1, c2=c2), u_range, sign=sign)
        if name == 'cosh':
            A, b, c = _numbers(spec, args, 3, 3)
            return cosh_profile(FamilyParams(A=A, b=b, c=c), u_range, sign=sign)
        if name == 'fromf':
            return profile_from_f(Expression(args), u_range, sign=sign)
        if name == 'kappa':
            return profile_from_curvature(Expression(args), u_range, psi0=sign * math.pi / 2)
    except ValueError as exc:
        raise SpecParseError('%s: %s' % (spec, exc))
    raise SpecParseError('unknown profile %r' % spec)


def build_scene(scene):
    """Parse and construct the surface and analysis grid of ``scene``."""
    if scene.nu < MIN_NODES or scene.nv < MIN_NODES:
        raise SpecParseError('grid must be at least %dx%d, got %dx%d'
                             % (MIN_NODES, MIN_NODES, scene.nu, scene.nv))
    if scene.sign not in (1, -1):
        raise SpecParseError('sign must be +1 or -1')
    u_range = parse_range(scene.u_range) if isinstance(scene.u_range, str) else scene.u_range
    v_range = parse_range(scene.v_range) if isinstance(scene.v_range, str) else scene.v_range
    curve = parse_curve(scene.curve, v_range)
    profile = parse_profile(scene.profile, u_range, scene.sign)
    surface = MeridianSurface(curve, profile, (u_range, v_range))
    return surface, GridSpec(u_range, v_range, scene.nu, scene.nv)
