"""
merisurf.audit

Checks the closed-form g printed for the circle and cosh families against
the unit-speed constraint, using finite-difference slopes of the printed
expressions. The outcome is informational only.

* Circle family: the printed g has slope a√(1 + sin θ), so
  f′² + g′² − 1 = sin²θ + sin θ, which is not zero.
* Cosh family: the printed expression equals √(1 − f′²), the slope g′,
  rather than g itself.
"""

import math
from collections import namedtuple

import numpy as np

from . import calculus
from .profile import FamilyParams, cosh_profile

CircleAudit = namedtuple('CircleAudit', 'a c1 u printed_slope constraint_slope residual')
CoshAudit = namedtuple('CoshAudit', 'A b c u printed slope value slope_gap max_value_gap')


def printed_circle_g(a, c1, u):
    """g(u) = 2(sin θ − 1)√(1 + sin θ)/cos θ, θ = a u + a c1, as printed."""
    theta = a * u + a * c1
    return 2.0 * (math.sin(theta) - 1.0) * math.sqrt(1.0 + math.sin(theta)) / math.cos(theta)


def printed_cosh_g(A, b, c, u):
    """The printed second-family g, with a = −A² and E = (e^{u/b} e^{c/b})²."""
    a = -A ** 2
    E = (np.exp(u / b) * np.exp(c / b)) ** 2
    return 0.5 * np.sqrt((4 * b ** 2 * E + a * E ** 2 - 2 * a * E + a) / (b ** 2 * E))


def audit_circle(a=1.0, c1=0.0, u=0.3):
    theta = a * u + a * c1
    slope = calculus.derivative(lambda s: printed_circle_g(a, c1, s), u, 1)
    f1 = -math.sin(theta)
    return CircleAudit(a, c1, u, float(slope), math.cos(theta), float(f1 ** 2 + slope ** 2 - 1.0))


def audit_cosh(A=0.5, b=2.0, c=0.0, u=0.4, domain=(-1.0, 1.0), samples=401):
    profile = cosh_profile(FamilyParams(A=A, b=b, c=c), domain)
    grid = np.linspace(domain[0], domain[1], samples)
    printed = printed_cosh_g(A, b, c, grid)
    value_gap = float(np.abs(printed - profile.g(grid)).max())
    here = float(printed_cosh_g(A, b, c, u))
    slope = float(profile.g1(u))
    return CoshAudit(A, b, c, u, here, slope, float(profile.g(u)), abs(here - slope), value_gap)


class AuditReport(namedtuple('AuditReport', 'circle cosh')):
    def to_dict(self):
        return {'circle': dict(self.circle._asdict()), 'cosh': dict(self.cosh._asdict())}

    def format(self):
        c, h = self.circle, self.cosh
        return '\n'.join([
            'printed-formula audit (informational)',
            "  circle family g at a=%g, c1=%g, u=%g: f'^2 + g'^2 - 1 = %.6f"
            % (c.a, c.c1, c.u, c.residual),
            "  cosh family g at A=%g, b=%g, c=%g, u=%g: printed %.9f, g' %.9f (gap %.2e)"
            % (h.A, h.b, h.c, h.u, h.printed, h.slope, h.slope_gap),
            '  cosh family printed g vs integrated g: max gap %.6f' % h.max_value_gap,
        ])


def run_audit():
    return AuditReport(audit_circle(), audit_cosh())
