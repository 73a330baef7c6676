from collections import defaultdict, namedtuple

import numpy as np

from .meridian import analytic_frame, closed_curvature
from .profile import constraint_residual

CONSTRAINT_TOL = 1e-8
FLAT_TOL = 1e-9
NORMAL_TOL = 1e-9


class CheckResult(namedtuple('CheckResult', 'name passed value limit')):
    def to_dict(self):
        return {'name': self.name, 'passed': self.passed,
                'value': self.value, 'limit': self.limit}

    def format(self):
        if self.value is None:
            return '[%s] %s' % ('ok' if self.passed else 'FAIL', self.name)
        return '[%s] %s: %.3e (limit %.1e)' % (
            'ok' if self.passed else 'FAIL', self.name, self.value, self.limit)


def _bounded(name, value, limit):
    value = float(value)
    return CheckResult(name, bool(value <= limit), value, limit)


class CheckManager:
    """Runs every registered check's ``check_surface`` hook in order."""
    name = 'surface check manager'

    def __init__(self, *checks):
        self.checks = checks
        self.methods = defaultdict(list)
        for check in self.checks:
            self._add_check(check)

    def _add_check(self, check):
        if hasattr(check, 'check_surface'):
            self.methods['check_surface'].append(check.check_surface)

    def check_surface(self, surface, context):
        results = []
        for method in self.methods['check_surface']:
            outcome = method(surface=surface, context=context)
            if outcome is None:
                continue
            if isinstance(outcome, CheckResult):
                outcome = [outcome]
            results.extend(outcome)
        return results


class ConstraintCheck:
    def __init__(self, limit=CONSTRAINT_TOL):
        self.limit = limit

    def check_surface(self, surface, context):
        return _bounded("f'^2 + g'^2 - 1", constraint_residual(surface.profile), self.limit)


class EvidenceCheck:
    """Bounds one of the statistics the classifier collected."""

    def __init__(self, name, key, limit):
        self.name = name
        self.key = key
        self.limit = limit

    def check_surface(self, surface, context):
        return _bounded(self.name, context['verdict'].evidence[self.key], self.limit)


class ResidualCheck:
    def __init__(self, limit, agreement):
        self.limit = limit
        self.agreement = agreement

    def check_surface(self, surface, context):
        residual = context['residual']
        return [
            _bounded('max |Phi|', residual.max_abs, self.limit),
            _bounded('factored vs finite-difference Phi', residual.max_disagreement, self.agreement),
        ]


class RoundTripCheck:
    def check_surface(self, surface, context):
        case = context['verdict'].case
        return CheckResult('classified as %s' % case, case == context['tag'], None, None)


class FlatCheck:
    """Gauss curvature vanishes on the grid."""

    def __init__(self, limit=FLAT_TOL):
        self.limit = limit

    def check_surface(self, surface, context):
        K = [closed_curvature(surface, u, v).K for u, v in context['grid'].points()]
        return _bounded('max |K|', np.abs(K).max(), self.limit)


class ConstantNormalCheck:
    """N₁ is the same vector at every grid point."""

    def __init__(self, limit=NORMAL_TOL):
        self.limit = limit

    def check_surface(self, surface, context):
        normals = np.array([analytic_frame(surface, u, v).N1 for u, v in context['grid'].points()])
        drift = np.abs(normals - normals[0]).max()
        return _bounded('N1 drift', drift, self.limit)
