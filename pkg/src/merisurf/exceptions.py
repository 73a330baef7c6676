

class GeometryError(Exception):
    pass


class DegenerateBasis(GeometryError):
    pass


class OffSphere(GeometryError):
    pass


class NotUnitSpeed(GeometryError):
    pass


class ZeroSpeed(GeometryError):
    pass


class BranchViolation(GeometryError):
    pass


class SpeedViolation(GeometryError):
    pass


class NonRegular(GeometryError):
    pass


class GPrimeZero(GeometryError):
    pass


class MinimalPoint(GeometryError):
    pass


class SpecParseError(GeometryError):
    pass
