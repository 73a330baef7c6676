""" Meridian surfaces in E4: closed-form and numeric curvature, the Weingarten
residual and classification of meridian Weingarten surfaces.

"""

from .spherical_curve import SphericalCurve, frenet, great_circle, small_circle, spherical_spiral
from .profile import Profile, FamilyParams, kappa_alpha
from .meridian import MeridianSurface
from .grid import GridSpec
from .weingarten import classify, residual, verify_family
