import math

import numpy as np
import pytest
from merisurf import meridian, patch
from merisurf.exceptions import GPrimeZero, MinimalPoint, NonRegular
from merisurf.expr import Expression
from merisurf.grid import GridSpec
from merisurf.profile import (FamilyParams, circle_arc_profile, cosh_profile, line_profile,
                              profile_from_f)
from merisurf.spherical_curve import great_circle, small_circle, spherical_spiral


@pytest.fixture(scope='module')
def spiral():
    return spherical_spiral(0.2)


@pytest.fixture(scope='module')
def cosh_surface(spiral):
    return meridian.MeridianSurface(spiral, cosh_profile(FamilyParams(A=0.5, b=2.0, c=0.0), (-1.0, 1.0)))


@pytest.fixture(scope='module')
def generic_surface(spiral):
    derivatives = {1: lambda u: 0.5 * np.cos(u), 2: lambda u: -0.5 * np.sin(u), 3: lambda u: -0.5 * np.cos(u)}
    profile = profile_from_f(Expression('0.5*sin(u)+2'), (0.0, 3.0), derivatives=derivatives)
    return meridian.MeridianSurface(spiral, profile)


def catenoid_profile(domain=(-1.0, 1.0)):
    derivatives = {
        1: lambda u: u / np.sqrt(u ** 2 + 1),
        2: lambda u: (u ** 2 + 1) ** -1.5,
        3: lambda u: -3 * u * (u ** 2 + 1) ** -2.5,
    }
    return profile_from_f(lambda u: np.sqrt(np.asarray(u) ** 2 + 1), domain, derivatives=derivatives)


def test_embed_lies_on_cone_over_curve():
    m = meridian.MeridianSurface(small_circle(math.pi / 4), line_profile(math.pi / 4, (0.5, 3.0)))
    x = meridian.embed(m, 1.0, 0.3)
    f, g = m.profile.f(1.0), m.profile.g(1.0)
    assert x[3] == pytest.approx(g)
    assert np.linalg.norm(x[:3]) == pytest.approx(f)


def test_analytic_frame_is_orthonormal(cosh_surface):
    frame = np.array(meridian.analytic_frame(cosh_surface, 0.3, 1.1))
    assert np.allclose(frame @ frame.T, np.eye(4), atol=1e-9)


def test_gauss_curvature_is_minus_f2_over_f(generic_surface):
    p = generic_surface.profile
    for u in (0.4, 1.5, 2.6):
        assert meridian.gauss_curvature(generic_surface, u, 1.0) == pytest.approx(
            -p.f2(u) / p.f(u), abs=1e-7)


def test_closed_form_matches_patch(generic_surface):
    p = meridian.meridian_patch(generic_surface)
    for u, v in ((0.7, 0.8), (2.0, 1.9)):
        closed = meridian.closed_curvature(generic_surface, u, v)
        numeric = patch.curvature(p, u, v)
        assert numeric.K == pytest.approx(closed.K, abs=1e-6)
        assert numeric.Hvec[0] == pytest.approx(closed.H1, abs=1e-6)
        assert numeric.Hvec[1] == pytest.approx(closed.H2, abs=1e-6)
        assert np.allclose(numeric.A1, closed.A1, atol=1e-6)
        assert np.allclose(numeric.A2, closed.A2, atol=1e-6)


def test_closed_form_matches_gram_schmidt_patch(cosh_surface):
    p = meridian.meridian_patch(cosh_surface, frame=meridian.GRAM_SCHMIDT)
    closed = meridian.closed_curvature(cosh_surface, -0.4, 1.3)
    numeric = patch.curvature(p, -0.4, 1.3)
    assert numeric.K == pytest.approx(closed.K, abs=1e-6)
    assert numeric.H == pytest.approx(closed.H, abs=1e-6)


def test_analytic_partials_patch():
    m = meridian.MeridianSurface(small_circle(1.0), circle_arc_profile(FamilyParams(a=0.5, c1=0.0, c2=0.3),
                                                                       (-2.5, 2.5)))
    p = meridian.meridian_patch(m, analytic_partials=True)
    closed = meridian.closed_curvature(m, 0.5, 2.0)
    numeric = patch.curvature(p, 0.5, 2.0)
    assert numeric.K == pytest.approx(closed.K, abs=1e-12)
    assert numeric.H == pytest.approx(closed.H, abs=1e-12)


def test_meridian_patch_rejects_unknown_frame(cosh_surface):
    with pytest.raises(ValueError) as e_info:
        meridian.meridian_patch(cosh_surface, frame='polar')


def test_weingarten_partials_match_differences(generic_surface):
    u, v = 1.1, 1.4
    wp = meridian.weingarten_partials(generic_surface, u, v)
    h = 1e-4
    K_u = (meridian.gauss_curvature(generic_surface, u + h, v)
           - meridian.gauss_curvature(generic_surface, u - h, v)) / (2 * h)
    H_v = (meridian.mean_curvature(generic_surface, u, v + h)
           - meridian.mean_curvature(generic_surface, u, v - h)) / (2 * h)
    H_u = (meridian.mean_curvature(generic_surface, u + h, v)
           - meridian.mean_curvature(generic_surface, u - h, v)) / (2 * h)
    assert wp.K_v == 0.0
    assert wp.K_u == pytest.approx(K_u, abs=1e-5)
    assert wp.H_v == pytest.approx(H_v, abs=1e-6)
    assert wp.H_u == pytest.approx(H_u, abs=1e-5)


def test_cosh_surface_has_constant_gauss_curvature(cosh_surface):
    wp = meridian.weingarten_partials(cosh_surface, 0.2, 1.0)
    assert wp.K_u == pytest.approx(0.0, abs=1e-12)
    assert meridian.gauss_curvature(cosh_surface, 0.2, 1.0) == pytest.approx(-0.25, abs=1e-12)


def test_minimal_point_on_catenoid():
    m = meridian.MeridianSurface(great_circle(), catenoid_profile())
    assert meridian.mean_curvature(m, 0.3, 1.0) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(MinimalPoint) as e_info:
        meridian.weingarten_partials(m, 0.3, 1.0)


def test_surface_rejects_small_radius():
    with pytest.raises(NonRegular) as e_info:
        meridian.MeridianSurface(great_circle(), line_profile(math.pi / 4, (0.0, 1.0), f0=1.0),
                                 ((-1.5, 1.0), (0.0, 1.0)))


def test_surface_rejects_flat_slope():
    with pytest.raises(GPrimeZero) as e_info:
        meridian.MeridianSurface(great_circle(), line_profile(0.0, (0.0, 1.0)))


def oracle_surfaces():
    quarter = math.pi / 4
    return {
        'sphere': lambda: meridian.MeridianSurface(
            great_circle(), circle_arc_profile(FamilyParams(a=1.0, c1=-math.pi / 2, c2=0.0),
                                               (0.1, math.pi - 0.1))),
        'line over great circle': lambda: meridian.MeridianSurface(
            great_circle(), line_profile(quarter, (0.5, 3.0))),
        'line over spiral': lambda: meridian.MeridianSurface(
            spherical_spiral(0.2), line_profile(quarter, (0.5, 3.0))),
        'circle a=1 over small circle': lambda: meridian.MeridianSurface(
            small_circle(quarter), circle_arc_profile(FamilyParams(a=1.0, c1=-math.pi / 2, c2=0.0),
                                                      (0.1, math.pi - 0.1))),
        'circle a=2 over small circle': lambda: meridian.MeridianSurface(
            small_circle(quarter), circle_arc_profile(FamilyParams(a=2.0, c1=0.0, c2=0.0))),
        'cosh over spiral': lambda: meridian.MeridianSurface(
            spherical_spiral(0.2), cosh_profile(FamilyParams(A=0.5, b=2.0, c=0.0), (-1.0, 1.0))),
    }


@pytest.mark.parametrize('name', sorted(oracle_surfaces()))
def test_closed_forms_against_generic_pipeline(name):
    m = oracle_surfaces()[name]()
    p = meridian.meridian_patch(m)
    for u, v in GridSpec(m.domain[0], m.domain[1], 4, 4).points():
        closed = meridian.closed_curvature(m, u, v)
        numeric = patch.curvature(p, u, v)
        assert numeric.K == pytest.approx(closed.K, rel=1e-6, abs=1e-7)
        assert numeric.H == pytest.approx(closed.H, rel=1e-6, abs=1e-7)
        for generic, diagonal in ((numeric.A1, closed.A1), (numeric.A2, closed.A2)):
            assert abs(generic[0, 1]) < 1e-7
            assert abs(generic[1, 0]) < 1e-7
            assert np.allclose(np.diag(generic), np.diag(diagonal), atol=1e-6)

        K_v = (meridian.gauss_curvature(m, u, v + 1e-3) - meridian.gauss_curvature(m, u, v - 1e-3)) / 2e-3
        assert abs(K_v) <= 1e-10


@pytest.mark.parametrize('name', sorted(oracle_surfaces()))
def test_closed_forms_on_20x20_interior_grid(name):
    m = oracle_surfaces()[name]()
    p = meridian.meridian_patch(m)
    for u, v in GridSpec(m.domain[0], m.domain[1], 20, 20).points():
        closed = meridian.closed_curvature(m, u, v)
        numeric = patch.curvature(p, u, v)
        assert abs(numeric.K - closed.K) <= 1e-6 * (1 + abs(closed.K))
        assert abs(numeric.H - closed.H) <= 1e-6 * (1 + abs(closed.H))


def test_constant_gauss_curvature_families():
    sphere = oracle_surfaces()['circle a=1 over small circle']()
    cosh = oracle_surfaces()['cosh over spiral']()
    for u in np.linspace(0.2, math.pi - 0.2, 9):
        assert meridian.gauss_curvature(sphere, u, 0.5) == pytest.approx(1.0, abs=1e-8)
    for u in np.linspace(-0.9, 0.9, 9):
        assert meridian.gauss_curvature(cosh, u, 1.0) == pytest.approx(-0.25, abs=1e-8)
