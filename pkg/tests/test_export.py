import csv
import io
import math

import numpy as np
import pytest
from merisurf import export, weingarten
from merisurf.grid import GridEngine, GridSpec
from merisurf.meridian import MeridianSurface
from merisurf.profile import FamilyParams, circle_arc_profile, cosh_profile, line_profile
from merisurf.spherical_curve import great_circle, spherical_spiral


@pytest.fixture
def sphere():
    profile = circle_arc_profile(FamilyParams(a=1.0, c1=-math.pi / 2, c2=0.0), (0.2, 2.9))
    return MeridianSurface(great_circle(), profile, ((0.2, 2.9), (0.0, 6.28)))


def test_curvature_csv(sphere):
    grid = GridSpec(sphere.domain[0], sphere.domain[1], 8, 9)
    engine = GridEngine()
    rows = export.curvature_rows(sphere, weingarten.residual(sphere, grid, engine), engine)
    stream = io.StringIO()
    export.write_curvature_csv(stream, rows)

    table = list(csv.reader(io.StringIO(stream.getvalue())))
    assert tuple(table[0]) == export.CSV_HEADER
    assert len(table) == 1 + 8 * 9
    first = [float(x) for x in table[1]]
    us, vs = grid.nodes()
    assert first[0] == us[0] and first[1] == vs[0]
    assert float(table[2][0]) == us[0]
    for row in table[1:]:
        assert float(row[2]) == pytest.approx(1.0, abs=1e-12)
        assert float(row[8]) == 0.0


def test_csv_numbers_round_trip():
    stream = io.StringIO()
    export.write_curvature_csv(stream, [(0.1, 1 / 3, 0, 0, 0, 0, 0, 0, 0)])
    values = stream.getvalue().splitlines()[1].split(',')
    assert float(values[1]) == 1 / 3
    assert values[0] == '0.10000000000000001'


def test_obj_mesh(sphere):
    grid = GridSpec(sphere.domain[0], sphere.domain[1], 8, 10)
    stream = io.StringIO()
    export.write_obj(stream, sphere, grid, project=3)
    lines = stream.getvalue().splitlines()
    vertices = [l for l in lines if l.startswith('v ')]
    faces = [l for l in lines if l.startswith('f ')]
    assert len(vertices) == 8 * 10
    assert len(faces) == 7 * 9
    assert faces[0] == 'f 1 11 12 2'
    for line in vertices:
        x = [float(t) for t in line.split()[1:]]
        assert len(x) == 3
        assert math.fsum(c * c for c in x) == pytest.approx(1.0, abs=1e-12)
    assert max(int(i) for f in faces for i in f.split()[1:]) == 80


def test_obj_rejects_bad_projection(sphere):
    with pytest.raises(ValueError) as e_info:
        export.write_obj(io.StringIO(), sphere, GridSpec(sphere.domain[0], sphere.domain[1], 8, 8), project=5)


def cosh_over_spiral():
    profile = cosh_profile(FamilyParams(A=0.5, b=2.0, c=0.0), (-1.0, 1.0))
    return MeridianSurface(spherical_spiral(0.2), profile, ((-1.0, 1.0), (0.5, 2.5)))


def csv_text(m, n=10):
    grid = GridSpec(m.domain[0], m.domain[1], n, n)
    engine = GridEngine()
    stream = io.StringIO()
    export.write_curvature_csv(stream, export.curvature_rows(m, weingarten.residual(m, grid, engine), engine))
    return stream.getvalue()


def obj_text(m, n=10, project=3):
    stream = io.StringIO()
    export.write_obj(stream, m, GridSpec(m.domain[0], m.domain[1], n, n), project)
    return stream.getvalue()


def test_cosh_csv_has_constant_gauss_curvature():
    table = list(csv.DictReader(io.StringIO(csv_text(cosh_over_spiral()))))
    assert len(table) == 100
    for row in table:
        assert float(row['K']) == pytest.approx(-0.25, abs=1e-8)


def test_outputs_are_byte_stable():
    assert csv_text(cosh_over_spiral()) == csv_text(cosh_over_spiral())
    assert obj_text(cosh_over_spiral(), project=4) == obj_text(cosh_over_spiral(), project=4)


def test_line_profile_over_great_circle_has_planar_quads():
    m = MeridianSurface(great_circle(), line_profile(math.pi / 4, (0.5, 3.0)), ((0.5, 3.0), (0.0, 6.0)))
    lines = obj_text(m, 12).splitlines()
    vertices = [np.array([float(t) for t in l.split()[1:]]) for l in lines if l.startswith('v ')]
    faces = [[int(i) - 1 for i in l.split()[1:]] for l in lines if l.startswith('f ')]
    assert len(faces) == 11 * 11
    for face in faces:
        a, b, c, d = (vertices[i] for i in face)
        normal = np.cross(b - a, c - a)
        assert abs(np.dot(normal, d - a)) / np.linalg.norm(normal) <= 1e-9
