"""
merisurf.export

Curvature tables (CSV) and surface meshes (Wavefront OBJ) for a meridian
surface sampled on a grid. Output is row-major, u outer and v inner, and
numbers are written with 17 significant digits.
"""

import csv

from .meridian import closed_curvature, embed
from .profile import kappa_alpha

CSV_HEADER = ('u', 'v', 'K', 'H', 'H1', 'H2', 'kappa', 'kappa_alpha', 'residual')


def _g17(x):
    return '%.17g' % x


def curvature_rows(m, residual_grid, engine):
    """Rows of :data:`CSV_HEADER` on the interior nodes of the residual grid."""
    grid = residual_grid.grid

    def point(u, v):
        k = closed_curvature(m, u, v)
        return (u, v, k.K, k.H, k.H1, k.H2, m.frenet(v).kappa, float(kappa_alpha(m.profile, u)))

    rows = []
    table = engine.sweep(point, grid)
    for i, line in enumerate(table):
        for j, row in enumerate(line):
            rows.append(row + (float(residual_grid.values[i, j]),))
    return rows


def write_curvature_csv(stream, rows):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([_g17(x) for x in row])


def write_obj(stream, m, grid, project=3):
    """Mesh over the closed grid with coordinate ``project`` (1-4) dropped."""
    if project not in (1, 2, 3, 4):
        raise ValueError('project must be 1, 2, 3 or 4, got %r' % (project,))
    keep = [k for k in range(4) if k != project - 1]
    stream.write('# merisurf meridian surface mesh\n')
    stream.write('# dropped coordinate x%d\n' % project)

    us, vs = grid.nodes(interior=False)
    for u in us:
        for v in vs:
            x = embed(m, float(u), float(v))
            stream.write('v %s\n' % ' '.join(_g17(x[k]) for k in keep))

    nv = grid.nv
    for i in range(grid.nu - 1):
        for j in range(grid.nv - 1):
            a = i * nv + j + 1
            stream.write('f %d %d %d %d\n' % (a, a + nv, a + nv + 1, a + 1))
