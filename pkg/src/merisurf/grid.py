''' Grid module
'''
import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from time import time

import numpy as np

from . import defaultconfig
from . import utils

MIN_NODES = 8


class GridSpec(namedtuple('GridSpec', 'u_range v_range nu nv')):
    """An nu × nv grid over a parameter rectangle.

    Analysis grids use interior nodes u_i = u0 + (i + 1)(u1 − u0)/(nu + 1);
    ``interior=False`` gives the closed rectangle used for meshes.
    """

    def __new__(cls, u_range, v_range, nu=None, nv=None):
        nu = defaultconfig.grid['nu'] if nu is None else int(nu)
        nv = defaultconfig.grid['nv'] if nv is None else int(nv)
        u_range = (float(u_range[0]), float(u_range[1]))
        v_range = (float(v_range[0]), float(v_range[1]))
        if not u_range[1] > u_range[0] or not v_range[1] > v_range[0]:
            raise ValueError('degenerate grid rectangle %r x %r' % (u_range, v_range))
        if nu < 1 or nv < 1:
            raise ValueError('grid needs at least one node per axis')
        return super().__new__(cls, u_range, v_range, nu, nv)

    @staticmethod
    def _axis(bounds, count, interior):
        lo, hi = bounds
        if interior:
            return lo + (np.arange(count) + 1) * (hi - lo) / (count + 1)
        return np.linspace(lo, hi, count)

    def nodes(self, interior=True):
        return (self._axis(self.u_range, self.nu, interior),
                self._axis(self.v_range, self.nv, interior))

    def points(self, interior=True):
        us, vs = self.nodes(interior)
        return [(float(u), float(v)) for u in us for v in vs]

    def to_dict(self):
        return {'u': list(self.u_range), 'v': list(self.v_range),
                'nu': self.nu, 'nv': self.nv}


class GridEngine:
    """Evaluates a point function over a grid, row-major (u outer, v inner)."""

    def __init__(self, settings=None, logger=None):
        self.settings = settings or defaultconfig
        engine = utils.setting(self.settings, 'engine')
        self.executers = max(1, int(engine.get('executers', 1)))
        # a child of the caller's logger inherits its level
        self.logger = (logger or logging.getLogger('merisurf')).getChild('grid')

    def sweep(self, func, grid, interior=True):
        """Return ``[[func(u, v) for v in vs] for u in us]``."""
        points = grid.points(interior)
        start = time()
        if self.executers > 1:
            self.logger.debug("Started %d executers", self.executers)
            with ThreadPoolExecutor(max_workers=self.executers) as pool:
                values = list(pool.map(lambda uv: func(*uv), points))
        else:
            values = [func(u, v) for u, v in points]
        self.logger.debug("Swept %d points in %.2fs", len(points), time() - start)
        return [values[i * grid.nv:(i + 1) * grid.nv] for i in range(grid.nu)]
