"""
merisurf.euclid

Vector algebra for E³ and E⁴. Vectors are plain float ``numpy`` arrays of
shape (3,) or (4,).
"""

import numpy as np

from .exceptions import DegenerateBasis

GRAM_TOLERANCE = 1e-10
PIVOT_TOLERANCE = 1e-8


def vec3(x, y, z):
    return np.array([x, y, z], dtype=float)


def vec4(x1, x2, x3, x4):
    return np.array([x1, x2, x3, x4], dtype=float)


def canonical(index, dim=4):
    """Return e_index (1-based) of E^dim."""
    e = np.zeros(dim)
    e[index - 1] = 1.0
    return e


E4 = canonical(4)


def _check_dims(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError('dimension mismatch: %s vs %s' % (a.shape, b.shape))
    return a, b


def dot(a, b):
    a, b = _check_dims(a, b)
    return float(np.dot(a, b))


def norm(a):
    return float(np.sqrt(dot(a, a)))


def cross3(a, b):
    a, b = _check_dims(a, b)
    if a.shape != (3,):
        raise ValueError('cross3 needs 3-vectors, got shape %s' % (a.shape,))
    return np.cross(a, b)


def lift(v):
    """Embed a vector of E³ = span{e1, e2, e3} into E⁴."""
    return np.append(np.asarray(v, dtype=float), 0.0)


def _project_out(v, frame):
    # two passes keep the result orthogonal to round-off
    for _ in range(2):
        for q in frame:
            v = v - np.dot(v, q) * q
    return v


def gram_schmidt(basis, seeds=(), tolerance=GRAM_TOLERANCE):
    """Complete ``basis`` to an orthonormal frame and return the new vectors.

    Candidates are the given ``seeds`` followed by e1..e_n in index order;
    a candidate whose residual after projection is shorter than
    ``PIVOT_TOLERANCE`` is skipped.
    """
    basis = [np.asarray(b, dtype=float) for b in basis]
    if not basis:
        raise ValueError('gram_schmidt needs at least one basis vector')
    dim = basis[0].shape[0]
    for b in basis:
        if b.shape != (dim,):
            raise ValueError('dimension mismatch in basis')

    gram = np.array([[np.dot(a, b) for b in basis] for a in basis])
    det = np.linalg.det(gram)
    if det < tolerance:
        raise DegenerateBasis('basis Gram determinant %.3e below %.1e' % (det, tolerance))

    frame = []
    for b in basis:
        q = _project_out(b, frame)
        frame.append(q / norm(q))

    candidates = [np.asarray(s, dtype=float) for s in seeds]
    candidates += [canonical(i, dim) for i in range(1, dim + 1)]

    completion = []
    for c in candidates:
        if len(frame) == dim:
            break
        residual = _project_out(c, frame)
        length = norm(residual)
        if length < PIVOT_TOLERANCE:
            continue
        q = residual / length
        frame.append(q)
        completion.append(q)
    return completion
