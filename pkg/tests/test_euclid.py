import numpy as np
import pytest
from merisurf import euclid
from merisurf.exceptions import DegenerateBasis


def test_dot_and_norm():
    assert euclid.dot(euclid.vec4(1, 2, 3, 4), euclid.vec4(1, 0, 0, 1)) == 5.0
    assert euclid.norm(euclid.vec3(3, 4, 0)) == 5.0


def test_dot_dimension_mismatch():
    with pytest.raises(ValueError) as e_info:
        euclid.dot(euclid.vec3(1, 0, 0), euclid.vec4(1, 0, 0, 0))


def test_cross3_needs_three_vectors():
    assert np.allclose(euclid.cross3(euclid.vec3(1, 0, 0), euclid.vec3(0, 1, 0)), [0, 0, 1])
    with pytest.raises(ValueError) as e_info:
        euclid.cross3(euclid.vec4(1, 0, 0, 0), euclid.vec4(0, 1, 0, 0))


def test_lift_and_canonical():
    assert np.array_equal(euclid.lift(euclid.vec3(1, 2, 3)), [1, 2, 3, 0])
    assert np.array_equal(euclid.E4, [0, 0, 0, 1])
    assert np.array_equal(euclid.canonical(2, 3), [0, 1, 0])


def test_gram_schmidt_completes_frame():
    a = euclid.vec4(1, 1, 0, 0)
    b = euclid.vec4(0, 1, 1, 0)
    completion = euclid.gram_schmidt([a, b])
    assert len(completion) == 2
    frame = np.array([a / np.linalg.norm(a)] + completion)
    for q in completion:
        assert abs(np.linalg.norm(q) - 1.0) < 1e-12
        assert abs(np.dot(q, a)) < 1e-12
        assert abs(np.dot(q, b)) < 1e-12
    assert abs(np.dot(completion[0], completion[1])) < 1e-12


def test_gram_schmidt_prefers_seeds():
    completion = euclid.gram_schmidt([euclid.canonical(1), euclid.canonical(2)],
                                     seeds=[euclid.canonical(4)])
    assert np.allclose(completion[0], euclid.canonical(4))
    assert np.allclose(np.abs(completion[1]), euclid.canonical(3))


def test_gram_schmidt_skips_dependent_candidates():
    # e1 lies in the span and must be skipped
    completion = euclid.gram_schmidt([euclid.canonical(1), euclid.canonical(2), euclid.canonical(3)])
    assert len(completion) == 1
    assert np.allclose(completion[0], euclid.canonical(4))


def test_gram_schmidt_degenerate():
    a = euclid.vec4(1, 2, 0, 0)
    with pytest.raises(DegenerateBasis) as e_info:
        euclid.gram_schmidt([a, 2 * a])


def test_gram_schmidt_empty_basis():
    with pytest.raises(ValueError) as e_info:
        euclid.gram_schmidt([])
