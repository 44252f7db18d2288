import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diamramsey import (
    Configuration,
    DomainError,
    NonOrthogonal,
    RigidMotion,
    affine_dimension,
    apply_motion,
    diameter,
    distance_matrix,
    is_congruent,
    random_motion,
    regular_simplex,
)
from oracles import configurations

UNIT_SQUARE = Configuration.from_points([[0, 0], [1, 0], [1, 1], [0, 1]])
EQUILATERAL = regular_simplex(2)


class TestConfiguration:
    def test_rejects_empty(self):
        with pytest.raises(DomainError):
            Configuration(dim=2, points=np.empty((0, 2)))

    def test_rejects_ragged_dim(self):
        with pytest.raises(DomainError):
            Configuration(dim=3, points=[[1.0, 2.0]])

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            Configuration(dim=1, points=[[np.inf]])

    def test_points_are_frozen(self):
        config = Configuration.from_points([[1.0, 2.0]])
        with pytest.raises(ValueError):
            config.points[0, 0] = 3.0


class TestDiameter:
    def test_unit_square(self):
        assert diameter(UNIT_SQUARE) == pytest.approx(math.sqrt(2), abs=1e-12)

    def test_singleton(self):
        assert diameter(Configuration.from_points([[3.0, 4.0]])) == 0.0

    def test_regular_simplex_unit_edges(self):
        assert diameter(regular_simplex(3)) == pytest.approx(1.0, abs=1e-12)


class TestDistanceMatrix:
    def test_two_points(self):
        config = Configuration.from_points([[0.0], [1.0]])
        assert np.allclose(distance_matrix(config), [[0, 1], [1, 0]])

    def test_singleton(self):
        config = Configuration.from_points([[5.0, 5.0]])
        assert distance_matrix(config) == pytest.approx(np.zeros((1, 1)))

    def test_equilateral_off_diagonal(self):
        mat = distance_matrix(EQUILATERAL)
        off = mat[~np.eye(3, dtype=bool)]
        assert np.allclose(off, 1.0, atol=1e-12)


class TestApplyMotion:
    def test_identity(self):
        moved = apply_motion(UNIT_SQUARE, RigidMotion.identity(2))
        assert np.allclose(moved.points, UNIT_SQUARE.points)

    def test_quarter_turn(self):
        motion = RigidMotion(rotation=[[0.0, -1.0], [1.0, 0.0]],
                             translation=[0.0, 0.0])
        moved = apply_motion(Configuration.from_points([[1.0, 0.0]]), motion)
        assert np.allclose(moved.points, [[0.0, 1.0]], atol=1e-15)

    def test_preserves_distance_matrix(self):
        motion = random_motion(2, seed=5)
        moved = apply_motion(EQUILATERAL, motion)
        assert np.allclose(distance_matrix(moved), distance_matrix(EQUILATERAL),
                           atol=1e-9)

    def test_non_orthogonal_rejected(self):
        skewed = RigidMotion(rotation=[[1.0, 0.1], [0.0, 1.0]],
                             translation=[0.0, 0.0])
        with pytest.raises(NonOrthogonal):
            apply_motion(UNIT_SQUARE, skewed)

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError):
            apply_motion(UNIT_SQUARE, RigidMotion.identity(3))


class TestIsCongruent:
    def test_reflection_is_congruent(self):
        mirrored = Configuration(dim=2, points=EQUILATERAL.points * [-1.0, 1.0])
        assert is_congruent(EQUILATERAL, mirrored, 1e-9)

    def test_scaled_not_congruent(self):
        doubled = Configuration(dim=2, points=2.0 * EQUILATERAL.points)
        assert not is_congruent(EQUILATERAL, doubled, 1e-9)

    def test_square_vs_rhombus(self):
        # rhombus with diagonals sqrt(2) +/- 0.5: the sorted distance
        # multisets differ (side sqrt(1.125) vs 1), so no matching exists.
        p = (math.sqrt(2) + 0.5) / 2
        q = (math.sqrt(2) - 0.5) / 2
        rhombus = Configuration.from_points(
            [[p, 0.0], [0.0, q], [-p, 0.0], [0.0, -q]])
        assert not is_congruent(UNIT_SQUARE, rhombus, 1e-9)

    def test_size_mismatch(self):
        pair = Configuration.from_points([[0.0, 0.0], [1.0, 0.0]])
        assert not is_congruent(UNIT_SQUARE, pair, 1e-9)

    @pytest.mark.parametrize("seed", range(8))
    def test_congruent_after_motion(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 9))
        dim = int(rng.integers(1, 5))
        config = Configuration.from_points(rng.normal(0, 2, (n, dim)))
        moved = apply_motion(config, random_motion(dim, seed=seed + 100))
        assert is_congruent(config, moved, 1e-9)

    @given(configurations(max_points=6))
    def test_reflexive(self, config):
        assert is_congruent(config, config, 1e-9)

    @given(configurations(max_points=5), st.integers(0, 10))
    @settings(max_examples=40)
    def test_symmetric(self, config, seed):
        moved = apply_motion(config, random_motion(config.dim, seed=seed))
        assert is_congruent(config, moved, 1e-8)
        assert is_congruent(moved, config, 1e-8)


class TestAffineDimension:
    def test_singleton(self):
        assert affine_dimension(Configuration.from_points([[1.0, 2.0, 3.0]])) == 0

    def test_collinear_in_3d(self):
        config = Configuration.from_points(
            [[0.0, 0.0, 0.0], [1.0, 1.0, 1.0], [2.0, 2.0, 2.0]])
        assert affine_dimension(config) == 1

    def test_unit_square(self):
        assert affine_dimension(UNIT_SQUARE) == 2


class TestRandomMotion:
    def test_deterministic(self):
        a = random_motion(3, seed=11)
        b = random_motion(3, seed=11)
        assert np.array_equal(a.rotation, b.rotation)
        assert np.array_equal(a.translation, b.translation)

    def test_orthogonal(self):
        for seed in range(10):
            assert random_motion(4, seed=seed).is_orthogonal()

    def test_both_determinant_signs_reachable(self):
        dets = {round(float(np.linalg.det(random_motion(3, seed=s).rotation)))
                for s in range(20)}
        assert dets == {-1, 1}

    def test_inverse_roundtrip(self):
        for seed in range(6):
            motion = random_motion(3, seed=seed)
            roundtrip = apply_motion(
                apply_motion(regular_simplex(3), motion), motion.inverse())
            assert np.allclose(roundtrip.points, regular_simplex(3).points,
                               atol=1e-9)


class TestMotionInvariance:
    @given(configurations(), st.integers(0, 50))
    @settings(max_examples=60)
    def test_diameter_distance_affine_dim(self, config, seed):
        moved = apply_motion(config, random_motion(config.dim, seed=seed))
        assert diameter(moved) == pytest.approx(diameter(config), abs=1e-9)
        assert np.allclose(distance_matrix(moved), distance_matrix(config),
                           atol=1e-9)
        assert affine_dimension(moved, 1e-6) == affine_dimension(config, 1e-6)
