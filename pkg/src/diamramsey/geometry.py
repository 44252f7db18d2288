"""Finite point configurations, rigid motions, and congruence testing.

A configuration is an ordered finite point set in R^dim.  All predicates in
this module depend only on pairwise Euclidean distances, so they are
invariant under rotations, translations and reflections.  Values are frozen
after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonOrthogonal

DEFAULT_TOL = 1e-9

# Orthogonality defect allowed on rotation matrices, max-norm of R^T R - I.
ORTHOGONALITY_TOL = 1e-9


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=float)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Configuration:
    """An ordered, nonempty point set in R^dim."""

    dim: int
    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2:
            raise DomainError("points must be a 2-d array of shape (n, dim)")
        if self.dim < 1:
            raise DomainError("ambient dimension must be a positive integer")
        n, d = pts.shape
        if n == 0:
            raise DomainError("a configuration must contain at least one point")
        if d != self.dim:
            raise DomainError(f"points have {d} coordinates, expected dim={self.dim}")
        if not np.all(np.isfinite(pts)):
            raise DomainError("all coordinates must be finite")
        object.__setattr__(self, "points", _freeze(pts))

    @classmethod
    def from_points(cls, points) -> "Configuration":
        """Build a configuration, inferring the ambient dimension."""
        arr = np.asarray(points, dtype=float)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2 or arr.shape[1] == 0:
            raise DomainError("points must form a nonempty (n, dim) array")
        return cls(dim=arr.shape[1], points=arr)

    def __len__(self) -> int:
        return self.points.shape[0]

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True, eq=False)
class RigidMotion:
    """An isometry x -> rotation @ x + translation.

    The rotation matrix may be orientation reversing; orthogonality is only
    enforced (within ORTHOGONALITY_TOL) when the motion is applied.
    """

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        rot = np.asarray(self.rotation, dtype=float)
        tr = np.asarray(self.translation, dtype=float)
        if rot.ndim != 2 or rot.shape[0] != rot.shape[1]:
            raise DomainError("rotation must be a square matrix")
        if tr.shape != (rot.shape[0],):
            raise DomainError("translation length must match rotation dimension")
        if not (np.all(np.isfinite(rot)) and np.all(np.isfinite(tr))):
            raise DomainError("rigid motion entries must be finite")
        object.__setattr__(self, "rotation", _freeze(rot))
        object.__setattr__(self, "translation", _freeze(tr))

    @property
    def dim(self) -> int:
        return self.rotation.shape[0]

    def orthogonality_defect(self) -> float:
        eye = np.eye(self.dim)
        return float(np.max(np.abs(self.rotation.T @ self.rotation - eye)))

    def is_orthogonal(self, tol: float = ORTHOGONALITY_TOL) -> bool:
        return self.orthogonality_defect() <= tol

    @classmethod
    def identity(cls, dim: int) -> "RigidMotion":
        return cls(rotation=np.eye(dim), translation=np.zeros(dim))

    def inverse(self) -> "RigidMotion":
        rt = self.rotation.T
        return RigidMotion(rotation=rt, translation=-(rt @ self.translation))

    def compose(self, other: "RigidMotion") -> "RigidMotion":
        """The motion applying `other` first, then self."""
        return RigidMotion(
            rotation=self.rotation @ other.rotation,
            translation=self.rotation @ other.translation + self.translation,
        )


def diameter(config: Configuration) -> float:
    """Largest pairwise distance; 0 for a singleton."""
    return float(np.max(distance_matrix(config)))


def distance_matrix(config: Configuration) -> np.ndarray:
    """Symmetric matrix of pairwise Euclidean distances."""
    pts = config.points
    diff = pts[:, None, :] - pts[None, :, :]
    return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))


def apply_motion(config: Configuration, motion: RigidMotion,
                 tol: float = ORTHOGONALITY_TOL) -> Configuration:
    """Map every point to rotation @ p + translation.

    Raises NonOrthogonal if the rotation fails the orthogonality tolerance,
    and DomainError on a dimension mismatch.
    """
    if motion.dim != config.dim:
        raise DomainError(
            f"motion acts on R^{motion.dim} but configuration lives in R^{config.dim}")
    if not motion.is_orthogonal(tol):
        raise NonOrthogonal(
            f"rotation deviates from orthogonality by {motion.orthogonality_defect():.3e}")
    pts = config.points @ motion.rotation.T + motion.translation
    return Configuration(dim=config.dim, points=pts)


def affine_dimension(config: Configuration, tol: float = DEFAULT_TOL) -> int:
    """Rank of the span of p_i - p_1, with a relative singular value cutoff."""
    pts = config.points
    if len(config) == 1:
        return 0
    diffs = pts[1:] - pts[0]
    svals = np.linalg.svd(diffs, compute_uv=False)
    if svals.size == 0 or svals[0] <= 0.0:
        return 0
    return int(np.sum(svals > tol * svals[0]))


def _sorted_rows_compatible(row_a: np.ndarray, row_b: np.ndarray, tol: float) -> bool:
    # Sorted sequences realize the optimal bottleneck matching on the line,
    # so entrywise comparison is a valid necessary condition.
    return bool(np.all(np.abs(np.sort(row_a) - np.sort(row_b)) <= tol))


def is_congruent(config_a: Configuration, config_b: Configuration,
                 tol: float = DEFAULT_TOL) -> bool:
    """True iff some relabelling matches the two distance matrices within tol.

    Backtracking over point assignments, processing the most distance-
    distinctive points of `config_a` first so contradictions surface early.
    Worst case is factorial; intended for small sets (n <= 12).
    """
    n = len(config_a)
    if n != len(config_b):
        return False
    if n == 1:
        return True
    dist_a = distance_matrix(config_a)
    dist_b = distance_matrix(config_b)

    flat_a = np.sort(dist_a[np.triu_indices(n, k=1)])
    flat_b = np.sort(dist_b[np.triu_indices(n, k=1)])
    if not np.all(np.abs(flat_a - flat_b) <= tol):
        return False

    def distinctiveness(row: np.ndarray) -> int:
        vals = np.sort(row)
        return int(np.sum(np.diff(vals) > tol))

    order = sorted(range(n), key=lambda i: -distinctiveness(dist_a[i]))
    candidates = [
        [j for j in range(n) if _sorted_rows_compatible(dist_a[i], dist_b[j], tol)]
        for i in range(n)
    ]

    assignment: dict[int, int] = {}

    def backtrack(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in candidates[i]:
            if j in assignment.values():
                continue
            ok = all(
                abs(dist_a[i, i2] - dist_b[j, j2]) <= tol
                for i2, j2 in assignment.items()
            )
            if ok:
                assignment[i] = j
                if backtrack(k + 1):
                    return True
                del assignment[i]
        return False

    return backtrack(0)


def random_motion(dim: int, seed=0, translation_scale: float = 1.0) -> RigidMotion:
    """Seeded random rigid motion: Haar-ish orthogonal rotation + normal shift.

    The rotation is obtained by orthonormalizing a matrix of independent
    standard normals (QR with sign correction, Haar on O(dim)), then its
    determinant sign is set uniformly at random, so reflections occur half
    the time.  Deterministic given the seed.
    """
    if dim < 1:
        raise DomainError("dimension must be positive")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    gauss = rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(gauss)
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    q = q * signs
    want_reflection = bool(rng.integers(0, 2))
    has_reflection = np.linalg.det(q) < 0
    if want_reflection != has_reflection:
        q = q.copy()
        q[:, 0] *= -1.0
    translation = translation_scale * rng.standard_normal(dim)
    return RigidMotion(rotation=q, translation=translation)
