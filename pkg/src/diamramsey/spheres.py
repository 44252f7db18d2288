"""Enclosing balls and circumspheres.

The minimum enclosing ball uses the move-to-front variant of Welzl's
algorithm with a seeded shuffle; on degenerate inputs that defeat the
recursion, it falls back to enumerating candidate support subsets.  The
circumsphere is solved inside the affine hull of the points, which is what
makes "smallest containing sphere" well defined for lower-dimensional sets
(an off-hull center can only enlarge the radius).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import Degenerate, DomainError, NotSimplex, NotSpherical
from .geometry import DEFAULT_TOL, Configuration, affine_dimension, diameter, _freeze

# Containment slack inside Welzl's recursion; also the guarantee on the output.
_WELZL_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class Ball:
    """A closed ball: center plus nonnegative radius."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float)
        if c.ndim != 1:
            raise DomainError("ball center must be a vector")
        if not (np.all(np.isfinite(c)) and np.isfinite(self.radius)):
            raise DomainError("ball entries must be finite")
        if self.radius < 0:
            raise DomainError("ball radius must be nonnegative")
        object.__setattr__(self, "center", _freeze(c))

    def contains(self, point, tol: float = _WELZL_EPS) -> bool:
        return float(np.linalg.norm(np.asarray(point, dtype=float) - self.center)) \
            <= self.radius + tol


@dataclass(frozen=True, eq=False)
class Sphere:
    """A sphere through a point set, solved within its affine hull.

    `carrier` holds an orthonormal basis (rows) of the hull's direction
    space, recording the subspace in which the center was solved;
    `residual` is the worst equidistance defect over the points.
    """

    center: np.ndarray
    radius: float
    carrier: np.ndarray
    residual: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "center", _freeze(np.asarray(self.center, dtype=float)))
        object.__setattr__(self, "carrier", _freeze(np.asarray(self.carrier, dtype=float)))


def _support_ball(pts: np.ndarray, support: tuple[int, ...]):
    """Smallest ball with all of `support` on its boundary (center in their hull).

    Returns (center, radius); (None, -1.0) for an empty support set.
    """
    if not support:
        return None, -1.0
    chosen = pts[list(support)]
    base = chosen[0]
    if len(support) == 1:
        return base, 0.0
    rel = chosen[1:] - base
    rhs = 0.5 * np.einsum("ij,ij->i", rel, rel)
    sol, *_ = np.linalg.lstsq(rel, rhs, rcond=None)
    center = base + sol
    radius = float(np.max(np.linalg.norm(chosen - center, axis=1)))
    return center, radius


def _welzl_mtf(pts: np.ndarray, order: list[int], support: tuple[int, ...], dim: int):
    ball = _support_ball(pts, support)
    if len(support) == dim + 1:
        return ball
    i = 0
    while i < len(order):
        j = order[i]
        center, radius = ball
        outside = center is None or \
            float(np.linalg.norm(pts[j] - center)) > radius + _WELZL_EPS
        if outside:
            ball = _welzl_mtf(pts, order[:i], support + (j,), dim)
            order.insert(0, order.pop(i))
        i += 1
    return ball


def _enumerate_meb(pts: np.ndarray, dim: int):
    """Exhaustive candidate-support search; rescue path for degenerate inputs."""
    n = len(pts)
    best = None
    for size in range(1, min(dim + 1, n) + 1):
        for subset in itertools.combinations(range(n), size):
            center, radius = _support_ball(pts, subset)
            dists = np.linalg.norm(pts - center, axis=1)
            if np.all(dists <= radius + _WELZL_EPS):
                if best is None or radius < best[1]:
                    best = (center, radius)
    if best is None:
        raise Degenerate("no candidate support subset encloses the point set")
    return best


def min_enclosing_ball(config: Configuration, seed: int = 0) -> Ball:
    """Smallest closed ball containing the configuration.

    Welzl's randomized move-to-front recursion over a seeded shuffle; the
    ball is determined by a support set of at most dim+1 boundary points and
    contains every point within 1e-9.
    """
    pts = config.points
    n = len(config)
    rng = np.random.default_rng(seed)
    for _ in range(3):
        order = [int(i) for i in rng.permutation(n)]
        center, radius = _welzl_mtf(pts, order, (), config.dim)
        if center is not None:
            dists = np.linalg.norm(pts - center, axis=1)
            if np.all(dists <= radius + _WELZL_EPS):
                return Ball(center=center, radius=max(radius, 0.0))
    center, radius = _enumerate_meb(pts, config.dim)
    return Ball(center=center, radius=max(radius, 0.0))


def circumsphere(config: Configuration, tol: float = DEFAULT_TOL) -> Sphere:
    """Sphere through all points, solved within their affine hull.

    The hull is reduced to an orthonormal basis, the center is recovered
    from the linear system 2<x, p_i - p_1> = |p_i|^2 - |p_1|^2 restricted to
    hull coordinates, and the result is rejected as NotSpherical when the
    worst equidistance defect exceeds tol * diameter.
    """
    if len(config) < 2:
        raise DomainError("circumsphere requires at least two points")
    pts = config.points
    diam = diameter(config)
    if diam <= 0.0:
        raise Degenerate("all points coincide; no smallest containing sphere")

    rel = pts[1:] - pts[0]
    u, svals, vt = np.linalg.svd(rel, full_matrices=False)
    rank = int(np.sum(svals > 1e-12 * svals[0]))
    basis = vt[:rank]                       # (rank, dim), orthonormal rows
    coords = rel @ basis.T                  # hull coordinates of p_i - p_1
    rhs = 0.5 * np.einsum("ij,ij->i", coords, coords)
    sol, *_ = np.linalg.lstsq(coords, rhs, rcond=None)
    center = pts[0] + basis.T @ sol

    dists = np.linalg.norm(pts - center, axis=1)
    radius = float(np.mean(dists))
    residual = float(np.max(np.abs(dists - radius)))
    if residual > tol * diam:
        raise NotSpherical(
            f"equidistance residual {residual:.3e} exceeds {tol:.1e} * diameter")
    return Sphere(center=center, radius=radius, carrier=basis, residual=residual)


def circumradius(config: Configuration) -> float:
    """Radius of the smallest sphere whose surface contains the set."""
    return circumsphere(config).radius


def is_spherical(config: Configuration, tol: float = DEFAULT_TOL) -> bool:
    """Whether the set lies on some sphere. Singletons count as spherical."""
    if len(config) < 2:
        return True
    try:
        circumsphere(config, tol)
    except (NotSpherical, Degenerate):
        return False
    return True


def jung_bound(config: Configuration) -> float:
    """sqrt(m / (2m + 2)) * diameter, with m the affine dimension.

    Every bounded set of affine dimension m fits in a closed ball of this
    radius; in particular every finite set fits in radius diam / sqrt(2).
    """
    m = affine_dimension(config)
    if m == 0:
        return 0.0
    return float(np.sqrt(m / (2.0 * m + 2.0)) * diameter(config))


def circumcenter_in_hull(config: Configuration, tol: float = DEFAULT_TOL) -> bool:
    """Whether the circumcenter lies in the simplex's convex hull.

    Requires a nondegenerate simplex (|C| = affine dimension + 1).  The
    circumcenter's barycentric coordinates are solved from the affine
    system; a face case (coordinate 0) counts as contained via -tol.
    """
    m = affine_dimension(config)
    if len(config) != m + 1 or m == 0:
        raise NotSimplex(
            f"{len(config)} points of affine dimension {m} do not form a simplex")
    sphere = circumsphere(config)
    pts = config.points
    system = np.vstack([pts.T, np.ones(len(config))])
    target = np.concatenate([sphere.center, [1.0]])
    bary, *_ = np.linalg.lstsq(system, target, rcond=None)
    return bool(np.min(bary) >= -tol)
