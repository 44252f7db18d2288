"""Spread minimization over congruent copies inside a ball.

The spread of a placed configuration is (max point norm) - (min point norm).
For a target A and radius r < circumradius(A), every congruent copy of A
inside the origin-centered r-ball has spread bounded below by a positive
constant; this module estimates that constant two independent ways:

* estimate_c: multi-start derivative-free local search (Nelder-Mead) over a
  rotation/translation parameterization, with an increasing quadratic
  penalty on ball violations and an exact feasibility repair step;
* sample_spread_oracle: the minimum spread over a reproducible stream of
  random feasible copies.

Both report upper bounds on the true constant; nothing here certifies a
lower bound.  Copies are sampled by drawing a Haar rotation, drawing a
candidate position for the copy's enclosing-ball center uniformly in
B(0, r), and shrinking that position radially (closed form) until the copy
fits.  The shrink gives the sampler full support over feasible copies and
concentrates mass on the feasibility boundary, where minima live.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.optimize import minimize

from .errors import DomainError, EmptySample, Infeasible, NonConvergence, NotSpherical
from .geometry import Configuration, RigidMotion, affine_dimension
from .spheres import circumsphere, min_enclosing_ball

FEASIBILITY_SLACK = 1e-9
DEFAULT_PENALTY_SCHEDULE = (1e1, 1e2, 1e3, 1e4, 1e5, 1e6)
_CHUNK = 1 << 16


def spread(config: Configuration) -> float:
    """Max point norm minus min point norm; 0 iff the set sits on an origin sphere."""
    return _spread_of(config.points)


def _spread_of(points: np.ndarray) -> float:
    norms = np.linalg.norm(points, axis=1)
    return float(norms.max() - norms.min())


def embed_target(config: Configuration, ambient_dim: int) -> Configuration:
    """Isometric copy of the configuration in R^ambient_dim.

    Pads coordinates with zeros when the ambient dimension grows; when it
    shrinks, the points are first re-expressed in an orthonormal basis of
    their affine hull (requires affine dimension <= ambient_dim).
    """
    if ambient_dim < 1:
        raise DomainError("ambient dimension must be positive")
    pts = config.points
    if config.dim > ambient_dim:
        m = affine_dimension(config)
        if m > ambient_dim:
            raise DomainError(
                f"affine dimension {m} does not fit in R^{ambient_dim}")
        rel = pts - pts[0]
        _, svals, vt = np.linalg.svd(rel, full_matrices=False)
        if m == 0:
            pts = np.zeros((len(config), 1))
        else:
            pts = rel @ vt[:m].T
    out = np.zeros((len(config), ambient_dim))
    out[:, :pts.shape[1]] = pts
    return Configuration(dim=ambient_dim, points=out)


@dataclass(frozen=True, eq=False)
class SpreadProblem:
    """Target set, ball radius, and the ambient dimension to embed into.

    ambient_dim defaults to affine_dimension(target) + 1: one extra
    dimension is enough, since any higher-dimensional copy lies in the
    subspace spanned by its points and the origin.
    """

    target: Configuration
    radius: float
    ambient_dim: int | None = None

    def __post_init__(self):
        if not (np.isfinite(self.radius) and self.radius > 0):
            raise DomainError("ball radius must be positive")
        m = affine_dimension(self.target)
        if self.ambient_dim is None:
            object.__setattr__(self, "ambient_dim", m + 1)
        if self.ambient_dim < max(m, 1):
            raise DomainError(
                f"ambient dimension {self.ambient_dim} below affine dimension {m}")


@dataclass(frozen=True, eq=False)
class SpreadEstimate:
    """Best found spread over feasible placements, with reproducibility data.

    c_estimate is an upper-bound estimate of the true minimum; best_motion
    maps embed_target(problem.target, problem.ambient_dim) onto the
    certified-feasible best placement.
    """

    c_estimate: float | None
    best_motion: RigidMotion | None
    restarts: int
    oracle_value: float | None
    feasible: bool
    seed: int
    radius: float
    ambient_dim: int
    penalty_schedule: tuple
    tolerance: float
    best_restart: int | None = None
    max_norm: float | None = None

    def to_dict(self) -> dict:
        motion = None
        if self.best_motion is not None:
            motion = {
                "rotation": self.best_motion.rotation.tolist(),
                "translation": self.best_motion.translation.tolist(),
            }
        return {
            "feasible": self.feasible,
            "c_estimate": self.c_estimate,
            "oracle_value": self.oracle_value,
            "restarts": self.restarts,
            "seed": self.seed,
            "radius": self.radius,
            "ambient_dim": self.ambient_dim,
            "penalty_schedule": list(self.penalty_schedule),
            "tolerance": self.tolerance,
            "best_restart": self.best_restart,
            "max_norm": self.max_norm,
            "best_motion": motion,
        }


def embedding_feasible(problem: SpreadProblem) -> bool:
    """A congruent copy fits in some r-ball iff the enclosing-ball radius does."""
    return min_enclosing_ball(problem.target).radius \
        <= problem.radius + FEASIBILITY_SLACK


# ---------------------------------------------------------------------------
# Rotation parameterization: matrix exponential of a skew-symmetric matrix
# built from D(D-1)/2 parameters (strict upper triangle, lexicographic).
# ---------------------------------------------------------------------------

def rotation_param_count(dim: int) -> int:
    return dim * (dim - 1) // 2


def _skew_from_params(params: np.ndarray, dim: int) -> np.ndarray:
    s = np.zeros((dim, dim))
    iu = np.triu_indices(dim, k=1)
    s[iu] = params
    return s - s.T


def _rotation_from_params(params: np.ndarray, dim: int) -> np.ndarray:
    if dim == 1:
        return np.ones((1, 1))
    if dim == 2:
        c, s = math.cos(params[0]), math.sin(params[0])
        return np.array([[c, -s], [s, c]])
    if dim == 3:
        skew = _skew_from_params(params, 3)
        angle = math.sqrt(float(params @ params))
        if angle < 1e-12:
            return np.eye(3) + skew + 0.5 * (skew @ skew)
        return (np.eye(3) + (math.sin(angle) / angle) * skew
                + ((1.0 - math.cos(angle)) / (angle * angle)) * (skew @ skew))
    return scipy.linalg.expm(_skew_from_params(params, dim))


def _params_from_rotation(rot: np.ndarray) -> np.ndarray:
    """Inverse of _rotation_from_params for det +1 matrices."""
    dim = rot.shape[0]
    if dim == 1:
        return np.zeros(0)
    if dim == 2:
        return np.array([math.atan2(rot[1, 0], rot[0, 0])])
    log = scipy.linalg.logm(rot)
    skew = 0.5 * (np.real(log) - np.real(log).T)
    return skew[np.triu_indices(dim, k=1)]


# ---------------------------------------------------------------------------
# Feasible-copy sampling
# ---------------------------------------------------------------------------

def _haar_rotations(rng: np.random.Generator, count: int, dim: int,
                    special: bool) -> np.ndarray:
    """Batch of Haar rotations on O(dim), or SO(dim) when special=True."""
    gauss = rng.standard_normal((count, dim, dim))
    q = np.empty_like(gauss)
    for j in range(dim):
        v = gauss[:, :, j].copy()
        for i in range(j):
            proj = np.einsum("nd,nd->n", v, q[:, :, i])
            v -= proj[:, None] * q[:, :, i]
        norms = np.linalg.norm(v, axis=1)
        norms = np.where(norms < 1e-300, 1.0, norms)
        q[:, :, j] = v / norms[:, None]
    if special:
        det = np.linalg.det(q)
        q[det < 0, :, -1] *= -1.0
    return q


def _shrink_factors(offsets: np.ndarray, dots: np.ndarray,
                    gaps: np.ndarray) -> np.ndarray:
    """Largest g in [0, 1] with |g*t + b_i| <= r for every point i.

    offsets: |t|^2 per sample; dots: <t, b_i> per sample and point; gaps:
    |b_i|^2 - r^2 <= 0 per point.  Solves each per-point quadratic exactly.
    """
    gaps = np.minimum(gaps, 0.0)
    disc = np.sqrt(np.maximum(dots * dots - offsets[:, None] * gaps[None, :], 0.0))
    safe = np.where(offsets > 0.0, offsets, 1.0)[:, None]
    roots = (-dots + disc) / safe
    factors = np.min(roots, axis=1)
    factors = np.where(offsets > 0.0, factors, 1.0)
    return np.minimum(factors, 1.0)


def _feasible_batches(centered: np.ndarray, radius: float, n_samples: int,
                      seed: int, special: bool):
    """Yield (norms, rotations, translations) chunks of random feasible copies.

    Chunks are seeded independently via spawn keys, so the stream is
    deterministic and may be partitioned across workers by chunk index.
    """
    dim = centered.shape[1]
    gaps = np.einsum("kd,kd->k", centered, centered) - radius * radius
    n_chunks = (n_samples + _CHUNK - 1) // _CHUNK
    for chunk in range(n_chunks):
        count = min(_CHUNK, n_samples - chunk * _CHUNK)
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(chunk,)))
        rots = _haar_rotations(rng, count, dim, special)
        directions = rng.standard_normal((count, dim))
        directions /= np.maximum(np.linalg.norm(directions, axis=1), 1e-300)[:, None]
        radii = radius * rng.random(count) ** (1.0 / dim)
        t_raw = directions * radii[:, None]
        images = np.einsum("nij,kj->nki", rots, centered)
        dots = np.einsum("nd,nkd->nk", t_raw, images)
        offsets = np.einsum("nd,nd->n", t_raw, t_raw)
        factors = _shrink_factors(offsets, dots, gaps)
        translations = t_raw * factors[:, None]
        images += translations[:, None, :]
        norms = np.linalg.norm(images, axis=2)
        yield norms, rots, translations


def _prepare(problem: SpreadProblem):
    """Embed the target, center it at its enclosing-ball center."""
    emb = embed_target(problem.target, problem.ambient_dim)
    ball = min_enclosing_ball(emb)
    centered = emb.points - ball.center
    return emb, ball, centered


def _oracle_search(problem: SpreadProblem, n_samples: int, seed: int):
    if n_samples <= 0:
        raise EmptySample("oracle needs a positive sample count")
    if not embedding_feasible(problem):
        raise Infeasible(
            f"enclosing-ball radius exceeds {problem.radius}; no copy fits")
    emb, ball, centered = _prepare(problem)
    special = affine_dimension(emb) < problem.ambient_dim
    best = (math.inf, None, None)
    for norms, rots, translations in _feasible_batches(
            centered, problem.radius, n_samples, seed, special):
        spreads = norms.max(axis=1) - norms.min(axis=1)
        idx = int(np.argmin(spreads))
        if spreads[idx] < best[0]:
            best = (float(spreads[idx]), rots[idx].copy(), translations[idx].copy())
    return best, ball


def sample_spread_oracle(problem: SpreadProblem, n_samples: int,
                         seed: int = 0) -> float:
    """Minimum spread over n_samples random feasible copies.

    Always an upper bound on the true minimum; approaches 0 as the sample
    count grows whenever radius >= circumradius(target).
    """
    (value, _, _), _ = _oracle_search(problem, n_samples, seed)
    return value


# ---------------------------------------------------------------------------
# Multi-start penalized Nelder-Mead estimator
# ---------------------------------------------------------------------------

def _mirror(points: np.ndarray) -> np.ndarray:
    flipped = points.copy()
    flipped[:, -1] *= -1.0
    return flipped


def _polish(centered: np.ndarray, radius: float, theta0: np.ndarray,
            t0: np.ndarray, penalty_schedule, tolerance: float):
    """Penalty-staged Nelder-Mead from one start; returns (value, rotation, t)."""
    dim = centered.shape[1]
    n_rot = rotation_param_count(dim)
    z = np.concatenate([theta0, t0])
    n_z = z.size
    gaps = np.einsum("kd,kd->k", centered, centered) - radius * radius

    def objective(vec, mu):
        rot = _rotation_from_params(vec[:n_rot], dim)
        image = centered @ rot.T + vec[n_rot:]
        norms = np.linalg.norm(image, axis=1)
        excess = norms.max() - radius
        value = norms.max() - norms.min()
        if excess > 0.0:
            value += mu * excess * excess
        return value

    schedule = list(penalty_schedule)
    for stage, mu in enumerate(schedule):
        last = stage == len(schedule) - 1
        result = minimize(
            objective, z, args=(mu,), method="Nelder-Mead",
            options={
                "maxfev": (400 if last else 120) * n_z,
                "xatol": max(tolerance * 1e-2, 1e-12) if last else 1e-6,
                "fatol": max(tolerance * 1e-4, 1e-14) if last else 1e-9,
            })
        z = result.x
    rot = _rotation_from_params(z[:n_rot], dim)
    image = centered @ rot.T
    t_final = z[n_rot:]
    dots = np.einsum("d,kd->k", t_final, image)[None, :]
    offset = np.array([float(t_final @ t_final)])
    factor = _shrink_factors(offset, dots, gaps)[0]
    t_final = factor * t_final
    value = _spread_of(image + t_final)
    return value, rot, t_final


def estimate_c(problem: SpreadProblem, restarts: int = 64, seed: int = 0,
               penalty_schedule=DEFAULT_PENALTY_SCHEDULE,
               tolerance: float = 1e-9,
               oracle_samples: int = 0) -> SpreadEstimate:
    """Estimate the minimal spread of congruent copies of the target in the r-ball.

    Each restart runs Nelder-Mead over rotation parameters and a
    translation, through the increasing penalty schedule, then repairs
    feasibility exactly by shrinking the translation toward the origin.
    Restart i is seeded from (seed, i), so results are reproducible and
    independent of any execution parallelism.  Two deterministic anchors
    come first: the copy centered at its enclosing-ball center (always
    feasible) and, for spherical targets, the copy centered at its
    circumcenter (optimal whenever radius >= circumradius).

    With oracle_samples > 0, a sampling-oracle scan is run for the
    oracle_value diagnostic; if it beats the optimizer, its best placement
    seeds one extra polish restart.
    """
    if restarts < 1:
        raise DomainError("need at least one restart")
    if not embedding_feasible(problem):
        return SpreadEstimate(
            c_estimate=None, best_motion=None, restarts=restarts,
            oracle_value=None, feasible=False, seed=seed,
            radius=problem.radius, ambient_dim=problem.ambient_dim,
            penalty_schedule=tuple(penalty_schedule), tolerance=tolerance)

    emb, ball, centered = _prepare(problem)
    dim = problem.ambient_dim
    n_rot = rotation_param_count(dim)
    full_rank = affine_dimension(emb) == dim
    gaps = np.einsum("kd,kd->k", centered, centered) - problem.radius ** 2

    anchors = [np.zeros(dim)]
    try:
        sphere = circumsphere(emb)
        anchors.append(ball.center - sphere.center)
    except (NotSpherical, DomainError):
        pass

    mirrored_pts = _mirror(centered) if full_rank else None
    best = None  # (value, restart_index, rotation, translation, mirrored)

    def consider(value, index, rot, t_vec, mirrored):
        nonlocal best
        if math.isfinite(value) and (best is None or value < best[0]):
            best = (value, index, rot, t_vec, mirrored)

    for i in range(restarts):
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(i,)))
        mirrored = full_rank and i >= len(anchors) and (i - len(anchors)) % 2 == 1
        pts = mirrored_pts if mirrored else centered
        if i < len(anchors):
            theta0 = np.zeros(n_rot)
            t0 = anchors[i]
        else:
            theta0 = rng.uniform(-math.pi, math.pi, n_rot)
            direction = rng.standard_normal(dim)
            direction /= max(float(np.linalg.norm(direction)), 1e-300)
            t_raw = problem.radius * rng.random() ** (1.0 / dim) * direction
            rot0 = _rotation_from_params(theta0, dim)
            image0 = pts @ rot0.T
            dots = np.einsum("d,kd->k", t_raw, image0)[None, :]
            offset = np.array([float(t_raw @ t_raw)])
            t0 = _shrink_factors(offset, dots, gaps)[0] * t_raw
        value, rot, t_vec = _polish(pts, problem.radius, theta0, t0,
                                    penalty_schedule, tolerance)
        consider(value, i, rot, t_vec, mirrored)

    oracle_value = None
    if oracle_samples > 0:
        (oracle_value, o_rot, o_t), _ = _oracle_search(
            problem, oracle_samples, seed)
        if best is None or oracle_value < best[0] - 1e-6:
            mirrored = False
            if np.linalg.det(o_rot) < 0:
                mirrored = True
                o_rot = o_rot @ np.diag([1.0] * (dim - 1) + [-1.0])
            pts = _mirror(centered) if mirrored else centered
            value, rot, t_vec = _polish(
                pts, problem.radius, _params_from_rotation(o_rot), o_t,
                penalty_schedule, tolerance)
            consider(value, restarts, rot, t_vec, mirrored)

    if best is None:
        raise NonConvergence("no restart produced a feasible placement")

    value, index, rot, t_vec, mirrored = best
    effective_rot = rot @ np.diag([1.0] * (dim - 1) + [-1.0]) if mirrored else rot
    motion = RigidMotion(rotation=effective_rot,
                         translation=t_vec - effective_rot @ ball.center)
    placed = emb.points @ effective_rot.T + motion.translation
    max_norm = float(np.max(np.linalg.norm(placed, axis=1)))
    return SpreadEstimate(
        c_estimate=value, best_motion=motion, restarts=restarts,
        oracle_value=oracle_value, feasible=True, seed=seed,
        radius=problem.radius, ambient_dim=problem.ambient_dim,
        penalty_schedule=tuple(penalty_schedule), tolerance=tolerance,
        best_restart=index, max_norm=max_norm)
