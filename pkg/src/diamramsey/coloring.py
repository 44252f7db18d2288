"""Shell colourings of the ball and monochromatic-copy searches.

Points are coloured by which concentric shell of width c they fall in,
colour(x) = floor(|x| / c), so a ball of radius r needs k = floor(r/c) + 1
colours and any two points whose norms differ by at least c get different
colours.  The falsifier samples random congruent copies of a target inside
the ball (same sampler as the spread oracle) and counts monochromatic ones;
the finder does exact backtracking on small coloured sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, DomainError, Infeasible
from .geometry import Configuration, affine_dimension, diameter, distance_matrix
from .spread import SpreadProblem, _feasible_batches, _prepare, embedding_feasible

FINDER_BUDGET = 20


def shell_color(point, c: float) -> int:
    """Index of the width-c shell containing the point: floor(|x| / c)."""
    if c <= 0:
        raise DomainError("shell width must be positive")
    norm = float(np.linalg.norm(np.asarray(point, dtype=float)))
    return int(math.floor(norm / c))


def num_colors(r: float, c: float) -> int:
    """Colours needed for the radius-r ball under width-c shells: floor(r/c) + 1."""
    if r <= 0 or c <= 0:
        raise DomainError("radius and shell width must be positive")
    return int(math.floor(r / c)) + 1


@dataclass(frozen=True)
class ShellColoring:
    """A shell colouring of B(0, radius) with shells of width shell_width."""

    shell_width: float
    radius: float
    num_colors: int = 0

    def __post_init__(self):
        object.__setattr__(self, "num_colors",
                           num_colors(self.radius, self.shell_width))

    def color(self, point) -> int:
        return shell_color(point, self.shell_width)


@dataclass(frozen=True, eq=False)
class ColoredConfiguration:
    """A configuration together with one colour index per point."""

    configuration: Configuration
    colors: tuple

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        if len(colors) != len(self.configuration):
            raise DomainError("need exactly one colour per point")
        if any(c < 0 for c in colors):
            raise DomainError("colours must be nonnegative integers")
        object.__setattr__(self, "colors", colors)


def color_configuration(config: Configuration, c: float) -> ColoredConfiguration:
    """Apply the shell colouring pointwise."""
    if c <= 0:
        raise DomainError("shell width must be positive")
    norms = np.linalg.norm(config.points, axis=1)
    colors = tuple(int(v) for v in np.floor(norms / c).astype(int))
    return ColoredConfiguration(configuration=config, colors=colors)


@dataclass(frozen=True)
class FalsifyReport:
    """Outcome of a Monte-Carlo hunt for monochromatic congruent copies.

    A nonzero monochromatic_count means the shell width exceeds the true
    minimal spread for this target and radius.  This is evidence, not
    proof: the true statement quantifies over uncountably many copies.
    """

    radius: float
    shell_width: float
    num_colors: int
    n_samples: int
    seed: int
    monochromatic_count: int
    min_spread: float | None
    min_color_span: int | None
    vacuous: bool

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "shell_width": self.shell_width,
            "num_colors": self.num_colors,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "monochromatic_count": self.monochromatic_count,
            "min_spread": self.min_spread,
            "min_color_span": self.min_color_span,
            "vacuous": self.vacuous,
        }


def falsify_coloring(target: Configuration, r: float, c: float,
                     n_samples: int, seed: int = 0) -> FalsifyReport:
    """Sample congruent copies of the target in B(0, r); count monochromatic ones.

    Uses the same feasible-copy sampler as the spread oracle, so reports are
    reproducible from the seed.  n_samples = 0 yields a vacuous report.
    """
    k = num_colors(r, c)
    problem = SpreadProblem(target=target, radius=r)
    if not embedding_feasible(problem):
        raise Infeasible(f"no congruent copy of the target fits in radius {r}")
    if n_samples <= 0:
        return FalsifyReport(radius=r, shell_width=c, num_colors=k,
                             n_samples=0, seed=seed, monochromatic_count=0,
                             min_spread=None, min_color_span=None, vacuous=True)
    emb, _, centered = _prepare(problem)
    special = affine_dimension(emb) < problem.ambient_dim
    mono = 0
    min_spread = math.inf
    min_span = None
    for norms, _, _ in _feasible_batches(centered, r, n_samples, seed, special):
        shells = np.floor(norms / c).astype(int)
        spans = shells.max(axis=1) - shells.min(axis=1)
        mono += int(np.sum(spans == 0))
        spreads = norms.max(axis=1) - norms.min(axis=1)
        min_spread = min(min_spread, float(spreads.min()))
        chunk_span = int(spans.min())
        min_span = chunk_span if min_span is None else min(min_span, chunk_span)
    return FalsifyReport(radius=r, shell_width=c, num_colors=k,
                         n_samples=n_samples, seed=seed,
                         monochromatic_count=mono, min_spread=min_spread,
                         min_color_span=min_span, vacuous=False)


def find_monochromatic_copy(colored: ColoredConfiguration,
                            target: Configuration,
                            tol: float | None = None):
    """Indices of a single-colour subset congruent to the target, or None.

    Exact backtracking over same-colour point assignments, pruning on
    pairwise distance agreement within tol (default 1e-6 * diam(target)).
    Limited to |B| <= 20; larger sets raise BudgetExceeded.
    """
    host = colored.configuration
    n_host = len(host)
    if n_host > FINDER_BUDGET:
        raise BudgetExceeded(f"host set has {n_host} points; budget is {FINDER_BUDGET}")
    k = len(target)
    if k > n_host:
        return None
    if tol is None:
        tol = 1e-6 * diameter(target)
        if tol <= 0:
            tol = 1e-9
    dist_t = distance_matrix(target)
    dist_h = distance_matrix(host)

    by_color: dict[int, list[int]] = {}
    for idx, col in enumerate(colored.colors):
        by_color.setdefault(col, []).append(idx)

    for indices in by_color.values():
        if len(indices) < k:
            continue
        chosen: list[int] = []

        def backtrack(step: int) -> bool:
            if step == k:
                return True
            for cand in indices:
                if cand in chosen:
                    continue
                if all(abs(dist_h[cand, chosen[j]] - dist_t[step, j]) <= tol
                       for j in range(step)):
                    chosen.append(cand)
                    if backtrack(step + 1):
                        return True
                    chosen.pop()
            return False

        if backtrack(0):
            return tuple(chosen)
    return None
