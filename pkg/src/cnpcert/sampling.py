"""Reproducible finite sample sets in the unit disk and unit ball."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_SEED = 20210
DEFAULT_GRID = (6, 12)
DEFAULT_RMAX = 0.9
DEFAULT_RANDOM = 8
MIN_SEPARATION = 1e-8


@dataclass(frozen=True)
class SampleSet:
    """Finite set of pairwise-distinct points in the open unit disk."""

    points: tuple
    gen: str = "explicit"

    def __post_init__(self):
        pts = tuple(complex(p) for p in self.points)
        arr = np.asarray(pts, dtype=complex)
        if arr.size and not np.all(np.isfinite(arr)):
            raise ValueError("sample points must be finite")
        if arr.size and np.max(np.abs(arr)) >= 1.0:
            raise ValueError("sample points must lie strictly inside the unit disk")
        if arr.size >= 2:
            diff = np.abs(arr[:, None] - arr[None, :]) + np.eye(arr.size)
            if diff.min() < MIN_SEPARATION:
                raise ValueError(
                    f"sample points closer than {MIN_SEPARATION:g} are not allowed"
                )
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def extended(self, extra, label: str = "+extra") -> "SampleSet":
        """Append points, silently dropping near-duplicates of existing ones."""
        pts = list(self.points)
        for p in extra:
            p = complex(p)
            if all(abs(p - q) >= MIN_SEPARATION for q in pts):
                pts.append(p)
        return SampleSet(tuple(pts), gen=self.gen + label)

    @classmethod
    def radial_grid(cls, n_r: int, n_theta: int, r_max: float = DEFAULT_RMAX) -> "SampleSet":
        if n_r < 1 or n_theta < 1 or not (0.0 < r_max < 1.0):
            raise ValueError("radial grid needs n_r, n_theta >= 1 and 0 < r_max < 1")
        radii = r_max * (np.arange(1, n_r + 1) / n_r)
        angles = 2.0 * np.pi * np.arange(n_theta) / n_theta
        pts = np.outer(radii, np.exp(1j * angles)).ravel()
        return cls(tuple(pts), gen=f"radial_grid({n_r}x{n_theta}, rmax={r_max:g})")

    @classmethod
    def random_disk(
        cls,
        count: int,
        r_max: float = DEFAULT_RMAX,
        seed: int = DEFAULT_SEED,
        min_radius: float = 1e-3,
    ) -> "SampleSet":
        rng = np.random.default_rng(seed)
        pts: list = []
        while len(pts) < count:
            r = r_max * np.sqrt(rng.uniform())
            p = r * np.exp(2j * np.pi * rng.uniform())
            if abs(p) < min_radius:
                continue
            if any(abs(p - q) < MIN_SEPARATION for q in pts):
                continue
            pts.append(complex(p))
        return cls(tuple(pts), gen=f"random({count}, rmax={r_max:g}, seed={seed})")

    @classmethod
    def default(
        cls,
        seed: int = DEFAULT_SEED,
        grid: tuple = DEFAULT_GRID,
        r_max: float = DEFAULT_RMAX,
        n_random: int = DEFAULT_RANDOM,
    ) -> "SampleSet":
        """Radial grid plus a few seeded random points.

        The grid alone misses structure that only shows up off the angular
        lattice, so a sprinkle of random points is kept in the default.
        """
        base = cls.radial_grid(grid[0], grid[1], r_max)
        extra = cls.random_disk(n_random, r_max, seed) if n_random else cls((),)
        return base.extended(extra.points, label=f"+random({n_random}, seed={seed})")

    @classmethod
    def explicit(cls, points) -> "SampleSet":
        return cls(tuple(points), gen="explicit")


def ball_points(count: int, dim: int, r_max: float = DEFAULT_RMAX, seed: int = DEFAULT_SEED):
    """Uniform-ish random points in the radius-``r_max`` ball of C^dim."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        v = v / np.linalg.norm(v)
        r = r_max * rng.uniform() ** (1.0 / (2 * dim))
        out.append(tuple(r * v))
    return out
