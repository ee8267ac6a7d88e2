"""Evaluable positive-kernel expressions on the unit disk and unit ball.

Leaf kernels (Szego, Drury-Arveson, weighted Hardy, de Branges-Rovnyak,
nonnegative constants) and combinators (pointwise sum, pull-back under an
analytic map, diagonal congruence, base-point normalized defect) form
immutable expression trees. ``evaluate`` broadcasts over numpy arrays so
Gram assembly vectorizes; guards raise instead of returning junk whenever an
evaluation lands within rounding distance of a singularity.

Conventions: one-variable kernels take complex scalars in the open unit
disk; Drury-Arveson points are length-d complex vectors (last array axis) in
the open unit ball. K(z, w) is holomorphic in z and anti-holomorphic in w.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainMismatch,
    DomainViolation,
    NearSingular,
    NotSchurClass,
    RangeViolation,
    VanishingKernel,
)
from .series import PowerSeries

DOM_EPS = 1e-12      # denominators below this modulus count as singular
DEFECT_EPS = 1e-12   # kernel values below this modulus count as vanishing
SCHUR_SLACK = 1e-9   # sampled sup |b| may exceed 1 by at most this much


def _guard_min_modulus(values, eps, exc_cls, what):
    mags = np.abs(np.asarray(values))
    bad = mags < eps
    if np.any(bad):
        where = np.argwhere(np.atleast_1d(bad))[:4].tolist()
        raise exc_cls(f"{what} below {eps:g} in modulus at positions {where}")


def unit_ball_probe(
    b: PowerSeries, n_radii: int = 32, n_angles: int = 64, r_max: float = 0.99
) -> float:
    """Sampled sup of |b| over a polar grid of the disk.

    A cheap necessary check for membership in the closed unit ball of bounded
    analytic functions; returns inf when an evaluation overflows.
    """
    radii = r_max * (np.arange(1, n_radii + 1) / n_radii)
    angles = 2.0 * np.pi * np.arange(n_angles) / n_angles
    zs = np.outer(radii, np.exp(1j * angles)).ravel()
    vals = np.abs(b(zs))
    if not np.all(np.isfinite(vals)):
        return float("inf")
    return float(vals.max())


class Kernel:
    """Base class for kernel expression nodes."""

    def domain(self):
        """("disk",), ("ball", d), or None for domain-agnostic nodes."""
        return ("disk",)

    @property
    def point_ndim(self) -> int:
        dom = self.domain()
        return 1 if dom is not None and dom[0] == "ball" else 0

    def evaluate(self, z, w):
        raise NotImplementedError

    def contains(self, pts) -> np.ndarray:
        """Boolean mask of points inside the open domain."""
        arr = np.asarray(pts, dtype=complex)
        if self.point_ndim == 0:
            return np.abs(arr) < 1.0
        return np.sum(np.abs(arr) ** 2, axis=-1) < 1.0

    def describe(self) -> str:
        return type(self).__name__.lower()


@dataclass(frozen=True)
class Szego(Kernel):
    """K(z, w) = 1 / (1 - conj(w) z) on the unit disk."""

    def evaluate(self, z, w):
        den = 1.0 - np.conj(np.asarray(w, complex)) * np.asarray(z, complex)
        _guard_min_modulus(den, DOM_EPS, NearSingular, "Szego denominator")
        return 1.0 / den

    def describe(self):
        return "szego"


@dataclass(frozen=True)
class DruryArveson(Kernel):
    """K(z, w) = 1 / (1 - <z, w>) on the unit ball of C^dim."""

    dim: int

    def __post_init__(self):
        if int(self.dim) < 1:
            raise ValueError("Drury-Arveson dimension must be >= 1")
        object.__setattr__(self, "dim", int(self.dim))

    def domain(self):
        return ("ball", self.dim)

    def evaluate(self, z, w):
        inner = np.sum(np.asarray(z, complex) * np.conj(np.asarray(w, complex)), axis=-1)
        den = 1.0 - inner
        _guard_min_modulus(den, DOM_EPS, NearSingular, "Drury-Arveson denominator")
        return 1.0 / den

    def describe(self):
        return f"drury_arveson(d={self.dim})"


@dataclass(frozen=True, eq=False)
class WeightedHardy(Kernel):
    """K(z, w) = sum_n (z conj(w))^n / weights[n], truncated at len(weights).

    Weights must be strictly positive. ``log_concave`` records whether
    weights[n]^2 >= weights[n-1] * weights[n+1] holds at every stored index.
    """

    weights: np.ndarray

    def __post_init__(self):
        arr = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("weights must form a non-empty 1-D sequence")
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
            raise ValueError("weights must be finite and strictly positive")
        arr.setflags(write=False)
        object.__setattr__(self, "weights", arr)
        lc = bool(np.all(arr[1:-1] ** 2 >= arr[:-2] * arr[2:])) if arr.size >= 3 else True
        object.__setattr__(self, "log_concave", lc)

    def evaluate(self, z, w):
        t = np.asarray(z, complex) * np.conj(np.asarray(w, complex))
        recip = 1.0 / self.weights
        acc = np.full(t.shape, recip[-1], dtype=complex)
        for c in recip[-2::-1]:
            acc = acc * t + c
        return acc

    def describe(self):
        return f"weighted_hardy(n={self.weights.size})"


@dataclass(frozen=True)
class DeBrangesRovnyak(Kernel):
    """K(z, w) = (1 - conj(b(w)) b(z)) / (1 - conj(w) z) for a symbol b.

    Construction runs the sampled unit-ball probe on the symbol and refuses
    symbols whose sampled sup modulus exceeds 1 beyond rounding slack.
    """

    symbol: PowerSeries

    def __post_init__(self):
        if self.symbol.center != 0:
            raise ValueError("de Branges-Rovnyak symbols must be centered at 0")
        sup = unit_ball_probe(self.symbol)
        if sup > 1.0 + SCHUR_SLACK:
            raise NotSchurClass(
                f"sampled sup |b| = {sup:.6g} exceeds 1; the symbol is outside "
                "the closed unit ball of bounded analytic functions"
            )

    def evaluate(self, z, w):
        zz = np.asarray(z, complex)
        ww = np.asarray(w, complex)
        den = 1.0 - np.conj(ww) * zz
        _guard_min_modulus(den, DOM_EPS, NearSingular, "de Branges-Rovnyak denominator")
        return (1.0 - np.conj(self.symbol(ww)) * self.symbol(zz)) / den

    def describe(self):
        return f"dbr(order={self.symbol.order})"


@dataclass(frozen=True)
class Constant(Kernel):
    """K(z, w) = value, a nonnegative real; domain-agnostic."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not np.isfinite(v) or v < 0.0:
            raise ValueError("constant kernels must have a finite nonnegative value")
        object.__setattr__(self, "value", v)

    def domain(self):
        return None

    def evaluate(self, z, w):
        return complex(self.value)

    def describe(self):
        return f"constant({self.value:g})"


def _unify_domains(left: Kernel, right: Kernel):
    dl, dr = left.domain(), right.domain()
    if dl is not None and dr is not None and dl != dr:
        raise DomainMismatch(f"kernel domains differ: {dl} vs {dr}")
    return dl or dr


@dataclass(frozen=True)
class Sum(Kernel):
    """Pointwise sum of two kernels on a common domain."""

    left: Kernel
    right: Kernel

    def __post_init__(self):
        _unify_domains(self.left, self.right)

    def domain(self):
        return self.left.domain() or self.right.domain() or ("disk",)

    def evaluate(self, z, w):
        return self.left.evaluate(z, w) + self.right.evaluate(z, w)

    def describe(self):
        return f"sum({self.left.describe()}, {self.right.describe()})"


@dataclass(frozen=True)
class Pullback(Kernel):
    """(z, w) -> K(map(z), map(w)) for an analytic self-map of the disk."""

    inner: Kernel
    map: PowerSeries

    def __post_init__(self):
        if self.inner.domain() not in (None, ("disk",)):
            raise DomainMismatch("pull-backs are defined for disk kernels only")

    def evaluate(self, z, w):
        mz = np.asarray(self.map(z), complex)
        mw = np.asarray(self.map(w), complex)
        for name, arr in (("z", mz), ("w", mw)):
            inside = self.inner.contains(arr)
            if not np.all(inside):
                where = np.argwhere(~np.atleast_1d(inside))[:4].tolist()
                raise RangeViolation(
                    f"pull-back map leaves the kernel domain on argument {name} "
                    f"at positions {where}"
                )
        return self.inner.evaluate(mz, mw)

    def describe(self):
        return f"pullback({self.inner.describe()})"


@dataclass(frozen=True)
class Congruence(Kernel):
    """(z, w) -> factor(z) conj(factor(w)) K(z, w); preserves positivity."""

    inner: Kernel
    factor: PowerSeries

    def __post_init__(self):
        if self.inner.domain() not in (None, ("disk",)):
            raise DomainMismatch("congruences are defined for disk kernels only")

    def evaluate(self, z, w):
        fz = np.asarray(self.factor(z), complex)
        fw = np.asarray(self.factor(w), complex)
        return fz * np.conj(fw) * self.inner.evaluate(z, w)

    def describe(self):
        return f"congruence({self.inner.describe()})"


@dataclass(frozen=True, eq=False)
class NormalizedDefect(Kernel):
    """D(z, w) = 1 - K(z, base) K(base, w) / (K(base, base) K(z, w)).

    Positivity of this defect over every finite sample is the normalized
    criterion the certifier tests. Construction requires K(base, base) to be
    real and bounded away from zero; evaluation raises ``VanishingKernel``
    whenever any of the kernel values entering the quotient is numerically
    zero, since the criterion is meaningless for vanishing kernels.
    """

    inner: Kernel
    base: object

    def __post_init__(self):
        if self.inner.point_ndim == 0:
            base = complex(self.base)
        else:
            base = tuple(complex(c) for c in self.base)
        if not np.all(self.inner.contains(np.asarray(base, complex))):
            raise DomainViolation("defect base point lies outside the kernel domain")
        object.__setattr__(self, "base", base)
        kbb = complex(np.asarray(self.inner.evaluate(
            np.asarray(base, complex), np.asarray(base, complex)), complex))
        if abs(kbb.imag) > 1e-10 * max(1.0, abs(kbb)) or kbb.real <= DEFECT_EPS:
            raise VanishingKernel(
                f"K(base, base) = {kbb:.6g} is not real and positive"
            )
        object.__setattr__(self, "_kbb", kbb.real)

    def domain(self):
        return self.inner.domain()

    def evaluate(self, z, w):
        base = np.asarray(self.base, complex)
        kzb = np.asarray(self.inner.evaluate(z, base), complex)
        kbw = np.asarray(self.inner.evaluate(base, w), complex)
        kzw = np.asarray(self.inner.evaluate(z, w), complex)
        _guard_min_modulus(kzb, DEFECT_EPS, VanishingKernel, "K(z, base)")
        _guard_min_modulus(kbw, DEFECT_EPS, VanishingKernel, "K(base, w)")
        _guard_min_modulus(kzw, DEFECT_EPS, VanishingKernel, "K(z, w)")
        return 1.0 - kzb * kbw / (self._kbb * kzw)

    def describe(self):
        return f"defect({self.inner.describe()})"


def kernel_eval(kernel: Kernel, z, w):
    """Evaluate K(z, w) after checking both arguments lie in the domain.

    Scalars in, scalar out; numpy arrays broadcast. Constant kernels return a
    scalar regardless of input shape.
    """
    zz = np.asarray(z, dtype=complex)
    ww = np.asarray(w, dtype=complex)
    for name, arr in (("z", zz), ("w", ww)):
        inside = kernel.contains(arr)
        if not np.all(inside):
            where = np.argwhere(~np.atleast_1d(inside))[:4].tolist()
            raise DomainViolation(
                f"argument {name} outside the kernel domain at positions {where}"
            )
    out = np.asarray(kernel.evaluate(zz, ww), dtype=complex)
    if out.ndim == 0:
        return complex(out)
    return out
