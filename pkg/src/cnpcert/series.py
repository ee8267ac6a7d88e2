"""Truncated complex power series about an arbitrary center.

A series is a dense coefficient vector: ``coeffs[n]`` multiplies
``(z - center)**n`` for n from 0 up to the truncation order (inclusive).
Coefficients are numpy complex128, every operation is pure and returns a new
series, and nothing here tracks radii of convergence; callers are expected to
evaluate well inside the region where their coefficients decay.

Truncation rules are fixed: binary arithmetic requires equal centers and
truncates to the shorter operand; composition truncates to the shorter of the
two orders; reversion and division keep the input order (division loses the
cancelled leading order). Reversion uses Newton iteration on the shifted
coefficient vector, doubling the number of correct coefficients per step.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CenterMismatch, CompositionCenter, DivisionOrder, NonInvertible

REV_EPS = 1e-10   # linear coefficients at or below this are not invertible
DIV_EPS = 1e-12   # modulus threshold for leading-order detection in division
_CENTER_TOL = 1e-12


def _coeff_array(coeffs) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("coefficients must form a non-empty 1-D sequence")
    if not np.all(np.isfinite(arr)):
        raise ValueError("series coefficients must be finite")
    return arr


def _mul_trunc(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    """Cauchy product of two coefficient vectors, truncated at ``order``."""
    out = np.convolve(a[: order + 1], b[: order + 1])[: order + 1]
    if out.size < order + 1:
        out = np.pad(out, (0, order + 1 - out.size))
    return out


def _reciprocal(u: np.ndarray, order: int) -> np.ndarray:
    """Coefficients of 1/u through ``order``; u[0] must be nonzero."""
    uu = u[: order + 1]
    if uu.size < order + 1:
        uu = np.pad(uu, (0, order + 1 - uu.size))
    r = np.zeros(order + 1, dtype=complex)
    r[0] = 1.0 / uu[0]
    for k in range(1, order + 1):
        r[k] = -np.dot(uu[1 : k + 1], r[k - 1 :: -1]) / uu[0]
    return r


def _compose_zero(outer: np.ndarray, inner: np.ndarray, order: int) -> np.ndarray:
    """Horner composition outer(inner) through ``order``; inner[0] must be 0."""
    oc = np.zeros(order + 1, dtype=complex)
    m = min(outer.size, order + 1)
    oc[:m] = outer[:m]
    acc = np.zeros(order + 1, dtype=complex)
    acc[0] = oc[order]
    for k in range(order - 1, -1, -1):
        acc = _mul_trunc(acc, inner, order)
        acc[0] += oc[k]
    return acc


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Immutable truncated power series about ``center``."""

    coeffs: np.ndarray
    center: complex = 0j

    def __post_init__(self):
        arr = _coeff_array(self.coeffs)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        c = complex(self.center)
        if not (np.isfinite(c.real) and np.isfinite(c.imag)):
            raise ValueError("series center must be finite")
        object.__setattr__(self, "center", c)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def constant(cls, value, order: int = 0, center: complex = 0j) -> "PowerSeries":
        coeffs = np.zeros(order + 1, dtype=complex)
        coeffs[0] = value
        return cls(coeffs, center)

    @classmethod
    def identity(cls, order: int = 1, center: complex = 0j) -> "PowerSeries":
        """The series of f(z) = z about ``center``."""
        coeffs = np.zeros(order + 1, dtype=complex)
        coeffs[0] = center
        if order >= 1:
            coeffs[1] = 1.0
        return cls(coeffs, center)

    # -- basic protocol --------------------------------------------------------

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __repr__(self):
        return f"PowerSeries(order={self.order}, center={self.center!r})"

    def __call__(self, z):
        """Horner evaluation; broadcasts over numpy arrays.

        Never raises on overflow, the result is simply non-finite.
        """
        u = np.asarray(z, dtype=complex) - self.center
        acc = np.full(u.shape, self.coeffs[-1])
        with np.errstate(over="ignore", invalid="ignore"):
            for c in self.coeffs[-2::-1]:
                acc = acc * u + c
        if acc.ndim == 0:
            return complex(acc)
        return acc

    def pad_to(self, order: int) -> "PowerSeries":
        """Extend with zero coefficients up to ``order``."""
        if order < self.order:
            raise ValueError("pad_to cannot shrink a series; use truncate")
        out = np.zeros(order + 1, dtype=complex)
        out[: self.coeffs.size] = self.coeffs
        return PowerSeries(out, self.center)

    def truncate(self, order: int) -> "PowerSeries":
        if order >= self.order:
            return self
        return PowerSeries(self.coeffs[: order + 1], self.center)

    # -- arithmetic ------------------------------------------------------------

    def _check_center(self, other: "PowerSeries"):
        if abs(other.center - self.center) > _CENTER_TOL * (1.0 + abs(self.center)):
            raise CenterMismatch(
                f"series centers differ: {self.center!r} vs {other.center!r}"
            )

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_center(other)
        n = min(self.order, other.order)
        return PowerSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1], self.center)

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_center(other)
        n = min(self.order, other.order)
        return PowerSeries(self.coeffs[: n + 1] - other.coeffs[: n + 1], self.center)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_center(other)
        n = min(self.order, other.order)
        return PowerSeries(_mul_trunc(self.coeffs, other.coeffs, n), self.center)

    def __neg__(self):
        return PowerSeries(-self.coeffs, self.center)

    # -- composition and inversion ----------------------------------------------

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """Return self(inner(z)) as a series about ``inner.center``.

        inner's constant term must equal this series' center, so the
        composition is valid as a formal-series operation. The result is
        truncated to the shorter of the two orders.
        """
        if abs(inner.coeffs[0] - self.center) > _CENTER_TOL * (1.0 + abs(self.center)):
            raise CompositionCenter(
                f"inner constant term {inner.coeffs[0]!r} does not match "
                f"outer center {self.center!r}"
            )
        n = min(self.order, inner.order)
        t = inner.coeffs[: n + 1].astype(complex)
        t[0] = 0.0
        return PowerSeries(_compose_zero(self.coeffs, t, n), inner.center)

    def revert(self, rev_eps: float = REV_EPS) -> "PowerSeries":
        """Compositional inverse: a series g centered at coeffs[0] with
        g(self(z)) = z through the truncation order.

        Requires a linear coefficient of modulus above ``rev_eps``; a smaller
        one means the map is not invertible near its center.
        """
        if self.order < 1 or abs(self.coeffs[1]) <= rev_eps:
            raise NonInvertible(
                "linear coefficient too small for functional inversion "
                f"(threshold {rev_eps:g})"
            )
        n = self.order
        t = self.coeffs.astype(complex).copy()
        a0 = t[0]
        t[0] = 0.0
        tp = np.arange(1, n + 1) * t[1:]  # derivative of the shifted series
        g = np.zeros(n + 1, dtype=complex)
        g[1] = 1.0 / t[1]
        m = 1
        while m < n:
            m_next = min(2 * m + 1, n)
            gg = g[: m_next + 1]
            tg = _compose_zero(t, gg, m_next)
            tg[1] -= 1.0  # residual of t(g(w)) - w
            tpg = _compose_zero(tp, gg, m_next)
            g[: m_next + 1] = gg - _mul_trunc(tg, _reciprocal(tpg, m_next), m_next)
            m = m_next
        coeffs = np.concatenate(([self.center], g[1:]))
        return PowerSeries(coeffs, center=a0)


def divide(num: PowerSeries, den: PowerSeries, div_eps: float = DIV_EPS) -> PowerSeries:
    """Formal quotient num/den with their common leading zero cancelled.

    The leading order of a series is the index of its first coefficient of
    modulus above ``div_eps``. The denominator's leading order may not exceed
    the numerator's (the quotient would have a pole). The result is truncated
    to min(order(num), order(den)) minus the cancelled order.
    """
    num._check_center(den)
    dmag = np.abs(den.coeffs)
    nz = np.flatnonzero(dmag > div_eps)
    if nz.size == 0:
        raise DivisionOrder("denominator vanishes to its truncation order")
    ord_d = int(nz[0])
    nmag = np.abs(num.coeffs)
    nnz = np.flatnonzero(nmag > div_eps)
    ord_n = int(nnz[0]) if nnz.size else None
    if ord_n is not None and ord_n < ord_d:
        raise DivisionOrder(
            f"quotient has a pole: denominator leading order {ord_d} exceeds "
            f"numerator leading order {ord_n}"
        )
    n_res = min(num.order, den.order) - ord_d
    if n_res < 0:
        raise DivisionOrder("denominator leading order exceeds the truncation order")
    nn = num.coeffs[ord_d:]
    if nn.size < n_res + 1:
        nn = np.pad(nn, (0, n_res + 1 - nn.size))
    dd = den.coeffs[ord_d:]
    q = _mul_trunc(nn, _reciprocal(dd, n_res), n_res)
    return PowerSeries(q, num.center)
