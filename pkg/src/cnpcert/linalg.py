"""Hermitian matrix assembly (Gram, Pick, block Pick) and PSD certification.

Raw kernel matrices are Hermitian-symmetrized unconditionally before any
eigenvalue computation; the measured asymmetry is kept on the matrix so
reports can distinguish kernel bugs from rounding. Certification is a
three-valued verdict quantized around a tolerance, so "positive
semi-definite" stays honest under floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatch, DomainViolation, LengthMismatch, NoConvergence
from .kernels import Kernel

HERM_TOL = 1e-10   # relative asymmetry above this flags an assembly warning


class Verdict(Enum):
    PSD = "PSD"
    NOT_PSD = "NOT_PSD"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class PsdVerdict:
    """Quantized positivity verdict.

    PSD means min_eig >= -tol, NOT_PSD means min_eig < -10 tol, and the band
    in between is INCONCLUSIVE.
    """

    status: Verdict
    min_eig: float
    tol: float

    def to_json_dict(self):
        return {
            "status": self.status.value,
            "min_eig": float(self.min_eig),
            "tol": float(self.tol),
        }


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Dense complex Hermitian matrix with assembly metadata."""

    entries: np.ndarray
    scale: float          # max abs entry after symmetrization
    assembly: str         # human-readable provenance
    asymmetry: float      # max |raw - raw^H| before symmetrization

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def asym_warning(self) -> bool:
        return self.asymmetry > HERM_TOL * max(self.scale, 1e-300)


def hermitian_from_raw(raw, assembly: str = "") -> HermitianMatrix:
    raw = np.asarray(raw, dtype=complex)
    if raw.ndim != 2 or raw.shape[0] != raw.shape[1] or raw.shape[0] < 1:
        raise ValueError("expected a square matrix of dimension >= 1")
    herm = 0.5 * (raw + raw.conj().T)
    asym = float(np.max(np.abs(raw - raw.conj().T)))
    scale = float(np.max(np.abs(herm)))
    herm.setflags(write=False)
    return HermitianMatrix(herm, scale, assembly, asym)


def _point_array(pts, point_ndim: int) -> np.ndarray:
    points = getattr(pts, "points", pts)
    arr = np.asarray(list(points), dtype=complex)
    if point_ndim == 0:
        if arr.ndim != 1:
            raise ValueError("expected a flat sequence of disk points")
    else:
        if arr.ndim != 2:
            raise ValueError("expected a sequence of equal-length ball points")
    return arr


def _kernel_matrix(kernel: Kernel, points: np.ndarray) -> np.ndarray:
    n = points.shape[0]
    inside = kernel.contains(points)
    if not np.all(inside):
        where = np.flatnonzero(~np.atleast_1d(inside))[:8].tolist()
        raise DomainViolation(f"sample(s) outside the kernel domain at indices {where}")
    if kernel.point_ndim == 0:
        Z, W = points[:, None], points[None, :]
    else:
        Z, W = points[:, None, :], points[None, :, :]
    raw = np.asarray(kernel.evaluate(Z, W), dtype=complex)
    if raw.shape != (n, n):
        raw = np.broadcast_to(raw, (n, n))
    return raw


def gram(kernel: Kernel, pts) -> HermitianMatrix:
    """Gram matrix K(p_i, p_j), symmetrized; guard errors from the kernel
    evaluation propagate with the offending broadcast positions attached."""
    points = _point_array(pts, kernel.point_ndim)
    if points.shape[0] < 1:
        raise ValueError("at least one sample point is required")
    raw = _kernel_matrix(kernel, points)
    return hermitian_from_raw(raw, f"{kernel.describe()} on {points.shape[0]} samples")


def smallest_eigenvalue(m: HermitianMatrix) -> float:
    """Smallest eigenvalue of the symmetrized matrix."""
    try:
        vals = np.linalg.eigvalsh(m.entries)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"eigensolver failed on {m.n}x{m.n} matrix: {exc}") from exc
    return float(vals[0])


def psd_verdict(m: HermitianMatrix, tol: float | None = None) -> PsdVerdict:
    """Three-valued positivity verdict with bands (-tol, -10 tol)."""
    if tol is None:
        tol = 1e-9 * max(1.0, m.scale)
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    try:
        me = smallest_eigenvalue(m)
    except NoConvergence:
        return PsdVerdict(Verdict.INCONCLUSIVE, float("nan"), float(tol))
    if me >= -tol:
        status = Verdict.PSD
    elif me < -10.0 * tol:
        status = Verdict.NOT_PSD
    else:
        status = Verdict.INCONCLUSIVE
    return PsdVerdict(status, me, float(tol))


def pick_matrix(kernel: Kernel, nodes, targets) -> HermitianMatrix:
    """Entries (1 - t_i conj(t_j)) K(x_i, x_j) for interpolation data.

    Positivity of this matrix (in the usual v* M v sense) is the necessary
    solvability condition for a unit-ball multiplier hitting the targets.
    The target factor must pair holomorphically with the kernel's first
    argument; the transposed pairing would certify the conjugate-target
    problem instead, which differs once data leaves the real line.
    """
    points = _point_array(nodes, kernel.point_ndim)
    lam = np.asarray(list(targets), dtype=complex)
    if lam.ndim != 1 or lam.size != points.shape[0]:
        raise LengthMismatch(
            f"{points.shape[0]} nodes but {lam.size} target values"
        )
    if not np.all(np.isfinite(lam)):
        raise ValueError("interpolation targets must be finite")
    raw = _kernel_matrix(kernel, points)
    pick = (1.0 - lam[:, None] * np.conj(lam)[None, :]) * raw
    return hermitian_from_raw(pick, f"pick[{kernel.describe()}] on {lam.size} nodes")


def block_pick_matrix(kernel: Kernel, nodes, mats) -> HermitianMatrix:
    """n t x n t matrix with (i, j) block (I_t - W_i^T conj(W_j)) K(x_i, x_j)
    for s x t matrix targets W_i.

    Same pairing rule as pick_matrix (to which this reduces exactly for
    s = t = 1): the i-indexed target factor enters untransposed-unconjugated
    so its positivity matches solvability of the matrix interpolation
    problem. For real targets this coincides with the (I - W_i^* W_j) form.
    """
    points = _point_array(nodes, kernel.point_ndim)
    try:
        W = np.asarray(list(mats), dtype=complex)
    except ValueError as exc:
        raise DimensionMismatch(f"target matrices are ragged: {exc}") from exc
    if W.ndim != 3:
        raise DimensionMismatch("expected a sequence of equal-shape 2-D matrices")
    if W.shape[0] != points.shape[0]:
        raise LengthMismatch(f"{points.shape[0]} nodes but {W.shape[0]} matrices")
    n, _, t = W.shape
    raw = _kernel_matrix(kernel, points)
    wiwj = np.einsum("isa,jsb->ijab", W, W.conj())
    blocks = (np.eye(t) - wiwj) * raw[:, :, None, None]
    big = blocks.transpose(0, 2, 1, 3).reshape(n * t, n * t)
    return hermitian_from_raw(
        big, f"block_pick[{kernel.describe()}] {n} nodes, {W.shape[1]}x{t} targets"
    )


def matrix_to_csv(m: HermitianMatrix) -> str:
    """Rows of interleaved re,im pairs, one matrix row per line."""
    lines = []
    for row in m.entries:
        parts = []
        for v in row:
            parts.append(repr(float(v.real)))
            parts.append(repr(float(v.imag)))
        lines.append(",".join(parts))
    return "\n".join(lines) + "\n"


def matrix_to_json_dict(m: HermitianMatrix) -> dict:
    return {
        "n": m.n,
        "scale": float(m.scale),
        "assembly": m.assembly,
        "asymmetry": float(m.asymmetry),
        "entries": [
            [[float(v.real), float(v.imag)] for v in row] for row in m.entries
        ],
    }


def matrix_to_json(m: HermitianMatrix) -> str:
    return json.dumps(matrix_to_json_dict(m), sort_keys=True)
