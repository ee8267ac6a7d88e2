"""Named symbol families shipped with the gallery and CLI.

Each family is a simple rational self-map of the disk given by one or two
constants, together with (where the construction provides one) the
closed-form witness series for the criterion's extension check:

  affine           (z + A) / B, inside the unit ball iff |A| + 1 <= |B|;
                   inverse B z - A, witness the constant 1 / B.
  moebius_over     A z / (z + B), |A| >= 1 keeps the inverse holomorphic;
                   inverse B z / (A - z), witness (A - z) / B.
  scaled_identity  z / R; inverse R z, witness the constant 1 / R.
  power            z^k; invertible only for k = 1 (witness 1).
  blaschke         finite Blaschke product with the given zeros; only the
                   degree-1 case has a witness, 1 + conj(z0) z, and there the
                   modulus inequality holds with equality.
"""

from __future__ import annotations

import numpy as np

from .pickinterp import blaschke_product
from .series import PowerSeries

DEFAULT_ORDER = 64


def affine_symbol(A, B, order: int = DEFAULT_ORDER) -> PowerSeries:
    A, B = complex(A), complex(B)
    if B == 0:
        raise ValueError("affine family requires B != 0")
    coeffs = np.zeros(order + 1, dtype=complex)
    coeffs[0] = A / B
    if order >= 1:
        coeffs[1] = 1.0 / B
    return PowerSeries(coeffs, 0j)


def moebius_over_symbol(A, B, order: int = DEFAULT_ORDER) -> PowerSeries:
    A, B = complex(A), complex(B)
    if B == 0:
        raise ValueError("moebius_over family requires B != 0")
    coeffs = np.zeros(order + 1, dtype=complex)
    if order >= 1:
        n = np.arange(1, order + 1)
        coeffs[1:] = -A * (-1.0 / B) ** n
    return PowerSeries(coeffs, 0j)


def scaled_identity_symbol(R, order: int = DEFAULT_ORDER) -> PowerSeries:
    R = complex(R)
    if R == 0:
        raise ValueError("scaled_identity family requires R != 0")
    coeffs = np.zeros(order + 1, dtype=complex)
    if order >= 1:
        coeffs[1] = 1.0 / R
    return PowerSeries(coeffs, 0j)


def power_symbol(k: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    k = int(k)
    if k < 1:
        raise ValueError("power family requires exponent k >= 1")
    coeffs = np.zeros(max(order, k) + 1, dtype=complex)
    coeffs[k] = 1.0
    return PowerSeries(coeffs[: order + 1] if order >= k else coeffs, 0j)


def blaschke_symbol(zeros, order: int = DEFAULT_ORDER) -> PowerSeries:
    return blaschke_product(zeros, order)


FAMILY_BUILDERS = {
    "affine": lambda p, order: affine_symbol(p["A"], p["B"], order),
    "moebius_over": lambda p, order: moebius_over_symbol(p["A"], p["B"], order),
    "scaled_identity": lambda p, order: scaled_identity_symbol(p["R"], order),
    "power": lambda p, order: power_symbol(p["k"], order),
    "blaschke": lambda p, order: blaschke_symbol(p["zeros"], order),
}


def family_symbol(name: str, params: dict, order: int = DEFAULT_ORDER) -> PowerSeries:
    if name not in FAMILY_BUILDERS:
        raise ValueError(f"unknown symbol family {name!r}")
    return FAMILY_BUILDERS[name](params, order)


def family_witness(name: str, params: dict, order: int = DEFAULT_ORDER) -> PowerSeries | None:
    """Closed-form witness series for the family, or None when there is none."""
    if name == "affine":
        return PowerSeries.constant(1.0 / complex(params["B"]))
    if name == "moebius_over":
        A, B = complex(params["A"]), complex(params["B"])
        return PowerSeries(np.array([A / B, -1.0 / B]), 0j)
    if name == "scaled_identity":
        return PowerSeries.constant(1.0 / complex(params["R"]))
    if name == "power":
        return PowerSeries.constant(1.0) if int(params["k"]) == 1 else None
    if name == "blaschke":
        zeros = [complex(z) for z in params["zeros"]]
        if len(zeros) == 1:
            return PowerSeries(np.array([1.0, np.conj(zeros[0])]), 0j)
        return None
    raise ValueError(f"unknown symbol family {name!r}")
