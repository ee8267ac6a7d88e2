"""JSON (de)serialization for complex scalars, series, symbols and kernels.

Complex numbers travel as [re, im] pairs; series literals as coefficient
arrays of such pairs plus a center; kernels as trees tagged by ``kind``.
"""

from __future__ import annotations

import numpy as np

from . import families
from .dbr import ExtensionWitness, dbr_kernel
from .kernels import (
    Congruence,
    Constant,
    DruryArveson,
    Kernel,
    NormalizedDefect,
    Pullback,
    Sum,
    Szego,
    WeightedHardy,
)
from .series import PowerSeries


def complex_from_json(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    raise ValueError(f"expected a number or [re, im] pair, got {v!r}")


def complex_to_json(c: complex):
    c = complex(c)
    return [c.real, c.imag]


def series_from_json(obj: dict) -> PowerSeries:
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ValueError("series literals need a 'coeffs' array of [re, im] pairs")
    coeffs = np.asarray([complex_from_json(c) for c in obj["coeffs"]], dtype=complex)
    center = complex_from_json(obj.get("center", 0.0))
    return PowerSeries(coeffs, center)


def series_to_json(s: PowerSeries) -> dict:
    return {
        "center": complex_to_json(s.center),
        "coeffs": [complex_to_json(c) for c in s.coeffs],
    }


def _family_params(spec: dict) -> dict:
    name = spec["family"]
    params = {}
    if name in ("affine", "moebius_over"):
        params["A"] = complex_from_json(spec["A"])
        params["B"] = complex_from_json(spec["B"])
    elif name == "scaled_identity":
        params["R"] = complex_from_json(spec["R"])
    elif name == "power":
        params["k"] = int(spec["k"])
    elif name == "blaschke":
        params["zeros"] = [complex_from_json(z) for z in spec["zeros"]]
    else:
        raise ValueError(f"unknown symbol family {name!r}")
    return params


def symbol_from_json(spec: dict, order: int = families.DEFAULT_ORDER) -> PowerSeries:
    """A symbol from either a named family spec or an explicit series."""
    if not isinstance(spec, dict):
        raise ValueError("symbol spec must be a JSON object")
    if "family" in spec:
        return families.family_symbol(spec["family"], _family_params(spec), order)
    if "series" in spec:
        return series_from_json(spec["series"])
    raise ValueError("symbol spec needs either 'family' or 'series'")


def witness_from_json(
    spec, b_spec: dict, order: int = families.DEFAULT_ORDER
) -> ExtensionWitness | None:
    """Witness from a spec: None, 'shipped' (family closed form), or a series."""
    if spec is None:
        return None
    if spec == "shipped":
        if "family" not in b_spec:
            raise ValueError("'shipped' witnesses exist only for named families")
        q = families.family_witness(b_spec["family"], _family_params(b_spec), order)
        if q is None:
            raise ValueError(
                f"family {b_spec['family']!r} with these parameters has no shipped witness"
            )
        return ExtensionWitness(q)
    if isinstance(spec, dict) and "series" in spec:
        return ExtensionWitness(series_from_json(spec["series"]))
    raise ValueError("witness spec must be null, 'shipped', or {'series': ...}")


def kernel_from_json(obj: dict, order: int = families.DEFAULT_ORDER) -> Kernel:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError("kernel descriptors need a 'kind' tag")
    kind = obj["kind"]
    if kind == "szego":
        return Szego()
    if kind == "drury_arveson":
        return DruryArveson(int(obj["dim"]))
    if kind == "weighted_hardy":
        return WeightedHardy(np.asarray(obj["weights"], dtype=float))
    if kind == "dbr":
        return dbr_kernel(symbol_from_json(obj["b"], order))
    if kind == "constant":
        return Constant(float(obj["value"]))
    if kind == "sum":
        return Sum(kernel_from_json(obj["left"], order), kernel_from_json(obj["right"], order))
    if kind == "pullback":
        return Pullback(kernel_from_json(obj["inner"], order), symbol_from_json(obj["map"], order))
    if kind == "congruence":
        return Congruence(
            kernel_from_json(obj["inner"], order), symbol_from_json(obj["factor"], order)
        )
    if kind == "normalized_defect":
        inner = kernel_from_json(obj["inner"], order)
        base = obj["base"]
        if inner.point_ndim == 1:
            base = tuple(complex_from_json(c) for c in base)
        else:
            base = complex_from_json(base)
        return NormalizedDefect(inner, base)
    raise ValueError(f"unknown kernel kind {kind!r}")
