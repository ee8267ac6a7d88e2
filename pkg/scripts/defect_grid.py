#!/usr/bin/env python3
"""Export the normalized-defect Gram matrix of a kernel descriptor as JSON
(and optionally CSV of interleaved re,im pairs) for external heatmap tools.

Usage:
    python scripts/defect_grid.py --kernel '{"kind":"szego"}' --out defect.json
    python scripts/defect_grid.py --kernel dbr_spec.json --csv defect.csv
"""

import argparse
import json
import sys

from cnpcert.cli import _load_json_arg, _parse_complex
from cnpcert.descriptors import kernel_from_json
from cnpcert.kernels import NormalizedDefect
from cnpcert.linalg import gram, matrix_to_csv, matrix_to_json_dict, psd_verdict
from cnpcert.sampling import SampleSet


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kernel", required=True, help="kernel descriptor JSON (path or inline)")
    ap.add_argument("--base", default="0", help="defect base point")
    ap.add_argument("--grid", default="6x12", help="sampling grid RADIIxANGLES")
    ap.add_argument("--rmax", type=float, default=0.9)
    ap.add_argument("--out", default=None, help="JSON output path (default: stdout)")
    ap.add_argument("--csv", default=None, help="also write CSV here")
    args = ap.parse_args()

    kernel = kernel_from_json(_load_json_arg(args.kernel))
    n_r, n_t = (int(v) for v in args.grid.lower().split("x"))
    pts = SampleSet.radial_grid(n_r, n_t, args.rmax)
    defect = NormalizedDefect(kernel, _parse_complex(args.base))
    matrix = gram(defect, pts)
    verdict = psd_verdict(matrix)

    doc = matrix_to_json_dict(matrix)
    doc["verdict"] = verdict.to_json_dict()
    doc["points"] = [[p.real, p.imag] for p in pts]
    payload = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(matrix_to_csv(matrix))
    print(
        f"defect gram {matrix.n}x{matrix.n}: {verdict.status.value} "
        f"(min_eig {verdict.min_eig:+.3e})",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
