#!/usr/bin/env python3
"""Sweep the two rational symbol families over admissible parameter grids and
tabulate criterion margins and defect eigenvalue floors.

Family 1: (z + A)/B with |A| + 1 <= |B| (witness: the constant 1/B).
Family 2: A z/(z + B) with |A| >= 1 and |A| + 1 <= |B| (witness: (A - z)/B).

Usage:
    python scripts/family_sweep.py [--n 5] [--seed 20210]
"""

import argparse
import sys

import numpy as np

from cnpcert.cnp import cnp_certify
from cnpcert.dbr import ExtensionWitness, cnp_criterion, dbr_kernel
from cnpcert.families import affine_symbol, family_witness, moebius_over_symbol
from cnpcert.sampling import SampleSet


def sweep(name, a_values, scales, build, witness, pts):
    print(f"\n{name}: {len(a_values)}x{len(scales)} admissible grid")
    print(f"{'A':>12s} {'|B|':>7s} {'sp_margin':>11s} {'ext_margin':>11s} {'min_eig':>11s} overall")
    worst_ext, worst_eig = np.inf, 0.0
    for A in a_values:
        for s in scales:
            B = s * (abs(A) + 1.0)
            b = build(A, B)
            w = ExtensionWitness(witness(A, B))
            rep = cnp_criterion(b, w, pts)
            cert = cnp_certify(dbr_kernel(b), 0j, pts)
            worst_ext = min(worst_ext, rep.extension_margin)
            worst_eig = min(worst_eig, cert.verdict.min_eig)
            print(
                f"{A!s:>12s} {abs(B):>7.3f} {rep.schwarz_pick_margin:>11.3e} "
                f"{rep.extension_margin:>11.3e} {cert.verdict.min_eig:>11.3e} "
                f"{rep.overall.value}"
            )
    print(f"worst extension margin {worst_ext:+.3e}, worst min_eig {worst_eig:+.3e}")
    return worst_ext, worst_eig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=20210, help="sampling seed")
    args = ap.parse_args()
    pts = SampleSet.default(seed=args.seed)

    ok = True
    ext, eig = sweep(
        "affine (z+A)/B",
        [0, 0.2, -0.35, 0.25 + 0.25j, -0.4j],
        [1.0, 1.2, 1.5, 2.0, 3.0],
        affine_symbol,
        lambda A, B: family_witness("affine", {"A": A, "B": B}),
        pts,
    )
    ok &= ext >= -1e-9 and eig >= -1e-8
    ext, eig = sweep(
        "moebius A z/(z+B)",
        [1.0, -1.25, 1.5j, 1.2 + 0.9j, 2.0],
        [1.0, 1.25, 1.5, 2.0, 2.5],
        moebius_over_symbol,
        lambda A, B: family_witness("moebius_over", {"A": A, "B": B}),
        pts,
    )
    ok &= ext >= -1e-9 and eig >= -1e-8
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
