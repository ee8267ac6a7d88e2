#!/usr/bin/env python3
"""Run the shipped verdict gallery and print a one-line-per-entry table.

Usage:
    python scripts/run_gallery.py [--suite PATH] [--json OUT] [--order N]
"""

import argparse
import json
import sys

from cnpcert.gallery import default_suite_dict, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", default=None, help="suite JSON path (default: shipped)")
    ap.add_argument("--json", dest="json_path", default=None, help="write the full report here")
    ap.add_argument("--order", type=int, default=64, help="series truncation order")
    args = ap.parse_args()

    if args.suite:
        with open(args.suite) as fh:
            doc = json.load(fh)
    else:
        doc = default_suite_dict()
    report = run_suite(doc, order=args.order, command="run_gallery")

    print(f"{'entry':26s} {'cnp':9s} {'criterion':21s} {'min_eig':>11s} match")
    for e in report["entries"]:
        print(
            f"{e['name']:26s} {e['observed']['cnp']:9s} "
            f"{e['observed']['criterion']:21s} "
            f"{e['cnp_report']['min_eig']:>11.3e} {e['match']}"
        )
    print(
        f"\n{len(report['entries'])} entries, all_match={report['all_match']}, "
        f"wall={report['wall_time_s']:.2f}s"
    )
    if args.json_path:
        with open(args.json_path, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
    return 0 if report["all_match"] else 1


if __name__ == "__main__":
    sys.exit(main())
