#!/usr/bin/env python3
"""Sweep the whole identity registry and write a JSON report.

Usage: python scripts/run_verification.py [--trials N] [--seed S] [--out PATH]
"""

import argparse
import json
import sys
import time

from detkit.catalog import registry_ids, verify_identity


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=5)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    reports = []
    start = time.monotonic()
    for identity_id in registry_ids():
        t0 = time.monotonic()
        report = verify_identity(identity_id, trials=args.trials,
                                 seed=args.seed)
        reports.append(report)
        status = "PASS" if report.overall else "FAIL"
        print(f"{identity_id:16s} {status}  "
              f"({time.monotonic() - t0:.2f}s)")
    elapsed = time.monotonic() - start
    ok = all(r.overall for r in reports)
    print(f"\n{len(reports)} identities, "
          f"{'all pass' if ok else 'FAILURES PRESENT'}, {elapsed:.1f}s total")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([r.to_json_dict() for r in reports], fh, indent=2)
        print(f"report written to {args.out}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
