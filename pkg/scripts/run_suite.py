"""Run the identity suite and write the JSON report.

    python scripts/run_suite.py -N 5 --out report.json
"""

import argparse
import json
import sys

from qshuffle_pbw.verify import run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-N", "--degree", type=int, default=5)
    ap.add_argument("--q0", default="2")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    report = run_suite(args.degree, args.q0,
                       progress=lambda c: print(f"{c.status:4s} {c.id:18s} {c.elapsed:7.3f}s",
                                                file=sys.stderr))
    text = json.dumps(report.to_json(), indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(report.summary(), file=sys.stderr)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
