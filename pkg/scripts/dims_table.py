"""Graded dimensions of U next to the PBW monomial counts, as a markdown table."""

import argparse

from qshuffle_pbw.cli import dims_rows
from qshuffle_pbw.pbw import BASES

ap = argparse.ArgumentParser()
ap.add_argument("-N", "--degree", type=int, default=10)
args = ap.parse_args()

cols = ["n", "dim_V", "dim_J", "dim_U", *BASES]
print("| " + " | ".join(cols) + " |")
print("|" + "---|" * len(cols))
for r in dims_rows(args.degree):
    print("| " + " | ".join(str(r[c]) for c in cols) + " |")
