"""
Exact rank over Q by fraction-free elimination on sparse integer rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def integer_row(values, with_scale=False):
    """Sparse {col: Fraction} -> {col: int}, scaled by the common denominator."""
    den = 1
    for v in values.values():
        den = lcm(den, Fraction(v).denominator)
    row = {}
    for k, v in values.items():
        v = Fraction(v) * den
        if v:
            row[k] = int(v)
    return (row, den) if with_scale else row


def _reduce(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


class Echelon:
    """
    Incremental row echelon form. add() returns None when the new row is
    independent of the rows added so far, otherwise an integer relation
    {row index: coefficient} (with the new row's coefficient nonzero) that
    sums the original rows to zero.
    """

    def __init__(self, order=None):
        self.pivots = {}
        self.count = 0
        self.order = order

    def _lead(self, row):
        if self.order is None:
            return min(row)
        return min(row, key=self.order)

    def add(self, values):
        idx = self.count
        self.count += 1
        row, den = integer_row(values, with_scale=True)
        combo = {idx: den}
        while row:
            col = self._lead(row)
            hit = self.pivots.get(col)
            if hit is None:
                self.pivots[col] = (row, combo)
                return None
            prow, pcombo = hit
            a, b = row[col], prow[col]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            new = {k: v * ma for k, v in row.items()}
            for k, v in prow.items():
                x = new.get(k, 0) - v * mb
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            ncombo = {k: v * ma for k, v in combo.items()}
            for k, v in pcombo.items():
                x = ncombo.get(k, 0) - v * mb
                if x:
                    ncombo[k] = x
                else:
                    ncombo.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            for v in ncombo.values():
                g = gcd(g, v)
            if g > 1:
                new = {k: v // g for k, v in new.items()}
                ncombo = {k: v // g for k, v in ncombo.items()}
            row, combo = new, ncombo
        return combo

    @property
    def rank(self):
        return len(self.pivots)


def rank(rows):
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def independent_subset(rows):
    """Indices of a maximal independent subset, greedily in input order."""
    ech = Echelon()
    keep = []
    for i, r in enumerate(rows):
        if ech.add(r) is None:
            keep.append(i)
    return keep
