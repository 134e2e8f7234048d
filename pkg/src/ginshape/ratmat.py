"""Dense exact matrices over the rationals.

Rows are normalized to primitive integer vectors (clear denominators,
divide out the content), and elimination is fraction-free: a pivot step
replaces R by (p/g)*R - (r/g)*P with g = gcd(p, r), followed by another
content reduction.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _primitive(row) -> list[int]:
    """Scale a row of ints/Fractions to a primitive integer vector."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) if isinstance(x, Fraction) else int(x) * den for x in row]
    g = 0
    for x in ints:
        if x:
            g = gcd(g, abs(x))
            if g == 1:
                return ints
    if g > 1:
        return [x // g for x in ints]
    return ints


class RationalMatrix:
    """An exact rows x cols matrix; entries may be int or Fraction."""

    def __init__(self, entries, cols: int | None = None):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        if self.rows:
            widths = {len(r) for r in self.entries}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.cols = widths.pop()
            if cols is not None and cols != self.cols:
                raise ValueError("explicit column count disagrees with rows")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.cols = cols

    def echelon(self) -> tuple[list[list[int]], list[int]]:
        """Forward elimination scanning columns left to right.

        Returns (echelon rows as primitive integer vectors, pivot columns).
        """
        live = [_primitive(r) for r in self.entries if any(r)]
        done: list[list[int]] = []
        pivots: list[int] = []
        for col in range(self.cols):
            pivot_idx = None
            for idx, row in enumerate(live):
                if row[col]:
                    pivot_idx = idx
                    break
            if pivot_idx is None:
                continue
            pivot_row = live.pop(pivot_idx)
            p = pivot_row[col]
            reduced = []
            for row in live:
                r = row[col]
                if r:
                    g = gcd(p, r)
                    pp, rr = p // g, r // g
                    new = [pp * a - rr * b for a, b in zip(row, pivot_row)]
                    g2 = 0
                    for x in new:
                        if x:
                            g2 = gcd(g2, abs(x))
                            if g2 == 1:
                                break
                    if g2 > 1:
                        new = [x // g2 for x in new]
                    if any(new):
                        reduced.append(new)
                else:
                    reduced.append(row)
            live = reduced
            done.append(pivot_row)
            pivots.append(col)
            if not live:
                break
        return done, pivots

    def rank(self) -> int:
        return len(self.echelon()[1])

    def kernel_basis(self) -> list[list[int]]:
        """Primitive integer basis of the right kernel, one vector per free column."""
        ech, pivots = self.echelon()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec: list[Fraction | int] = [Fraction(0)] * self.cols
            vec[free] = Fraction(1)
            for i in range(len(pivots) - 1, -1, -1):
                pc = pivots[i]
                row = ech[i]
                s = sum(row[c] * vec[c] for c in range(pc + 1, self.cols) if vec[c])
                vec[pc] = Fraction(-s, row[pc])
            basis.append(_primitive(vec))
        return basis
