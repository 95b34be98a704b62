"""Sparse exact Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable


class Eliminator:
    """Accumulates linear equations (sparse rows ``{column: coeff}``) and keeps
    them in echelon form so redundant rows are dropped as they arrive."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: dict) -> bool:
        """Reduce ``row`` against the current pivots; keep it if independent."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                lead = row[col]
                self.pivots[col] = {c: v / lead for c, v in row.items()}
                return True
            factor = row[col]
            for c, v in piv.items():
                nv = row.get(c, 0) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return False

    def nullspace(self) -> list[list[Fraction]]:
        """A basis of the solution space, one vector per free column, each
        scaled to a primitive integer vector with positive free entry."""
        # back-substitute into reduced row echelon form, highest pivot first
        reduced: dict[int, dict[int, Fraction]] = {}
        for col in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[col])
            for c in [c for c in row if c != col and c in reduced]:
                factor = row.pop(c)
                for c2, v in reduced[c].items():
                    if c2 == c:
                        continue
                    nv = row.get(c2, 0) - factor * v
                    if nv:
                        row[c2] = nv
                    else:
                        row.pop(c2, None)
            reduced[col] = row
        free = [c for c in range(self.ncols) if c not in self.pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.ncols
            vec[f] = Fraction(1)
            for col, row in reduced.items():
                v = row.get(f)
                if v:
                    vec[col] = -v
            basis.append(primitive(vec))
        return basis


def primitive(vec: Iterable[Fraction]) -> list[Fraction]:
    """Scale a rational vector to coprime integers."""
    vec = list(vec)
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return vec
    return [Fraction(x, g) for x in ints]


def nullspace(rows: Iterable[dict], ncols: int) -> list[list[Fraction]]:
    e = Eliminator(ncols)
    for r in rows:
        e.add(r)
    return e.nullspace()


def rank(rows: Iterable[dict], ncols: int) -> int:
    e = Eliminator(ncols)
    for r in rows:
        e.add(r)
    return e.rank
