"""Sparse exact row echelon forms over the rationals.

Rows are dicts ``column -> Fraction``.  Columns may be any hashable,
totally ordered keys; pivots are taken at the largest column of a row.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping


class Echelon:
    """Incrementally built reduced basis of a row space.

    Each stored row is monic at its pivot, and no stored row has a nonzero
    entry in another row's pivot column.
    """

    def __init__(self, key=None):
        self.key = key
        self.rows: dict = {}  # pivot column -> row

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _pivot(self, row: Mapping) -> Hashable:
        return max(row, key=self.key) if self.key else max(row)

    def reduce(self, row: Mapping) -> dict:
        """Remainder of ``row`` modulo the stored basis."""
        r = {c: Fraction(v) for c, v in row.items() if v}
        for piv in [c for c in r if c in self.rows]:
            v = r.get(piv)
            if not v:
                continue
            for c, w in self.rows[piv].items():
                nv = r.get(c, 0) - v * w
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        return r

    def add(self, row: Mapping) -> bool:
        """Adjoin a row; returns True when the rank grew."""
        r = self.reduce(row)
        if not r:
            return False
        piv = self._pivot(r)
        inv = 1 / r[piv]
        r = {c: v * inv for c, v in r.items()}
        for other in self.rows.values():
            v = other.get(piv)
            if v:
                for c, w in r.items():
                    nv = other.get(c, 0) - v * w
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self.rows[piv] = r
        return True

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[Mapping], key=None) -> int:
    e = Echelon(key)
    for r in rows:
        e.add(r)
    return e.rank
