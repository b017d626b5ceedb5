"""Exact rank over Q by Gaussian elimination on sparse rows."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


def rank(vectors: Iterable[Mapping]) -> int:
    """Rank of a family of sparse vectors (dicts from coordinate key to scalar)."""
    pivots: dict = {}  # pivot key -> reduced row with coefficient 1 there
    r = 0
    for vec in vectors:
        row = {k: Fraction(c) for k, c in vec.items() if c}
        for key, prow in pivots.items():
            c = row.get(key)
            if c:
                for k, v in prow.items():
                    nv = row.get(k, 0) - c * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        if not row:
            continue
        key = min(row)
        lead = row[key]
        row = {k: v / lead for k, v in row.items()}
        # keep existing pivot rows reduced against the new pivot
        for pk, prow in pivots.items():
            c = prow.get(key)
            if c:
                for k, v in row.items():
                    nv = prow.get(k, 0) - c * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        pivots[key] = row
        r += 1
    return r
