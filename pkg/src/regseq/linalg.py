"""Exact rank over Q(i) by fraction-free (Bareiss) elimination.

Every matrix is first brought to an integer matrix with the same rank:

* each row is multiplied by the lcm of its denominators;
* if any entry has a nonzero imaginary part, a + b*i is replaced by the
  real 2x2 block [[a, -b], [b, a]], which exactly doubles the rank.

The integer kernel uses the first-nonzero pivot rule, scanning columns left
to right, so results are reproducible.
"""

from __future__ import annotations

from math import lcm
from typing import Sequence

from .gaussian import GaussianRational, as_gaussian

__all__ = ["rank_exact", "integer_rank", "integer_matrix", "is_integral_real"]


def integer_rank(rows: list[list[int]], ncols: int | None = None) -> int:
    """Rank of an integer matrix. ``rows`` is consumed (modified in place)."""
    m = [r for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0]) if ncols is None else ncols
    nrows = len(m)
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv_row = None
        for i in range(r, nrows):
            if m[i][c]:
                piv_row = i
                break
        if piv_row is None:
            continue
        if piv_row != r:
            m[r], m[piv_row] = m[piv_row], m[r]
        pr = m[r]
        p = pr[c]
        tail = range(c + 1, ncols)
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            if a:
                for j in tail:
                    row[j] = (p * row[j] - a * pr[j]) // prev
            elif p != prev:
                for j in tail:
                    v = row[j]
                    if v:
                        row[j] = (p * v) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def is_integral_real(entries: Sequence[Sequence[GaussianRational]]) -> bool:
    return all(x.im == 0 and x.re.denominator == 1 for row in entries for x in row)


def integer_matrix(entries: Sequence[Sequence]) -> list[list[int]]:
    """Integer matrix whose rank over Q equals the rank of ``entries`` over Q(i)."""
    rows = [[as_gaussian(x) for x in row] for row in entries]
    complex_ = any(x.im for row in rows for x in row)
    out = []
    for row in rows:
        den = 1
        for x in row:
            if x:
                den = lcm(den, x.re.denominator, x.im.denominator)
        re = [int(x.re * den) for x in row]
        if not complex_:
            out.append(re)
            continue
        im = [int(x.im * den) for x in row]
        top, bottom = [], []
        for a, b in zip(re, im):
            top += [a, -b]
            bottom += [b, a]
        out.append(top)
        out.append(bottom)
    return out


def rank_exact(entries: Sequence[Sequence]) -> int:
    """Exact rank of a matrix of Gaussian rationals (ints/Fractions accepted)."""
    if not entries or not len(entries[0]):
        return 0
    complex_ = any(as_gaussian(x).im for row in entries for x in row)
    rows = integer_matrix(entries)
    r = integer_rank(rows, len(rows[0]))
    return r // 2 if complex_ else r
