"""Exact rank of sparse integer matrices.

Rows are ``dict[int, int]`` (column -> nonzero entry).  Over the rationals
the elimination is fraction-free: a row is replaced by an integer
combination and divided by the gcd of its entries, so nothing is rounded
and entries stay small for boundary-type matrices.  With ``p > 0`` the same
elimination runs over GF(p).
"""

from __future__ import annotations

from math import gcd
from typing import Iterable


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for x in row.values():
        g = gcd(g, x)
        if g == 1:
            return row
    return {c: x // g for c, x in row.items()}


def rank(rows: Iterable[dict[int, int]], p: int = 0) -> int:
    """Rank over QQ (``p == 0``) or over GF(p)."""
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for row in rows:
        if p:
            cur = {c: x % p for c, x in row.items() if x % p}
        else:
            cur = {c: x for c, x in row.items() if x}
        while cur:
            c = min(cur)
            prow = pivots.get(c)
            if prow is None:
                if p:
                    inv = pow(cur[c], -1, p)
                    cur = {k: x * inv % p for k, x in cur.items()}
                else:
                    cur = _primitive(cur)
                pivots[c] = cur
                r += 1
                break
            b = cur[c]
            if p:
                # pivot rows are monic mod p
                for k, x in prow.items():
                    y = (cur.get(k, 0) - b * x) % p
                    if y:
                        cur[k] = y
                    else:
                        cur.pop(k, None)
            else:
                a = prow[c]
                if a == 1 or a == -1:
                    f = b * a
                    for k, x in prow.items():
                        y = cur.get(k, 0) - f * x
                        if y:
                            cur[k] = y
                        else:
                            cur.pop(k, None)
                else:
                    new = {k: a * x for k, x in cur.items()}
                    for k, x in prow.items():
                        y = new.get(k, 0) - b * x
                        if y:
                            new[k] = y
                        else:
                            new.pop(k, None)
                    cur = _primitive(new) if new else new
    return r
