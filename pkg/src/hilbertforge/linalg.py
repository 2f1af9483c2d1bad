"""Exact rank of integer matrices."""

from __future__ import annotations

import warnings
from fractions import Fraction

MODULAR_PRIME = 32003


class ProbabilisticRankWarning(UserWarning):
    pass


def rank(rows, modulus=None):
    """Rank of ``rows`` (a list of equal-length integer lists).

    Exact over the rationals by default.  ``modulus`` switches to rank over
    ``GF(modulus)``, which can only undercount the rational rank and is
    flagged with :class:`ProbabilisticRankWarning`.
    """
    if modulus is not None:
        warnings.warn(
            f"rank computed modulo {modulus} is probabilistic", ProbabilisticRankWarning, stacklevel=2
        )
        return _rank_mod(rows, modulus)
    return _rank_q(rows)


def _rank_q(rows):
    work = [[Fraction(x) for x in row] for row in rows if any(row)]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        pivot = next((s for s in range(r, len(work)) if work[s][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pr = work[r]
        for s in range(r + 1, len(work)):
            f = work[s][c]
            if f:
                f /= pr[c]
                row = work[s]
                for t in range(c, ncols):
                    if pr[t]:
                        row[t] -= f * pr[t]
        r += 1
        if r == len(work):
            break
    return r


def _rank_mod(rows, p):
    work = [[x % p for x in row] for row in rows]
    work = [row for row in work if any(row)]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        pivot = next((s for s in range(r, len(work)) if work[s][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = pow(work[r][c], -1, p)
        pr = work[r]
        for s in range(r + 1, len(work)):
            f = work[s][c] * inv % p
            if f:
                row = work[s]
                for t in range(c, ncols):
                    row[t] = (row[t] - f * pr[t]) % p
        r += 1
        if r == len(work):
            break
    return r


def matmul(a, b):
    if not a or not b:
        return []
    inner = len(b)
    cols = len(b[0])
    return [[sum(row[t] * b[t][c] for t in range(inner)) for c in range(cols)] for row in a]


def _det(mat):
    from itertools import permutations

    size = len(mat)
    total = 0
    for perm in permutations(range(size)):
        sign = 1
        seen = list(perm)
        for a in range(size):
            for b in range(a + 1, size):
                if seen[a] > seen[b]:
                    sign = -sign
        prod = 1
        for r, c in enumerate(perm):
            prod *= mat[r][c]
            if not prod:
                break
        total += sign * prod
    return total


def rank_by_minors(rows):
    """Largest size of a nonvanishing minor; brute force, for tiny matrices only."""
    from itertools import combinations

    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    for size in range(min(nrows, ncols), 0, -1):
        for rs in combinations(range(nrows), size):
            for cs in combinations(range(ncols), size):
                if _det([[rows[r][c] for c in cs] for r in rs]):
                    return size
    return 0
