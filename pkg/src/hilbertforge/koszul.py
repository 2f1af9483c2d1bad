"""Graded Betti numbers of powers of monomial ideals via Koszul homology.

``Tor_l(K, I**k)_t`` is the homology at ``e_s (x) (I**k)_{t-l}`` (``|s| = l``)
of the Koszul complex on ``x_1..x_n`` with coefficients in ``I**k``, with
differential ``d(e_s (x) v) = sum_r (-1)**(r+1) e_{s - s_r} (x) x_{s_r} v``.
Ranks are exact over the rationals.  Since the differential preserves the
multidegree, each degree-``t`` strand is block diagonal over the monomials
``x**alpha`` of degree ``t``; the default computation ranks those blocks.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from hilbertforge.asymptotics import (
    BoundContext,
    ScanResult,
    fiber_dimension,
    fit_scan,
    verify_degree_bounds,
)
from hilbertforge.config import default_cap
from hilbertforge.errors import EnumerationCapExceeded
from hilbertforge.hilbert import HilbertSeries, e_from_h, hilbert_series_ideal, HVector
from hilbertforge.linalg import rank
from hilbertforge.monomial import (
    degree_histogram,
    ideal_power,
    lcm_degree,
    membership,
    monomials_of_degree,
)


@dataclass(frozen=True)
class GradedPieceBasis:
    degree: int
    basis: tuple

    def __len__(self):
        return len(self.basis)

    def index(self):
        return {m: r for r, m in enumerate(self.basis)}


@dataclass
class BettiTable:
    k: int
    entries: dict = field(default_factory=dict)  # (l, t) -> beta

    def row(self, l):
        return {t: b for (a, t), b in sorted(self.entries.items()) if a == l}

    def total(self, l):
        return sum(self.row(l).values())

    def rows(self):
        return sorted({l for l, _ in self.entries})

    def to_json(self):
        rows = {}
        for (l, t), b in sorted(self.entries.items()):
            rows.setdefault(str(l), {})[str(t)] = b
        return {"k": self.k, "rows": rows}

    @classmethod
    def from_json(cls, data):
        entries = {
            (int(l), int(t)): int(b) for l, row in data["rows"].items() for t, b in row.items()
        }
        return cls(int(data["k"]), entries)

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["l", "t", "beta"])
        for (l, t), b in sorted(self.entries.items()):
            writer.writerow([l, t, b])
        return buf.getvalue()


def _check_cap(n, t, cap):
    cap = default_cap() if cap is None else cap
    total = comb(t + n - 1, n - 1) if t >= 0 else 0
    if total > cap:
        raise EnumerationCapExceeded(f"degree-{t} monomials in {n} variables", total, cap)


def graded_piece(ideal, t, cap=None):
    """Basis of ``I_t``: degree-``t`` monomials in ``I``, sorted lexicographically."""
    if t < 0:
        return GradedPieceBasis(t, ())
    _check_cap(ideal.ambient_n, t, cap)
    basis = sorted(m for m in monomials_of_degree(ideal.ambient_n, t) if membership(m, ideal))
    return GradedPieceBasis(t, tuple(basis))


def _subtract(alpha, s):
    out = list(alpha)
    for v in s:
        out[v] -= 1
        if out[v] < 0:
            return None
    return tuple(out)


def _block_basis(ideal, alpha, l):
    """Subsets ``s`` with ``|s| = l`` and ``x**(alpha - e_s)`` in the ideal."""
    out = []
    for s in combinations(range(ideal.ambient_n), l):
        rest = _subtract(alpha, s)
        if rest is not None and membership(rest, ideal):
            out.append(s)
    return out


def _koszul_image(s):
    """``d(e_s)`` as a list of ``(sign, s minus one element)``."""
    return [((-1) ** r, s[:r] + s[r + 1:]) for r in range(len(s))]


def _block_matrix(ideal, alpha, l, source=None, target=None):
    source = _block_basis(ideal, alpha, l) if source is None else source
    target = _block_basis(ideal, alpha, l - 1) if target is None else target
    row_of = {s: r for r, s in enumerate(target)}
    mat = [[0] * len(source) for _ in target]
    for c, s in enumerate(source):
        for sign, face in _koszul_image(s):
            mat[row_of[face]][c] += sign
    return mat


def koszul_matrix(ideal, l, t, cap=None):
    """Full matrix of ``d_l`` on the degree-``t`` strand (no block splitting).

    Columns index ``(s, v)`` with ``|s| = l``, ``v`` in ``I_{t-l}``; rows index
    ``(s', w)`` with ``|s'| = l-1``, ``w`` in ``I_{t-l+1}``.  Returns
    ``(matrix, columns, rows)``.
    """
    n = ideal.ambient_n
    cols = [
        (s, v)
        for s in combinations(range(n), l)
        for v in graded_piece(ideal, t - l, cap).basis
    ]
    rows = [
        (s, w)
        for s in combinations(range(n), l - 1)
        for w in graded_piece(ideal, t - l + 1, cap).basis
    ] if l >= 1 else []
    row_of = {key: r for r, key in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for c, (s, v) in enumerate(cols):
        for r, x in enumerate(s):
            w = list(v)
            w[x] += 1
            mat[row_of[(s[:r] + s[r + 1:], tuple(w))]][c] += (-1) ** r
    return mat, cols, rows


def _strand_homology_blocks(ideal, t, cap=None, modulus=None):
    """``{l: dim H_l}`` in internal degree ``t``, summed over multidegree blocks."""
    n = ideal.ambient_n
    _check_cap(n, t, cap)
    dims = {l: 0 for l in range(n + 1)}
    for alpha in monomials_of_degree(n, t):
        bases = [_block_basis(ideal, alpha, l) for l in range(n + 1)]
        if not any(bases):
            continue
        ranks = [0] * (n + 2)
        for l in range(1, n + 1):
            if bases[l] and bases[l - 1]:
                ranks[l] = rank(_block_matrix(ideal, alpha, l, bases[l], bases[l - 1]), modulus)
        for l in range(n + 1):
            dims[l] += len(bases[l]) - ranks[l] - ranks[l + 1]
    return dims


def _strand_homology_full(ideal, t, cap=None, modulus=None):
    n = ideal.ambient_n
    ranks = [0] * (n + 2)
    sizes = [0] * (n + 1)
    for l in range(n + 1):
        mat, cols, rows = koszul_matrix(ideal, l, t, cap)
        sizes[l] = len(cols)
        if l >= 1 and cols and rows:
            ranks[l] = rank(mat, modulus)
    return {l: sizes[l] - ranks[l] - ranks[l + 1] for l in range(n + 1)}


def truncation_bound(ideal):
    return lcm_degree(ideal)


def _homology(ideal, l_values, extra=0, split=True, cap=None, modulus=None):
    if ideal.is_zero():
        return {l: {} for l in l_values}
    bound = truncation_bound(ideal) + extra
    out = {l: {} for l in l_values}
    strand = _strand_homology_blocks if split else _strand_homology_full
    for t in range(bound + 1):
        dims = strand(ideal, t, cap, modulus)
        for l in l_values:
            if dims.get(l, 0):
                out[l][t] = dims[l]
    return out


def koszul_homology_dims(ideal, k, l, extra=0, split=True, cap=None, modulus=None):
    """``{t: beta_{l,t}(I**k)}`` for ``t`` up to ``lcm_degree(I**k) + extra``, nonzero only."""
    if l < 0:
        raise ValueError(f"homological index must be non-negative, got {l}")
    if l > ideal.ambient_n:
        return {}
    ik = ideal_power(ideal, k, cap=cap)
    return _homology(ik, [l], extra, split, cap, modulus)[l]


def betti_table(ideal, k, extra=0, split=True, cap=None, modulus=None):
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    ik = ideal_power(ideal, k, cap=cap)
    n = ideal.ambient_n
    rows = _homology(ik, list(range(n + 1)), extra, split, cap, modulus)
    entries = {(l, t): b for l, row in rows.items() for t, b in row.items()}
    return BettiTable(k, entries)


def euler_check(ideal, k, table, cap=None):
    """Degrees ``t`` where the alternating Betti sum disagrees with either
    ``(1-t)**n * HS(I**k)`` or the alternating sum of Koszul term dimensions.

    Checked up to the truncation bound; beyond it the series numerator must
    vanish, reported as the degree where it does not.
    """
    ik = ideal_power(ideal, k, cap=cap)
    n = ideal.ambient_n
    if ik.is_zero():
        return [] if not table.entries else sorted({t for _, t in table.entries})
    bound = truncation_bound(ik)
    hs = hilbert_series_ideal(ik)
    numerator = {hs.shift + r: c for r, c in enumerate(hs.numerator)}
    bad = [t for t in numerator if t > bound and numerator[t] != 0]
    piece = {}
    for t in range(bound + 1):
        betti = sum((-1) ** l * table.entries.get((l, t), 0) for l in range(n + 1))
        terms = 0
        for l in range(n + 1):
            u = t - l
            if u not in piece:
                piece[u] = len(graded_piece(ik, u, cap))
            terms += (-1) ** l * comb(n, l) * piece[u]
        if betti != numerator.get(t, 0) or betti != terms:
            bad.append(t)
    return sorted(bad)


def generator_histogram_mismatch(ideal, k, table, cap=None):
    """True unless row 0 equals the degree histogram of the minimal generators of ``I**k``."""
    return table.row(0) != degree_histogram(ideal_power(ideal, k, cap=cap))


def tor_series(table, l):
    """Hilbert series of the finite-length module ``Tor_l(K, I**k)``."""
    row = table.row(l)
    if not row:
        return HilbertSeries.make(0, 0, [])
    lo, hi = min(row), max(row)
    return HilbertSeries.make(0, lo, [row.get(t, 0) for t in range(lo, hi + 1)])


def tor_coefficients(table, l, i, j):
    """``e^i_j`` of ``Tor_l(K, I**k)``.

    The Hilbert function of a finite-length module is its own h-vector, so
    the coefficient is ``sum_t C(t, j) beta_{l,t}``.  It does not depend on
    the iterate ``i``: the value is the one shared by every iterate whose
    polynomial carries index ``j``.
    """
    row = table.row(l)
    if not row:
        return Fraction(0)
    lo = min(row)
    h = HVector.make(lo, [row.get(t, 0) for t in range(lo, max(row) + 1)])
    return Fraction(e_from_h(h, j))


@lru_cache(maxsize=128)
def _exact_rows(ik, cap):
    return _homology(ik, list(range(ik.ambient_n + 1)), 0, True, cap, None)


def _betti_point(ideal, k, l, cap, modulus):
    n = ideal.ambient_n
    if l > n:
        return BettiTable(k, {})
    ik = ideal_power(ideal, k, cap=cap)
    if modulus is None:
        row = _exact_rows(ik, cap)[l]
    else:
        row = _homology(ik, [l], 0, True, cap, modulus)[l]
    return BettiTable(k, {(l, t): b for t, b in row.items()})


def scan_betti(ideal, l, i, j, k_max=8, window=3, cap=None, modulus=None):
    """Scan ``e^i_j(Tor_l(K, I**k))`` over ``k = 1..k_max``, fit, and check bounds."""
    ks, values, dims = [], [], []
    truncated = False
    for k in range(1, k_max + 1):
        try:
            table = _betti_point(ideal, k, l, cap, modulus)
        except EnumerationCapExceeded:
            if not ks:
                raise
            truncated = True
            break
        ks.append(k)
        values.append(tor_coefficients(table, l, i, j))
        dims.append(0 if table.row(l) else -1)
    scan = ScanResult(i, j, ks, values, dims, truncated=truncated)
    fit = fit_scan(scan, window)
    if fit.stable:
        ell = fiber_dimension(ideal) if ideal.is_equigenerated() and not ideal.is_zero() else None
        verify_degree_bounds(fit, BoundContext(i, j, nu=ideal.num_generators, ell=ell), scan)
    return scan, fit
