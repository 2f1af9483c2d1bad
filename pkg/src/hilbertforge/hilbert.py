"""Hilbert series, iterated Hilbert polynomials and their coefficients.

A Hilbert series is stored as ``t**shift * numerator(t) / (1 - t)**n`` with
an integer numerator.  Iterated Hilbert polynomials are stored by their
higher iterated Hilbert coefficients ``e[j]`` in the signed binomial basis::

    P(x) = sum_j (-1)**j * e[j] * C(x + D - 1 - j, D - 1 - j),   D = d + i

so the difference operator and coefficient extraction act triangularly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from hilbertforge.monomial import MonomialIdeal, minimalize
from hilbertforge.poly import QPoly


def generalized_binomial(c, j):
    """``C(c, j)`` via the falling factorial; any integer ``c``, ``j >= 0``."""
    if j < 0:
        raise ValueError(f"lower index must be non-negative, got {j}")
    num = 1
    for u in range(j):
        num *= c - u
    # a product of j consecutive integers is divisible by j!
    return num // factorial(j)


# --- integer polynomial helpers (coefficient lists, degree 0 first) ---------

def _padd(a, b):
    n = max(len(a), len(b))
    return [(a[r] if r < len(a) else 0) + (b[r] if r < len(b) else 0) for r in range(n)]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for r, x in enumerate(a):
        if x:
            for s, y in enumerate(b):
                out[r + s] += x * y
    return out


def _one_minus_t_power(e):
    return [(-1) ** r * comb(e, r) for r in range(e + 1)]


def _divide_one_minus_t(p):
    """Exact quotient of ``p`` by ``1 - t``; caller guarantees ``p(1) == 0``."""
    # p = (1 - t) q  =>  q_r = sum_{s <= r} p_s
    out, acc = [], 0
    for c in p[:-1]:
        acc += c
        out.append(acc)
    return out


@dataclass(frozen=True)
class HilbertSeries:
    """``t**shift * numerator(t) / (1 - t)**ambient_n``.

    Use :meth:`make` to build normalized instances: zero low-order
    coefficients are folded into ``shift``, trailing zeros trimmed, and
    the zero series has ``shift == 0`` and an empty numerator.
    """

    ambient_n: int
    shift: int
    numerator: tuple

    @classmethod
    def make(cls, n, shift, numerator):
        num = [int(c) for c in numerator]
        while num and num[-1] == 0:
            num.pop()
        lead = 0
        while lead < len(num) and num[lead] == 0:
            lead += 1
        num = num[lead:]
        if not num:
            return cls(n, 0, ())
        return cls(n, shift + lead, tuple(num))

    @classmethod
    def free(cls, n, c=0, rank=1):
        """Series of ``S(-c)**rank``."""
        return cls.make(n, c, [rank])

    def is_zero(self):
        return not self.numerator

    def __add__(self, other):
        if self.ambient_n != other.ambient_n:
            raise ValueError("series with different denominators")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.shift, other.shift)
        a = [0] * (self.shift - lo) + list(self.numerator)
        b = [0] * (other.shift - lo) + list(other.numerator)
        return HilbertSeries.make(self.ambient_n, lo, _padd(a, b))

    def __neg__(self):
        return HilbertSeries(self.ambient_n, self.shift, tuple(-c for c in self.numerator))

    def __sub__(self, other):
        return self + (-other)

    def twist(self, c):
        """Series of ``M(-c)``."""
        return HilbertSeries.make(self.ambient_n, self.shift + c, self.numerator)

    def summed(self, i=1):
        """Series of the ``i``-th iterated Hilbert function."""
        return HilbertSeries(self.ambient_n + i, self.shift, self.numerator)

    def times_one_minus_t_power(self, e):
        """Multiply by ``(1 - t)**e`` into the numerator (denominator unchanged)."""
        return HilbertSeries.make(
            self.ambient_n, self.shift, _pmul(list(self.numerator), _one_minus_t_power(e))
        )

    def coefficient(self, t):
        """Hilbert function value ``dim_K M_t``."""
        n = self.ambient_n
        total = 0
        for r, c in enumerate(self.numerator):
            u = t - self.shift - r
            if u < 0:
                break
            total += c * comb(u + n - 1, n - 1) if n > 0 else (c if u == 0 else 0)
        return total

    def coefficients(self, upto, start=0):
        return [self.coefficient(t) for t in range(start, upto + 1)]

    def to_json(self):
        return {"n": self.ambient_n, "shift": self.shift, "numerator": list(self.numerator)}

    @classmethod
    def from_json(cls, data):
        return cls.make(int(data["n"]), int(data.get("shift", 0)), data["numerator"])


@dataclass(frozen=True)
class HVector:
    offset: int
    entries: tuple

    @classmethod
    def make(cls, offset, entries):
        entries = list(entries)
        while entries and entries[-1] == 0:
            entries.pop()
        lead = 0
        while lead < len(entries) and entries[lead] == 0:
            lead += 1
        if lead == len(entries):
            return cls(0, ())
        return cls(offset + lead, tuple(entries[lead:]))

    @property
    def s(self):
        """Absolute degree of the last entry."""
        return self.offset + len(self.entries) - 1

    def padded(self):
        """Entries ``(h_0, ..., h_s)`` with the offset spelled out as zeros."""
        if self.offset < 0:
            raise ValueError("h-vector has negative offset; no zero-padded form")
        return (0,) * self.offset + self.entries


@dataclass(frozen=True)
class HilbertPolynomial:
    order_i: int
    dim_d: int
    coeffs_e: tuple

    @property
    def top(self):
        """``D - 1`` where ``D = d + i``: the largest valid index ``j``."""
        return self.dim_d + self.order_i - 1

    def __call__(self, x):
        D = self.top + 1
        return sum(
            (Fraction((-1) ** j * generalized_binomial(x + D - 1 - j, D - 1 - j)) * e
             for j, e in enumerate(self.coeffs_e)),
            Fraction(0),
        )

    def to_qpoly(self):
        D = self.top + 1
        out = QPoly()
        for j, e in enumerate(self.coeffs_e):
            out = out + QPoly.binomial(D - 1 - j, D - 1 - j) * ((-1) ** j * e)
        return out

    @property
    def degree(self):
        return self.to_qpoly().degree

    def to_json(self):
        return {"i": self.order_i, "d": self.dim_d, "e": [str(e) for e in self.coeffs_e]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["i"]), int(data["d"]), tuple(Fraction(e) for e in data["e"]))


@dataclass
class CoefficientTable:
    """Values ``e^i_j`` keyed by ``(i, j)``."""

    dim_d: int
    entries: dict = field(default_factory=dict)

    def row(self, i):
        return [v for (a, _), v in sorted(self.entries.items()) if a == i]

    def __getitem__(self, key):
        return self.entries[key]

    def merge(self, other):
        if other.dim_d != self.dim_d:
            raise ValueError("tables for modules of different dimension")
        self.entries.update(other.entries)
        return self

    def reject_violations(self):
        """Pairs ``(i, j)`` where ``e^i_j != e^{i-1}_j`` although both are defined."""
        bad = []
        for (i, j), v in sorted(self.entries.items()):
            if i >= 1 and j <= self.dim_d + i - 2 and (i - 1, j) in self.entries:
                if self.entries[(i - 1, j)] != v:
                    bad.append((i, j))
        return bad


# --- Hilbert series of monomial quotients -----------------------------------

def _pivot_variable(gens):
    counts = {}
    for g in gens:
        support = [v for v, e in enumerate(g) if e > 0]
        if len(support) > 1:
            for v in support:
                counts[v] = counts.get(v, 0) + 1
    if not counts:
        return None
    return max(counts, key=lambda v: (counts[v], -v))


def _quotient_numerator(gens, n, memo):
    key = gens
    if key in memo:
        return memo[key]
    if not gens:
        out = [1]
    elif any(sum(g) == 0 for g in gens):
        out = []
    else:
        v = _pivot_variable(gens)
        if v is None:
            # pure powers of distinct variables: a complete intersection
            out = [1]
            for g in gens:
                a = sum(g)
                out = _pmul(out, [1] + [0] * (a - 1) + [-1])
        else:
            x_v = tuple(int(r == v) for r in range(n))
            plus = minimalize([g for g in gens if g[v] == 0] + [x_v], n).generators
            colon = minimalize(
                [g[:v] + (max(g[v] - 1, 0),) + g[v + 1:] for g in gens], n
            ).generators
            out = _padd(
                _quotient_numerator(plus, n, memo),
                [0] + _quotient_numerator(colon, n, memo),
            )
    memo[key] = out
    return out


def hilbert_series_quotient(ideal):
    """Hilbert series of ``S/I`` by pivot splitting on a variable."""
    num = _quotient_numerator(ideal.generators, ideal.ambient_n, {})
    return HilbertSeries.make(ideal.ambient_n, 0, num)


def hilbert_series_ideal(ideal):
    n = ideal.ambient_n
    return HilbertSeries.free(n) - hilbert_series_quotient(ideal)


def hilbert_series_ring(n):
    return HilbertSeries.free(n)


# --- dimension, h-vector, polynomials ---------------------------------------

def _reduce(hs):
    """Return ``(Q, d)`` with ``numerator = (1 - t)**(n - d) * Q`` and ``Q(1) != 0``."""
    if hs.is_zero():
        return [], -1
    q = list(hs.numerator)
    d = hs.ambient_n
    while sum(q) == 0:
        q = _divide_one_minus_t(q)
        d -= 1
    return q, d


def dimension(hs):
    """Krull dimension; the zero module has dimension -1."""
    return _reduce(hs)[1]


def h_vector(hs):
    q, _ = _reduce(hs)
    return HVector.make(hs.shift, q)


def _flat_coefficients(h, count):
    return tuple(
        Fraction(sum(generalized_binomial(h.offset + r, j) * c for r, c in enumerate(h.entries)))
        for j in range(count)
    )


def hilbert_polynomial(hs, i=0):
    """The ``i``-th iterated Hilbert polynomial, in the binomial basis."""
    if i < 0:
        raise ValueError(f"iterate must be non-negative, got {i}")
    d = dimension(hs)
    if d < 0:
        return HilbertPolynomial(i, d, ())
    return HilbertPolynomial(i, d, _flat_coefficients(h_vector(hs), max(d + i, 0)))


def delta(p):
    """Backward difference ``P(a) - P(a - 1)``.

    A Hilbert polynomial of order ``i >= 1`` maps to the one of order
    ``i - 1``; everything else is handled as a plain :class:`QPoly`.
    """
    if isinstance(p, HilbertPolynomial):
        if p.order_i >= 1:
            return HilbertPolynomial(p.order_i - 1, p.dim_d, p.coeffs_e[: max(p.top, 0)])
        return p.to_qpoly().delta()
    return p.delta()


def _iterated_difference_at(p, r, a):
    """``(Delta**r P)(a)`` from values of ``P`` alone."""
    return sum((Fraction((-1) ** s * comb(r, s)) * p(a - s) for s in range(r + 1)), Fraction(0))


def extract_coefficients(p):
    """``e^i_j = (-1)**j (Delta**(d+i-j-1) P)(-1)`` for ``j = 0..d+i-1``."""
    D = p.top + 1
    table = CoefficientTable(p.dim_d)
    for j in range(D):
        table.entries[(p.order_i, j)] = (-1) ** j * _iterated_difference_at(p, D - j - 1, -1)
    return table


def coefficient_table(hs, max_i=2):
    d = dimension(hs)
    table = CoefficientTable(d)
    for i in range(max_i + 1):
        table.merge(extract_coefficients(hilbert_polynomial(hs, i)))
    return table


def flat_coefficient(hs, j):
    """The stabilized coefficient ``e_j``, equal to ``e^i_j`` for every ``i`` with ``j <= d+i-1``."""
    if hs.is_zero():
        return Fraction(0)
    return Fraction(e_from_h(h_vector(hs), j))


def coefficient(hs, i, j):
    """``e^i_j`` of the module; 0 when ``j`` exceeds ``d + i - 1``."""
    d = dimension(hs)
    if j > d + i - 1 or j < 0:
        return Fraction(0)
    return flat_coefficient(hs, j)


def e_from_h(h, j):
    """``e_j = sum_i C(i, j) h_i`` with ``h_i`` indexed by absolute degree."""
    if isinstance(h, HVector):
        offset, entries = h.offset, h.entries
    else:
        offset, entries = 0, tuple(h)
    return sum(generalized_binomial(offset + r, j) * c for r, c in enumerate(entries))


def h_from_e(e, s=None):
    """Invert :func:`e_from_h`: ``h_i = sum_{j>=i} (-1)**(j-i) C(j, i) e_j``, i = 0..s."""
    e = list(e)
    if s is None:
        s = len(e) - 1
    if len(e) < s + 1:
        raise ValueError(f"need e_0..e_{s}, got {len(e)} values")
    h = [
        sum((-1) ** (j - i) * comb(j, i) * e[j] for j in range(i, s + 1))
        for i in range(s + 1)
    ]
    return HVector.make(0, h)


def power_sum_polynomial(p):
    """Closed form of ``F(k) = sum_{x=0}^{k} P(x)``, a polynomial of degree ``deg P + 1``."""
    if not isinstance(p, QPoly):
        p = QPoly(p)
    out = QPoly()
    current = p
    # P = sum_c a_c C(x + c, c) with a_c = (Delta**c P)(-1); each term sums to C(k + c + 1, c + 1)
    for c in range(p.degree + 1):
        out = out + QPoly.binomial(c + 1, c + 1) * current(-1)
        current = current.delta()
    return out
