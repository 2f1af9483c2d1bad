"""Strands of bigraded free modules over ``A = K[x_1..x_n, y_1..y_m]``.

``deg x_i = (1, 0)`` and ``deg y_j = (p_j, 1)``.  The ``k``-th strand of
``A(-a, -b)`` is a free ``S``-module ``sum_beta S(-(p.beta + a))`` over weak
compositions ``beta`` of ``k - b`` into ``m`` parts.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from math import comb

from hilbertforge.hilbert import HilbertSeries, generalized_binomial
from hilbertforge.monomial import ideal_power


@dataclass(frozen=True)
class BigradedAlgebra:
    n: int
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(p) for p in self.weights))
        if self.n < 1:
            raise ValueError(f"need at least one x variable, got n={self.n}")
        if not self.weights:
            raise ValueError("need at least one y variable")
        if any(p < 0 for p in self.weights):
            raise ValueError(f"weights must be non-negative, got {self.weights}")

    @property
    def m(self):
        return len(self.weights)

    def equal_weights(self):
        return len(set(self.weights)) == 1


@dataclass(frozen=True)
class BigradedShift:
    a: int = 0
    b: int = 0


@dataclass(frozen=True)
class ShiftMultiset:
    """Twists ``c`` (with multiplicity) of the free summands ``S(-c)``."""

    shifts: tuple  # sorted (c, multiplicity) pairs

    @classmethod
    def from_counter(cls, counter):
        return cls(tuple(sorted((c, mult) for c, mult in counter.items() if mult > 0)))

    def __len__(self):
        return sum(mult for _, mult in self.shifts)

    def as_dict(self):
        return dict(self.shifts)

    def to_json(self):
        return {"shifts": {str(c): mult for c, mult in self.shifts}}

    @classmethod
    def from_json(cls, data):
        return cls.from_counter(Counter({int(c): int(m) for c, m in data["shifts"].items()}))


def weak_compositions(total, parts):
    """Yield all ``parts``-tuples of non-negative integers summing to ``total``, lex order.

    Streams one tuple at a time; nothing is materialized.
    """
    if parts < 1:
        raise ValueError(f"parts must be positive, got {parts}")
    if total < 0:
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def _twists(alg, shift, k):
    for beta in weak_compositions(k - shift.b, alg.m):
        yield sum(p * e for p, e in zip(alg.weights, beta)) + shift.a


def strand_decomposition(alg, shift, k):
    return ShiftMultiset.from_counter(Counter(_twists(alg, shift, k)))


def strand_coefficient(alg, shift, k, i, j):
    """``e^i_j`` of the ``k``-th strand as ``sum_beta C(p.beta + a, j)``."""
    if j < 0 or j > alg.n + i - 1:
        warnings.warn(
            f"j={j} outside 0..{alg.n + i - 1} for iterate i={i}; coefficient taken as 0",
            stacklevel=2,
        )
        return 0
    return sum(generalized_binomial(c, j) for c in _twists(alg, shift, k))


def strand_coefficient_bounds(alg, shift, k, j):
    """``(lower, upper)`` from the smallest and largest weight."""
    if k < shift.b:
        raise ValueError(f"strand k={k} is below b={shift.b}")
    ps = sorted(alg.weights)
    count = comb(k - shift.b + alg.m - 1, alg.m - 1)
    lower = count * generalized_binomial(ps[0] * (k - shift.b) + shift.a, j)
    upper = count * generalized_binomial(ps[-1] * (k - shift.b) + shift.a, j)
    return lower, upper


def strand_closed_form(alg, shift, k, j):
    """``C(k-b+m-1, m-1) * C(p(k-b) + a, j)``; exact only for equal weights."""
    p = max(alg.weights)
    return generalized_binomial(k - shift.b + alg.m - 1, alg.m - 1) * generalized_binomial(
        p * (k - shift.b) + shift.a, j
    )


def strand_hilbert_series(alg, shift, k):
    decomposition = strand_decomposition(alg, shift, k)
    if not decomposition.shifts:
        return HilbertSeries.make(alg.n, 0, [])
    lo = decomposition.shifts[0][0]
    num = [0] * (decomposition.shifts[-1][0] - lo + 1)
    for c, mult in decomposition.shifts:
        num[c - lo] += mult
    return HilbertSeries.make(alg.n, lo, num)


def rees_strand(ideal, k, cap=None):
    """``R(I)_k = I**k``."""
    return ideal_power(ideal, k, cap=cap)


def rees_algebra(ideal):
    """The bigraded algebra ``A`` presenting the Rees ring of ``ideal`` (one ``y`` per generator)."""
    return BigradedAlgebra(ideal.ambient_n, tuple(sum(g) for g in ideal.generators))
