"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Polynomial ``sum(c[r] * x**r)`` over the rationals, immutable.

    The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def binomial(cls, shift, c):
        """The polynomial ``C(x + shift, c)`` for an integer ``c >= 0``."""
        if c < 0:
            return cls()
        out = cls([1])
        for u in range(c):
            out = out * cls([shift - u, 1])
        return out * Fraction(1, factorial(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, QPoly):
            other = QPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            return QPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for r, a in enumerate(self.coeffs):
            for s, b in enumerate(other.coeffs):
                out[r + s] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def compose_shift(self, a):
        """Return ``P(x + a)``."""
        out = QPoly()
        base = QPoly([a, 1])
        for c in reversed(self.coeffs):
            out = out * base + c
        return out

    def delta(self):
        """Backward difference ``P(x) - P(x - 1)``."""
        return self - self.compose_shift(-1)

    def to_json(self):
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(Fraction(c) for c in data)

    def __str__(self):
        if self.is_zero():
            return "0"
        out = ""
        for r, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = str(mag) if r == 0 else ("" if mag == 1 else f"{mag}*") + ("k" if r == 1 else f"k^{r}")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"QPoly({self})"


def interpolate(xs, ys):
    """Newton interpolation through the points ``(xs[r], ys[r])``, exact."""
    xs = [Fraction(x) for x in xs]
    table = [Fraction(y) for y in ys]
    n = len(xs)
    newton = []
    for level in range(n):
        newton.append(table[0])
        table = [
            (table[r + 1] - table[r]) / (xs[r + level + 1] - xs[r])
            for r in range(len(table) - 1)
        ]
    out = QPoly()
    basis = QPoly([1])
    for level, c in enumerate(newton):
        out = out + basis * c
        basis = basis * QPoly([-xs[level], 1])
    return out
