"""Monomials and monomial ideals in a standard-graded polynomial ring.

Monomials are plain tuples of non-negative integers (exponent vectors).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from hilbertforge.config import default_cap
from hilbertforge.errors import EnumerationCapExceeded, ParseError


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def degree(m):
    return sum(m)


def monomials_of_degree(n, t):
    """All exponent vectors of length ``n`` and total degree ``t``, lex-descending."""
    if t < 0:
        return
    if n == 1:
        yield (t,)
        return
    for first in range(t, -1, -1):
        for rest in monomials_of_degree(n - 1, t - first):
            yield (first,) + rest


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Build instances with :func:`minimalize` (or the ``from_generators``
    alias); the constructor trusts its input.
    """

    ambient_n: int
    generators: tuple

    @classmethod
    def from_generators(cls, gens, n=None):
        return minimalize(gens, n)

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def unit(cls, n):
        return cls(n, ((0,) * n,))

    @classmethod
    def maximal(cls, n):
        return cls(n, tuple(tuple(int(r == c) for c in range(n)) for r in range(n)))

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return any(degree(g) == 0 for g in self.generators)

    @property
    def num_generators(self):
        return len(self.generators)

    def degrees(self):
        return sorted(degree(g) for g in self.generators)

    def is_equigenerated(self):
        return len(set(self.degrees())) <= 1

    def __contains__(self, m):
        return membership(m, self)

    def __str__(self):
        return format_ideal(self)


def minimalize(gens, n=None):
    """Return the ideal minimally generated by the monomials ``gens``."""
    gens = [tuple(int(e) for e in g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("cannot infer ambient_n from an empty generator set")
        n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise ValueError(f"exponent vector {g} has length {len(g)}, expected {n}")
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g}")
    kept = []
    # Divisors have no larger degree, so scanning by degree keeps only minimal ones.
    for g in sorted(set(gens), key=lambda m: (degree(m), m)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(n, tuple(sorted(kept, reverse=True)))


def membership(m, ideal):
    if len(m) != ideal.ambient_n:
        raise ValueError(f"monomial {m} does not live in a ring with {ideal.ambient_n} variables")
    return any(divides(g, m) for g in ideal.generators)


def ideal_product(a, b):
    if a.ambient_n != b.ambient_n:
        raise ValueError("ideals live in different rings")
    return minimalize(
        (tuple(x + y for x, y in zip(g, h)) for g in a.generators for h in b.generators),
        a.ambient_n,
    )


def ideal_power(ideal, k, cap=None):
    """Minimal generators of ``ideal**k`` from all multisets of ``k`` generators."""
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    n = ideal.ambient_n
    if k == 0:
        return MonomialIdeal.unit(n)
    if ideal.is_zero():
        return ideal
    cap = default_cap() if cap is None else cap
    count = comb(ideal.num_generators + k - 1, k)
    if count > cap:
        raise EnumerationCapExceeded(f"multisets of {k} generators", count, cap)
    sums = (
        tuple(map(sum, zip(*choice)))
        for choice in combinations_with_replacement(ideal.generators, k)
    )
    return minimalize(sums, n)


def count_ideal_monomials(ideal, t, cap=None):
    """Number of degree-``t`` monomials lying in ``ideal``, by exhaustive enumeration."""
    if t < 0:
        raise ValueError(f"degree must be non-negative, got {t}")
    n = ideal.ambient_n
    cap = default_cap() if cap is None else cap
    total = comb(t + n - 1, n - 1)
    if total > cap:
        raise EnumerationCapExceeded(f"degree-{t} monomials in {n} variables", total, cap)
    if ideal.is_zero():
        return 0
    return sum(1 for m in monomials_of_degree(n, t) if membership(m, ideal))


def lcm_degree(ideal):
    if ideal.is_zero():
        raise ValueError("lcm_degree is undefined for the zero ideal")
    return sum(max(col) for col in zip(*ideal.generators))


def degree_histogram(ideal):
    hist = {}
    for g in ideal.generators:
        hist[degree(g)] = hist.get(degree(g), 0) + 1
    return dict(sorted(hist.items()))


# --- text format -----------------------------------------------------------

_VAR_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_FACTOR_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def _parse_monomial(token, index, line):
    token = "".join(token.split())
    if token == "1":
        return (0,) * len(index)
    exps = [0] * len(index)
    for factor in token.split("*"):
        match = _FACTOR_RE.match(factor)
        if match is None:
            raise ParseError("malformed monomial factor", token=factor or token, line=line)
        name, power = match.group(1), match.group(2)
        if name not in index:
            raise ParseError("undeclared variable", token=name, line=line)
        e = 1 if power is None else int(power)
        if e < 1:
            raise ParseError("exponent must be at least 1", token=factor, line=line)
        exps[index[name]] += e
    return tuple(exps)


def parse_ideal(text):
    """Parse ``ring: x,y`` / ``ideal: x^2*y, x*y`` (newline- or ``;``-separated).

    Returns ``(variable_names, MonomialIdeal)``.  ``ideal: 0`` (or an empty
    generator list) is the zero ideal.
    """
    lines = [ln.strip() for ln in re.split(r"[;\n]", text) if ln.strip() and not ln.strip().startswith("#")]
    ring = ideal = None
    for ln in lines:
        key, sep, rest = ln.partition(":")
        if not sep:
            raise ParseError("expected 'ring:' or 'ideal:'", line=ln)
        key = key.strip().lower()
        if key == "ring":
            if ring is not None:
                raise ParseError("duplicate ring line", line=ln)
            ring = (ln, rest)
        elif key == "ideal":
            if ideal is not None:
                raise ParseError("duplicate ideal line", line=ln)
            ideal = (ln, rest)
        else:
            raise ParseError("unknown key", token=key, line=ln)
    if ring is None:
        raise ParseError("missing ring line")
    if ideal is None:
        raise ParseError("missing ideal line")
    ring_line, ring_rest = ring
    names = ["".join(v.split()) for v in ring_rest.split(",")]
    for v in names:
        if not _VAR_RE.match(v):
            raise ParseError("invalid variable name", token=v, line=ring_line)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable", line=ring_line)
    index = {v: r for r, v in enumerate(names)}
    ideal_line, ideal_rest = ideal
    tokens = [tok for tok in ideal_rest.split(",") if tok.strip()]
    if len(tokens) == 1 and tokens[0].strip() == "0":
        tokens = []
    gens = [_parse_monomial(tok, index, ideal_line) for tok in tokens]
    return tuple(names), minimalize(gens, len(names))


def format_monomial(m, names=None):
    if names is None:
        names = [f"x{r + 1}" for r in range(len(m))]
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_ideal(ideal, names=None):
    if ideal.is_zero():
        return "(0)"
    return "(" + ", ".join(format_monomial(g, names) for g in ideal.generators) + ")"
