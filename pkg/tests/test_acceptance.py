"""The ten acceptance criteria, each checked at exact rational equality."""

import random
from fractions import Fraction
from math import comb, factorial, prod

import pytest

from conftest import CORPUS, brute_quotient_count, brute_ring_count
from hilbertforge.asymptotics import ScanResult, analyze_power, fiber_dimension, newton_fit
from hilbertforge.bigraded import (
    BigradedAlgebra,
    BigradedShift,
    strand_coefficient,
    strand_coefficient_bounds,
    strand_hilbert_series,
)
from hilbertforge.hilbert import (
    HilbertSeries,
    coefficient,
    coefficient_table,
    dimension,
    e_from_h,
    extract_coefficients,
    flat_coefficient,
    h_from_e,
    hilbert_polynomial,
    hilbert_series_ideal,
    hilbert_series_quotient,
)
from hilbertforge.koszul import betti_table, euler_check, tor_series
from hilbertforge.monomial import MonomialIdeal, ideal_power, monomials_of_degree

WEIGHTS = [(1, 1), (1, 2), (2, 2), (1, 2, 3)]


def binom(c, j):
    """C(c, j) = c(c-1)...(c-j+1)/j! for any integer c; written out to stay independent of the library."""
    return Fraction(prod(c - r for r in range(j)), factorial(j))


def strand_grid(n=3):
    for p in WEIGHTS:
        alg = BigradedAlgebra(n, p)
        for a in range(3):
            for b in range(3):
                for k in range(b, b + 9):
                    yield alg, BigradedShift(a, b), k


def test_worked_example(report):
    m = MonomialIdeal.maximal(2)
    failures = []
    flat = {j: [] for j in range(5)}
    for k in range(1, 9):
        hs = hilbert_series_ideal(ideal_power(m, k))
        d = dimension(hs)
        for j in range(5):
            expected = (k + 1) * comb(k, j) - k * comb(k + 1, j)
            flat[j].append(flat_coefficient(hs, j))
            for i in range(3):
                got = coefficient(hs, i, j)
                want = expected if j <= d + i - 1 else 0
                if got != want:
                    failures.append(("value", k, i, j, got, want))
            if flat[j][-1] != expected:
                failures.append(("flat", k, j, flat[j][-1], expected))
    for j, values in flat.items():
        fit = newton_fit(ScanResult(0, j, list(range(1, 9)), values, [2] * 8))
        if not fit.stable or fit.degree > j + 1:
            failures.append(("degree", j, fit.degree))
    report("criterion 1 (worked example)", failures)


def test_shifted_free_module(report):
    failures = []
    for n in (1, 2, 3):
        for c in range(-5, 11):
            hs = HilbertSeries.free(n, c)
            for i in range(3):
                for j in range(n + i):
                    got = coefficient(hs, i, j)
                    if got != binom(c, j):
                        failures.append((n, c, i, j, got))
                    if (got == 0) != (0 <= c < j):
                        failures.append(("zero", n, c, i, j, got))
    report("criterion 2 (shifted free module)", failures)


def test_strand_sandwich(report):
    failures = []
    for p in WEIGHTS:
        alg = BigradedAlgebra(3, p)
        all_equal = True
        for a in range(3):
            for b in range(3):
                for k in range(b, b + 9):
                    for j in range(5):
                        i = max(0, j - alg.n + 1)
                        value = strand_coefficient(alg, BigradedShift(a, b), k, i, j)
                        lo, hi = strand_coefficient_bounds(alg, BigradedShift(a, b), k, j)
                        if not lo <= value <= hi:
                            failures.append((p, a, b, k, j, lo, value, hi))
                        all_equal &= lo == value == hi
        if all_equal != alg.equal_weights():
            failures.append(("equality", p, all_equal))
    report("criterion 3 (strand bounds)", failures)


def test_strand_two_routes(report):
    failures = []
    for alg, shift, k in strand_grid():
        hs = strand_hilbert_series(alg, shift, k)
        for i in range(3):
            series_route = extract_coefficients(hilbert_polynomial(hs, i)).entries
            for j in range(min(4, alg.n + i - 1) + 1):
                composition = strand_coefficient(alg, shift, k, i, j)
                if composition != series_route.get((i, j), 0):
                    failures.append((alg.weights, shift, k, i, j, composition, series_route.get((i, j))))
    report("criterion 4 (two-route agreement)", failures)


def _reject_modules():
    for alg, shift, k in strand_grid(n=2):
        yield ("strand", alg.weights, shift, k), strand_hilbert_series(alg, shift, k)
    for name, I in CORPUS.items():
        for k in range(1, 5):
            Ik = ideal_power(I, k)
            yield (name, "ideal", k), hilbert_series_ideal(Ik)
            yield (name, "quotient", k), hilbert_series_quotient(Ik)
    for name in ("maximal", "x2_xy_y3", "x2_y2"):
        for k in range(1, 4):
            table = betti_table(CORPUS[name], k)
            for l in range(CORPUS[name].ambient_n + 1):
                yield (name, "tor", k, l), tor_series(table, l)


def test_reject_relation(report):
    failures = []
    for label, hs in _reject_modules():
        if hs.is_zero():
            continue
        bad = coefficient_table(hs, max_i=3).reject_violations()
        if bad:
            failures.append((label, bad))
    report("criterion 5 (e^i_j = e^{i-1}_j below the diagonal)", failures)


def test_h_e_round_trip(report):
    rng = random.Random(20261016)
    failures = []
    for _ in range(1000):
        length = rng.randint(1, 12)
        h = [rng.randint(-50, 50) for _ in range(length)]
        e = [e_from_h(h, j) for j in range(length)]
        got = list(h_from_e(e, length - 1).padded())
        if got + [0] * (length - len(got)) != h:
            failures.append(("h->e->h", h))
        back = [rng.randint(-50, 50) for _ in range(length)]
        h2 = list(h_from_e(back, length - 1).padded())
        h2 += [0] * (length - len(h2))
        if [e_from_h(h2, j) for j in range(length)] != back:
            failures.append(("e->h->e", back))
    report("criterion 6 (h/e round trip)", failures)


def test_polynomiality_and_bounds(report):
    failures = []
    for name, I in CORPUS.items():
        equigenerated = I.is_equigenerated()
        for i in range(2):
            for j in range(4):
                scan, fit = analyze_power(I, i, j, k_max=12, window=3)
                if not fit.stable:
                    failures.append((name, i, j, "unstable"))
                    continue
                names = {v.bound for v in fit.verdicts}
                if "nu+j-1" not in names or ("ell+j-1" in names) != equigenerated:
                    failures.append((name, i, j, "missing verdict", names))
                if fit.degree > I.num_generators + j - 1:
                    failures.append((name, i, j, "nu", fit.degree))
                if equigenerated and fit.degree > fiber_dimension(I) + j - 1:
                    failures.append((name, i, j, "ell", fit.degree))
                failures += [(name, i, j, v.bound) for v in fit.verdicts if not v.passed]
    report("criterion 7 (polynomiality and degree bounds)", failures)


def test_betti_pipeline(report):
    failures = []
    m = MonomialIdeal.maximal(2)
    for k in range(1, 6):
        table = betti_table(m, k)
        if (table.total(0), table.total(1)) != (k + 1, k):
            failures.append(("maximal", k, table.total(0), table.total(1)))
    for name, I in CORPUS.items():
        for k in range(1, 5):
            bad = euler_check(I, k, betti_table(I, k))
            if bad:
                failures.append(("euler", name, k, bad))
    report("criterion 8 (Betti pipeline)", failures)


def _in_power(mono, gens, k):
    """Membership in I^k by peeling one generator at a time."""
    if k == 0:
        return True
    return any(
        all(a >= b for a, b in zip(mono, g)) and _in_power(tuple(a - b for a, b in zip(mono, g)), gens, k - 1)
        for g in gens
    )


def test_series_vs_brute_force(report):
    failures = []
    for name, I in CORPUS.items():
        n = I.ambient_n
        for k in range(1, 5):
            Ik = ideal_power(I, k)
            quotient, ideal_hs = hilbert_series_quotient(Ik), hilbert_series_ideal(Ik)
            for t in range(11):
                outside = sum(1 for mono in monomials_of_degree(n, t) if not _in_power(mono, I.generators, k))
                if outside != brute_quotient_count(Ik, t):
                    failures.append(("power", name, k, t))
                if quotient.coefficient(t) != outside:
                    failures.append(("quotient", name, k, t, quotient.coefficient(t), outside))
                if ideal_hs.coefficient(t) != brute_ring_count(n, t) - outside:
                    failures.append(("ideal", name, k, t))
    report("criterion 9 (brute-force oracle)", failures)


def test_vanishing_clause(report):
    failures = []
    checked = 0
    for name, I in CORPUS.items():
        for module in ("ideal", "quotient"):
            series = hilbert_series_ideal if module == "ideal" else hilbert_series_quotient
            per_k = [series(ideal_power(I, k)) for k in range(1, 13)]
            dims = [dimension(hs) for hs in per_k]
            scan = ScanResult(0, 0, list(range(1, 13)), [0] * 12, dims)
            ldim = scan.ldim(3)
            if ldim is None:
                failures.append((name, module, "dimension did not stabilize"))
                continue
            for i in range(3):
                for j in range(ldim + i, ldim + i + 3):
                    tail = [coefficient(hs, i, j) for hs, d in zip(per_k, dims) if d == ldim]
                    checked += 1
                    if any(tail):
                        failures.append((name, module, i, j, tail))
        for i in range(2):
            for j in range(4):
                scan, fit = analyze_power(I, i, j, k_max=12, window=3)
                for v in fit.verdicts:
                    if v.bound.startswith("vanish") and not v.passed:
                        failures.append((name, "scan", i, j))
    assert checked > 0
    report("criterion 10 (vanishing above ldim + i - 1)", failures)
