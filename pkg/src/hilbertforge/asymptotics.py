"""Scans of coefficients over the strand index ``k`` and exact polynomial fits.

"Polynomial for ``k >> 0``" is detected from the scanned values alone: a
suffix qualifies when its forward-difference table reaches an identically
zero row that still has at least ``window`` entries, i.e. the interpolating
polynomial is confirmed by ``window`` points outside its support.  Nothing
is ever extrapolated; a scan with no qualifying suffix is reported unstable.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from hilbertforge.bigraded import strand_coefficient, strand_hilbert_series
from hilbertforge.errors import EnumerationCapExceeded, InsufficientData
from hilbertforge.hilbert import coefficient, dimension, hilbert_series_ideal
from hilbertforge.linalg import rank
from hilbertforge.monomial import ideal_power
from hilbertforge.poly import QPoly, interpolate


@dataclass
class ScanResult:
    i: int
    j: int
    k_values: list
    values: list
    dims: list
    truncated: bool = False

    @property
    def k_range(self):
        if not self.k_values:
            return None
        return (self.k_values[0], self.k_values[-1])

    def dims_stable(self, window=3):
        return detect_stabilization(self, window) is not None

    def ldim(self, window=3):
        """Eventual dimension of the strands, or None if the tail is not yet constant."""
        k0 = detect_stabilization(self, window)
        if k0 is None:
            return None
        return self.dims[-1]


@dataclass(frozen=True)
class Verdict:
    bound: str
    value: int
    deg: int
    passed: bool

    def to_json(self):
        return {"bound": self.bound, "value": self.value, "deg": self.deg, "pass": self.passed}


@dataclass
class KPolynomial:
    poly: QPoly | None
    stable_from: int | None
    window: int
    confirmations: int = 0
    verdicts: list = field(default_factory=list)

    @property
    def stable(self):
        return self.poly is not None

    @property
    def degree(self):
        return None if self.poly is None else self.poly.degree

    def to_json(self):
        return {
            "coeffs": None if self.poly is None else self.poly.to_json(),
            "deg": self.degree,
            "stable_from": self.stable_from,
            "window": self.window,
            "verdicts": [v.to_json() for v in self.verdicts],
        }


@dataclass(frozen=True)
class BoundContext:
    """What is known about the module family: ``m`` (number of ``y`` variables),
    ``nu`` (generators of ``I``), ``ell`` (fiber dimension, equigenerated only)
    and ``ldim`` (eventual Krull dimension of the strands)."""

    i: int
    j: int
    m: int | None = None
    nu: int | None = None
    ell: int | None = None
    ldim: int | None = None


# --- scanning -----------------------------------------------------------------

@lru_cache(maxsize=512)
def power_series(ideal, k, cap=None):
    """Hilbert series of ``I**k`` (cached)."""
    return hilbert_series_ideal(ideal_power(ideal, k, cap=cap))


def _power_point(args):
    ideal, k, i, j, cap = args
    hs = power_series(ideal, k, cap)
    return coefficient(hs, i, j), dimension(hs)


def _run_scan(func, jobs, workers):
    """Evaluate jobs in order, stopping at the first cap breach."""
    results = []
    truncated = False
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(func, job) for job in jobs]
            for fut in futures:
                try:
                    results.append(fut.result())
                except EnumerationCapExceeded:
                    if not results:
                        raise
                    truncated = True
                    break
            for fut in futures:
                fut.cancel()
    else:
        for job in jobs:
            try:
                results.append(func(job))
            except EnumerationCapExceeded:
                if not results:
                    raise
                truncated = True
                break
    return results, truncated


def scan_power_coefficients(ideal, i, j, k_max=12, k_min=1, cap=None, workers=1):
    """``e^i_j(I**k)`` and ``dim I**k`` for ``k = k_min..k_max``.

    The value is 0 whenever ``j`` exceeds ``dim + i - 1``.  A scan that hits
    the enumeration cap stops early and is marked ``truncated``.
    """
    if k_max < 3:
        raise ValueError(f"k_max must be at least 3, got {k_max}")
    ks = list(range(k_min, k_max + 1))
    jobs = [(ideal, k, i, j, cap) for k in ks]
    results, truncated = _run_scan(_power_point, jobs, workers)
    ks = ks[: len(results)]
    return ScanResult(
        i, j, ks, [v for v, _ in results], [d for _, d in results], truncated=truncated
    )


def _strand_point(args):
    alg, shift, k, i, j = args
    if 0 <= j <= alg.n + i - 1:
        value = Fraction(strand_coefficient(alg, shift, k, i, j))
    else:
        value = Fraction(0)
    return value, dimension(strand_hilbert_series(alg, shift, k))


def scan_strand_coefficients(alg, shift, i, j, k_max=12, k_min=0, workers=1):
    """``e^i_j(A(-a,-b)_k)`` for ``k = k_min..k_max`` by composition sums."""
    ks = list(range(k_min, k_max + 1))
    results, truncated = _run_scan(_strand_point, [(alg, shift, k, i, j) for k in ks], workers)
    return ScanResult(
        i, j, ks[: len(results)], [v for v, _ in results], [d for _, d in results], truncated
    )


# --- fitting --------------------------------------------------------------------

def _zero_row_depth(values, window):
    """Depth ``r`` of the first all-zero difference row with at least ``window`` entries."""
    row = list(values)
    r = 0
    while len(row) >= window:
        if all(v == 0 for v in row):
            return r
        row = [b - a for a, b in zip(row, row[1:])]
        r += 1
    return None


def newton_fit(scan, window=3):
    ks, vs = scan.k_values, [Fraction(v) for v in scan.values]
    if window < 1:
        raise ValueError(f"window must be positive, got {window}")
    if len(vs) < window + 2:
        raise InsufficientData(f"need at least {window + 2} scanned values, got {len(vs)}")
    if any(b - a != 1 for a, b in zip(ks, ks[1:])):
        raise ValueError("scan must be over consecutive k")
    for start in range(len(vs)):
        if len(vs) - start < window:
            break
        depth = _zero_row_depth(vs[start:], window)
        if depth is None:
            continue
        poly = interpolate(ks[start:start + depth], vs[start:start + depth])
        assert all(poly(k) == v for k, v in zip(ks[start:], vs[start:]))
        return KPolynomial(poly, ks[start], window, confirmations=len(vs) - start - depth)
    return KPolynomial(None, None, window)


def fit_scan(scan, window=3):
    """Like :func:`newton_fit`, but a scan cut short by the cap is reported unstable instead of raising."""
    if scan.truncated and len(scan.values) < window + 2:
        return KPolynomial(None, None, window)
    return newton_fit(scan, window)


def verify_degree_bounds(fit, context, scan=None):
    """One verdict per applicable bound; a failed verdict is reported, not raised."""
    if not fit.stable:
        raise ValueError("cannot verify bounds of an unstable fit")
    deg, j, i = fit.degree, context.j, context.i
    verdicts = []
    for name, base in (("m+j-1", context.m), ("nu+j-1", context.nu), ("ell+j-1", context.ell)):
        if base is not None:
            value = base + j - 1
            verdicts.append(Verdict(name, value, deg, deg <= value))
    if context.ldim is not None and j > context.ldim + i - 1:
        tail = [] if scan is None else [
            v for k, v in zip(scan.k_values, scan.values) if k >= fit.stable_from
        ]
        vanishes = deg == -1 and all(v == 0 for v in tail)
        verdicts.append(Verdict("vanish:j>ldim+i-1", context.ldim + i - 1, deg, vanishes))
    fit.verdicts = verdicts
    return verdicts


def detect_stabilization(scan, window=3):
    """Least ``k0`` with constant dims on ``[k0, k_max]``; None if that tail is shorter than ``window``."""
    dims = scan.dims
    if not dims:
        return None
    start = len(dims) - 1
    while start > 0 and dims[start - 1] == dims[-1]:
        start -= 1
    if len(dims) - start < window:
        return None
    return scan.k_values[start]


def fiber_dimension(ideal):
    """Analytic spread of an equigenerated monomial ideal: rank of its exponent matrix."""
    if not ideal.is_equigenerated():
        raise ValueError(f"ideal is not generated in a single degree: degrees {ideal.degrees()}")
    return rank([list(g) for g in ideal.generators])


# --- pipelines ----------------------------------------------------------------

def analyze_power(ideal, i, j, k_max=12, window=3, cap=None, workers=1):
    """Scan ``e^i_j(I**k)``, fit it and attach the degree-bound verdicts."""
    scan = scan_power_coefficients(ideal, i, j, k_max=k_max, cap=cap, workers=workers)
    fit = fit_scan(scan, window)
    if fit.stable:
        ell = fiber_dimension(ideal) if ideal.is_equigenerated() and not ideal.is_zero() else None
        ctx = BoundContext(i, j, nu=ideal.num_generators, ell=ell, ldim=scan.ldim(window))
        verify_degree_bounds(fit, ctx, scan)
    return scan, fit


def analyze_strand(alg, shift, i, j, k_max=12, window=3, workers=1):
    scan = scan_strand_coefficients(alg, shift, i, j, k_max=k_max, k_min=max(shift.b, 0), workers=workers)
    fit = fit_scan(scan, window)
    if fit.stable:
        ctx = BoundContext(i, j, m=alg.m, ldim=scan.ldim(window))
        verify_degree_bounds(fit, ctx, scan)
    return scan, fit


def scan_to_json(scan, fit=None):
    out = {
        "i": scan.i,
        "j": scan.j,
        "k": list(scan.k_values),
        "e": [str(v) for v in scan.values],
        "dim": list(scan.dims),
    }
    if scan.truncated:
        out["truncated"] = True
    if fit is not None:
        out["fit"] = fit.to_json()
    return out


def scan_to_csv(scan):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "e", "dim"])
    for k, v, d in zip(scan.k_values, scan.values, scan.dims):
        writer.writerow([k, str(v), d])
    return buf.getvalue()
