"""Exact Hilbert series and iterated Hilbert coefficients from the command line.

Exit status: 0 success, 1 input error (or a failed oracle/verification),
2 enumeration-cap abort, 3 unstable fit under ``--require-stable``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from math import comb
from pathlib import Path

from hilbertforge.asymptotics import analyze_power, fiber_dimension, scan_to_csv, scan_to_json
from hilbertforge.bigraded import (
    BigradedAlgebra,
    BigradedShift,
    strand_coefficient,
    strand_coefficient_bounds,
    strand_decomposition,
    strand_hilbert_series,
)
from hilbertforge.config import load_settings
from hilbertforge.errors import EnumerationCapExceeded, OracleMismatch, ParseError
from hilbertforge.hilbert import (
    coefficient,
    coefficient_table,
    dimension,
    extract_coefficients,
    h_vector,
    hilbert_polynomial,
    hilbert_series_ideal,
    hilbert_series_quotient,
)
from hilbertforge.koszul import (
    betti_table,
    euler_check,
    generator_histogram_mismatch,
    scan_betti,
)
from hilbertforge.linalg import MODULAR_PRIME, rank_by_minors
from hilbertforge.monomial import count_ideal_monomials, format_ideal, ideal_power, parse_ideal

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_UNSTABLE = 0, 1, 2, 3
ORACLE_DEGREE = 10


class _Unstable(Exception):
    pass


def _read_ideal(spec):
    try:
        is_file = Path(spec).is_file()
    except OSError:
        is_file = False
    if is_file:
        spec = Path(spec).read_text()
    return parse_ideal(spec)


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args, payload, table_lines, csv_text=None):
    fmt = args.format
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    elif fmt == "csv":
        if csv_text is None:
            raise ParseError(f"subcommand {args.command!r} has no CSV output")
        sys.stdout.write(csv_text)
    else:
        sys.stdout.write("\n".join(table_lines) + "\n")


def _module_series(ideal, module, power, cap):
    target = ideal_power(ideal, power, cap=cap) if power != 1 else ideal
    if module == "quotient":
        return target, hilbert_series_quotient(target)
    return target, hilbert_series_ideal(target)


def _oracle_series(target, module, hs, cap):
    n = target.ambient_n
    for t in range(ORACLE_DEGREE + 1):
        inside = count_ideal_monomials(target, t, cap=cap)
        expected = inside if module == "ideal" else comb(t + n - 1, n - 1) - inside
        if hs.coefficient(t) != expected:
            raise OracleMismatch(
                f"series coefficient at degree {t} is {hs.coefficient(t)}, brute force gives {expected}"
            )


# --- subcommands ----------------------------------------------------------------

def cmd_hilbert(args, settings):
    names, ideal = _read_ideal(args.ideal)
    target, hs = _module_series(ideal, args.module, args.power, settings.enum_cap)
    if args.oracle:
        _oracle_series(target, args.module, hs, settings.enum_cap)
    d = dimension(hs)
    payload = {"series": hs.to_json(), "dim": d}
    lines = [
        f"module: {'S/' if args.module == 'quotient' else ''}{format_ideal(target, names)}",
        f"numerator: {list(hs.numerator)}",
        f"shift: {hs.shift}",
        f"dim: {d}",
    ]
    _emit(args, payload, lines)


def cmd_coeffs(args, settings):
    names, ideal = _read_ideal(args.ideal)
    target, hs = _module_series(ideal, args.module, args.power, settings.enum_cap)
    if args.oracle:
        _oracle_series(target, args.module, hs, settings.enum_cap)
    d = dimension(hs)
    if args.j is not None:
        i = args.i if args.i is not None else max(0, args.j - d + 1)
        value = coefficient(hs, i, args.j)
        payload = {"d": d, "i": i, "j": args.j, "e": str(value)}
        _emit(args, payload, [f"e^{i}_{args.j} = {value}"], f"i,j,e\n{i},{args.j},{value}\n")
        return
    max_i = args.i if args.i is not None else 2
    table = coefficient_table(hs, max_i)
    polys = [hilbert_polynomial(hs, i).to_json() for i in range(max_i + 1)]
    payload = {"d": d, "polynomials": polys}
    lines = [f"d = {d}"]
    csv_rows = ["i,j,e"]
    for i in range(max_i + 1):
        row = table.row(i)
        lines.append(f"i={i}: " + " ".join(f"e{j}={v}" for j, v in enumerate(row)))
        csv_rows.extend(f"{i},{j},{v}" for j, v in enumerate(row))
    _emit(args, payload, lines, "\n".join(csv_rows) + "\n")


def cmd_hvector(args, settings):
    names, ideal = _read_ideal(args.ideal)
    target, hs = _module_series(ideal, args.module, args.power, settings.enum_cap)
    if args.oracle:
        _oracle_series(target, args.module, hs, settings.enum_cap)
    h = h_vector(hs)
    d = dimension(hs)
    payload = {"d": d, "offset": h.offset, "h": list(h.entries)}
    _emit(args, payload, [f"d: {d}", f"offset: {h.offset}", f"h: {list(h.entries)}"])


def cmd_strand(args, settings):
    if len(args.p) != args.m:
        raise ParseError(f"--p has {len(args.p)} weights but --m is {args.m}", token=",".join(map(str, args.p)))
    alg = BigradedAlgebra(args.n, tuple(args.p))
    shift = BigradedShift(args.a, args.b)
    decomposition = strand_decomposition(alg, shift, args.k)
    hs = strand_hilbert_series(alg, shift, args.k)
    payload = {"decomposition": decomposition.to_json(), "series": hs.to_json()}
    lines = [
        f"A(-{args.a},-{args.b})_{args.k} over n={args.n}, p={list(args.p)}",
        "shifts: " + " ".join(f"{c}^{mult}" for c, mult in decomposition.shifts),
    ]
    if args.j is not None:
        i = args.i if args.i is not None else max(0, args.j - args.n + 1)
        value = strand_coefficient(alg, shift, args.k, i, args.j)
        payload.update({"i": i, "j": args.j, "e": str(value)})
        lines.append(f"e^{i}_{args.j} = {value}")
        if args.k >= args.b:
            lo, hi = strand_coefficient_bounds(alg, shift, args.k, args.j)
            payload["bounds"] = [lo, hi]
            lines.append(f"bounds: [{lo}, {hi}]")
        if args.oracle and 0 <= args.j <= args.n + i - 1:
            via_series = extract_coefficients(hilbert_polynomial(hs, i)).entries.get((i, args.j), 0)
            if via_series != value:
                raise OracleMismatch(f"composition sum {value} != series route {via_series}")
    _emit(args, payload, lines)


def _require_stable(args, fit):
    if args.require_stable and not fit.stable:
        raise _Unstable("fit did not stabilize within the scanned range")


def cmd_scan_power(args, settings):
    names, ideal = _read_ideal(args.ideal)
    k_max = args.kmax or settings.k_max
    window = args.window or settings.window
    if args.oracle:
        for k in range(1, min(4, k_max) + 1):
            target = ideal_power(ideal, k, cap=settings.enum_cap)
            _oracle_series(target, "ideal", hilbert_series_ideal(target), settings.enum_cap)
    scan, fit = analyze_power(
        ideal, args.i, args.j, k_max=k_max, window=window, cap=settings.enum_cap, workers=args.threads
    )
    _emit_scan(args, scan, fit, f"e^{args.i}_{args.j}(I^k), I = {format_ideal(ideal, names)}")
    _require_stable(args, fit)
    return EXIT_CAP if scan.truncated else EXIT_OK


def _emit_scan(args, scan, fit, title):
    lines = [title, "k\te\tdim"]
    lines += [f"{k}\t{v}\t{d}" for k, v, d in zip(scan.k_values, scan.values, scan.dims)]
    if scan.truncated:
        lines.append("scan truncated at the enumeration cap")
    if fit.stable:
        lines.append(f"fit: {fit.poly}  (degree {fit.degree}, stable from k={fit.stable_from})")
        for v in fit.verdicts:
            lines.append(f"  {v.bound}: deg {v.deg} <= {v.value}? {'pass' if v.passed else 'FAIL'}")
    else:
        lines.append("fit: unstable")
    _emit(args, scan_to_json(scan, fit), lines, scan_to_csv(scan))


def cmd_betti(args, settings):
    names, ideal = _read_ideal(args.ideal)
    modulus = MODULAR_PRIME if args.modular else None
    table = betti_table(ideal, args.k, cap=settings.enum_cap, modulus=modulus)
    if args.oracle:
        bad = euler_check(ideal, args.k, table, cap=settings.enum_cap)
        if bad:
            raise OracleMismatch(f"Euler characteristic fails in degrees {bad}")
        if generator_histogram_mismatch(ideal, args.k, table, cap=settings.enum_cap):
            raise OracleMismatch("row 0 differs from the generator degree histogram")
        wider = betti_table(ideal, args.k, extra=2, cap=settings.enum_cap, modulus=modulus)
        if wider.entries != table.entries:
            raise OracleMismatch("raising the truncation bound changed the table")
    lines = [f"Betti table of I^{args.k}, I = {format_ideal(ideal, names)}", "l\tt\tbeta"]
    lines += [f"{l}\t{t}\t{b}" for (l, t), b in sorted(table.entries.items())]
    _emit(args, table.to_json(), lines, table.to_csv())


def cmd_scan_betti(args, settings):
    names, ideal = _read_ideal(args.ideal)
    k_max = args.kmax or 8
    window = args.window or settings.window
    modulus = MODULAR_PRIME if args.modular else None
    if args.oracle:
        for k in range(1, min(3, k_max) + 1):
            bad = euler_check(ideal, k, betti_table(ideal, k, cap=settings.enum_cap), cap=settings.enum_cap)
            if bad:
                raise OracleMismatch(f"Euler characteristic fails for k={k} in degrees {bad}")
    scan, fit = scan_betti(
        ideal, args.l, args.i, args.j, k_max=k_max, window=window, cap=settings.enum_cap, modulus=modulus
    )
    _emit_scan(args, scan, fit, f"e^{args.i}_{args.j}(Tor_{args.l}(K, I^k)), I = {format_ideal(ideal, names)}")
    _require_stable(args, fit)
    return EXIT_CAP if scan.truncated else EXIT_OK


def cmd_fiber_dim(args, settings):
    names, ideal = _read_ideal(args.ideal)
    ell = fiber_dimension(ideal)
    if args.oracle:
        brute = rank_by_minors([list(g) for g in ideal.generators])
        if brute != ell:
            raise OracleMismatch(f"elimination rank {ell} != minors rank {brute}")
    _emit(args, {"ell": ell, "nu": ideal.num_generators}, [f"ell: {ell}", f"nu: {ideal.num_generators}"])


def cmd_verify(args, settings):
    names, ideal = _read_ideal(args.ideal)
    k_max = args.kmax or settings.k_max
    window = args.window or settings.window
    if args.oracle:
        for k in range(1, min(4, k_max) + 1):
            target = ideal_power(ideal, k, cap=settings.enum_cap)
            _oracle_series(target, "ideal", hilbert_series_ideal(target), settings.enum_cap)
    results = []
    lines = [f"I = {format_ideal(ideal, names)}"]
    failed = unstable = truncated = False
    for i in range(args.max_i + 1):
        for j in range(args.max_j + 1):
            scan, fit = analyze_power(
                ideal, i, j, k_max=k_max, window=window, cap=settings.enum_cap, workers=args.threads
            )
            truncated |= scan.truncated
            verdicts = [v.to_json() for v in fit.verdicts]
            ok = fit.stable and all(v.passed for v in fit.verdicts)
            failed |= fit.stable and not ok
            unstable |= not fit.stable
            results.append({"i": i, "j": j, "deg": fit.degree, "stable_from": fit.stable_from, "verdicts": verdicts})
            status = "unstable" if not fit.stable else ("pass" if ok else "FAIL")
            lines.append(f"i={i} j={j} deg={fit.degree} {status}")
    _emit(args, {"ideal": [list(g) for g in ideal.generators], "results": results, "pass": not failed}, lines)
    if failed:
        return EXIT_INPUT
    if args.require_stable and unstable:
        return EXIT_UNSTABLE
    return EXIT_CAP if truncated else EXIT_OK


# --- parser ---------------------------------------------------------------------

def _common(p):
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--json", dest="format", action="store_const", const="json", help="alias for --format json")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force routes")
    p.add_argument("--threads", type=int, default=None, help="worker processes for scans (default: CPU count)")
    p.add_argument("--enum-cap", type=int, default=None)
    p.add_argument("--config", default=None, help="path to hilbertforge.toml")
    p.add_argument("--require-stable", action="store_true", help="exit 3 if a fit does not stabilize")


def _ideal_arg(p, module=False):
    p.add_argument("--ideal", required=True, help="inline 'ring: x,y; ideal: x^2, x*y' or a file path")
    if module:
        p.add_argument("--module", choices=["quotient", "ideal"], default="quotient")
        p.add_argument("--power", type=int, default=1, help="use I^power instead of I")


def build_parser():
    parser = argparse.ArgumentParser(prog="hilbertforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert series and dimension")
    _ideal_arg(p, module=True)
    _common(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("coeffs", help="higher iterated Hilbert coefficients")
    _ideal_arg(p, module=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    _common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("hvector", help="h-vector of the reduced numerator")
    _ideal_arg(p, module=True)
    _common(p)
    p.set_defaults(func=cmd_hvector)

    p = sub.add_parser("strand", help="strand A(-a,-b)_k of a bigraded free module")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=_int_list, required=True, help="comma-separated weights")
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    _common(p)
    p.set_defaults(func=cmd_strand)

    scans = (
        ("scan-power", cmd_scan_power, "scan e^i_j(I^k) over k and fit a polynomial"),
        ("scan-betti", cmd_scan_betti, "scan e^i_j(Tor_l(K, I^k)) over k and fit a polynomial"),
    )
    for name, func, text in scans:
        p = sub.add_parser(name, help=text)
        _ideal_arg(p)
        if name == "scan-betti":
            p.add_argument("--l", type=int, required=True)
            p.add_argument("--modular", action="store_true", help=f"rank modulo {MODULAR_PRIME} (probabilistic)")
        p.add_argument("--i", type=int, default=0)
        p.add_argument("--j", type=int, default=0)
        p.add_argument("--kmax", type=int, default=None)
        p.add_argument("--window", type=int, default=None)
        _common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("betti", help="graded Betti numbers of I^k via Koszul homology")
    _ideal_arg(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--modular", action="store_true", help=f"rank modulo {MODULAR_PRIME} (probabilistic)")
    _common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("fiber-dim", help="analytic spread of an equigenerated ideal")
    _ideal_arg(p)
    _common(p)
    p.set_defaults(func=cmd_fiber_dim)

    p = sub.add_parser("verify", help="check polynomiality and degree bounds of e^i_j(I^k)")
    _ideal_arg(p)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--max-i", type=int, default=1)
    p.add_argument("--max-j", type=int, default=3)
    _common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_settings(args.config)
        if args.enum_cap is not None:
            settings = replace(settings, enum_cap=args.enum_cap)
        if args.threads is None:
            args.threads = settings.threads or os.cpu_count() or 1
        status = args.func(args, settings)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except _Unstable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return status or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
