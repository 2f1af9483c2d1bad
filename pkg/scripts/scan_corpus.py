"""Scan e^i_j(I^k) over the small ideal corpus and check the degree bounds.

Writes one JSON line per (ideal, i, j) to stdout.
"""

import argparse
import json

from hilbertforge.asymptotics import analyze_power
from hilbertforge.monomial import format_ideal, parse_ideal

CORPUS = {
    "maximal": "ring: x,y; ideal: x, y",
    "x2_xy_y3": "ring: x,y; ideal: x^2, x*y, y^3",
    "triangle": "ring: x,y,z; ideal: x*y, y*z, z*x",
    "x2_y2": "ring: x,y; ideal: x^2, y^2",
    "mixed": "ring: x,y; ideal: x^3, x*y, y^4",
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kmax", type=int, default=12)
    parser.add_argument("--window", type=int, default=3)
    parser.add_argument("--max-i", type=int, default=1)
    parser.add_argument("--max-j", type=int, default=3)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    failures = 0
    for name, text in CORPUS.items():
        names, ideal = parse_ideal(text)
        for i in range(args.max_i + 1):
            for j in range(args.max_j + 1):
                scan, fit = analyze_power(ideal, i, j, k_max=args.kmax, window=args.window, workers=args.workers)
                ok = fit.stable and all(v.passed for v in fit.verdicts)
                failures += not ok
                row = {"ideal": format_ideal(ideal, names), "i": i, "j": j, "ok": ok, "fit": fit.to_json()}
                print(json.dumps(row, sort_keys=True))
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
