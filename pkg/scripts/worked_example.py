"""Higher iterated coefficients of powers of the maximal ideal of K[x, y].

Prints e_j(m^k) from the pipeline next to (k+1)C(k,j) - kC(k+1,j), then the
polynomial in k fitted to each column.
"""

import argparse
from math import comb

from hilbertforge.asymptotics import ScanResult, newton_fit
from hilbertforge.hilbert import flat_coefficient, hilbert_series_ideal
from hilbertforge.monomial import MonomialIdeal, ideal_power


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kmax", type=int, default=8)
    parser.add_argument("--jmax", type=int, default=4)
    args = parser.parse_args()

    m = MonomialIdeal.maximal(2)
    series = {k: hilbert_series_ideal(ideal_power(m, k)) for k in range(1, args.kmax + 1)}
    for j in range(args.jmax + 1):
        values = [flat_coefficient(series[k], j) for k in series]
        closed = [(k + 1) * comb(k, j) - k * comb(k + 1, j) for k in series]
        fit = newton_fit(ScanResult(0, j, list(series), values, [2] * len(values)))
        status = "ok" if values == closed else "MISMATCH"
        print(f"j={j}: {[str(v) for v in values]} {status}")
        print(f"      fit {fit.poly} (degree {fit.degree}, bound {j + 1})")


if __name__ == "__main__":
    main()
