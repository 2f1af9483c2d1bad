"""Graded Betti tables of I^k by Koszul homology, with the Euler characteristic check."""

import argparse

from hilbertforge.koszul import betti_table, euler_check
from hilbertforge.monomial import parse_ideal


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("ideal", help="e.g. 'ring: x,y,z; ideal: x*y, y*z, z*x'")
    parser.add_argument("--kmax", type=int, default=4)
    args = parser.parse_args()

    _, ideal = parse_ideal(args.ideal)
    for k in range(1, args.kmax + 1):
        table = betti_table(ideal, k)
        bad = euler_check(ideal, k, table)
        print(f"k={k}  euler={'ok' if not bad else bad}")
        for l in table.rows():
            print(f"  l={l}: " + " ".join(f"{t}:{b}" for t, b in table.row(l).items()))


if __name__ == "__main__":
    main()
