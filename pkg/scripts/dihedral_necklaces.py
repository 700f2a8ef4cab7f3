"""Orbit counts of proper colorings of the k-cycle under rotations and
reflections, next to the raw coloring counts they come from.

D_k = Z_k/2 is expected for odd k only, and D_k = |Col|/2k for prime k only;
even k rows show where both break.

Usage:
    python scripts/dihedral_necklaces.py [--max-k 7] [--max-n 6]
"""

import argparse
from fractions import Fraction

from orbitpoly.fixtures import gens
from orbitpoly.graph import cycle_graph, orbital_chromatic_polynomial, proper_colorings
from orbitpoly.permgroup import dihedral_group
from orbitpoly.polynomial import evaluate


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-k", type=int, default=7)
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()

    for k in range(3, args.max_k + 1):
        graph = cycle_graph(k)
        dk = orbital_chromatic_polynomial(graph, dihedral_group(k), verify=k <= 6).polynomial
        rotation = gens(k, "(" + " ".join(str(i) for i in range(k)) + ")")
        zk = orbital_chromatic_polynomial(graph, rotation, verify=False).polynomial
        print(f"k={k}  D_k: {dk}")
        print(f"{'n':>4} {'|Col|':>8} {'Z_k':>8} {'D_k':>8}  D_k = Z_k/2  D_k = |Col|/2k")
        for n in range(1, args.max_n + 1):
            col = len(proper_colorings(graph, n))
            d, z = evaluate(dk, n), evaluate(zk, n)
            print(f"{n:>4} {col:>8} {str(z):>8} {str(d):>8}  {str(2 * d == z):>11}  {str(d == Fraction(col, 2 * k)):>13}")
        print()


if __name__ == "__main__":
    main()
