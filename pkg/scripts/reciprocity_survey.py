"""Run every fixture through both counting routes and both reciprocity
checks and print a summary table.

Usage:
    python scripts/reciprocity_survey.py [--max-n 4]
"""

import argparse
import time

from orbitpoly.counting import orbital_order_polynomial, verify_reciprocity
from orbitpoly.fixtures import graph_suite, poset_suite
from orbitpoly.graph import orbital_chromatic_polynomial, verify_graph_reciprocity


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=4)
    args = parser.parse_args()
    failures = 0

    print(f"{'poset case':<26}{'|G|':>5}  {'routes':<7}{'recip':<6} weak orbital polynomial")
    for case in poset_suite():
        t = time.perf_counter()
        weak = orbital_order_polynomial(case.poset, case.group, verify=True, max_n=args.max_n)
        orbital_order_polynomial(case.poset, case.group, strict=True, verify=True, max_n=args.max_n)
        ok = verify_reciprocity(case.poset, case.group, args.max_n).passed
        failures += not ok
        print(f"{case.name:<26}{case.group.order:>5}  {'ok':<7}{'ok' if ok else 'FAIL':<6} {weak.polynomial}"
              f"  [{time.perf_counter() - t:.2f}s]")

    print()
    print(f"{'graph case':<26}{'|G|':>5}  {'routes':<7}{'recip':<6} orbital chromatic polynomial")
    for case in graph_suite():
        t = time.perf_counter()
        chi = orbital_chromatic_polynomial(case.graph, case.group, verify=True).polynomial
        ok = verify_graph_reciprocity(case.graph, case.group, min(args.max_n, 3)).passed
        failures += not ok
        print(f"{case.name:<26}{case.group.order:>5}  {'ok':<7}{'ok' if ok else 'FAIL':<6} {chi}"
              f"  [{time.perf_counter() - t:.2f}s]")

    print(f"\n{failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
