#!/usr/bin/env python
"""Time automaton construction and polynomial extraction per r, cold caches each time."""
import argparse
import time

from baxter import counting


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rmax", type=int, default=6)
    args = ap.parse_args()
    print(f"{'r':>2} {'states':>7} {'edges':>7} {'build s':>8} {'poly s':>8} {'extras s':>9}")
    for r in range(1, args.rmax + 1):
        for fn in (counting.automaton_for, counting.skeleton_profile,
                   counting.eventual_polynomial, counting.extra_polynomials):
            fn.cache_clear()
        t0 = time.perf_counter()
        A = counting.automaton_for(r)
        t1 = time.perf_counter()
        counting.eventual_polynomial(r)
        t2 = time.perf_counter()
        counting.extra_polynomials(r)
        t3 = time.perf_counter()
        print(f"{r:>2} {len(A.states) - 1:>7} {len(A.edges):>7} {t1 - t0:>8.3f} "
              f"{t2 - t1:>8.3f} {t3 - t2:>9.3f}")


if __name__ == "__main__":
    main()
