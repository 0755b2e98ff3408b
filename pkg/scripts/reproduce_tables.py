#!/usr/bin/env python
"""Print the counting polynomials and the extra-ones splits for r = 1..RMAX."""
import argparse
import time

from baxter.counting import eventual_polynomial, extra_polynomials, skeleton_profile


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rmax", type=int, default=6)
    ap.add_argument("--extras-upto", type=int, default=4,
                    help="print extra-ones splits for r up to this value")
    args = ap.parse_args()

    print(f"{'r':>2}  {'skeletons':>9}  {'k >=':>4}  polynomial")
    for r in range(1, args.rmax + 1):
        t = time.perf_counter()
        p = eventual_polynomial(r)
        n = sum(skeleton_profile(r).values())
        print(f"{r:>2}  {n:>9}  {p.threshold:>4}  {p}   [{time.perf_counter() - t:.2f}s]")

    for r in range(2, args.extras_upto + 1):
        print(f"\nr={r}, split by extra 1's")
        for e, q in extra_polynomials(r).items():
            print(f"  {e}  weight k+{e}  {q}  (k >= {q.threshold})")


if __name__ == "__main__":
    main()
