"""Print twisted H^2 orders for the two basic one-relator families.

    python3 scripts/family_orders.py --kmax 15 --lmax 4
"""

import argparse

from surjtop.coeffsys import system_by_label
from surjtop.families import XY, example_k1, example_k2, twisted_order


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=11)
    ap.add_argument("--lmax", type=int, default=3)
    args = ap.parse_args()
    beta2 = system_by_label(XY, "beta2")

    print(f"{'k':>3}  {'x^(k+1) y x y':>14}")
    for k in range(1, args.kmax + 1, 2):
        print(f"{k:>3}  {twisted_order(example_k1(k), beta2):>14}")

    print()
    header = "  ".join(f"l={l:<3}" for l in range(args.lmax + 1))
    print(f"{'k':>3}  {header}")
    for k in range(1, args.kmax + 1, 2):
        row = "  ".join(f"{twisted_order(example_k2(k, l), beta2):<5}" for l in range(args.lmax + 1))
        print(f"{k:>3}  {row}")


if __name__ == "__main__":
    main()
