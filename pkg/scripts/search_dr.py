"""Rank residue systems L mod R by the Mahler measure of p_L, for several R.

    python3 scripts/search_dr.py --R 2,3,4,5 --bound 12
"""

import argparse
import math

from mockfourier.config import parse_ints
from mockfourier.mahler import search_dr


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--R", type=parse_ints, default=(2, 3, 4, 5))
    ap.add_argument("--bound", type=int, default=12)
    ap.add_argument("--top", type=int, default=5)
    args = ap.parse_args()

    print("R,rank,L,mahler,sqrt_R")
    for R in args.R:
        for i, (L, v) in enumerate(search_dr(R, args.bound, args.top), 1):
            print(f"{R},{i},{';'.join(map(str, L))},{v:.9f},{math.sqrt(R):.6f}")


if __name__ == "__main__":
    main()
