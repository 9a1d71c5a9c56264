"""Power iteration for the Ruelle operator: eigenvalue estimates, minima and near-zeros.

    python3 scripts/ruelle_explore.py --L 0,3 --depths 12,16,20
"""

import argparse

from mockfourier import pair
from mockfourier.config import parse_ints
from mockfourier.ruelle import extreme_b_cycles, fixed_point_iterate, ruelle_sup_series


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--R", type=int, default=4)
    ap.add_argument("--B", type=parse_ints, default=(0, 2))
    ap.add_argument("--L", type=parse_ints, default=(0, 3))
    ap.add_argument("--depths", type=parse_ints, default=(12, 16, 20))
    ap.add_argument("--spare", type=int, default=4, help="levels left after iterating")
    args = ap.parse_args()

    p = pair(args.R, args.B, args.L)
    print(f"# {p.label()}")
    print(f"# extreme B-cycles: {'; '.join(map(str, extreme_b_cycles(p)))}")
    print("depth,iters,eigenvalue,min_h,near_zeros")
    for depth in args.depths:
        rep = fixed_point_iterate(p, depth, depth - args.spare)
        zeros = " ".join(f"{x:.6f}" for x in rep.near_zeros[:8])
        print(f"{depth},{depth - args.spare},{rep.eigenvalue:.6f},{rep.min_value:.3e},{zeros}")
    depth = max(args.depths)
    sups = ruelle_sup_series(p, depth)
    print("n,sup,nth_root")
    for n in range(1, depth - args.spare + 1):
        print(f"{n},{sups[n]:.6g},{sups[n] ** (1 / n):.6f}")


if __name__ == "__main__":
    main()
