"""Word-average Delta(N m_L) as the depth grows, with Elton estimates over several seeds.

Used to decide whether a gap to a tabulated value is discretization error.

    python3 scripts/depth_convergence.py --L 0,5
"""

import argparse

import numpy as np

from mockfourier import pair
from mockfourier.config import parse_ints
from mockfourier.ruelle import delta_estimate


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--R", type=int, default=4)
    ap.add_argument("--B", type=parse_ints, default=(0, 2))
    ap.add_argument("--L", type=parse_ints, default=(0, 5))
    ap.add_argument("--depths", type=parse_ints, default=(10, 14, 18, 22, 24))
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--orbit", type=int, default=10**6)
    args = ap.parse_args()

    p = pair(args.R, args.B, args.L)
    print(f"# {p.label()}")
    print("method,param,delta")
    for depth in args.depths:
        print(f"word,{depth},{delta_estimate(p, depth=depth).value:.9f}")
    vals = []
    for seed in range(args.seeds):
        v = delta_estimate(p, "elton", orbit_length=args.orbit, seed=seed).value
        vals.append(v)
        print(f"elton,{seed},{v:.9f}")
    print(f"# elton mean {np.mean(vals):.6f} std {np.std(vals, ddof=1) if len(vals) > 1 else 0:.2e}")


if __name__ == "__main__":
    main()
