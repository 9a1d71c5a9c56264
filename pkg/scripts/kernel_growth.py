"""L1 norms of the Dirichlet kernels for a few pairs, with fitted growth rates.

Prints one CSV block per pair: n, norm, log_norm.  For the classical pair the
linear fit ``norm ~ a n + b`` is also reported, since there the growth is
linear rather than geometric.

    python3 scripts/kernel_growth.py --n-max 10
"""

import argparse

import numpy as np

from mockfourier import pair
from mockfourier.dirichlet import growth_rate, kernel_norm_series

PAIRS = {
    "classical R=2": (2, (0, 1), (0, 1)),
    "R=3 L={0,1,5}": (3, (0, 1, 2), (0, 1, 5)),
    "R=4 L={0,17}": (4, (0, 2), (0, 17)),
    "R=4 L={0,1}": (4, (0, 2), (0, 1)),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--margin", type=int, default=6)
    args = ap.parse_args()

    for name, (R, B, L) in PAIRS.items():
        p = pair(R, B, L)
        n_max = args.n_max if p.N == 2 else min(args.n_max, 9)
        s = kernel_norm_series(p, range(n_max + 1), margin=args.margin)
        print(f"# {name}: fitted_rho(n>=4) = {growth_rate(s, (4, n_max)):.4f}")
        a, b = np.polyfit(s.ns[4:], s.norms[4:], 1)
        print(f"# linear fit over n>=4: {a:.4f} n + {b:.4f}")
        print("n,norm,log_norm")
        for n, norm in zip(s.ns, s.norms):
            print(f"{n},{norm:.9g},{np.log(norm):.9g}")


if __name__ == "__main__":
    main()
