"""Reproduce the R=4, B={0,2} table with both quadrature backends side by side.

    python3 scripts/reproduce_table.py --depth 22 --orbit 1000000 --seed 0
"""

import argparse
import sys

from mockfourier.cli import ELTON_TOL, WORD_TOL, reproduce_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=22)
    ap.add_argument("--orbit", type=int, default=10**6)
    ap.add_argument("--burn-in", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    word = reproduce_rows("word", args.depth, args.orbit, args.burn_in, args.seed)
    elton = reproduce_rows("elton", args.depth, args.orbit, args.burn_in, args.seed)
    print(f"# depth={args.depth} orbit={args.orbit} burn_in={args.burn_in} seed={args.seed}")
    print("p,reference,word,word_err,elton,elton_err,cycles")
    misses = 0
    for w, e in zip(word, elton):
        p, west, ref, werr, found = w[:5]
        misses += (werr > WORD_TOL) + (e[3] > ELTON_TOL)
        print(f"{p},{ref:.6f},{west:.6f},{werr:.2e},{e[1]:.6f},{e[3]:.2e},{found}")
    print(f"# rows outside tolerance (word {WORD_TOL}, elton {ELTON_TOL}): {misses}", file=sys.stderr)


if __name__ == "__main__":
    main()
