"""Sweep all ordered pairs of monotone self-maps on every poset of a given
size (up to isomorphism), comparing Lefschetz numbers of GF and FG and the
chi of the below / fixed / above subposets."""

import argparse
import time

from eulercat.builders import posets_up_to_iso
from eulercat.lefschetz import monotone_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=4)
    args = ap.parse_args()
    t0 = time.perf_counter()
    total = fails = 0
    for n in range(args.max_size + 1):
        Ps = posets_up_to_iso(n)
        for P in Ps:
            r = monotone_sweep(P)
            total += r.pairs
            fails += r.cyclicity_failures + r.alg_coalg_failures
        print(f"size {n}: {len(Ps)} posets")
    print(f"{total} pairs, {fails} failures, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
