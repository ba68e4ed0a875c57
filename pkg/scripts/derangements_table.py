"""Representation coefficients of the symmetric-group functor on F_N^op,
next to derangement counts from brute force over permutations."""

import argparse
import itertools

from eulercat.builders import symmetric_action
from eulercat.functors import representation_coefficients


def derangements(n):
    return sum(all(p[i] != i for i in range(n)) for p in itertools.permutations(range(n)))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("N", type=int, nargs="?", default=4)
    args = ap.parse_args()
    r = representation_coefficients(symmetric_action(args.N))
    print("n  r(n)  D(n)")
    for n in range(args.N + 1):
        print(f"{n}  {r[str(n)]}  {derangements(n)}")


if __name__ == "__main__":
    main()
