"""Euler characteristic of the sphere posets S^n, computed three ways."""

import argparse

from eulercat.builders import sphere_poset
from eulercat.mobius import euler_characteristic, mobius_matrix, nerve_euler


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    print("n  objects  weighting  mu-sum  nerve")
    for n in range(args.max_n + 1):
        S = sphere_poset(n)
        print(f"{n}  {len(S.objects)}  {euler_characteristic(S)}  {mobius_matrix(S).total()}  {nerve_euler(S)}")


if __name__ == "__main__":
    main()
