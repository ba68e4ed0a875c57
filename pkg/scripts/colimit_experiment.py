"""Colimit sizes of random pushouts of injections: the union-find count
against the weighted sum of fibre sizes."""

import argparse
import random

from eulercat.builders import pushout_data
from eulercat.functors import colimit, colimit_cardinality_via_weighting, is_nondegenerate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    agree = 0
    for _ in range(args.trials):
        a = rng.randint(0, 4)
        b1, b2 = a + rng.randint(0, 3), a + rng.randint(0, 3)
        xa = [f"a{i}" for i in range(a)]
        xb1, xb2 = [f"b{i}" for i in range(b1)], [f"c{i}" for i in range(b2)]
        f1 = dict(zip(xa, rng.sample(xb1, a)))
        f2 = dict(zip(xa, rng.sample(xb2, a)))
        X = pushout_data(xa, xb1, xb2, f1, f2)
        n, w = len(colimit(X)), colimit_cardinality_via_weighting(X)
        agree += n == w
        print(f"|A|={a} |B1|={b1} |B2|={b2}  colim={n}  weighted={w}  nondegenerate={bool(is_nondegenerate(X))}")
    print(f"{agree}/{args.trials} agree")


if __name__ == "__main__":
    main()
