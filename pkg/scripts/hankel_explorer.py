#!/usr/bin/env python3
"""Tabulate Hankel determinants and J-fraction coefficients for the
built-in moment sequences.

Usage: python scripts/hankel_explorer.py [--n N]
"""

import argparse
import sys
from fractions import Fraction

from detkit.exactnum import bell_poly, bernoulli, euler_even, fmt_rat, hermite_poly
from detkit.hankel import (MomentSeq, bernoulli_shifted_moments, hankel_det,
                           heilermann_product, jfraction_from_moments)

SEQUENCES = {
    "bernoulli (shift 2)": lambda count: bernoulli_shifted_moments(count, 2),
    "secant numbers": lambda count: MomentSeq(
        [euler_even(2 * k) for k in range(count)]),
    "bell numbers": lambda count: MomentSeq(
        [bell_poly(k)(1) for k in range(count)]),
    "hermite at 0": lambda count: MomentSeq(
        [hermite_poly(k)(Fraction(0)) for k in range(count)]),
    "bernoulli": lambda count: MomentSeq(
        [bernoulli(k) for k in range(count)]),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5,
                        help="largest Hankel order to tabulate")
    args = parser.parse_args()
    n = args.n
    for name, make in SEQUENCES.items():
        moments = make(2 * n)
        print(f"== {name} ==")
        print("  moments:", ", ".join(fmt_rat(moments[k]) for k in range(2 * n)))
        dets = [hankel_det(moments, i) for i in range(1, n + 1)]
        print("  hankel dets:", ", ".join(fmt_rat(d) for d in dets))
        jf = jfraction_from_moments(moments, n)
        print("  a:", ", ".join(fmt_rat(x) for x in jf.a))
        print("  b:", ", ".join(fmt_rat(x) for x in jf.b))
        cross = all(heilermann_product(jf, i) == dets[i - 1]
                    for i in range(1, n + 1))
        print(f"  product cross-check: {'ok' if cross else 'MISMATCH'}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
