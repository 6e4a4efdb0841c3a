#!/usr/bin/env python3
"""Print the closed Hilbert numerators for every context up to a given f."""

import argparse

from serrecalc.predictions import hilbert_pi
from serrecalc.verify import all_contexts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fmax", type=int, default=4)
    args = ap.parse_args()
    for f in range(1, args.fmax + 1):
        for ctx in all_contexts(f):
            res = hilbert_pi(ctx)
            label = ctx.case.value
            if ctx.case.value == "nonsplit":
                label += f" J_rho={sorted(ctx.j_rho)}"
            coeffs = " ".join(str(c) for c in res.closed.num.coeffs)
            print(f"f={f:2d}  {label:28s} numerator [{coeffs}]  t=0: {res.closed.at_zero()}")


if __name__ == "__main__":
    main()
