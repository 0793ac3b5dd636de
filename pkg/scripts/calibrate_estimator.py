#!/usr/bin/env python3
"""Calibrate the sampling estimator against an exact homomorphism count.

For a fixed braid closure and group, sweep seeds at several sample sizes
and report how often the estimate lands inside the multiplicative window
[f/(1+eps), f*(1+eps)] around the exact count f.  Useful for picking a
sample size before trusting the estimator on a larger group.

Example:
    python3 scripts/calibrate_estimator.py --strands 2 --word "1 1 1" \
        --group "symmetric 3" --samples 500 2000 8000 --seeds 200
"""
from __future__ import annotations

import argparse
from fractions import Fraction

from qll.braid import parse_braid
from qll.homcount import builtin_group, hom_count_estimate, hom_count_exact


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--strands", type=int, default=2)
    parser.add_argument("--word", default="1 1 1")
    parser.add_argument("--group", default="symmetric 3")
    parser.add_argument("--samples", type=int, nargs="+",
                        default=[500, 2000, 8000])
    parser.add_argument("--seeds", type=int, default=200)
    parser.add_argument("--eps", type=float, default=0.5)
    args = parser.parse_args()

    b = parse_braid(args.word, args.strands)
    group = builtin_group(args.group)
    exact = hom_count_exact(b, group)
    eps = Fraction(args.eps).limit_denominator(1000)
    low = Fraction(exact) / (1 + eps)
    high = Fraction(exact) * (1 + eps)
    print("braid: strands=%d word=%s" % (b.strands, " ".join(map(str, b.word))))
    print("group: %s (order %d), exact count %d" % (args.group, group.size, exact))
    print("window: [%s, %s] at eps=%s" % (low, high, eps))
    for samples in args.samples:
        passes = 0
        worst = Fraction(0)
        for seed in range(args.seeds):
            estimate, _ = hom_count_estimate(b, group, samples, seed)
            if low <= estimate <= high:
                passes += 1
            if exact:
                worst = max(worst, abs(estimate - exact) / exact)
        print(
            "samples=%-6d pass %3d/%d (%.1f%%), worst relative error %.3f"
            % (samples, passes, args.seeds, 100.0 * passes / args.seeds,
               float(worst))
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
