#!/usr/bin/env python3
"""Expected mean width, surface area and volume of random intersections.

Prints the three-pair expectation table (fixed body vs rigidly moving body,
conditional on a nonempty intersection) and, for the ball-ball pair, the
Monte Carlo oracle with z-scores.

Usage: python scripts/kinematic_table.py [--radius 1.0] [--mc-samples 1000000]
"""

import argparse
import math

from oloid import intrinsic
from oloid import steiner_kinematic as sk


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--radius", type=float, default=1.0)
    parser.add_argument("--mc-samples", type=int, default=1_000_000)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    r = args.radius
    oiv = intrinsic.oloid_intrinsic_volumes(r)
    biv = sk.ball_intrinsic_volumes(r)
    pairs = [
        ("ball", "ball", biv, biv),
        ("oloid", "ball", oiv, biv),
        ("oloid", "oloid", oiv, oiv),
    ]
    print(f"{'K':>6s} {'M':>6s} {'E[b]/r':>14s} {'E[S]/r^2':>14s} {'E[V]/r^3':>14s}")
    for name_k, name_m, k, m in pairs:
        e = sk.intersection_expectations(k, m)
        print(
            f"{name_k:>6s} {name_m:>6s} {e.mean_width / r:14.10f} "
            f"{e.surface / r**2:14.10f} {e.volume / r**3:14.10f}"
        )

    mc = sk.mc_ball_ball_expectations(args.mc_samples, args.seed)
    exact = sk.intersection_expectations(biv, biv)
    z_v = (mc.volume - exact.volume / r**3) / mc.volume_std_error
    z_s = (mc.surface - exact.surface / r**2) / mc.surface_std_error
    print(
        f"\nball-ball Monte Carlo ({args.mc_samples} samples, seed {args.seed}):\n"
        f"  E[V] = {mc.volume:.7f} +- {mc.volume_std_error:.1e}  (z = {z_v:+.2f}, "
        f"exact pi/6 = {math.pi / 6:.7f})\n"
        f"  E[S] = {mc.surface:.7f} +- {mc.surface_std_error:.1e}  (z = {z_s:+.2f}, "
        f"exact pi = {math.pi:.7f})"
    )


if __name__ == "__main__":
    main()
