#!/usr/bin/env python3
"""Print every oloid constant by each implemented route, with deviations.

Usage: python scripts/reproduce_constants.py [--tol 1e-10] [--mc-samples 1000000]
"""

import argparse
import math

from oloid import intrinsic, support


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tol", type=float, default=1e-10)
    parser.add_argument("--mc-samples", type=int, default=1_000_000)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rows = [
        ("surface_area", "closed", intrinsic.surface_area("closed")),
        ("surface_area", "quadrature", intrinsic.surface_area("quadrature", args.tol)),
        ("volume", "closed", intrinsic.volume("closed")),
        ("volume", "quadrature", intrinsic.volume("quadrature", args.tol)),
        ("curvature_integral", "closed", intrinsic.curvature_integral("closed")),
        (
            "curvature_integral",
            "quadrature",
            intrinsic.curvature_integral("quadrature", args.tol),
        ),
        ("coxeter_I", "quadrature", intrinsic.coxeter_like_integral()),
        ("edge_integral", "reduced", intrinsic.edge_integral("reduced")),
        ("edge_integral", "direct", intrinsic.edge_integral("direct", args.tol)),
        ("mean_curvature_M", "closed", intrinsic.mean_curvature_total(1.0)),
        ("mean_width", "curvature", intrinsic.mean_width(1.0)),
        ("mean_width", "direct", support.mean_width_direct(args.tol)),
    ]
    mc = support.mean_width_montecarlo(args.mc_samples, args.seed)
    rows.append(("mean_width", "montecarlo", mc.estimate))

    print(f"{'quantity':20s} {'route':12s} {'value':>22s} {'vs first route':>14s}")
    first: dict[str, float] = {}
    for name, route, value in rows:
        ref = first.setdefault(name, value)
        print(f"{name:20s} {route:12s} {value:22.17g} {value - ref:14.2e}")
    print(f"\nMonte Carlo std error: {mc.std_error:.3e} ({args.mc_samples} samples)")
    print(f"surface area equals the unit ball's 4*pi: {4 * math.pi:.17g}")


if __name__ == "__main__":
    main()
