#!/usr/bin/env python3
"""Mesh convergence study: discrete volume/area errors and observed orders.

Usage: python scripts/mesh_convergence.py [--max-power 8]
"""

import argparse
import math
import time

from oloid import intrinsic
from oloid.surface import build_mesh, mesh_area, mesh_volume


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--max-power", type=int, default=8, help="largest resolution is 2**p"
    )
    args = parser.parse_args()

    v_ref = intrinsic.volume()
    s_ref = intrinsic.surface_area()
    print(f"{'n':>5s} {'vol rel err':>12s} {'order':>7s} {'area rel err':>13s} "
          f"{'order':>7s} {'build+eval s':>13s}")
    prev_v = prev_a = None
    for p in range(3, args.max_power + 1):
        n = 2**p
        start = time.perf_counter()
        mesh = build_mesh(n, n)
        ev = abs(mesh_volume(mesh) - v_ref) / v_ref
        ea = abs(mesh_area(mesh) - s_ref) / s_ref
        elapsed = time.perf_counter() - start
        ov = f"{math.log2(prev_v / ev):7.3f}" if prev_v else "      -"
        oa = f"{math.log2(prev_a / ea):7.3f}" if prev_a else "      -"
        print(f"{n:5d} {ev:12.3e} {ov} {ea:13.3e} {oa} {elapsed:13.3f}")
        prev_v, prev_a = ev, ea


if __name__ == "__main__":
    main()
