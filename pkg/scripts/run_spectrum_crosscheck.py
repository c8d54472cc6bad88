#!/usr/bin/env python3
"""Compare the closed-form angular ladder against finite differences.

Prints one line per (N, g1, g2) with the worst relative deviation and any
numerical levels the closed-form ladder steps over.
"""

import argparse
import itertools
import time

from trigwell import Couplings, ModelParams, spectrum_crosscheck


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[1, 2, 3, 4, 5, 8])
    ap.add_argument("--couplings", type=float, nargs="+", default=[1.5, 2.0, 2.5])
    ap.add_argument("--m-max", type=int, default=3)
    ap.add_argument("--grid", type=int, default=2000)
    args = ap.parse_args()

    t0 = time.perf_counter()
    worst = 0.0
    for n, g1, g2 in itertools.product(args.orders, args.couplings, args.couplings):
        params = ModelParams(n, Couplings(g1, g2))
        report = spectrum_crosscheck(params, args.m_max, args.grid)
        worst = max(worst, report.max_rel_deviation)
        skipped = (
            f" skipped={['%.3f' % s for s in report.skipped_levels]}"
            if report.skipped_levels
            else ""
        )
        print(
            f"N={n} g=({g1},{g2})  max rel dev {report.max_rel_deviation:.3e}"
            f"{skipped}"
        )
    print(f"\nworst deviation {worst:.3e}  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
