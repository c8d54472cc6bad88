#!/usr/bin/env python3
"""Sweep every identity kind over a range of orders and print residuals."""

import argparse

from trigwell import IdentityKind, identity_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=16)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--min-dist", type=float, default=1e-3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'kind':<16} {'N':>3} {'min dist':>10} {'max rel residual':>18}")
    for kind in IdentityKind:
        reports = identity_report(
            kind, args.n_max, args.samples, args.min_dist, args.seed
        )
        for r in reports:
            print(
                f"{r.kind.value:<16} {r.n_order:>3} "
                f"{r.min_singularity_distance:>10.3e} "
                f"{r.max_relative_residual:>18.3e}"
            )
        worst = max(r.max_relative_residual for r in reports)
        print(f"{'-- worst':<16} {'':>3} {'':>10} {worst:>18.3e}\n")


if __name__ == "__main__":
    main()
