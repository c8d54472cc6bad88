#!/usr/bin/env python3
"""Decide which planar energy formula the radial oracle supports.

The package carries two closed-form candidates that differ in the
coefficient multiplying the angular ladder value.  An independent radial
finite-difference solve adjudicates between them; this script prints the
full comparison table and the winner.
"""

import argparse

from trigwell import Couplings, ModelParams, adjudicate_planar_energy


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=1)
    ap.add_argument("--g1", type=float, default=2.0)
    ap.add_argument("--g2", type=float, default=3.0)
    ap.add_argument("--omega", type=float, default=1.0)
    ap.add_argument("--n-max", type=int, default=2)
    ap.add_argument("--m-max", type=int, default=2)
    ap.add_argument("--grid", type=int, default=2000)
    args = ap.parse_args()

    params = ModelParams(args.N, Couplings(args.g1, args.g2), args.omega)
    report = adjudicate_planar_energy(params, args.n_max, args.m_max, args.grid)

    print(report.subject)
    print(f"{'candidate':<24} {'oracle':>14} {'formula':>14} {'rel dev':>12}")
    for row in report.rows:
        print(
            f"{row.label:<24} {row.reference:>14.8f} {row.candidate:>14.8f} "
            f"{row.rel_deviation:>12.3e}"
        )
    print(f"\nwinner: {report.winner}")
    for note in report.notes:
        print(f"note: {note}")


if __name__ == "__main__":
    main()
