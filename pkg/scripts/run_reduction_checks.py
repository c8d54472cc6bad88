#!/usr/bin/env python3
"""Verify every special-case model form against the general lattice model."""

import argparse

from trigwell import ReductionKind, reduction_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument(
        "--check",
        choices=[k.value for k in ReductionKind],
        default=None,
        help="run a single check instead of all of them",
    )
    args = ap.parse_args()

    kinds = (
        [ReductionKind(args.check)] if args.check else list(ReductionKind)
    )
    for kind in kinds:
        report = reduction_report(kind, args.samples, args.seed)
        factor = (
            f"{report.fitted_factor:.12f}" if report.fitted_factor is not None else "-"
        )
        print(f"== {kind.value}")
        print(f"   max rel deviation {report.max_rel_deviation:.3e}   factor {factor}")
        for row in report.rows:
            print(
                f"   {row.label:<40} ref {row.reference:>14.6e} "
                f"cand {row.candidate:>14.6e} dev {row.rel_deviation:.3e}"
            )
        for note in report.notes:
            print(f"   note: {note}")
        print()


if __name__ == "__main__":
    main()
