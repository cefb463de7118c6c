"""Monitoring the open conjectures on random ensembles.

Two statements are open, not proven, so the library monitors them and
serializes any observed breach as a JSON violation bundle that re-verifies
from the file alone:

* partial sums: sum of the top 2k eigenvalues of T_X <= 2k + 2;
* weak majorization of the spectrum by the rank-one profile
  {2, 2, 1 x (2n - 4), 0 x rest}.

This script sweeps a seeded ensemble, reports the observed maxima against
the conjectured and proven caps, and then demonstrates the bundle
machinery by forcing a "violation" with a negative tolerance.
"""
import argparse
import json
import tempfile
from pathlib import Path

from commspectra import (
    monitor_majorization,
    monitor_partial_sums,
    read_bundle,
    reverify_bundle,
    sweep,
    trial_rng,
    unit_gaussian,
    write_bundle,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", default="2,3,4", help="comma-separated orders")
    ap.add_argument("--trials", type=int, default=200, help="draws per order")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    orders = [int(s) for s in args.orders.split(",") if s.strip()]

    print(f"sweep over orders {orders}, {args.trials} seeded draws per order\n")
    report = sweep(orders, trials=args.trials, seed=args.seed)
    print(f"{'n':>3} {'k':>3} {'max sum top 2k':>16} {'conjectured':>12} "
          f"{'proven':>8} {'breaches':>9}")
    for row in report["rows"]:
        print(f"{row['n']:>3} {row['k']:>3} {row['max_f']:>16.9f} "
              f"{row['bound_conjectured']:>12.3f} {row['bound_proven']:>8.3f} "
              f"{len(row['violations']):>9}")
    print(f"\nweak-majorization breaches: "
          f"{len(report['majorization_violations'])}")

    print("\nsingle-matrix verdicts for one fresh draw:")
    X = unit_gaussian(trial_rng(args.seed, 999), max(orders))
    for verdict in (monitor_partial_sums(X), monitor_majorization(X)):
        print(f"  {verdict.conjecture_id}: lhs {verdict.lhs:.6f} <= "
              f"rhs {verdict.rhs:.6f} -> satisfied: {verdict.satisfied}")

    print("\nbundle machinery (breach forced with tol = -100):")
    verdict = monitor_partial_sums(X, tol=-100.0)
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "bundle.json"
        write_bundle(path, verdict.witness)
        print(f"  wrote {path.name}:")
        bundle = read_bundle(path)
        preview = {k: bundle[k] for k in ("conjecture_id", "n", "m", "lhs", "rhs")}
        print("  " + json.dumps(preview, indent=2, sort_keys=True).replace("\n", "\n  "))
        replay = reverify_bundle(bundle)
        print(f"  re-verified from the JSON alone: lhs {replay.lhs:.6f} <= "
              f"rhs {replay.rhs:.6f} -> satisfied: {replay.satisfied} "
              f"(the breach was an artifact of the forced tolerance)")


if __name__ == "__main__":
    main()
