#!/usr/bin/env python3
"""Run every verification suite at full scale and print a summary table.

Usage: python3 scripts/run_suites.py [--seed N] [--quick]

--quick drops the trial counts to 10 for a fast smoke pass.
"""

import argparse
import sys

from slidepol.harness import HarnessConfig, verify_suite

# (suite, trials, config overrides)
PLAN = [
    ("golden", 1, {}),
    ("slide_homology", 200, {"n": 4, "max_exp": 3, "max_gens": 5}),
    ("betti_oracle", 100, {"n": 4, "max_exp": 3, "max_gens": 6}),
    ("slide_cm", 100, {"n": 4, "max_exp": 2}),
    ("slide_seqcm", 100, {}),
    ("slide_sdepth", 50, {"n": 4, "max_exp": 3, "max_gens": 5}),
    ("compress_roundtrip", 100, {"n": 4, "max_exp": 4}),
    ("polarize_homology", 100, {}),
    ("polarize_seqcm", 100, {}),
    ("polarize_adeg", 100, {}),
    ("generalized_polarization", 1, {}),
    ("inflate_invariants", 100, {"n": 4}),
    ("dual_slide", 200, {"n": 4, "max_exp": 3, "max_gens": 5}),
    ("bm_inflation", 100, {"n": 4, "max_exp": 2}),
    ("bm_compress", 100, {"n": 4, "max_exp": 2}),
    ("bm_spheres", 20, {"n": 4}),
    ("sdepth_vs_depth", 50, {"n": 4, "max_exp": 3, "max_gens": 5}),
]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()

    width = max(len(name) for name, _, _ in PLAN)
    failures = 0
    total_findings = 0
    for name, trials, overrides in PLAN:
        if args.quick:
            trials = min(trials, 10)
        cfg = HarnessConfig(suite=name, trials=trials, seed=args.seed, **overrides)
        report = verify_suite(cfg)
        status = "ok" if report.ok else "VIOLATED"
        print(
            f"{name:<{width}}  {status:<8}  {report.completed:>4}/{report.trials:<4} trials"
            f"  {report.skipped:>2} skipped  {len(report.findings):>2} findings"
            f"  {report.elapsed_s:7.2f}s"
        )
        for violation in report.violations:
            print(f"  violation: {violation}")
        failures += 0 if report.ok else 1
        total_findings += len(report.findings)
    if total_findings:
        print(f"{total_findings} findings recorded (informational)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
