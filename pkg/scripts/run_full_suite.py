#!/usr/bin/env python3
"""Run every registry case and write JSON + CSV reports.

Usage:
  python3 scripts/run_full_suite.py [--seed S] [--samples K]
      [--parallelism N] [--out FILE] [--csv FILE]
"""

import argparse
import sys

from qident import cli
from qident.identities import CASES


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--parallelism", type=int, default=4)
    ap.add_argument("--out", default="full_suite_report.json")
    ap.add_argument("--csv", default="full_suite_report.csv")
    args = ap.parse_args(argv)

    configs = [cli.CaseConfig(case_id=cid, seed=args.seed, samples=args.samples)
               for cid in CASES]
    rset = cli.run(configs, parallelism=args.parallelism)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(cli.report_json(rset) + "\n")
    cli.write_csv(rset, args.csv)
    s = rset.summary
    print(f"wrote {args.out} and {args.csv}: "
          f"pass={s['pass']} fail={s['fail']} error={s['error']}")
    return cli.exit_code(rset)


if __name__ == "__main__":
    sys.exit(main())
