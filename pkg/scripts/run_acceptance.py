"""Run the eleven acceptance criteria and print one line per criterion.

    python scripts/run_acceptance.py [--json report.json] [--max-rank 12] [--config cfg.json]

Exit status is 0 only when every criterion passes within its time budget.
"""

import argparse
import json
import sys

from gausslie import suite
from gausslie.config import load_config


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", help="write the full report here")
    ap.add_argument("--max-rank", type=int, default=12)
    ap.add_argument("--config", default=None)
    args = ap.parse_args()
    results = suite.run_all(args.max_rank, load_config(args.config))
    for res in results:
        print(res.line(), flush=True)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_json() for r in results], fh, indent=2)
    return 0 if all(r.passed and r.within_budget for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
