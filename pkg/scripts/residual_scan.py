"""Scan theta transformation-law residuals over a grid of tau.

    python scripts/residual_scan.py A2 --re -0.5 0.5 --im 0.4 1.5 --steps 6 --out scan.csv

Each row records tau, the worst law residual and the largest certified tail,
which shows where the certified cutoff starts to dominate the error.
"""

import argparse
import csv
import sys

import numpy as np

from gausslie.config import SampleConfig
from gausslie.rootsys import root_system
from gausslie.theta import ThetaParams, TailBoundError, verify_theta_modular


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("type")
    ap.add_argument("--re", nargs=2, type=float, default=(-0.5, 0.5))
    ap.add_argument("--im", nargs=2, type=float, default=(0.4, 1.5))
    ap.add_argument("--steps", type=int, default=5)
    ap.add_argument("--tol", type=float, default=1e-12)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    rs = root_system(args.type)
    z = SampleConfig().z_for(rs.rank, rs.name)
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(out)
    w.writerow(["re_tau", "im_tau", "max_residual", "max_tail", "laws"])
    for x in np.linspace(*args.re, args.steps):
        for y in np.linspace(*args.im, args.steps):
            try:
                rep = verify_theta_modular(rs, None, ThetaParams(z=z, tau=complex(x, y), tol=args.tol))
            except TailBoundError as exc:
                w.writerow([x, y, "", exc.achieved, 0])
                continue
            w.writerow([x, y, rep.max_residual, max(c.tail for c in rep.laws), len(rep.laws)])
    if out is not sys.stdout:
        out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
