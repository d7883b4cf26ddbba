"""Landsberg residuals against epsilon for one group form.

    python scripts/landsberg_table.py "SU(3)" --eps 0.2 0.15 0.1 0.05

Prints the recovered value, the exact Gauss sum, the residual and the
certified tail for each epsilon.
"""

import argparse
import sys

import mpmath

from gausslie.lattices import group_form
from gausslie.theta import landsberg_result


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("form")
    ap.add_argument("--eps", nargs="+", type=float, default=[0.2, 0.15, 0.1, 0.05])
    ap.add_argument("--tail", type=float, default=1e-12)
    args = ap.parse_args()
    g = group_form(args.form)
    print(f"{'eps':>6}  {'value':>40}  {'residual':>10}  {'tail':>10}")
    for eps in args.eps:
        res = landsberg_result(g, eps, tail_tol=args.tail)
        v = complex(res.value)
        print(f"{eps:6.3f}  {v.real:+.16f}{v.imag:+.16f}i  {mpmath.nstr(res.residual, 3):>10}  {mpmath.nstr(res.tail_bound, 3):>10}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
