"""Sweep z^n = x0 x1 against the invariant-lattice model.

The pipeline computes the class group of k[z,x0,x1]/(z^n - x0 x1) through
the auxiliary-variable route, while the lattice model searches the monomial
subring k[xy, x^n, y^n] for principal divisorial ideals directly.  The two
must agree on the order of the generator class for every n.
"""

import argparse
import time

from divclass.classgroup import x0_extension_mode
from divclass.fields import FieldSpec
from divclass.oracle import monomial_model_classgroup
from divclass.parser import parse_polynomial
from divclass.wpoly import WeightedRing


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=12)
    ap.add_argument(
        "--bound",
        type=int,
        default=None,
        help="exponent bound for the lattice search (default 6n)",
    )
    args = ap.parse_args()

    ring = WeightedRing(("x1",), (1,), FieldSpec.rationals())
    x1 = parse_polynomial("x1", ring)
    print(f"{'n':>4} {'group':>8} {'model order':>12} {'bound':>6} {'agree':>6} {'secs':>8}")
    for n in range(2, args.nmax + 1):
        t0 = time.perf_counter()
        result = x0_extension_mode(ring, n, [x1], assume_normal=True)
        report = monomial_model_classgroup(n, bound=args.bound)
        dt = time.perf_counter() - t0
        agree = report.conclusive and report.order == result.group.order
        print(
            f"{n:>4} {str(result.group):>8} {str(report.order):>12}"
            f" {report.bound:>6} {str(agree):>6} {dt:8.3f}"
        )


if __name__ == "__main__":
    main()
