"""Tabulate the number of irreducible factors of 1 + t^c over several fields.

These counts control the two-variable diagonal surfaces: when 1 + t^c splits
into c' distinct irreducible factors over k, the surface z^n = x1^m1 + x2^m2
with c = gcd(m1, m2) has class group (Z/n)^(c'-1).  Counts are of distinct
factors; in characteristic p dividing c the repeated factors collapse.
"""

import argparse
import warnings

from divclass.fields import FieldSpec
from divclass.wpoly import RepeatedFactorsWarning, count_factors_one_plus_tc


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cmax", type=int, default=24)
    ap.add_argument(
        "--fields",
        default="Q,F2,F3,F5,Qbar",
        help="comma-separated field specs (Q, Fp, Qbar, Fpbar)",
    )
    args = ap.parse_args()

    fields = [FieldSpec.parse(s.strip()) for s in args.fields.split(",")]
    warnings.simplefilter("ignore", RepeatedFactorsWarning)
    print(f"{'c':>4}" + "".join(f"{str(f):>8}" for f in fields))
    for c in range(1, args.cmax + 1):
        counts = "".join(f"{count_factors_one_plus_tc(c, f):>8}" for f in fields)
        print(f"{c:>4}{counts}")


if __name__ == "__main__":
    main()
