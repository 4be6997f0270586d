"""Print the per-prime tables: ideal counts, interval counts and the interval
character X for each splitting type, for exponents 0 <= m <= n <= kmax."""

import argparse

from zetaspan.arith import SplittingType
from zetaspan.field import local_ideal_count, local_interval_count
from zetaspan.theorems import interval_character_local


def table(title, fn, kmax):
    print(f"\n{title}")
    print("n\\m " + " ".join(f"{m:>4}" for m in range(kmax + 1)))
    for n in range(kmax + 1):
        cells = [f"{fn(m, n):>4}" if m <= n else "    " for m in range(kmax + 1)]
        print(f"{n:>3} " + " ".join(cells))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=6)
    args = ap.parse_args(argv)
    for st in SplittingType:
        print(f"\n=== {st.value} ===")
        print("ideals of norm p^k: " + " ".join(str(local_ideal_count(st, k)) for k in range(args.kmax + 1)))
        table("ideal intervals over [p^m, p^n]", lambda m, n: local_interval_count(st, m, n), args.kmax)
        table("interval character X([p^m, p^n])", lambda m, n: interval_character_local(st, m, n), args.kmax)


if __name__ == "__main__":
    main()
