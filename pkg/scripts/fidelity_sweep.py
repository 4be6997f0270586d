"""Fidelity verdicts across a set of fields, written as one JSON document.

    python scripts/fidelity_sweep.py --discs -4 8 5 -3 --bound 500 --out sweep.json
"""

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from zetaspan.field import QuadField
from zetaspan.theorems import fidelity_report


def run_one(args):
    D, N = args
    t0 = time.perf_counter()
    recs = fidelity_report(QuadField.from_disc(D, N), N)
    return {"D": str(D), "N": str(N), "seconds": f"{time.perf_counter() - t0:.2f}", "records": [r.to_json() for r in recs]}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--discs", type=int, nargs="+", default=[-4, 8, -8, -3, 5, 13, 12, -20])
    ap.add_argument("--bound", type=int, default=200)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="-")
    args = ap.parse_args(argv)

    jobs = [(D, args.bound) for D in args.discs]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(run_one, jobs))
    else:
        results = [run_one(j) for j in jobs]

    for res in results:
        diverging = [r for r in res["records"] if r["verdict"] == "Diverges"]
        print(f"D={res['D']:>4}  {len(res['records'])} records, {len(diverging)} diverge  ({res['seconds']}s)", file=sys.stderr)
        for r in diverging:
            ce = r["counterexample"]
            print(f"    {r['construction']}/{r['variant']}: {ce['label']}", file=sys.stderr)

    text = json.dumps(results, indent=2)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")


if __name__ == "__main__":
    main()
