#!/usr/bin/env python3
"""Eigenvalue-vs-g plot data for the fixed-point families, one CSV per family.

Writes <outdir>/scan_family_<id>.csv with columns g,re_lambda,im_lambda,class.
"""

import argparse
from pathlib import Path

from ptqes.dynamics import bifurcation_scan
from ptqes.output import dumps_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--g-min", type=float, default=0.0)
    ap.add_argument("--g-max", type=float, default=3.0)
    ap.add_argument("--steps", type=int, default=301)
    ap.add_argument("--outdir", type=Path, default=Path("out"))
    args = ap.parse_args()

    rows = bifurcation_scan(args.g_min, args.g_max, args.steps)
    args.outdir.mkdir(parents=True, exist_ok=True)
    for fam in ("i", "ii", "iii", "iv"):
        sel = [(r.g, r.re_lambda, r.im_lambda, r.cls) for r in rows if r.fp == fam]
        path = args.outdir / f"scan_family_{fam}.csv"
        path.write_text(dumps_csv(("g", "re_lambda", "im_lambda", "class"), sel))
        changes = [b[0] for a, b in zip(sel, sel[1:]) if a[3] != b[3]]
        print(f"family {fam}: {len(sel)} rows, class changes near g = {changes}")


if __name__ == "__main__":
    main()
