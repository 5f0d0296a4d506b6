#!/usr/bin/env python3
"""Trajectory data near the two y = 0 fixed points.

Orbits around (1/sqrt2, 0) close up; orbits started beside (-1/sqrt2, 0)
on the saddle side run off. Each trajectory becomes one CSV (t,x,y,H) and a
summary line reports energy drift and, where it exists, the period.
"""

import argparse
import math
from pathlib import Path

from ptqes.dynamics import integrate, linear_period, measure_period, vector_field
from ptqes.errors import NoReturn
from ptqes.output import dumps_csv
from ptqes.params import ModelParams


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--g", type=float, default=0.4)
    ap.add_argument("--dt", type=float, default=1e-3)
    ap.add_argument("--t-max", type=float, default=30.0)
    ap.add_argument("--stride", type=int, default=10, help="keep every n-th sample in the CSV")
    ap.add_argument("--outdir", type=Path, default=Path("out"))
    args = ap.parse_args()

    p = ModelParams(g=args.g)
    c = 1 / math.sqrt(2)
    starts = {
        "center": [(c + d, 0.0) for d in (0.05, 0.15, 0.3, 0.45)],
        "saddle": [(-c - d, 0.0) for d in (0.02, 0.1)] + [(-c + d, 0.0) for d in (0.02, 0.1)],
    }
    args.outdir.mkdir(parents=True, exist_ok=True)
    print(f"linearized period at the center: {linear_period(p):.6f}")
    for kind, pts in starts.items():
        for k, s0 in enumerate(pts):
            tr = integrate(p, s0, args.dt, args.t_max)
            try:
                period = f"{measure_period(tr, lambda s: vector_field(p, s)):.6f}"
            except NoReturn:
                period = "none"
            path = args.outdir / f"traj_{kind}_{k}.csv"
            path.write_text(dumps_csv(("t", "x", "y", "H"), tr.samples[:: args.stride].tolist()))
            print(f"{path.name}: x0={s0[0]:+.4f} drift={tr.max_energy_drift:.2e} period={period} "
                  f"error={tr.error or '-'}")


if __name__ == "__main__":
    main()
