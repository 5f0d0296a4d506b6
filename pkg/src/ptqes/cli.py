"""Command-line entry point.

    ptqes dyn fixed-points|scan|integrate ...
    ptqes canon check ...
    ptqes qes g|spectrum|table|verify ...

Data goes to stdout (or ``--out``), diagnostics to stderr. Exit status is 0 on
success, 1 on usage errors and 2 on numerical failures.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

import numpy as np

from . import bdpoly, dynamics, hamiltonics
from .errors import NoReturn, NumericalFailure, PtqesError
from .output import dumps_csv, dumps_json
from .params import ModelParams

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n\n{self.format_help()}")

    def exit(self, status=0, message=None):
        # --help lands here; anything else is routed through error()
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


@dataclass
class RunConfig:
    subcommand: str
    a: float = 2.0 / 3.0
    b: float = 1.0
    options: dict[str, Any] = field(default_factory=dict)
    format: str = "json"
    out: str | None = None


def _common(p: argparse.ArgumentParser, fmt_default: str = "json", params: bool = True) -> None:
    if params:
        p.add_argument("--a", type=float, default=2.0 / 3.0, help="cubic coefficient (default 2/3)")
        p.add_argument("--b", type=float, default=1.0, help="linear coefficient (default 1)")
    p.add_argument("--format", choices=("json", "csv"), default=fmt_default)
    p.add_argument("--out", default=None, help="write data here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    root = _Parser(prog="ptqes", description="Classical and QES analysis of the PT-symmetric quadratic system.")
    groups = root.add_subparsers(dest="group", required=True, parser_class=_Parser)

    dyn = groups.add_parser("dyn", help="classical dynamics").add_subparsers(dest="cmd", required=True,
                                                                            parser_class=_Parser)
    p = dyn.add_parser("fixed-points", help="fixed points and stability at one g")
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--include-complex", action="store_true")
    _common(p)
    p = dyn.add_parser("scan", help="eigenvalue scan over a g grid")
    p.add_argument("--g-min", type=float, default=-3.0)
    p.add_argument("--g-max", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=601)
    _common(p, "csv")
    p = dyn.add_parser("integrate", help="RK4 trajectory with H column")
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--x0", type=float, required=True)
    p.add_argument("--y0", type=float, default=0.0)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--t-max", type=float, default=100.0)
    _common(p, "csv")

    canon = groups.add_parser("canon", help="canonical map checks").add_subparsers(dest="cmd", required=True,
                                                                                  parser_class=_Parser)
    p = canon.add_parser("check", help="Jacobian determinant, pullback and gauge identities")
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _common(p)

    qes = groups.add_parser("qes", help="QES spectra").add_subparsers(dest="cmd", required=True,
                                                                     parser_class=_Parser)
    p = qes.add_parser("g", help="solve the QES condition for g")
    p.add_argument("--J", type=int, required=True)
    p.add_argument("--branch", choices=("table", "printed"), default="table")
    _common(p)
    p = qes.add_parser("spectrum", help="QES energies for one (J, g)")
    p.add_argument("--J", type=int, required=True)
    p.add_argument("--g", type=float, default=None)
    p.add_argument("--branch", choices=("table", "printed"), default="table")
    p.add_argument("--method", choices=("tri", "companion"), default="tri")
    _common(p)
    p = qes.add_parser("table", help="recompute the reference table and report discrepancies")
    p.add_argument("--j-max", type=int, default=10)
    p.add_argument("--csv", default=None, metavar="PATH", help="also write the CSV report here")
    _common(p)
    p = qes.add_parser("verify", help="factorization, reality, flavor and eta diagnostics")
    p.add_argument("--J", type=int, required=True)
    p.add_argument("--g", type=float, default=None)
    p.add_argument("--k-max", type=int, default=5)
    _common(p)
    return root


def _config(ns: argparse.Namespace) -> RunConfig:
    skip = {"group", "cmd", "a", "b", "format", "out"}
    opts = {k: v for k, v in vars(ns).items() if k not in skip}
    return RunConfig(f"{ns.group} {ns.cmd}", getattr(ns, "a", 2.0 / 3.0), getattr(ns, "b", 1.0),
                     opts, ns.format, ns.out)


def _fp_dict(fp: dynamics.FixedPointReport) -> dict:
    return {
        "family": fp.family,
        "x": fp.location[0] if fp.is_complex else fp.x,
        "y": fp.location[1] if fp.is_complex else fp.y,
        "lambda_1": fp.eigenvalues[0],
        "lambda_2": fp.eigenvalues[1],
        "lambda_sq": fp.lambda_sq.real if not fp.is_complex else fp.lambda_sq,
        "class": fp.cls.value,
        "complex": fp.is_complex,
    }


def _run(ns: argparse.Namespace, cfg: RunConfig) -> str:
    cmd = cfg.subcommand
    conf = asdict(cfg)

    if cmd == "dyn fixed-points":
        fps = dynamics.fixed_points(ModelParams(ns.a, ns.b, ns.g), ns.include_complex)
        if ns.format == "csv":
            return dumps_csv(("fp", "x", "y", "re_lambda", "im_lambda", "class"),
                             [(f.family, f.x, f.y, abs(f.eigenvalues[0].real), abs(f.eigenvalues[0].imag), f.cls)
                              for f in fps if not f.is_complex])
        return dumps_json({"config": conf, "method": "closed-form fixed points, lambda^2 = -det(J)",
                           "fixed_points": [_fp_dict(f) for f in fps]})

    if cmd == "dyn scan":
        rows = dynamics.bifurcation_scan(ns.g_min, ns.g_max, ns.steps, ns.a, ns.b)
        if ns.format == "csv":
            return dumps_csv(("g", "fp", "re_lambda", "im_lambda", "class"),
                             [(r.g, r.fp, r.re_lambda, r.im_lambda, r.cls) for r in rows])
        return dumps_json({"config": conf, "method": "closed-form fixed points, lambda^2 = -det(J)",
                           "rows": [asdict(r) for r in rows]})

    if cmd == "dyn integrate":
        p = ModelParams(ns.a, ns.b, ns.g)
        tr = dynamics.integrate(p, (ns.x0, ns.y0), ns.dt, ns.t_max)
        if tr.error:
            sys.stderr.write(f"ptqes: trajectory stopped early: {tr.error}\n")
        if ns.format == "csv":
            return dumps_csv(("t", "x", "y", "H"), tr.samples.tolist())
        try:
            period = dynamics.measure_period(tr, lambda s: dynamics.vector_field(p, s))
        except NoReturn:
            period = None
        return dumps_json({"config": conf, "method": tr.method, "dt": tr.dt, "samples": len(tr.samples),
                           "t_end": float(tr.t[-1]), "max_energy_drift": tr.max_energy_drift,
                           "period": period, "error": tr.error})

    if cmd == "canon check":
        res = hamiltonics.canon_check(ModelParams(ns.a, ns.b, ns.g), ns.samples, ns.seed)
        return dumps_json({"config": conf, "method": "central differences h=1e-6; closed-form gauge", **res})

    if cmd == "qes g":
        roots = bdpoly.solve_qes_g(ns.J, ns.a, ns.b, ns.branch)
        return dumps_json({"config": conf, "method": "bisection + Newton polish", "roots": roots})

    if cmd == "qes spectrum":
        method = "tridiagonal" if ns.method == "tri" else "companion"
        sp = bdpoly.spectrum(ModelParams(ns.a, ns.b, 1.0), ns.J, ns.g, method, ns.branch)
        return dumps_json({"config": conf, **sp.to_dict()})

    if cmd == "qes table":
        rep = bdpoly.reproduce_table2(ns.j_max, ns.a, ns.b)
        csv_text = dumps_csv(("J", "g", "E_index", "E_paper", "E_recomputed", "verdict"), rep.csv_rows())
        if ns.csv:
            with open(ns.csv, "w", newline="") as fh:
                fh.write(csv_text)
        if ns.format == "csv":
            return csv_text
        return dumps_json({"config": conf, **rep.to_dict(), "mismatches": rep.mismatches()})

    if cmd == "qes verify":
        return dumps_json({"config": conf, **verify_report(ns.a, ns.b, ns.J, ns.g, ns.k_max)})

    raise UsageError(f"unknown command {cmd}")


def verify_report(a: float, b: float, J: int, g: float | None, k_max: int) -> dict:
    base = ModelParams(a, b, 1.0)
    g = bdpoly.solve_qes_g(J, a, b, bdpoly.Branch.TABLE)[0] if g is None else g
    p = base.with_g(g)
    sp = bdpoly.spectrum(base, J, g, k_max=k_max)
    eta = []
    for E in sp.energies:
        s = bdpoly.eta_series(p, float(E), 40)
        eta.append({"E": float(E), "truncation_index": s.truncation_index, "residual": s.residual,
                    "h_head": s.h[:6].tolist()})
    flav = [asdict(f) for f in bdpoly.flavor_equivalence(a, b, J)]
    return {
        "J": J,
        "g": g,
        "method": "tridiagonal eigenvalues; forward-recursion residuals",
        "energies": sp.energies.tolist(),
        "factorization_max_residual": bdpoly.factorization_check(p, J, None, k_max),
        "reality_certificate": sp.reality_certificate,
        "flavor_equivalence": flav,
        "eta_diagnostics": eta,
    }


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = _config(ns)
        text = _run(ns, cfg)
    except UsageError as exc:
        sys.stderr.write(str(exc))
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    except NumericalFailure as exc:
        sys.stderr.write(f"ptqes: numerical failure: {type(exc).__name__}: {exc}\n")
        return EXIT_NUMERIC
    except (PtqesError, ValueError) as exc:
        sys.stderr.write(f"ptqes: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
