"""Batch command line front end.

    rhfactor <subcommand> --input problem.json [--output report.json]
             [--tol T] [--truncation N] [--seed S] [--csv sidecar.csv]

Exit status: 0 on success (an unsolvable problem is a valid answer), 1 on
input errors, 2 when the numerics cannot certify a result.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import __version__
from .cauchy import BoundaryFunction, boundary_values, plemelj_residual
from .curve import curve_from_json
from .errors import InputError, NumericalFailure
from .jsonio import complex_array, complex_value, dumps
from .lipschitz import HolderDatum, glue_half_lines, holder_seminorm
from .rh_elliptic import EllipticProblem, elliptic_factorize, psi_polar_grid
from .rh_scalar import degree, factorize_scalar, moduli_roundtrip, solve_scalar_rh
from .rh_vector import DEFAULT_N, DEFAULT_TOL, JumpDatum, solve_rh, splitting_type

SUBCOMMANDS = ("cauchy", "factorize-scalar", "indices", "solve-rh", "elliptic",
               "moduli-roundtrip", "holder")


def _field(obj, name):
    if name not in obj:
        raise InputError(f"missing field {name!r}")
    return obj[name]


def _function(obj, curve, name):
    """Decode ``{"r": r, "values": [...]}`` into a BoundaryFunction."""
    entry = _field(obj, name)
    if not isinstance(entry, dict):
        raise InputError(f"{name}: expected an object with 'r' and 'values'")
    r = int(entry.get("r", 1))
    vals = complex_array(_field(entry, "values"), f"{name}.values")
    n = curve.n_nodes
    expected = (n,) if r == 1 else (n, r, r)
    if vals.shape != expected and vals.shape != (n, r, r):
        raise InputError(f"{name}.values: expected shape {expected}, got {vals.shape}")
    return BoundaryFunction(curve, vals.reshape(n, r, r))


def _fn_out(bf: BoundaryFunction):
    return {"r": bf.r, "values": bf.samples}


def _run_cauchy(data, cfg):
    curve = curve_from_json(_field(data, "curve"))
    u = _function(data, curve, "u")
    um, up = boundary_values(curve, u)
    return {"u_minus": _fn_out(um), "u_plus": _fn_out(up),
            "plemelj_residual": plemelj_residual(curve, u)}, None


def _run_factorize(data, cfg):
    curve = curve_from_json(_field(data, "curve"))
    fm = _function(data, curve, "f_minus")
    fp = _function(data, curve, "f_plus")
    f, cm, cp = factorize_scalar(curve, fm, fp)
    defect = np.abs(np.exp(cm.samples) * fm.samples - np.exp(cp.samples) * fp.samples).max()
    return {"degree": degree(curve, fm), "f": _fn_out(f), "cm": _fn_out(cm),
            "cp": _fn_out(cp), "factorization_defect": float(defect)}, None


def _jump(data):
    curve = curve_from_json(_field(data, "curve"))
    center = data.get("center")
    center = None if center is None else complex_value(center, "center")
    return JumpDatum(curve, _function(data, curve, "jump"), center)


def _run_indices(data, cfg):
    jump = _jump(data)
    st = splitting_type(jump, cfg.truncation, cfg.tol)
    rows = [("m", "dim")] + [(m, d) for m, d in st.staircase.items()]
    return {"splitting": list(st.indices), "det_degree": jump.det_degree,
            "staircase": [[m, d] for m, d in st.staircase.items()]}, rows


def _gamma(data, r):
    d = int(data.get("d", -1))
    g = data.get("gamma_tilde", [])
    if d == -1:
        return d, np.zeros((0, r), complex)
    gamma = complex_array(g, "gamma_tilde")
    return d, gamma.reshape(-1, r)


def _report_out(rep):
    return {
        "solvable": rep.solvable,
        "residual": rep.residual,
        "affine_dimension": rep.affine_dimension,
        "boundary_defect": rep.boundary_defect,
        "constraint_defect": rep.constraint_defect,
        "center": rep.center,
        "interior_coeffs": rep.interior_coeffs,
        "exterior_coeffs": rep.exterior_coeffs,
    }


def _run_solve(data, cfg):
    m = int(_field(data, "m"))
    if cfg.scalar:
        curve = curve_from_json(_field(data, "curve"))
        ups = _function(data, curve, "jump")
        d, gamma = _gamma(data, 1)
        rep = solve_scalar_rh(curve, ups, m, d, gamma, cfg.truncation, cfg.tol)
        out = _report_out(rep)
        out["bundle_degree"] = -degree(curve, ups)
        return out, None
    jump = _jump(data)
    d, gamma = _gamma(data, jump.r)
    rep = solve_rh(jump, m, d, gamma, cfg.truncation, cfg.tol)
    return _report_out(rep), None


def _run_elliptic(data, cfg):
    curve = curve_from_json(_field(data, "curve"))
    alpha = complex_value(_field(data, "alpha"), "alpha")
    fp = _function(data, curve, "f_plus").samples
    fm = _function(data, curve, "f_minus").samples
    p = EllipticProblem(alpha, curve, fp, fm)
    tol = cfg.tol if cfg.tol_given else 1e-10
    res = elliptic_factorize(p, tol)
    out = {"lambda": res.lam, "residual": res.residual,
           "identity_defect": res.identity_defect, "c0": res.c0,
           "g_plus": {"r": 1, "values": res.g_plus},
           "g_minus": {"r": 1, "values": res.g_minus}}
    rows = None
    if cfg.csv:
        t, pts, vals = psi_polar_grid(p, tol=tol)
        rows = [("t", "k", "re_z", "im_z", "re_psi", "im_psi")]
        for i, ti in enumerate(t):
            for k in range(pts.shape[1]):
                rows.append((ti, k, pts[i, k].real, pts[i, k].imag,
                             vals[i, k].real, vals[i, k].imag))
    return out, rows


def _run_roundtrip(data, cfg):
    curve = curve_from_json(_field(data, "curve"))
    f = _function(data, curve, "f").samples
    e = int(data.get("e", 0))
    b = data.get("basepoint")
    b = None if b is None else complex_value(b, "basepoint")
    lum = lup = None
    if cfg.seed is not None:
        # random holomorphic units: modes 0..3 inside, -3..0 outside
        rng = np.random.default_rng(cfg.seed)
        cin = 0.1 * (rng.normal(size=4) + 1j * rng.normal(size=4))
        cout = 0.1 * (rng.normal(size=4) + 1j * rng.normal(size=4))
        lum = sum(c * curve.z ** k for k, c in enumerate(cin))
        lup = sum(c * curve.z ** -k for k, c in enumerate(cout))
    glued, defect = moduli_roundtrip(curve, f, e, b, lum, lup)
    return {"degree": degree(curve, f), "e": e, "roundtrip_defect": defect,
            "f_glued": _fn_out(glued)}, None


def _holder_piece(obj, alpha):
    return HolderDatum(_field(obj, "xs"), _field(obj, "fs"), alpha)


def _run_holder(data, cfg):
    alpha = float(_field(data, "alpha"))
    if "minus" in data or "plus" in data:
        fm = _holder_piece(_field(data, "minus"), alpha)
        fp = _holder_piece(_field(data, "plus"), alpha)
        _, ok, info = glue_half_lines(fm, fp, alpha)
        return {"seminorm": info["seminorm"], "seminorm_minus": info["seminorm_minus"],
                "seminorm_plus": info["seminorm_plus"],
                "bound_constant": info["bound_constant"], "bound_ok": ok}, None
    d = HolderDatum(_field(data, "xs"), _field(data, "fs"), alpha)
    return {"seminorm": holder_seminorm(d), "bound_constant": 2.0 ** (1 - alpha),
            "bound_ok": None}, None


RUNNERS = {
    "cauchy": _run_cauchy,
    "factorize-scalar": _run_factorize,
    "indices": _run_indices,
    "solve-rh": _run_solve,
    "elliptic": _run_elliptic,
    "moduli-roundtrip": _run_roundtrip,
    "holder": _run_holder,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rhfactor", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="problem file (JSON), '-' for stdin")
        p.add_argument("--output", default="-", help="report file, default stdout")
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--truncation", type=int, default=DEFAULT_N, help="series length N")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--csv", default=None, help="write a CSV sidecar here")
        if name == "solve-rh":
            p.add_argument("--scalar", action="store_true", help="scalar jump, r = 1")
    return parser


def _read_input(path):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: "
                         f"{exc.msg}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    return data


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(cfg: argparse.Namespace) -> int:
    cfg.tol_given = cfg.tol is not None
    if cfg.tol is None:
        cfg.tol = DEFAULT_TOL
    if cfg.tol <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return 1
    cfg.scalar = getattr(cfg, "scalar", False)
    resolved = {"subcommand": cfg.subcommand, "input": cfg.input, "tol": cfg.tol,
                "truncation": cfg.truncation, "seed": cfg.seed, "scalar": cfg.scalar}
    try:
        data = _read_input(cfg.input)
        result, rows = RUNNERS[cfg.subcommand](data, cfg)
    except (InputError, ValueError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except NumericalFailure as exc:
        print(f"numerical failure ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 2
    report = {"version": __version__, "config": resolved, "input": data}
    report.update(result)
    _write(cfg.output, dumps(report))
    if cfg.csv and rows:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(
            [[format(v, ".17g") if isinstance(v, float) else v for v in row] for row in rows])
        _write(cfg.csv, buf.getvalue())
    return 0


def main(argv=None) -> int:
    return run(build_parser().parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
