"""Command-line interface.

Subcommands:

* exact      lowest eigenvalue by exact diagonalization (+ spectrum JSON)
* vqe        seeded variational minimization (+ result JSON, history CSV, figure)
* report     reproduce a published reference table with PASS/FAIL cells
* thermo     closed-form horizon thermodynamics as JSON
* potential  mass-potential samples as CSV (+ figure)
* contour    classically-allowed-region residual grid as CSV (+ figure)

Exit codes: 0 success, 2 invalid flags/parameters, 3 numeric failure.
Flag values beat config-file entries (--config, plain key=value lines),
which beat built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict

from .ansatz import AnsatzConfig
from .errors import BhvqeError, DimensionError, ExtremalityError, ModelError, NumericError
from .models import ModelSpec, thermo as thermo_op, MASS, ABS_H, ABS_COMM
from .oracle import exact_spectrum
from .vqe import run_vqe

_DEFAULTS = {
    "basis": "osc",
    "qubits": 4,
    "depth": 3,
    "seed": 42,
    "restarts": 5,
    "bmin": 0.5,
    "bmax": 8.0,
    "samples": 200,
    "pamin": -3.0,
    "pamax": 3.0,
    "pasamples": 61,
    "bsamples": 61,
    "op": MASS,
}

_CASTS = {
    "J": float, "Q": float, "lam": float, "ell": float, "M": float,
    "qubits": int, "depth": int, "seed": int, "restarts": int, "table": int,
    "bmin": float, "bmax": float, "samples": int,
    "pamin": float, "pamax": float, "pasamples": int, "bsamples": int,
}


def _read_config(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def _resolve(args: argparse.Namespace, key: str, default=None):
    """Flag value if given, else config-file value, else default."""
    val = getattr(args, key, None)
    if val is not None:
        return val
    cfg = getattr(args, "_config", {})
    if key in cfg:
        raw = cfg[key]
        return _CASTS.get(key, str)(raw)
    if default is not None:
        return default
    return _DEFAULTS.get(key)


def _model_spec(args: argparse.Namespace) -> ModelSpec:
    family = _resolve(args, "model")
    if family is None:
        raise ModelError("--model is required")
    return ModelSpec(
        family,
        J=_resolve(args, "J"),
        Q=_resolve(args, "Q"),
        lam=_resolve(args, "lam"),
        ell=_resolve(args, "ell"),
    )


def _write(path: str | None, text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_exact(args) -> int:
    spec = _model_spec(args)
    rep = exact_spectrum(spec, _resolve(args, "basis"), _resolve(args, "qubits"),
                         _resolve(args, "op"))
    if args.out:
        _write(args.out, rep.to_json())
    print(f"{rep.unscaled_lowest_mass:.8f}")
    return 0


def _cmd_vqe(args) -> int:
    from . import report as report_mod

    spec = _model_spec(args)
    cfg = AnsatzConfig(qubits=_resolve(args, "qubits"), depth=_resolve(args, "depth"))
    result = run_vqe(
        spec,
        _resolve(args, "basis"),
        cfg,
        operator_kind=_resolve(args, "op"),
        seed=_resolve(args, "seed"),
        restarts=_resolve(args, "restarts"),
    )
    if args.history:
        _write(args.history, result.history_csv())
    if args.out:
        _write(args.out, result.to_json(history_csv_path=args.history))
    if args.figure:
        report_mod.convergence_figure(result, args.figure)
    shown = result.unscaled_mass if result.unscaled_mass is not None else result.best_value
    print(f"{shown:.8f}")
    return 0


def _cmd_report(args) -> int:
    from . import report as report_mod

    table = _resolve(args, "table")
    if table is None or not 2 <= table <= 7:
        print(f"error: --table must be in 2..7, got {table}", file=sys.stderr)
        return 2
    rows = report_mod.compute_table(
        table,
        seed=_resolve(args, "seed"),
        restarts=_resolve(args, "restarts"),
        depth=_resolve(args, "depth"),
    )
    _write(args.out, report_mod.table_csv(rows))
    if args.figure:
        report_mod.table_figure(rows, args.figure, table)
    for r in rows:
        print(
            f"{r['row']} ({r['basis']}): paulis {r['paulis_status']}, "
            f"exact {r['exact_status']}, exact_discrete {r['exact_discrete_status']}, "
            f"vqe {r['vqe_status']}"
        )
    return 0


def _cmd_thermo(args) -> int:
    spec = _model_spec(args)
    M = _resolve(args, "M")
    if M is None:
        raise ModelError("--M is required")
    rec = thermo_op(spec, M)
    payload = asdict(rec)
    if math.isinf(payload["beta"]):
        payload["beta"] = None
    if math.isinf(payload["r_minus"]):
        payload["r_minus"] = None
    text = json.dumps(payload, indent=2, allow_nan=False)
    if args.out:
        _write(args.out, text)
    print(text)
    return 0


def _cmd_potential(args) -> int:
    from . import report as report_mod

    spec = _model_spec(args)
    bmin, bmax = _resolve(args, "bmin"), _resolve(args, "bmax")
    samples = _resolve(args, "samples")
    if not (0 < bmin < bmax) or samples < 2:
        print("error: need 0 < bmin < bmax and samples >= 2", file=sys.stderr)
        return 2
    rows = report_mod.potential_rows(spec, bmin, bmax, samples)
    _write(args.out, report_mod.potential_csv(rows))
    if args.figure:
        report_mod.potential_figure(spec, rows, args.figure)
    return 0


def _cmd_contour(args) -> int:
    from . import report as report_mod

    spec = _model_spec(args)
    M = _resolve(args, "M")
    if M is None:
        raise ModelError("--M is required")
    bmin, bmax = _resolve(args, "bmin"), _resolve(args, "bmax")
    pamin, pamax = _resolve(args, "pamin"), _resolve(args, "pamax")
    pas, bs = _resolve(args, "pasamples"), _resolve(args, "bsamples")
    if not (0 < bmin < bmax) or not pamin < pamax or pas < 2 or bs < 2:
        print("error: invalid grid", file=sys.stderr)
        return 2
    pa, b, grid, rows = report_mod.contour_rows(spec, M, pamin, pamax, pas, bmin, bmax, bs)
    _write(args.out, report_mod.contour_csv(rows))
    if args.figure:
        report_mod.contour_figure(spec, M, pa, b, grid, args.figure)
    return 0


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", choices=["btz", "rn", "rnds", "string2d"])
    p.add_argument("--J", type=float, help="angular momentum (btz)")
    p.add_argument("--Q", type=float, help="charge (rn, rnds, string2d)")
    p.add_argument("--lam", type=float, help="cosmological constant (rnds)")
    p.add_argument("--ell", type=float, help="length scale")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value config file; flags take precedence")
    p.add_argument("--out", help="output data file (stdout if omitted)")
    p.add_argument("--figure", help="render a matplotlib figure to this path (.svg/.png)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bhvqe", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact lowest eigenvalue")
    _add_model_flags(p)
    _add_common_flags(p)
    p.add_argument("--basis", choices=["osc", "pos"])
    p.add_argument("--qubits", type=int)
    p.add_argument("--op", choices=[MASS, ABS_H, ABS_COMM])
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("vqe", help="variational minimization")
    _add_model_flags(p)
    _add_common_flags(p)
    p.add_argument("--basis", choices=["osc", "pos"])
    p.add_argument("--qubits", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--restarts", type=int)
    p.add_argument("--op", choices=[MASS, ABS_H, ABS_COMM])
    p.add_argument("--history", help="write the convergence history CSV here")
    p.set_defaults(func=_cmd_vqe)

    p = sub.add_parser("report", help="reproduce a published reference table")
    _add_common_flags(p)
    p.add_argument("--table", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--restarts", type=int)
    p.add_argument("--depth", type=int)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("thermo", help="horizon thermodynamics")
    _add_model_flags(p)
    _add_common_flags(p)
    p.add_argument("--M", type=float, help="black-hole mass")
    p.set_defaults(func=_cmd_thermo)

    p = sub.add_parser("potential", help="mass potential samples")
    _add_model_flags(p)
    _add_common_flags(p)
    p.add_argument("--bmin", type=float)
    p.add_argument("--bmax", type=float)
    p.add_argument("--samples", type=int)
    p.set_defaults(func=_cmd_potential)

    p = sub.add_parser("contour", help="turning-point residual grid")
    _add_model_flags(p)
    _add_common_flags(p)
    p.add_argument("--M", type=float)
    p.add_argument("--pamin", type=float)
    p.add_argument("--pamax", type=float)
    p.add_argument("--pasamples", type=int)
    p.add_argument("--bmin", type=float)
    p.add_argument("--bmax", type=float)
    p.add_argument("--bsamples", type=int)
    p.set_defaults(func=_cmd_contour)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._config = _read_config(args.config) if getattr(args, "config", None) else {}
    try:
        return args.func(args)
    except (ModelError, DimensionError, ExtremalityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NumericError, BhvqeError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
