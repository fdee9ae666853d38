"""Command-line surface: spectra, wave functions, phase shifts, validation.

Every command emits a deterministic tabular artifact (CSV or JSON, 12
significant digits, rows in grid order) and, when writing to a file,
renders a matplotlib figure alongside it.  JSON artifacts embed the
resolved run configuration under ``meta.config``; ``hellmann --config
artifact.json`` re-runs it verbatim.

Exit codes: 0 success, 2 usage, 3 domain error, 4 numerical error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import __version__
from .bound import QuantumNumbers, bound_energy, wave_solution, wavefunction
from .errors import DomainError, HellmannError, NumericalError
from .model import (ApproxScheme, PotentialParams, Variant, approx_profile,
                    profile_csv)
from .oracle import (TABLE1_HBAR, TABLE1_MASS, numeric_phase, report_csv,
                     report_json, validation_report)
from .scatter import asymptotic_amplitude, phase_shift, scatter_state

_OUT_DIR_ENV = "HELLMANN_OUT_DIR"


# ---------------------------------------------------------------- formatting

def _fmt(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:.12g}{v.imag:+.12g}i"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _round12(v: float) -> float:
    return float(f"{v:.12g}")


def _jsonable(v):
    if isinstance(v, complex):
        return {"re": _round12(v.real), "im": _round12(v.imag)}
    if isinstance(v, float):
        return _round12(v)
    return v


def rows_csv(rows: list[dict]) -> str:
    if not rows:
        return "\n"
    cols = list(rows[0].keys())
    lines = [",".join(cols)]
    for row in rows:
        lines.append(",".join(_fmt(row[c]) for c in cols))
    return "\n".join(lines) + "\n"


def rows_json(rows: list[dict], config: dict) -> str:
    doc = {
        "meta": {"version": __version__, "config": config},
        "rows": [{k: _jsonable(v) for k, v in row.items()} for row in rows],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------- grid parsing

def parse_int_list(text: str) -> list[int]:
    """'3' -> [3];  '0:4' -> [0..4];  '0,2,5' -> [0, 2, 5]."""
    if "," in text:
        return [int(t) for t in text.split(",")]
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def parse_float_list(text: str) -> list[float]:
    """'1.5' -> [1.5];  'lo:hi:count' -> uniform grid;  comma list."""
    if "," in text:
        return [float(t) for t in text.split(",")]
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"float range must be lo:hi:count, got {text!r}")
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 2:
            return [lo]
        step = (hi - lo) / (count - 1)
        return [lo + i * step for i in range(count)]
    return [float(text)]


# ----------------------------------------------------------------- commands

def _params_from(config: dict) -> PotentialParams:
    return PotentialParams(a=config["a"], b=config["b"], lam=config["lam"],
                           mass=config["m"], hbar=config["hbar"])


def run_spectrum(config: dict) -> list[dict]:
    params = _params_from(config)
    variant = Variant.from_name(config["variant"])
    rows = []
    for n in config["n"]:
        for ell in config["ell"]:
            entry = bound_energy(params, variant, QuantumNumbers(n, ell))
            rows.append({
                "variant": variant.value, "n": n, "ell": ell,
                "energy": entry.energy, "source": entry.source,
                "note": entry.note,
            })
    return rows


def run_wavefunction(config: dict) -> list[dict]:
    params = _params_from(config)
    variant = Variant.from_name(config["variant"])
    qn = QuantumNumbers(config["n"][0], config["ell"][0])
    sol = wave_solution(params, variant, qn)
    lo, hi, pts = config["u_min"], config["u_max"], config["points"]
    step = (hi - lo) / (pts - 1)
    rows = []
    for i in range(pts):
        u = lo + i * step
        val = wavefunction(params, variant, qn, u=u,
                           normalized=config["normalized"],
                           measure=config["measure"])
        rows.append({
            "u": u, "value": val,
            "lambda1": sol.lambda1, "lambda2": sol.lambda2,
        })
    return rows


def run_phase(config: dict) -> list[dict]:
    params = _params_from(config)
    rows = []
    for ell in config["ell"]:
        for energy in config["E"]:
            res = phase_shift(params, energy, ell)
            st = scatter_state(params, energy, ell)
            rows.append({
                "E": energy, "ell": ell,
                "delta_mod_pi": res.delta,
                "branch_count": res.branch_count,
                "kappa": st.kappa, "capital_lambda2": st.capital_lambda2,
                "amplitude": asymptotic_amplitude(params, energy, ell),
                "arg_gamma_2ik": res.components[0],
                "arg_gamma_minus": res.components[1],
                "arg_gamma_plus": res.components[2],
                "lambda2_real": st.lambda2_real,
            })
            if config.get("oracle"):
                rows[-1]["delta_oracle_mod_pi"] = numeric_phase(params, energy, ell)
    return rows


def run_profile(config: dict) -> list:
    scheme = ApproxScheme.from_name(config["scheme"])
    return approx_profile(config["lam"], config["r_min"], config["r_max"],
                          config["points"], scheme)


# ------------------------------------------------------------------ plumbing

def _resolve_out(path: str | None) -> str | None:
    if path in (None, "-"):
        return None
    if not os.path.isabs(path):
        base = os.environ.get(_OUT_DIR_ENV)
        if base:
            return os.path.join(base, path)
    return path


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        os.makedirs(os.path.dirname(out_path) or ".", exist_ok=True)
        with open(out_path, "w") as fh:
            fh.write(text)


def _figure_path(out_path: str) -> str:
    root, _ = os.path.splitext(out_path)
    return root + ".png"


def execute(config: dict) -> int:
    """Run one resolved configuration and emit its artifact(s)."""
    command = config["command"]
    out_path = _resolve_out(config.get("out"))
    want_plot = config.get("plot")
    if want_plot is None:
        want_plot = out_path is not None

    if command == "validate":
        report = validation_report(include_oracle=not config.get("skip_oracle", False),
                                   oracle_step=config.get("oracle_step", 0.002))
        text = report_json(report) if config["output"] == "json" else report_csv(report)
        _emit(text, out_path)
        if want_plot and out_path:
            from . import plots
            plots.render_validation(report, _figure_path(out_path))
        return 0

    if command == "approx-profile":
        rows = run_profile(config)
        if config["output"] == "json":
            dict_rows = [{"r": t.r, "exact": t.exact, "approx": t.approx,
                          "rel_err": t.rel_err} for t in rows]
            text = rows_json(dict_rows, config)
        else:
            text = profile_csv(rows)
        _emit(text, out_path)
        if want_plot and out_path:
            from . import plots
            plots.render_profile(rows, _figure_path(out_path), config["lam"])
        return 0

    runners = {"spectrum": run_spectrum, "wavefunction": run_wavefunction,
               "phase": run_phase}
    rows = runners[command](config)
    text = rows_json(rows, config) if config["output"] == "json" else rows_csv(rows)
    _emit(text, out_path)
    if want_plot and out_path:
        from . import plots
        fig = _figure_path(out_path)
        if command == "spectrum":
            plot_rows = [{"n": r["n"], "ell": r["ell"],
                          "energy_re": r["energy"].real} for r in rows]
            plots.render_spectrum(plot_rows, fig)
        elif command == "wavefunction":
            plot_rows = [{"u": r["u"], "value_re": r["value"].real,
                          "value_im": r["value"].imag} for r in rows]
            plots.render_wavefunction(plot_rows, fig)
        else:
            plots.render_phase(rows, fig)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hellmann",
        description="Bound states, wave functions and phase shifts of the "
                    "Hellmann potential family.")
    ap.add_argument("--config", help="re-run the configuration embedded in a JSON artifact")
    sub = ap.add_subparsers(dest="command")

    def add_phys(p, lam_default=0.0):
        p.add_argument("--a", type=float, default=1.0, help="Coulomb strength")
        p.add_argument("--b", type=float, default=0.0, help="screened strength")
        p.add_argument("--lambda", dest="lam", type=float, default=lam_default,
                       help="screening rate")
        p.add_argument("--m", type=float, default=1.0, help="particle mass")
        p.add_argument("--hbar", type=float, default=1.0)
        p.add_argument("--convention", choices=["table1"],
                       help="apply the frozen reference-table unit convention")

    def add_io(p):
        p.add_argument("--output", choices=["csv", "json"], default="csv")
        p.add_argument("--out", default="-", help="output path, '-' for stdout "
                       f"(relative names resolve under ${_OUT_DIR_ENV})")
        g = p.add_mutually_exclusive_group()
        g.add_argument("--plot", dest="plot", action="store_true", default=None,
                       help="force figure rendering next to the artifact")
        g.add_argument("--no-plot", dest="plot", action="store_false",
                       help="suppress the figure even for file output")

    p = sub.add_parser("spectrum", help="closed-form eigenvalues on an (n, ell) grid")
    add_phys(p)
    p.add_argument("--variant", default="radial",
                   choices=[v.value for v in Variant])
    p.add_argument("--n", default="0", help="radial index: int, lo:hi or comma list")
    p.add_argument("--ell", default="0", help="angular momentum: int, lo:hi or comma list")
    add_io(p)

    p = sub.add_parser("wavefunction", help="sampled bound-state wave function")
    add_phys(p)
    p.add_argument("--variant", default="radial",
                   choices=[v.value for v in Variant])
    p.add_argument("--n", default="0")
    p.add_argument("--ell", default="0")
    p.add_argument("--u-min", dest="u_min", type=float, default=0.01)
    p.add_argument("--u-max", dest="u_max", type=float, default=0.99)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--measure", choices=["paper-u", "physical-r"], default="paper-u")
    add_io(p)

    p = sub.add_parser("phase", help="partial-wave phase shifts delta_ell(E)")
    add_phys(p, lam_default=0.1)
    p.add_argument("--E", default="1.0", help="energy: float, lo:hi:count or comma list")
    p.add_argument("--ell", default="0", help="int, lo:hi or comma list")
    p.add_argument("--oracle", action="store_true",
                   help="also extract each phase numerically (slower)")
    add_io(p)

    p = sub.add_parser("validate", help="reference-table validation report")
    p.add_argument("--skip-oracle", action="store_true",
                   help="omit the Numerov columns (fast)")
    p.add_argument("--oracle-step", type=float, default=0.002)
    add_io(p)

    p = sub.add_parser("approx-profile", help="exact vs approximate 1/x or 1/r^2 table")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--r-min", dest="r_min", type=float, default=0.1)
    p.add_argument("--r-max", dest="r_max", type=float, default=50.0)
    p.add_argument("--points", type=int, default=100)
    p.add_argument("--scheme", choices=["inverse-x", "pekeris"], default="inverse-x")
    add_io(p)

    return ap


def _config_from_args(args: argparse.Namespace) -> dict:
    config = {"command": args.command, "output": args.output,
              "out": args.out, "plot": args.plot}
    if args.command == "validate":
        config["skip_oracle"] = args.skip_oracle
        config["oracle_step"] = args.oracle_step
        return config
    if args.command == "approx-profile":
        config.update(lam=args.lam, r_min=args.r_min, r_max=args.r_max,
                      points=args.points, scheme=args.scheme)
        return config
    m, hbar = args.m, args.hbar
    if args.convention == "table1":
        m, hbar = TABLE1_MASS, TABLE1_HBAR
    config.update(a=args.a, b=args.b, lam=args.lam, m=m, hbar=hbar)
    if args.command == "spectrum":
        config.update(variant=args.variant, n=parse_int_list(args.n),
                      ell=parse_int_list(args.ell))
    elif args.command == "wavefunction":
        config.update(variant=args.variant, n=parse_int_list(args.n),
                      ell=parse_int_list(args.ell), u_min=args.u_min,
                      u_max=args.u_max, points=args.points,
                      normalized=args.normalized, measure=args.measure)
    elif args.command == "phase":
        config.update(E=parse_float_list(args.E), ell=parse_int_list(args.ell),
                      oracle=args.oracle)
    return config


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.config:
            with open(args.config) as fh:
                doc = json.load(fh)
            config = doc["meta"]["config"] if "meta" in doc else doc
            return execute(config)
        if not args.command:
            ap.print_help()
            return 2
        return execute(_config_from_args(args))
    except DomainError as exc:
        print(f"error:domain:{exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"error:numerical:{exc}", file=sys.stderr)
        return 4
    except HellmannError as exc:  # pragma: no cover - catch-all for subclasses
        print(f"error:internal:{exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
