"""Command-line front end.

Subcommands fall into three groups: scalar queries (``eigen``,
``casimir``, ``zonal``, ``bag``) default to a JSON record with a
``meta`` block; table producers (``fig1``, ``fig3``, ``fig4``,
``shifts``) default to CSV with a ``#``-prefixed provenance preamble;
``selftest`` re-derives the headline numbers and prints a pass/fail
report.  Either group can be switched with ``--format``.

Exit codes: 0 success, 1 bad usage or invalid parameter values, 2
numerical failure (non-convergence, bracketing, failed self-checks).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from datetime import datetime, timezone

from . import __version__, _figures, _selftest, bag, mode_oracle, spheroidal, zeta_casimir
from .errors import DomainError, SphzetaError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2

_FLOAT_FMT = ".12g"


class _CliParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# Serialization helpers
# ---------------------------------------------------------------------------


def _meta(command: str, params: dict, no_timestamp: bool) -> dict:
    meta = {"version": __version__, "command": command, "params": params}
    if not no_timestamp:
        meta["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return meta


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, _FLOAT_FMT)
    if isinstance(value, (list, tuple)):
        return ";".join(str(v) for v in value)
    return str(value)


def _csv_text(meta: dict, columns, rows) -> str:
    params = " ".join(f"{k}={v}" for k, v in meta["params"].items())
    line = f"# sphzeta {meta['version']} {meta['command']}"
    if params:
        line += " " + params
    lines = [line]
    if "generated_at" in meta:
        lines.append(f"# generated_at={meta['generated_at']}")
    lines.append(",".join(columns))
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(document: dict, meta: dict) -> str:
    document = dict(document)
    document["meta"] = meta
    return json.dumps(document, indent=2) + "\n"


def _render_record(args, command: str, params: dict, record: dict) -> str:
    meta = _meta(command, params, args.no_timestamp)
    if args.format == "csv":
        return _csv_text(meta, record.keys(), [tuple(record.values())])
    return _json_text(record, meta)


def _render_table(args, command: str, params: dict, columns, rows) -> str:
    meta = _meta(command, params, args.no_timestamp)
    if args.format == "json":
        return _json_text(
            {"columns": list(columns), "rows": [list(r) for r in rows]}, meta
        )
    return _csv_text(meta, columns, rows)


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (output text, exit code)
# ---------------------------------------------------------------------------


def cmd_eigen(args):
    decomp = spheroidal.eigen_decomp(args.l, args.m, args.gamma2)
    record = {
        "l": decomp.l,
        "m": decomp.m,
        "gamma2": decomp.gamma2,
        "lambda": decomp.lam,
        "k_min": decomp.k_min,
        "k_max": decomp.k_max,
        "n_terms": len(decomp.coeffs),
        "residual": decomp.residual,
    }
    params = {"l": args.l, "m": args.m, "gamma2": args.gamma2}
    return _render_record(args, "eigen", params, record), EXIT_OK


def cmd_fig1(args):
    rows = _figures.fig1_rows(args.bc)
    params = {"bc": args.bc, "a": 1.0}
    return _render_table(args, "fig1", params, _figures.FIG1_COLUMNS, rows), EXIT_OK


def cmd_fig3(args):
    rows = _figures.fig3_rows()
    params = {
        "eta": _figures.FIG3_ETA,
        "m": 0,
        "l": "/".join(str(l) for l in _figures.CURVE_L_VALUES),
    }
    return _render_table(args, "fig3", params, _figures.FIG3_COLUMNS, rows), EXIT_OK


def cmd_fig4(args):
    rows = _figures.fig4_rows(args.z)
    params = {
        "z": args.z,
        "m": 0,
        "l": "/".join(str(l) for l in _figures.CURVE_L_VALUES),
    }
    return _render_table(args, "fig4", params, _figures.FIG4_COLUMNS, rows), EXIT_OK


def cmd_casimir(args):
    if args.geometry == "sphere":
        if args.e != 0.0:
            raise DomainError("sphere geometry requires e = 0")
        if args.a <= 0.0:
            raise DomainError("scale must be positive")
        expansion = zeta_casimir.sphere_energy_total(args.bc, l_max=args.lmax)
        expansion = dataclasses.replace(expansion, E0=expansion.E0 / args.a)
    else:
        expansion = zeta_casimir.spheroid_energy(
            args.a, args.e, args.geometry, args.bc, l_max=args.lmax
        )
    record = expansion.as_dict()
    record["a"] = args.a
    record["e"] = args.e
    record["energy"] = expansion.evaluate(args.e)
    record["units"] = "energy times the scale a is dimensionless"
    params = {
        "geometry": args.geometry,
        "bc": args.bc,
        "a": args.a,
        "e": args.e,
        "lmax": args.lmax,
    }
    return _render_record(args, "casimir", params, record), EXIT_OK


def cmd_zonal(args):
    prescription = zeta_casimir.PPPrescription(variant=args.prescription)
    c2_zonal, c2_exact = zeta_casimir.zonal_vs_exact_factors(prescription=prescription)
    record = {
        "c2_zonal": c2_zonal,
        "c2_exact": c2_exact,
        "prescription": prescription.variant,
        "mu_convention": prescription.mu_convention,
    }
    params = {"prescription": args.prescription}
    return _render_record(args, "zonal", params, record), EXIT_OK


def cmd_bag(args):
    record = {
        "e": args.e,
        "semi_axis": 1.0,
        "modified_mode_sum": bag.modified_energy(),
        "meson_prolate": bag.meson_prolate_energy(1.0, args.e),
        "baryon_oblate": bag.baryon_oblate_energy(1.0, args.e),
    }
    return _render_record(args, "bag", {"e": args.e}, record), EXIT_OK


def cmd_shifts(args):
    rows = []
    for l in range(args.lmax + 1):
        for m in range(l + 1):
            fit = mode_oracle.root_shift_fit(l, m, args.bc)
            row = mode_oracle.shift_fit_row(fit)
            rows.append(tuple(row[c] for c in mode_oracle.SHIFT_CSV_COLUMNS))
    params = {"bc": args.bc, "lmax": args.lmax}
    return (
        _render_table(args, "shifts", params, mode_oracle.SHIFT_CSV_COLUMNS, rows),
        EXIT_OK,
    )


def cmd_selftest(args):
    results = _selftest.run_checks()
    meta = _meta("selftest", {}, args.no_timestamp)
    lines = [f"# sphzeta {meta['version']} selftest"]
    if "generated_at" in meta:
        lines.append(f"# generated_at={meta['generated_at']}")
    name_w = max(len(r.name) for r in results)
    obs_w = max(len(r.observed) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{r.name:<{name_w}}  {status:<4}  {r.observed:<{obs_w}}  {r.required}"
        )
    n_ok = sum(r.passed for r in results)
    overall = "PASS" if n_ok == len(results) else "FAIL"
    lines.append(f"overall: {overall} ({n_ok}/{len(results)} checks)")
    code = EXIT_OK if n_ok == len(results) else EXIT_NUMERICAL
    return "\n".join(lines) + "\n", code


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------


def _add_output_options(sub, default_format=None):
    sub.add_argument("--out", help="write to this file instead of stdout")
    sub.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit the generation timestamp (for reproducible output)",
    )
    if default_format is not None:
        sub.add_argument(
            "--format",
            choices=("csv", "json"),
            default=default_format,
            help=f"output format (default: {default_format})",
        )


def build_parser() -> _CliParser:
    parser = _CliParser(
        prog="sphzeta",
        description="Spheroidal wave functions and perturbative vacuum energies.",
    )
    parser.add_argument(
        "--version", action="version", version=f"sphzeta {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eigen", help="angular eigenvalue and expansion data")
    p.add_argument("--l", type=int, required=True, help="angular index l >= 0")
    p.add_argument("--m", type=int, default=0, help="azimuthal index (default 0)")
    p.add_argument(
        "--gamma2",
        type=float,
        required=True,
        help="spheroidal parameter; positive prolate, negative oblate",
    )
    _add_output_options(p, "json")
    p.set_defaults(handler=cmd_eigen)

    p = sub.add_parser("fig1", help="spheroid energy vs ellipticity table")
    p.add_argument(
        "--bc",
        choices=("dirichlet", "neumann", "em"),
        default="dirichlet",
        help="boundary condition (default dirichlet)",
    )
    _add_output_options(p, "csv")
    p.set_defaults(handler=cmd_fig1)

    p = sub.add_parser("fig3", help="angular approximation accuracy table")
    _add_output_options(p, "csv")
    p.set_defaults(handler=cmd_fig3)

    p = sub.add_parser("fig4", help="radial approximation accuracy table")
    p.add_argument(
        "--z", type=float, default=_figures.FIG4_DEFAULT_Z,
        help="dimensionless frequency k*a (default 10)",
    )
    _add_output_options(p, "csv")
    p.set_defaults(handler=cmd_fig4)

    p = sub.add_parser("casimir", help="regularized vacuum energy")
    p.add_argument(
        "--geometry",
        choices=("sphere", "prolate", "oblate"),
        default="sphere",
    )
    p.add_argument(
        "--bc", choices=("dirichlet", "neumann", "em"), default="dirichlet"
    )
    p.add_argument("--a", type=float, default=1.0, help="semi-axis scale (default 1)")
    p.add_argument("--e", type=float, default=0.0, help="ellipticity (default 0)")
    p.add_argument(
        "--lmax", type=int, default=30, help="partial-wave cutoff (default 30)"
    )
    _add_output_options(p, "json")
    p.set_defaults(handler=cmd_casimir)

    p = sub.add_parser("zonal", help="zonal vs exact deformation factors")
    p.add_argument(
        "--prescription",
        choices=("finite-part-with-pole-term", "finite-part"),
        default="finite-part-with-pole-term",
        help="pole-handling rule for the finite energy factor",
    )
    _add_output_options(p, "json")
    p.set_defaults(handler=cmd_zonal)

    p = sub.add_parser("bag", help="bag-model deformation energies")
    p.add_argument("--e", type=float, default=0.0, help="ellipticity (default 0)")
    _add_output_options(p, "json")
    p.set_defaults(handler=cmd_bag)

    p = sub.add_parser("shifts", help="fitted vs predicted root-shift table")
    p.add_argument(
        "--bc", choices=("dirichlet", "neumann"), default="dirichlet"
    )
    p.add_argument(
        "--lmax", type=int, default=2, help="fit all modes with l <= lmax (default 2)"
    )
    _add_output_options(p, "csv")
    p.set_defaults(handler=cmd_shifts)

    p = sub.add_parser("selftest", help="re-derive headline numbers and report")
    _add_output_options(p)
    p.set_defaults(handler=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        text, code = args.handler(args)
    except DomainError as exc:
        print(f"sphzeta: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SphzetaError as exc:
        print(f"sphzeta: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    try:
        if args.out is None:
            sys.stdout.write(text)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"sphzeta: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    raise SystemExit(main())
