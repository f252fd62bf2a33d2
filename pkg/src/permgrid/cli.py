"""Command-line front end.

Subcommands: ``stats`` (statistics of one permutation), ``grid`` (ASCII/SVG
rendering), ``dtype`` (delta type of a point or the full census), ``table``
(exact tables with optional figure), ``theta`` (trace the constructive maps),
``verify`` (exhaustive checks).  Exit codes: 0 success, 1 verification
failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify as verify_mod
from .bijections import theta_A, theta_I, theta_J
from .config import CapExceeded, RunConfig, load_config
from .grid import DTYPES, GridPoint, dtype, dtype_census
from .paths import path_json_obj, trace_paths
from .perm import Permutation
from .render import ascii_grid, select_paths, svg_grid
from .tables import METHODS, table


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _parse_point(text: str) -> GridPoint:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected a point as 'row,col', got {text!r}")
    return GridPoint(int(parts[0]), int(parts[1]))


def _cmd_stats(args: argparse.Namespace, _config: RunConfig) -> int:
    pi = Permutation.parse(args.perm)
    profile = pi.descent_profile()
    obj = {
        "perm": str(pi),
        "n": pi.n,
        "des": profile.des,
        "ides": profile.ides,
        "descents": list(pi.descents()),
        "inverse": str(pi.inverse()),
        "involution": pi.is_involution(),
        "fixed_point_free_involution": pi.is_fixed_point_free_involution(),
    }
    _emit(_json_text(obj), args.out)
    return 0


def _cmd_grid(args: argparse.Namespace, config: RunConfig) -> int:
    pi = Permutation.parse(args.perm)
    if pi.n < 1:
        raise ValueError("grid rendering needs n >= 1")
    selected = ()
    if args.paths:
        selected = select_paths(trace_paths(pi), args.paths)
    if args.format == "json":
        obj = {"perm": str(pi), "paths": [path_json_obj(p) for p in selected]}
        _emit(_json_text(obj), args.out)
        return 0
    marks = ()
    if args.mark_dtype:
        wanted = _parse_point(args.mark_dtype)  # reuse the row,col parser
        marks = tuple(
            (r, c)
            for r in range(1, pi.n + 2)
            for c in range(1, pi.n + 2)
            if dtype(pi, (r, c)) == (wanted.row, wanted.col)
        )
    if args.svg:
        text = svg_grid(
            pi,
            paths=selected,
            dtype_overlay=args.dtypes,
            marks=marks,
            colors=config.colors,
        )
    else:
        text = ascii_grid(pi, dtype_overlay=args.dtypes, paths=selected)
    _emit(text, args.out)
    return 0


def _cmd_dtype(args: argparse.Namespace, _config: RunConfig) -> int:
    pi = Permutation.parse(args.perm)
    if args.point:
        pt = _parse_point(args.point)
        d = dtype(pi, pt)
        obj = {"perm": str(pi), "point": [pt.row, pt.col], "dtype": [d.p, d.q]}
    else:
        census = dtype_census(pi)
        obj = {
            "perm": str(pi),
            "census": {f"{d.p},{d.q}": census[d] for d in DTYPES},
        }
    _emit(_json_text(obj), args.out)
    return 0


def _cmd_table(args: argparse.Namespace, config: RunConfig) -> int:
    config.ensure_within_cap(args.kind, args.n)
    tbl = table(args.kind, args.n, method=args.method, workers=config.workers)
    if args.format == "csv":
        text = tbl.to_csv_text()
    else:
        text = _json_text(tbl.to_json_obj())
    _emit(text, args.out)
    if args.plot:
        from .figures import save_table_figure

        save_table_figure(tbl, args.plot)
    return 0


def _cmd_theta(args: argparse.Namespace, _config: RunConfig) -> int:
    pi = Permutation.parse(args.perm)
    positions = [args.i] if args.i is not None else list(range(1, pi.n + 1))
    rows = []
    for i in positions:
        if args.kind == "A":
            sigma, pt = theta_A(pi, i)
            d = dtype(sigma, pt)
            rows.append(
                {
                    "input_perm": str(pi),
                    "k": i,
                    "output_perm": str(sigma),
                    "point": [pt.row, pt.col],
                    "dtype": [d.p, d.q],
                    "target_nij": [sigma.n, sigma.des + 1, sigma.ides + 1],
                }
            )
        else:
            theta = theta_I if args.kind == "I" else theta_J
            rows.append(theta(pi, i).to_json_obj())
    _emit(_json_text(rows), args.out)
    return 0


# Table kind whose enumeration cap bounds each check ("unimodal" clamps
# per kind internally).
_CHECK_CAP_KIND = {
    "census": "A",
    "paths": "A",
    "recA": "A",
    "bijection-A": "A",
    "recI": "I",
    "bijection-I": "I",
    "gf-I": "I",
    "recJ": "J",
    "bijection-J": "J",
    "gf-J": "J",
}


def _cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    cap_kind = _CHECK_CAP_KIND.get(args.check)
    if cap_kind is not None:
        bound = args.n_max if args.n_max is not None else verify_mod.DEFAULT_N_MAX[args.check]
        config.ensure_within_cap(cap_kind, bound)
    result = verify_mod.run_check(args.check, n_max=args.n_max, gf_margin=config.gf_margin)
    if args.format == "json":
        _emit(_json_text(result.to_json_obj()), args.out)
    else:
        _emit(result.summary_text() + "\n", args.out)
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permgrid",
        description="Permutation-grid statistics, exact descent tables, and "
        "exhaustive verification of their recurrences.",
    )
    parser.add_argument("--config", help="key=value config file")
    parser.add_argument("--workers", type=int, help="worker processes for brute-force counting")
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="descent statistics of one permutation")
    p_stats.add_argument("perm")
    p_stats.add_argument("--out", help="write to file instead of stdout")
    p_stats.set_defaults(func=_cmd_stats)

    p_grid = sub.add_parser("grid", help="render the permutation grid")
    p_grid.add_argument("perm")
    mode = p_grid.add_mutually_exclusive_group()
    mode.add_argument("--svg", action="store_true", help="emit SVG instead of ASCII")
    mode.add_argument("--ascii", action="store_true", help="emit ASCII art (default)")
    p_grid.add_argument("--dtypes", action="store_true", help="overlay delta-type digits")
    p_grid.add_argument(
        "--paths",
        action="append",
        choices=["h0", "h1", "v0", "v1", "all"],
        help="overlay traced paths (repeatable)",
    )
    p_grid.add_argument("--mark-dtype", metavar="P,Q", help="circle the points of one delta type")
    p_grid.add_argument(
        "--format", choices=["render", "json"], default="render", help="json emits the path lists"
    )
    p_grid.add_argument("--out")
    p_grid.set_defaults(func=_cmd_grid)

    p_dtype = sub.add_parser("dtype", help="delta type of a point, or the full census")
    p_dtype.add_argument("perm")
    which = p_dtype.add_mutually_exclusive_group()
    which.add_argument("--point", metavar="R,C")
    which.add_argument("--census", action="store_true", help="count all points (default)")
    p_dtype.add_argument("--out")
    p_dtype.set_defaults(func=_cmd_dtype)

    p_table = sub.add_parser("table", help="exact descent tables")
    p_table.add_argument("kind", choices=["A", "I", "J"])
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--method", choices=list(METHODS), default="brute")
    p_table.add_argument("--format", choices=["json", "csv"], default="json")
    p_table.add_argument("--out")
    p_table.add_argument("--plot", metavar="FILE", help="also render a figure of the table")
    p_table.set_defaults(func=_cmd_table)

    p_theta = sub.add_parser("theta", help="trace the constructive maps")
    p_theta.add_argument("kind", choices=["A", "I", "J"])
    p_theta.add_argument("--perm", required=True)
    p_theta.add_argument("--i", type=int, help="single position (default: all)")
    p_theta.add_argument("--out")
    p_theta.set_defaults(func=_cmd_theta)

    p_verify = sub.add_parser("verify", help="run one exhaustive check")
    p_verify.add_argument("check", choices=list(verify_mod.CHECK_NAMES))
    p_verify.add_argument("--n-max", type=int, help="size bound (default per check)")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(config_path=args.config, workers=args.workers)
        return args.func(args, config)
    except (ValueError, CapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
