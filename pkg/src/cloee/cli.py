"""Command-line front end.

Subcommands:
  optimize    solve one distance, print the result as a CSV row
  sweep       distance sweep of all strategies plus cloee and the oracle
  curves      eta/rate versus frame size for all modes at one distance
  dump-modes  the six-row PHY mode table (and frame constants) as CSV

All numeric defaults come from the scenario config; see scenario.py for the
file format.  Exit codes: 0 ok, 2 config/value errors, 3 I/O errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from .errors import ConfigError
from .frame import FRAME_CONSTANTS, MODE_TABLE
from .optimizer import OptResult, cloee
from .scenario import Scenario, load_scenario
from .sweep import emit_curves, emit_fixed_distance_curves, run_sweep

OPT_HEADER = ("distance,n_t,n_cpb,eta_bits_per_joule,rate_bps,lambda,"
              "feasible,iterations,branch,kkt_rate")


def _result_csv(distance: float, res: OptResult) -> str:
    kkt = "" if res.kkt_rate is None else repr(res.kkt_rate)
    return ",".join((
        repr(distance), str(res.n_t_star), str(res.n_cpb_star), repr(res.eta),
        repr(res.rate), repr(res.lambda_), "true" if res.feasible else "false",
        str(res.iterations), res.branch, kkt,
    ))


def _load(args) -> Scenario:
    scenario = load_scenario(args.config) if args.config else Scenario()
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.shadowing is not None:
        overrides["shadowing"] = args.shadowing == "on"
    if getattr(args, "workers", None) is not None:
        overrides["workers"] = args.workers
    return dataclasses.replace(scenario, **overrides) if overrides else scenario


def _cmd_optimize(args) -> int:
    scenario = _load(args)
    chi = scenario.shadowing_draws()[0] if scenario.shadowing else 0.0
    res = cloee(scenario.link_model(), args.distance, scenario.qos, scenario.solver, chi)
    lines = [OPT_HEADER, _result_csv(args.distance, res)]
    print("\n".join(lines))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "optimize.csv").write_text("\n".join(lines) + "\n")
    return 0


def _cmd_sweep(args) -> int:
    scenario = _load(args)
    rows = run_sweep(scenario)
    paths = emit_curves(rows, args.out, basename="sweep", fmt=args.format)
    for p in paths:
        print(p)
    return 0


def _cmd_curves(args) -> int:
    scenario = _load(args)
    chi = scenario.shadowing_draws()[0] if scenario.shadowing else 0.0
    paths = emit_fixed_distance_curves(scenario.link_model(), args.distance,
                                       scenario.qos, scenario.solver, args.out,
                                       fmt=args.format, chi=chi)
    for p in paths:
        print(p)
    return 0


def _cmd_dump_modes(args) -> int:
    mode_lines = ["n_cpb,t_w_s,t_sym_s,rate_uncoded_bps,rate_coded_bps"]
    for m in MODE_TABLE:
        mode_lines.append(f"{m.n_cpb},{m.t_w!r},{m.t_sym!r},"
                          f"{m.rate_uncoded!r},{m.rate_coded!r}")
    const_lines = ["name,value"]
    for field in dataclasses.fields(FRAME_CONSTANTS):
        const_lines.append(f"{field.name},{getattr(FRAME_CONSTANTS, field.name)!r}")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "modes.csv").write_text("\n".join(mode_lines) + "\n")
        (out / "frame_constants.csv").write_text("\n".join(const_lines) + "\n")
        print(out / "modes.csv")
        print(out / "frame_constants.csv")
    else:
        print("\n".join(mode_lines))
    return 0


def _add_common(sub: argparse.ArgumentParser, workers: bool = False) -> None:
    sub.add_argument("--config", metavar="PATH", help="scenario config file")
    sub.add_argument("--seed", type=int, default=None, help="shadowing RNG seed")
    sub.add_argument("--shadowing", choices=("on", "off"), default=None,
                     help="lognormal shadowing draws (default: scenario setting)")
    if workers:
        sub.add_argument("--workers", type=int, default=None,
                         help="concurrent distance evaluations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cloee",
        description="Energy-efficiency link adaptation for IEEE 802.15.6 IR-UWB",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_opt = sub.add_parser("optimize", help="solve a single distance")
    p_opt.add_argument("--distance", type=float, required=True, metavar="METERS")
    p_opt.add_argument("--out", metavar="DIR", help="also write optimize.csv here")
    _add_common(p_opt)
    p_opt.set_defaults(func=_cmd_optimize)

    p_sweep = sub.add_parser("sweep", help="distance sweep of all strategies")
    p_sweep.add_argument("--out", metavar="DIR", default=".", help="output directory")
    p_sweep.add_argument("--format", choices=("csv", "svg"), default="csv")
    _add_common(p_sweep, workers=True)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_curves = sub.add_parser("curves", help="eta/rate vs frame size at one distance")
    p_curves.add_argument("--distance", type=float, default=8.4, metavar="METERS")
    p_curves.add_argument("--out", metavar="DIR", default=".", help="output directory")
    p_curves.add_argument("--format", choices=("csv", "svg"), default="csv")
    _add_common(p_curves)
    p_curves.set_defaults(func=_cmd_curves)

    p_dump = sub.add_parser("dump-modes", help="PHY mode table as CSV")
    p_dump.add_argument("--out", metavar="DIR", help="write modes.csv and frame_constants.csv")
    p_dump.set_defaults(func=_cmd_dump_modes)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config-error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io-error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"value-error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
