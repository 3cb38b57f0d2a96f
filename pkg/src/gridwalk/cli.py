"""Command-line driver: ``gridwalk {matrix,coverage,simulate,compare,dependence}``."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import io
from ._parallel import default_threads
from .chain import ChainModel, make_absorbing
from .coverage import expected_coverage_exact, expected_coverage_multi, expected_coverage_naive
from .dependence import check_successive_dependence, check_two_step_dependence
from .errors import DomainError, ResourceError
from .lattice import Borders, GridSpec, index_of
from .montecarlo import SimConfig, agreement_scores, brute_force_coverage, simulate_coverage

EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_IO = 4


def _cell(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y[,z], got {text!r}")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"expected x,y[,z], got {text!r}")
    return parts


def _grid_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("grid")
    g.add_argument("--width", type=int, required=True)
    g.add_argument("--depth", type=int, required=True)
    g.add_argument("--height", type=int, default=1, help="1 (default) for a 2D grid")
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--borders", dest="boundless", action="store_false", help="bordered walk (default)")
    mode.add_argument("--boundless", dest="boundless", action="store_true", help="wrap-around walk")
    p.set_defaults(boundless=False)
    start = g.add_mutually_exclusive_group()
    start.add_argument("--start-cell", type=_cell, metavar="X,Y[,Z]", help="deterministic start")
    start.add_argument("--uniform", action="store_true", help="uniform start (default)")
    o = p.add_argument_group("output")
    o.add_argument("--format", choices=("csv", "json"), default="csv")
    o.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
    o.add_argument("--threads", type=int, default=None, help="worker threads (default: $GRIDWALK_THREADS or CPU count)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridwalk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    grid = _grid_parent()

    m = sub.add_parser("matrix", parents=[grid], help="transition matrix")
    m.add_argument("--absorb", type=int, metavar="STATE", help="make this 1-based state absorbing")

    c = sub.add_parser("coverage", parents=[grid], help="exact expected-coverage curve")
    c.add_argument("--steps", type=int, required=True)
    c.add_argument("--uavs", type=int, default=1)
    c.add_argument("--naive", action="store_true", help="add the independence-assuming curve")
    c.add_argument("--brute-force", action="store_true", help="add the path-enumeration oracle (tiny grids only)")

    s = sub.add_parser("simulate", parents=[grid], help="Monte Carlo coverage estimate")
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--uavs", type=int, default=1)
    s.add_argument("--replications", type=int, default=10000)
    s.add_argument("--seed", type=int, default=0)

    cmp_ = sub.add_parser("compare", parents=[grid], help="exact vs naive vs Monte Carlo")
    cmp_.add_argument("--steps", type=int, required=True)
    cmp_.add_argument("--replications", type=int, default=10000)
    cmp_.add_argument("--seed", type=int, default=0)

    d = sub.add_parser("dependence", parents=[grid], help="dependence report for one state")
    d.add_argument("--cell", type=_cell, required=True, metavar="X,Y[,Z]", help="state under test")
    d.add_argument("--time", type=int, required=True, help="time m (two-step) or t (successive)")
    d.add_argument("--test", choices=("two-step", "successive"), default="two-step")
    return parser


def _validate(parser, args) -> None:
    for flag in ("steps", "time"):
        if getattr(args, flag, 0) is not None and getattr(args, flag, 0) < 0:
            parser.error(f"--{flag} must be non-negative")
    for flag in ("uavs", "replications", "threads"):
        value = getattr(args, flag, None)
        if value is not None and value < 1:
            parser.error(f"--{flag} must be at least 1")
    seed = getattr(args, "seed", 0)
    if not 0 <= seed < 2**64:
        parser.error("--seed must be a 64-bit unsigned integer")


def _model(parser, args) -> ChainModel:
    borders = Borders.BOUNDLESS if args.boundless else Borders.BORDERED
    try:
        spec = GridSpec(args.width, args.depth, args.height, borders)
    except DomainError as exc:
        parser.error(f"--width/--depth/--height: {exc}")
    start = "uniform"
    if args.start_cell is not None:
        cell = args.start_cell if len(args.start_cell) == 3 else (*args.start_cell, 1)
        try:
            start = index_of(spec, cell)
        except DomainError as exc:
            parser.error(f"--start-cell: {exc}")
    return ChainModel.from_spec(spec, start)


def _emit(args, columns: dict, meta: dict, summary: dict | None = None) -> str:
    if args.format == "json":
        if summary:
            meta = {**meta, "summary": summary}
        return io.table_to_json(columns, meta)
    return io.table_to_csv(columns, summary)


def _meta(args, model: ChainModel) -> dict:
    spec = model.spec
    return {
        "command": args.command,
        "width": spec.width,
        "depth": spec.depth,
        "height": spec.height,
        "borders": spec.borders.value,
        "start": "uniform" if args.start_cell is None else list(args.start_cell),
    }


def run(args, parser) -> str:
    _validate(parser, args)
    model = _model(parser, args)
    threads = args.threads if args.threads is not None else default_threads()

    if args.command == "matrix":
        P = model.transition
        if args.absorb is not None:
            if not 1 <= args.absorb <= model.n_states:
                parser.error(f"--absorb must lie in 1..{model.n_states}")
            P = make_absorbing(model, args.absorb)
        return io.matrix_to_json(P) if args.format == "json" else io.matrix_to_csv(P)

    if args.command == "dependence":
        cell = args.cell if len(args.cell) == 3 else (*args.cell, 1)
        try:
            z = index_of(model.spec, cell)
        except DomainError as exc:
            parser.error(f"--cell: {exc}")
        if args.test == "two-step":
            payload = check_two_step_dependence(model, z, args.time).to_dict()
        else:
            verdict = check_successive_dependence(model, z, args.time)
            payload = {"state": z, "time": args.time, "verdict": verdict.value}
        if args.format == "json":
            return json.dumps(payload, indent=2) + "\n"
        return io.table_to_csv({k: [v] for k, v in payload.items()})

    steps = np.arange(args.steps + 1)
    meta = _meta(args, model)

    if args.command == "coverage":
        curve = expected_coverage_multi(model, args.steps, args.uavs, threads=threads)
        meta["uavs"] = args.uavs
        if not (args.naive or args.brute_force):
            return _emit(args, {"step": steps, "value": curve.values}, meta)
        columns = {"step": steps, "exact": curve.values}
        if args.naive:
            columns["naive"] = expected_coverage_naive(model, args.steps).values
        if args.brute_force:
            if args.uavs != 1:
                parser.error("--brute-force supports --uavs 1 only")
            columns["brute_force"] = brute_force_coverage(model, args.steps).values
        return _emit(args, columns, meta)

    cfg = SimConfig(model, args.steps, args.replications, getattr(args, "uavs", 1), args.seed)
    sim = simulate_coverage(cfg, threads=threads)
    meta.update(uavs=cfg.uav_count, replications=cfg.replications, seed=cfg.seed)

    if args.command == "simulate":
        return _emit(args, {"step": steps, "mc_mean": sim.mean, "mc_stderr": sim.stderr}, meta)

    exact = expected_coverage_exact(model, args.steps, threads=threads).values
    naive = expected_coverage_naive(model, args.steps).values
    summary = {
        "max_abs_exact_naive": float(np.max(np.abs(exact - naive))),
        "max_exact_mc_z": float(np.max(agreement_scores(exact, sim.mean, sim.stderr))),
    }
    columns = {"step": steps, "exact": exact, "naive": naive, "mc_mean": sim.mean, "mc_stderr": sim.stderr}
    return _emit(args, columns, meta, summary)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = run(args, parser)
    except ResourceError as exc:
        print(f"gridwalk: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(f"gridwalk: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.output == "-":
            sys.stdout.write(text)
        else:
            with open(args.output, "w", newline="\n") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"gridwalk: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
