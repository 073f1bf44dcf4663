"""CLI entry point for the fcy-workbench verification runner."""

import argparse
import json
import logging
import sys
from pathlib import Path

from ._config import WorkbenchConfig, load_config_from_yaml
from ._dynkin import cy_table
from ._errors import WorkbenchError, error_envelope, unknown_format
from ._export import FORMATS, export, export_rows
from ._models import success_envelope
from ._runner import ALL, run_suite
from ._suites import default_registry
from ._torsion import POLICIES, parse_theta, query
from ._twist import CHECKS, check_twists
from ._wpl import parse_weights, summarize, tubular_lattice

logger = logging.getLogger("fcy_workbench")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fcy-workbench",
        description="Exact-arithmetic checks for hereditary fractionally Calabi-Yau categories",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="Log debug output to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common], help="Run a verification suite")
    suite_names = default_registry().list_suites() + [ALL]
    run.add_argument("--suite", required=True, help=f"Suite name ({', '.join(suite_names)})")
    run.add_argument("--config", help="Path to workbench YAML config file")
    run.add_argument("--seed", type=int, help="Random seed (default: 42)")
    run.add_argument("--samples", type=int, help="Samples per randomized check (default: 1000)")
    run.add_argument("--rank", type=int, action="append", help="Tube rank to check. Can be repeated.")
    run.add_argument("--max-length", type=int, dest="max_length", help="Longest tube object (default: 8)")
    run.add_argument("--threads", type=int, help="Worker threads")
    run.add_argument("--out", help="Write the report to this file instead of stdout")
    run.add_argument("--format", default="json", help=f"Report format ({', '.join(FORMATS)})")

    wpl = sub.add_parser("wpl", parents=[common], help="Summarize a weight type")
    wpl.add_argument("--weights", required=True, help="Comma-separated weights, e.g. 2,3,6")

    twist = sub.add_parser("twist", parents=[common], help="Randomized twist functor check on a tubular lattice")
    twist.add_argument("--lattice", required=True, help="Comma-separated tubular weights")
    twist.add_argument("--check", default="quasi-inverse", choices=CHECKS)
    twist.add_argument("--seed", type=int, default=42)
    twist.add_argument("--samples", type=int, default=1000)

    torsion = sub.add_parser("torsion", parents=[common], help="Classify a class against a slope cut")
    torsion.add_argument("--weights", required=True, help="Comma-separated tubular weights")
    torsion.add_argument("--theta", required=True, help="Rational q, 'inf', or a bracket lo:hi")
    torsion.add_argument("--class", required=True, dest="vector", help="Comma-separated class vector")
    torsion.add_argument("--policy", default="undecided", choices=POLICIES)

    table = sub.add_parser("cy-table", parents=[common], help="Calabi-Yau dimensions of Dynkin quivers")
    table.add_argument("--diagrams", help="Comma-separated diagrams, e.g. A2,D4,E6")
    table.add_argument("--config", help="Path to workbench YAML config file")
    table.add_argument("--format", default="json", help=f"Table format ({', '.join(FORMATS)})")
    return parser


def _run_config(args: argparse.Namespace) -> WorkbenchConfig:
    config = load_config_from_yaml(args.config) if args.config else WorkbenchConfig()
    updates = {}
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.samples is not None:
        updates["samples"] = args.samples
    if args.threads is not None:
        updates["threads"] = args.threads
    config = config.model_copy(update=updates)
    tube = config.suites.tube
    if args.rank:
        tube.ranks = args.rank
    if args.max_length is not None:
        tube.max_length = args.max_length
    return WorkbenchConfig.model_validate(config.model_dump())


def _emit(payload: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(payload)
    else:
        sys.stdout.write(payload.decode())
        if not payload.endswith(b"\n"):
            sys.stdout.write("\n")


def _print_json(data: dict) -> None:
    print(json.dumps(data, indent=2))


def _command_run(args: argparse.Namespace) -> int:
    if args.format not in FORMATS:
        raise unknown_format(args.format)
    config = _run_config(args)
    report = run_suite(args.suite, config)
    _emit(export(report, args.format), args.out)
    summary = report.summary
    print(
        f"Ran suite {report.suite}: {summary.passed}/{summary.total} passed in {report.wall_time:.2f}s",
        file=sys.stderr,
    )
    for case in report.cases:
        if not case.passed:
            logger.warning("FAILED %s: expected %s, got %s", case.id, case.expected, case.got)
    return 0 if report.ok else 1


def _command_wpl(args: argparse.Namespace) -> int:
    _print_json(success_envelope(summarize(parse_weights(args.weights))))
    return 0


def _command_twist(args: argparse.Namespace) -> int:
    lat = tubular_lattice(parse_weights(args.lattice))
    result = check_twists(lat, args.check, args.seed, args.samples)
    _print_json(success_envelope(result))
    return 0 if result.passed else 1


def _command_torsion(args: argparse.Namespace) -> int:
    lat = tubular_lattice(parse_weights(args.weights))
    vector = [int(v) for v in args.vector.split(",")]
    if len(vector) != lat.n:
        raise ValueError(f"Class needs {lat.n} entries, got {len(vector)}")
    _print_json(success_envelope(query(lat, parse_theta(args.theta, args.policy), vector)))
    return 0


def _command_cy_table(args: argparse.Namespace) -> int:
    if args.diagrams:
        diagrams = args.diagrams.split(",")
    else:
        config = load_config_from_yaml(args.config) if args.config else WorkbenchConfig()
        diagrams = config.suites.dynkin.table
    rows = cy_table(diagrams)
    _emit(export_rows(rows, args.format), None)
    return 0


COMMANDS = {
    "run": _command_run,
    "wpl": _command_wpl,
    "twist": _command_twist,
    "torsion": _command_torsion,
    "cy-table": _command_cy_table,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except (WorkbenchError, ValueError) as e:
        _print_json(error_envelope(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
