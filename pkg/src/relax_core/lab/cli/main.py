"""Command-line entry point: ``relax-lab <command> [options]``."""

import argparse
import logging
from collections.abc import Sequence
from pathlib import Path

from ..config import RelaxConfig, RuntimeSettings, load_config
from ..energetics import csv_columns
from ..errors import error_payload
from ..schema import Study
from .distances import stored_distances
from .io import OutputDirectory, dump_json, emit
from .simulate import simulate, write_simulation
from .sweep import run_sweep
from .verify import verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relax-lab", description="Euler-Riesz relaxation experiments")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_run_command(name: str, help_text: str) -> None:
        command = commands.add_parser(name, help=help_text)
        command.add_argument("--config", type=Path, required=True, help="TOML run configuration")
        command.add_argument("--out", type=Path, default=Path("out"), help="output directory")
        command.add_argument("--seed", type=int, default=None, help="master seed, overrides run.seed")
        command.add_argument("--threads", type=int, default=None, help="worker threads (RELAX_THREADS)")
        command.add_argument("--force", action="store_true", help="overwrite outputs of another configuration")

    add_run_command("simulate-er", "integrate the Euler-Riesz system")
    add_run_command("simulate-fpme", "integrate the limit equation")
    add_run_command("sweep", "epsilon sweep with rate fits")

    verify_command = commands.add_parser("verify", help="run a verification study")
    verify_command.add_argument("study", choices=[study.value for study in Study])
    verify_command.add_argument("--seed", type=int, default=0)
    verify_command.add_argument("--threads", type=int, default=None)
    verify_command.add_argument("--out", type=Path, default=None, help="also write the report here")

    metrics_command = commands.add_parser("metrics", help="distances between two stored trajectories")
    metrics_command.add_argument("first", type=Path)
    metrics_command.add_argument("second", type=Path)
    metrics_command.add_argument("--index", type=int, default=-1, help="output instant, default the last")
    return parser


def _threads(args: argparse.Namespace, settings: RuntimeSettings, config: RelaxConfig | None = None) -> int:
    if args.threads is not None:
        return max(args.threads, 1)
    if config is not None and config.run.threads is not None:
        return config.run.threads
    return settings.threads


def _load(args: argparse.Namespace) -> RelaxConfig:
    config = load_config(args.config)
    if args.seed is not None:
        config = config.model_copy(update={"run": config.run.model_copy(update={"seed": args.seed})})
    return config


def _simulate(args: argparse.Namespace, kind: str) -> int:
    config = _load(args)
    out = OutputDirectory.for_config(args.out, config, args.force)
    out.prepare()
    emit(write_simulation(simulate(config, kind), out))
    return EXIT_OK


def _sweep(args: argparse.Namespace, settings: RuntimeSettings) -> int:
    config = _load(args)
    out = OutputDirectory.for_config(args.out, config, args.force)
    out.prepare()
    result, reports = run_sweep(config, _threads(args, settings, config))
    d = config.params.d
    files = [
        out.write_csv(f"sweep_eps_{index:02d}.csv", csv_columns(d), [report.row(d) for report in entry_reports]).name
        for index, entry_reports in enumerate(reports)
    ]
    files.append(out.write_json("sweep.json", result.model_dump(mode="json")).name)
    fit = result.fit
    emit(
        {
            "command": "sweep",
            "config_hash": out.config_hash,
            "fit_status": result.fit_status,
            "slope": fit.slope if fit else None,
            "residual": fit.residual if fit else None,
            "healthy": result.healthy,
            "files": files,
        }
    )
    return EXIT_OK


def _verify(args: argparse.Namespace, settings: RuntimeSettings) -> int:
    report = verify(Study(args.study), args.seed, _threads(args, settings))
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / f"verify_{args.study}.json").write_text(dump_json(report), encoding="utf-8")
    emit(report)
    return EXIT_OK if report["pass"] else EXIT_NUMERICAL


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = RuntimeSettings()
        logging.basicConfig(level=settings.log_level, format=LOG_FORMAT)
        match args.command:
            case "simulate-er":
                return _simulate(args, "er")
            case "simulate-fpme":
                return _simulate(args, "fpme")
            case "sweep":
                return _sweep(args, settings)
            case "verify":
                return _verify(args, settings)
            case _:
                emit(stored_distances(args.first, args.second, args.index))
                return EXIT_OK
    except RuntimeError as error:
        logger.error(f"{args.command} failed: {error}")
        emit(error_payload(error))
        return EXIT_NUMERICAL
    except (ValueError, OSError) as error:
        logger.error(f"{args.command} rejected: {error}")
        emit(error_payload(error))
        return EXIT_USAGE
