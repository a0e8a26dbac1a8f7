"""
Command-line entry point.

    python -m app.main synthesize --gate Hadamard --T 6
    python -m app.main reproduce table1 --out out/
    python -m app.main lindblad --config runs/fig6.cfg --threads 4

A config file (see app.io.config_parser) provides the run; flags given on the
command line override it. Exit status is 1 on any engine error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from app.config import settings
from app.constants import REPRODUCTION_TARGETS
from app.errors import ConfigError, GateEngineError
from app.io.config_parser import parse_config, parse_range
from app.runner import run_scenario
from app.schemas.experiment import SUBCOMMANDS, ExperimentConfig

logger = logging.getLogger(__name__)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="experiment config file")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--seed", type=int, help="random seed (unsigned 64-bit)")
    parser.add_argument("--threads", type=int, help="worker processes for sweeps")
    parser.add_argument("--full-grid", action="store_true",
                        help="average open-system fidelities over the full input grid")
    parser.add_argument("--gate", help="gate preset: NOT, Hadamard, Phase-pi, CNOT-like")
    parser.add_argument("--protocols", help="comma-separated protocols, e.g. CHRW,RWA_BS,RWA")
    parser.add_argument("--T", dest="gate_times",
                        help="gate time(s) k in T = k pi / omega: '6', '5,6' or '1..40 step 1'")
    parser.add_argument("--units", choices=["dimensionless", "physical"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="app.main",
        description="Ultrafast geometric quantum gates beyond the rotating-wave approximation",
    )
    parser.add_argument("--log-level", default=settings.LOG_LEVEL)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        _add_common(sub.add_parser(name))
    reproduce = sub.add_parser("reproduce", help="regenerate one table or figure")
    reproduce.add_argument("target", choices=REPRODUCTION_TARGETS)
    _add_common(reproduce)
    return parser


def _gate_times(text: str) -> List[float]:
    try:
        if ".." in text:
            return parse_range(text)
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise ConfigError(f"--T: {exc}") from None


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    """Merge the config file (if any) with command-line overrides."""
    scenario = args.target if args.command == "reproduce" else args.command
    if args.config:
        text = Path(args.config).read_text(encoding="utf-8")
        base = parse_config(text, scenario=scenario).model_dump()
    else:
        base = {}
    overrides = {"scenario": scenario}
    if args.out:
        overrides["output"] = args.out
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.threads is not None:
        overrides["threads"] = args.threads
    if args.gate:
        overrides["gate"] = args.gate
    if args.protocols:
        overrides["protocols"] = [p.strip() for p in args.protocols.split(",") if p.strip()]
    if args.gate_times:
        overrides["gate_times"] = _gate_times(args.gate_times)
    if args.units:
        overrides["units"] = args.units
    merged = {**base, **overrides}
    if args.full_grid:
        merged["rates"] = {**merged.get("rates", {}), "full_grid": True}
    try:
        return ExperimentConfig(**merged)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    )
    try:
        config = config_from_args(args)
        paths = run_scenario(config)
    except GateEngineError as exc:
        logger.error(str(exc))
        print(f"❌ {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        logger.error(f"I/O error: {exc}")
        print(f"❌ {exc}", file=sys.stderr)
        return 1
    for path in paths:
        print(f"✅ {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
