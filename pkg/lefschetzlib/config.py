from __future__ import annotations

import argparse
import importlib
import inspect
import os
import sys
import yaml
from addict import Dict

from lefschetzlib.logger import log
from lefschetzlib.utils.dict_ops import merge_dicts_recursively

from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from argparse import Namespace
    from typing import Optional, Sequence


COMMANDS = ("newton", "region", "euler", "lefschetz", "hecke")
OUTPUT_FORMATS = ("json", "csv", "text")


def initialize_lefschetz_config(args: Optional[Namespace] = None) -> Dict:
    """
    Return the configuration for the library and the command line suites.

    The result is initially based on the contents of default_config.yml in the
    lefschetzlib directory, which can be further updated by a custom configuration
    file custom_config.yml in the working directory, then by a file passed with
    --config_file, and finally by command line arguments.

    With args=None only the configuration files are consulted, which is what
    happens when the library is imported.
    """
    global_defaults_file = os.path.join(get_lefschetz_dir(), "lefschetzlib", "default_config.yml")
    config_file = getattr(args, "config_file", None)
    config = Dict(merge_dicts_recursively(
        load_yaml(global_defaults_file),
        load_yaml("custom_config.yml"),  # From current working directory
        load_yaml(config_file) if config_file else dict(),
    ))

    log.setLevel(getattr(args, "log_level", None) or config["log_level"])

    if args is not None:
        update_suite_config(config, args)
        update_report_config(config, args)
        update_run_config(config, args)

    return config


def parse_cli(argv: Optional[Sequence[str]] = None) -> Namespace:
    try:
        parser = argparse.ArgumentParser(
            prog="lefschetzgl",
            description="Exact verification suites for the rank-one Lefschetz formula",
        )
        parser.add_argument(
            "command",
            nargs="?",
            choices=COMMANDS,
            help="Which suite to run",
        )
        parser.add_argument(
            "input",
            nargs="?",
            help="Input file: a .graph file for lefschetz/hecke, a YAML file for newton/euler. "
                 "Bundled graphs can be named without a path, e.g. `k4`",
        )
        parser.add_argument(
            "--m-max",
            type=int,
            help="Largest geodesic length / Hecke index to check",
        )
        parser.add_argument(
            "--twist",
            help="File describing a unitary edge character (lines `twist <edge> <turns>`)",
        )
        parser.add_argument(
            "--out",
            help="Write the report to this path instead of standard output",
        )
        parser.add_argument(
            "--format",
            choices=OUTPUT_FORMATS,
            help="Report format",
        )
        parser.add_argument(
            "--seed",
            type=int,
            help="Seed for the randomized suites",
        )
        parser.add_argument(
            "--random",
            type=int,
            metavar="N",
            help="Number of random cases (random twists per graph for lefschetz)",
        )
        parser.add_argument(
            "--config_file",
            help="Path to the custom configuration file",
        )
        parser.add_argument(
            "--show-progress",
            action="store_true",
            help="Show a progress bar for randomized suites",
        )
        parser.add_argument(
            "-q", "--quiet",
            action="store_true",
            help="Only log errors",
        )
        parser.add_argument(
            "-v", "--version",
            action="store_true",
            help="Display the version of lefschetzgl"
        )
        parser.add_argument(
            "--log-level",
            help="Level of messages to Display, can be DEBUG / INFO / WARNING / ERROR / CRITICAL"
        )
        args = parser.parse_args(argv)
        if args.quiet and not args.log_level:
            args.log_level = "ERROR"
        return args
    except argparse.ArgumentError as err:
        log.error(str(err))
        sys.exit(2)


def update_suite_config(config: Dict, args: Namespace):
    suite_config = config.suites
    if args.seed is not None:
        suite_config.seed = args.seed
    if args.show_progress:
        suite_config.show_progress = True


def update_report_config(config: Dict, args: Namespace):
    report_config = config.report
    if args.format:
        report_config.format = args.format


def update_run_config(config: Dict, args: Namespace):
    command = args.command
    m_max = args.m_max
    if m_max is None and command in ("lefschetz", "hecke"):
        m_max = config.suites[command].m_max
    limit = config.guardrails.m_max_limit
    if m_max is not None and not 1 <= m_max <= limit:
        log.error(f"--m-max must lie between 1 and {limit}, got {m_max}")
        sys.exit(2)
    if args.random is not None and args.random < 0:
        log.error(f"--random must be non-negative, got {args.random}")
        sys.exit(2)

    config.run = Dict(
        command=command,
        input_path=args.input,
        m_max=m_max,
        twist_path=args.twist,
        output_format=config.report.format,
        out_path=get_output_path(args, config),
        seed=config.suites.seed,
        random=args.random,
    )


# Helpers for the functions above


def load_yaml(file_path: str):
    try:
        with open(file_path, "r") as file:
            return yaml.safe_load(file) or {}
    except FileNotFoundError:
        return {}


def get_lefschetz_dir():
    lefschetzlib_module = importlib.import_module("lefschetzlib")
    lefschetzlib_dir = os.path.dirname(inspect.getabsfile(lefschetzlib_module))
    return os.path.abspath(os.path.join(lefschetzlib_dir, ".."))


def get_output_path(args: Namespace, config: Dict) -> Optional[str]:
    if args.out is None:
        return None
    out_dir = config.directories.output
    if out_dir and os.path.dirname(args.out) == "":
        return os.path.join(out_dir, args.out)
    return args.out


# Create global configuration
lefschetz_config: Dict = initialize_lefschetz_config()
