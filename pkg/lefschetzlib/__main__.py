#!/usr/bin/env python
from __future__ import annotations

import yaml

from lefschetzlib import __version__
from lefschetzlib.config import initialize_lefschetz_config
from lefschetzlib.config import parse_cli
import lefschetzlib.extract_suite
from lefschetzlib.graph.geodesic_graph import GraphError
from lefschetzlib.logger import log

from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from typing import Optional, Sequence


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point for lefschetzgl. Exit code 0 when every check passes,
    1 when some check fails, 2 for usage and input errors.
    """
    args = parse_cli(argv)
    if args.version:
        print(f"lefschetzgl v{__version__}")
        return 0
    if args.command is None:
        log.error("No suite given, expected one of newton / region / euler / lefschetz / hecke")
        return 2

    config = initialize_lefschetz_config(args)
    try:
        report = lefschetzlib.extract_suite.main(config)
    except (GraphError, FileNotFoundError, ValueError, KeyError, yaml.YAMLError) as err:
        log.error(f"{type(err).__name__}: {err}")
        return 2
    except KeyboardInterrupt:
        return 1
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
