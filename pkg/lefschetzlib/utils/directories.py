from __future__ import annotations

import os

from lefschetzlib.config import lefschetz_config
from lefschetzlib.config import get_lefschetz_dir


def get_directories() -> dict[str, str]:
    return lefschetz_config.directories


def get_data_dir() -> str:
    return os.path.join(get_lefschetz_dir(), "lefschetzlib", "data")


def get_bundled_graph_dir() -> str:
    return os.path.join(get_data_dir(), "graphs")


def get_graph_dirs() -> list[str]:
    """User graph directory (if configured), then the bundled data directories"""
    user_dir = get_directories()["graphs"]
    return [d for d in (user_dir, get_data_dir(), get_bundled_graph_dir()) if d]
