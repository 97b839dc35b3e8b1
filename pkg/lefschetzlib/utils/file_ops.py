from __future__ import annotations

import os
from pathlib import Path

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Iterable


def guarantee_existence(path: str | Path) -> Path:
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path.absolute()


def find_file(
    file_name: str,
    directories: Iterable[str | Path] | None = None,
    extensions: Iterable[str] | None = None
) -> Path:
    # Check if what was passed in is already a valid path to a file
    if os.path.isfile(file_name):
        return Path(file_name)

    # Otherwise look in the given directories, first with the full
    # relative name, then with just its base name
    directories = directories or [""]
    extensions = extensions or [""]
    names = [file_name]
    base_name = os.path.basename(file_name)
    if base_name != file_name:
        names.append(base_name)
    possible_paths = (
        Path(directory, name + extension)
        for name in names
        for directory in directories
        for extension in extensions
    )
    for path in possible_paths:
        if path.is_file():
            return path
    raise FileNotFoundError(f"{file_name} not found")
