#! /usr/bin/env python3

import os
import stat
from pathlib import Path
from typing import NamedTuple

from .extension_mapping import GRAPH_EXTENSION_TO_FORMAT


class FileInfo(NamedTuple):
    file_path: Path
    stat_obj: os.stat_result
    file_name: str
    file_size: int
    file_ext: str
    graph_format: str | None


def resolve_path(input: Path | str) -> Path:
    """Resolves input path."""
    return Path(input).expanduser().resolve()


def get_file_stat(resolved_path: Path) -> os.stat_result:
    """Stats the target file, raising FileNotFoundError for a missing path."""
    stat_obj = resolved_path.stat()
    if not stat.S_ISREG(stat_obj.st_mode):
        raise IsADirectoryError(f"Graph input must be a file: {resolved_path}")
    return stat_obj


def graph_format_from_extension(file_ext: str) -> str | None:
    """Reader selected by the file extension, None when the content must be sniffed."""
    return GRAPH_EXTENSION_TO_FORMAT.get(file_ext.lower())


def create_file_info(input: Path | str) -> FileInfo:
    """Creates an info tuple for the given graph file."""
    path = resolve_path(input)
    stat_obj = get_file_stat(path)
    return FileInfo(
        path,
        stat_obj,
        path.name,
        stat_obj.st_size,
        path.suffix,
        graph_format_from_extension(path.suffix),
    )
