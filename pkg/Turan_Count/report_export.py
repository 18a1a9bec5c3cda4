#!/usr/bin/env python3
"""Writes report rows to files through DuckDB."""

import logging
import uuid
from collections.abc import Mapping, Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, NamedTuple

import duckdb

from .extension_mapping import ALLOWED_OUTPUT_EXTENSIONS

logger = logging.getLogger(__name__)


class _ExportArgumentMapping(NamedTuple):
    csv: str = "(HEADER, DELIMITER ',')"
    json: str = "(FORMAT json)"
    parquet: str = "(FORMAT parquet)"


class ExportAttributes(NamedTuple):
    output_path: Path
    output_key: str
    table_name: str
    export_query: str


def _sql_type(value: Any) -> str:
    if isinstance(value, bool):
        return "BOOLEAN"
    if isinstance(value, int):
        return "HUGEINT"
    return "VARCHAR"


def _sql_value(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return " ".join(str(item) for item in value)
    return str(value)


def _column_types(rows: Sequence[Mapping[str, Any]]) -> dict[str, str]:
    """Column type from the first non-null value; all-null columns become VARCHAR."""
    types: dict[str, str] = {}
    for key in rows[0]:
        sample = next((row[key] for row in rows if row[key] is not None), None)
        types[key] = _sql_type(sample) if sample is not None else "VARCHAR"
    return types


class ReportExporter:
    """Exports report rows with a single in-memory DuckDB connection.

    Rows are loaded into a uniquely named table, copied to the target file
    with per-format export arguments, and the table is dropped.
    """

    export_argument_mapping: _ExportArgumentMapping = _ExportArgumentMapping()

    def __init__(self) -> None:
        self.conn: duckdb.DuckDBPyConnection = duckdb.connect(database=":memory:")

    @staticmethod
    def _create_unique_table_name(stem: str) -> str:
        hexed_name = f"{stem}_{uuid.uuid4()}".encode("utf-8").hex()
        return f"T_{hexed_name}"

    @staticmethod
    def output_key(output_path: Path, fallback_format: str | None) -> str:
        ext = output_path.suffix.lower()
        if ext not in ALLOWED_OUTPUT_EXTENSIONS:
            ext = f".{fallback_format}" if fallback_format else ".csv"
        return ext.lstrip(".")

    def generate_export_attributes(
        self, output_path: Path, fallback_format: str | None = None
    ) -> ExportAttributes:
        key = self.output_key(output_path, fallback_format)
        if key not in self.export_argument_mapping._fields:
            raise ValueError(
                f"Cannot export {output_path.name} as {key}; use a .csv, .json or .parquet path."
            )
        table_name = self._create_unique_table_name(output_path.stem)
        export_arguments: str = getattr(self.export_argument_mapping, key)
        escaped = str(output_path).replace("'", "''")
        query = f"COPY {table_name} TO '{escaped}' {export_arguments}"
        return ExportAttributes(output_path, key, table_name, query)

    def export_rows(
        self,
        rows: Sequence[Mapping[str, Any]],
        output_path: Path,
        fallback_format: str | None = None,
    ) -> ExportAttributes:
        if not rows:
            raise ValueError("Nothing to export.")
        attributes = self.generate_export_attributes(output_path, fallback_format)
        types = _column_types(rows)
        columns = ", ".join(f'"{key}" {sql_type}' for key, sql_type in types.items())
        _ = self.conn.execute(f"CREATE TABLE {attributes.table_name} ({columns})")
        placeholders = ", ".join("?" for _ in types)
        _ = self.conn.executemany(
            f"INSERT INTO {attributes.table_name} VALUES ({placeholders})",
            [[_sql_value(row[key]) for key in types] for row in rows],
        )
        output_path.parent.mkdir(parents=True, exist_ok=True)
        _ = self.conn.execute(attributes.export_query)
        _ = self.conn.execute(f"DROP TABLE {attributes.table_name}")
        logger.info(f"Wrote {len(rows)} rows to {output_path.name}")
        return attributes

    def close_connection(self) -> None:
        self.conn.close()
