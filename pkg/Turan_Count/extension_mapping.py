#! /usr/bin/env python3


# Report formats that can be written with --out.
ALLOWED_OUTPUT_EXTENSIONS: set[str] = {".txt", ".csv", ".json", ".parquet"}

# Alias to extension map.
ALIAS_TO_EXTENSION_MAP: dict[str, str] = {
    "text": ".txt",
    "txt": ".txt",
    "csv": ".csv",
    "json": ".json",
    "js": ".json",
    "parquet": ".parquet",
    "pq": ".parquet",
}

# Graph file extensions and the reader each one selects.
GRAPH_EXTENSION_TO_FORMAT: dict[str, str] = {
    ".g6": "graph6",
    ".graph6": "graph6",
    ".txt": "edge-list",
    ".el": "edge-list",
    ".edges": "edge-list",
}
