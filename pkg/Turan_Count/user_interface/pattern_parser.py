#! /usr/bin/env python3
"""
Parsing of graph specs given on the command line.

Grammar:
    cycle:<m> | complete:<m> | k4me | petersen | turan:<n>:<r>
    | g6:<graph6> | file:<path>
"""

from typing import NamedTuple

from ..exceptions import GraphFormatError, PatternSyntaxError
from ..graph_core import Graph, complete, cycle, k4_minus_edge, petersen, turan_graph
from ..graph_io import parse_graph6, read_graph_file


class PatternSpec(NamedTuple):
    source: str
    graph: Graph
    name: str


def _parse_int(spec: str, start: int, text: str) -> int:
    if not text.isdigit():
        raise PatternSyntaxError(f"Expected a non-negative integer, got {text!r}", start)
    return int(text)


def _split_kind(spec: str) -> tuple[str, str, int]:
    kind, colon, argument = spec.partition(":")
    return kind, argument, len(kind) + len(colon)


def parse_pattern_spec(spec: str) -> PatternSpec:
    """Resolves a spec string to a graph; PatternSyntaxError carries the byte offset."""
    if not spec:
        raise PatternSyntaxError("Empty graph spec", 0)
    kind, argument, start = _split_kind(spec)
    if kind == "k4me" and start == len(kind):
        return PatternSpec(spec, k4_minus_edge(), "K4-e")
    if kind == "petersen" and start == len(kind):
        return PatternSpec(spec, petersen(), "Petersen")
    if kind == "cycle":
        m = _parse_int(spec, start, argument)
        if m < 3:
            raise PatternSyntaxError("cycle length must be ≥ 3", start)
        return PatternSpec(spec, cycle(m), f"C{m}")
    if kind == "complete":
        m = _parse_int(spec, start, argument)
        if m < 1:
            raise PatternSyntaxError("complete graph needs at least 1 vertex", start)
        return PatternSpec(spec, complete(m), f"K{m}")
    if kind == "turan":
        n_text, colon, r_text = argument.partition(":")
        n = _parse_int(spec, start, n_text)
        if not colon:
            raise PatternSyntaxError("Expected turan:<n>:<r>", start + len(n_text))
        r = _parse_int(spec, start + len(n_text) + 1, r_text)
        if r < 2:
            raise PatternSyntaxError("turan needs r ≥ 2", start + len(n_text) + 1)
        return PatternSpec(spec, turan_graph(n, r), f"T{r}({n})")
    if kind == "g6":
        try:
            graph = parse_graph6(argument)
        except GraphFormatError as error:
            raise PatternSyntaxError(str(error), start + (error.offset or 0)) from error
        return PatternSpec(spec, graph, argument)
    if kind == "file":
        if not argument:
            raise PatternSyntaxError("Expected a path after file:", start)
        try:
            graph = read_graph_file(argument)
        except OSError as error:
            raise PatternSyntaxError(f"Cannot read {argument}: {error}", start) from error
        return PatternSpec(spec, graph, argument.rsplit("/", 1)[-1])
    raise PatternSyntaxError(f"Unknown graph kind {kind!r}", 0)


def parse_pattern(spec: str) -> Graph:
    return parse_pattern_spec(spec).graph
