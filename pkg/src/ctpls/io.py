"""Text formats: edge lists, color files, path files, graph directories.

Edge lists are SNAP-style "SRC DST TIMESTAMP" lines; '#' starts a
comment, any whitespace separates fields on ingest.  Emission is
canonical: ASCII, LF newlines, single spaces, sorted rows, so emitting a
parsed file is byte-stable.  A graph on disk is a directory holding
edges.txt (with a "# domain LO HI" header line) and colors.txt.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import IO, Iterable, Union

from .graph import (
    ColoredTemporalGraph,
    InputError,
    TemporalEdge,
    TemporalPath,
    TimeDomain,
)

Source = Union[str, os.PathLike, IO[str]]


@dataclass(frozen=True)
class ParseReport:
    """Ingest accounting: parsed data lines, and how many collapsed."""

    lines: int
    duplicates: int
    self_loops: int


@dataclass(frozen=True)
class ParsedEdgeList:
    """Uncolored skeleton of a temporal graph as read from an edge list."""

    vertices: tuple[int, ...]
    edges: tuple[TemporalEdge, ...]
    domain: TimeDomain
    report: ParseReport


def _read_text(source: Source) -> str:
    if hasattr(source, "read"):
        return source.read()
    with open(source, "r", encoding="ascii") as fh:
        return fh.read()


def _write_text(target: Source, text: str) -> None:
    if hasattr(target, "write"):
        target.write(text)
        return
    with open(target, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def parse_edge_list(source: Source) -> ParsedEdgeList:
    """Read "SRC DST TIMESTAMP" lines into an uncolored graph skeleton.

    Edges are symmetrized (the pair is unordered), duplicate triples are
    collapsed, self-loops dropped; all three counts are reported.  An
    optional "# domain LO HI" comment pins the time domain; otherwise the
    hull of observed timestamps is used.
    """
    text = _read_text(source)
    seen: set[TemporalEdge] = set()
    order: list[TemporalEdge] = []
    vertices: set[int] = set()
    lines = duplicates = self_loops = 0
    domain = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            fields = stripped[1:].split()
            if len(fields) == 3 and fields[0] == "domain":
                try:
                    domain = TimeDomain(int(fields[1]), int(fields[2]))
                except ValueError:
                    raise InputError(
                        f"line {ln}: bad domain header {raw!r}") from None
            continue
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 3:
            raise InputError(
                f"line {ln}: expected 'SRC DST TIMESTAMP', got {raw!r}")
        try:
            u, v, t = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise InputError(
                f"line {ln}: non-integer field in {raw!r}") from None
        lines += 1
        vertices.add(u)
        vertices.add(v)
        if u == v:
            self_loops += 1
            continue
        e = TemporalEdge(u, v, t)
        if e in seen:
            duplicates += 1
            continue
        seen.add(e)
        order.append(e)
    if domain is None:
        ts = [e.t for e in order]
        domain = TimeDomain(min(ts), max(ts)) if ts else TimeDomain(0, 0)
    else:
        for e in order:
            if e.t not in domain:
                raise InputError(
                    f"edge {e} outside declared domain "
                    f"[{domain.t_min}, {domain.t_max}]")
    return ParsedEdgeList(
        tuple(sorted(vertices)),
        tuple(sorted(order)),
        domain,
        ParseReport(lines, duplicates, self_loops),
    )


def write_edge_list(
    edges: Iterable[TemporalEdge], domain: TimeDomain, target: Source
) -> None:
    """Canonical emission: domain header, then sorted "u v t" lines."""
    rows = [f"# domain {domain.t_min} {domain.t_max}"]
    rows.extend(f"{e.u} {e.v} {e.t}" for e in sorted(set(edges)))
    _write_text(target, "\n".join(rows) + "\n")


def read_color_file(source: Source) -> dict[int, int]:
    """Read "VERTEX COLOR" lines; every vertex must appear exactly once."""
    colors: dict[int, int] = {}
    for ln, raw in enumerate(_read_text(source).splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise InputError(
                f"line {ln}: expected 'VERTEX COLOR', got {raw!r}")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(
                f"line {ln}: non-integer field in {raw!r}") from None
        if v in colors:
            raise InputError(f"line {ln}: vertex {v} colored twice")
        colors[v] = c
    if not colors:
        raise InputError("empty color file")
    return colors


def write_color_file(colors: dict, target: Source) -> None:
    """Emit "VERTEX COLOR" lines sorted by vertex; colors must be ints
    (densify_colors maps arbitrary palettes down first)."""
    for c in colors.values():
        if not isinstance(c, int):
            raise InputError(
                f"color file holds integers; densify color {c!r} first")
    rows = [f"{v} {colors[v]}" for v in sorted(colors)]
    _write_text(target, "\n".join(rows) + "\n")


def densify_colors(graph: ColoredTemporalGraph) -> ColoredTemporalGraph:
    """Rename the palette to 0..k-1 (sorted color order) for serialization."""
    try:
        order = sorted(graph.color_set)
    except TypeError:
        order = sorted(graph.color_set, key=repr)
    index = {c: i for i, c in enumerate(order)}
    return graph.with_colors(
        {v: index[graph.color_of(v)] for v in graph.vertices})


EDGES_NAME = "edges.txt"
COLORS_NAME = "colors.txt"


def save_graph(graph: ColoredTemporalGraph, directory: Union[str, os.PathLike]) -> None:
    """Write edges.txt + colors.txt; non-integer palettes are densified."""
    os.makedirs(directory, exist_ok=True)
    if any(not isinstance(c, int) for c in graph.color_set):
        graph = densify_colors(graph)
    write_edge_list(
        graph.edges, graph.domain, os.path.join(directory, EDGES_NAME))
    write_color_file(dict(graph.colors), os.path.join(directory, COLORS_NAME))


def load_graph(directory: Union[str, os.PathLike]) -> ColoredTemporalGraph:
    """Inverse of save_graph for integer-colored graphs.

    Vertices in the color file but on no edge are kept as isolated
    vertices, so save/load round-trips exactly.
    """
    parsed = parse_edge_list(os.path.join(directory, EDGES_NAME))
    colors = read_color_file(os.path.join(directory, COLORS_NAME))
    missing = set(parsed.vertices) - set(colors)
    if missing:
        raise InputError(
            f"colors.txt misses {len(missing)} vertices, e.g. {min(missing)}")
    return ColoredTemporalGraph(colors, parsed.edges, parsed.domain)


def write_path_file(path: TemporalPath, target: Source) -> None:
    """Two lines: the vertex sequence, then the edge timestamps."""
    _write_text(
        target,
        " ".join(map(str, path.vertices)) + "\n"
        + " ".join(map(str, path.times)) + "\n")


def read_path_file(source: Source) -> TemporalPath:
    rows = [
        r for r in _read_text(source).splitlines()
        if not r.lstrip().startswith("#")
    ]
    # A single-vertex path has an empty times line; tolerate trailing
    # blank lines beyond the two data rows.
    if len(rows) < 1 or any(r.strip() for r in rows[2:]):
        raise InputError("path file wants 2 data lines (vertices, times)")
    try:
        verts = [int(x) for x in rows[0].split()]
        times = [int(x) for x in rows[1].split()] if len(rows) > 1 else []
    except ValueError:
        raise InputError("non-integer entry in path file") from None
    return TemporalPath(verts, times)
