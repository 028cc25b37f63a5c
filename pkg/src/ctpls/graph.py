"""Vertex-colored temporal graphs and temporal paths.

A temporal graph is a static undirected graph whose edges carry integer
timestamps; the same vertex pair may appear at several timestamps.  Here
every vertex additionally has a color, and the objects of interest are
*colorful temporal paths*: walks that repeat no vertex, whose consecutive
edge timestamps strictly increase, and whose vertices all have pairwise
distinct colors.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from types import MappingProxyType
from typing import Hashable, Iterable, Iterator, Mapping, Optional


class InputError(ValueError):
    """Malformed or inconsistent caller input."""


class LimitError(RuntimeError):
    """An operation refused to run because a size guard was exceeded."""


@dataclass(frozen=True)
class TimeDomain:
    """Closed integer interval [t_min, t_max] of admissible timestamps."""

    t_min: int
    t_max: int

    def __post_init__(self) -> None:
        if not (isinstance(self.t_min, int) and isinstance(self.t_max, int)):
            raise InputError("time domain bounds must be integers")
        if self.t_min > self.t_max:
            raise InputError(
                f"empty time domain: [{self.t_min}, {self.t_max}]")

    def __contains__(self, t: object) -> bool:
        return isinstance(t, int) and self.t_min <= t <= self.t_max

    @property
    def span(self) -> int:
        """Number of integer timestamps in the interval."""
        return self.t_max - self.t_min + 1


@dataclass(frozen=True, order=True)
class TemporalEdge:
    """Undirected edge {u, v} active at timestamp t.

    Endpoints are normalized so that u < v; direction never matters.
    """

    u: int
    v: int
    t: int

    def __post_init__(self) -> None:
        for field in (self.u, self.v, self.t):
            if not isinstance(field, int):
                raise InputError(f"edge fields must be integers, got {field!r}")
        if self.u == self.v:
            raise InputError(f"self-loop at vertex {self.u} (t={self.t})")
        if self.u > self.v:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise InputError(f"vertex {w} is not an endpoint of {self}")


class ColoredTemporalGraph:
    """Immutable vertex-colored temporal graph.

    Construction normalizes the edge set (undirected, duplicates collapse)
    and indexes it two ways: by timestamp, and per vertex as an adjacency
    list sorted by (timestamp, neighbor id).  The sorted index is what the
    solvers bisect into, so all traversal orders are deterministic.
    """

    def __init__(
        self,
        colors: Mapping[int, Hashable],
        edges: Iterable[TemporalEdge],
        domain: Optional[TimeDomain] = None,
    ) -> None:
        if not colors:
            raise InputError("graph needs at least one vertex")
        for v in colors:
            if not isinstance(v, int):
                raise InputError(f"vertex ids must be integers, got {v!r}")
        self._colors: dict[int, Hashable] = dict(colors)

        edge_set = set()
        for e in edges:
            if not isinstance(e, TemporalEdge):
                e = TemporalEdge(*e)
            if e.u not in self._colors or e.v not in self._colors:
                raise InputError(f"edge {e} touches an uncolored vertex")
            edge_set.add(e)
        self._edges: frozenset[TemporalEdge] = frozenset(edge_set)

        if domain is None:
            # Hull of the observed timestamps; a degenerate [0, 0] domain
            # stands in for an edgeless graph.
            if edge_set:
                ts = [e.t for e in edge_set]
                domain = TimeDomain(min(ts), max(ts))
            else:
                domain = TimeDomain(0, 0)
        else:
            for e in edge_set:
                if e.t not in domain:
                    raise InputError(
                        f"edge {e} outside domain "
                        f"[{domain.t_min}, {domain.t_max}]")
        self._domain = domain

        by_time: dict[int, list[TemporalEdge]] = {}
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self._colors}
        pair_times: dict[tuple[int, int], list[int]] = {}
        for e in sorted(edge_set):
            by_time.setdefault(e.t, []).append(e)
            adj[e.u].append((e.t, e.v))
            adj[e.v].append((e.t, e.u))
            pair_times.setdefault((e.u, e.v), []).append(e.t)
        self._by_time = {t: tuple(es) for t, es in by_time.items()}
        self._adj = {v: sorted(pairs) for v, pairs in adj.items()}
        self._pair_times = {p: sorted(ts) for p, ts in pair_times.items()}
        self._times = tuple(sorted(self._by_time))

    # -- basic accessors ------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._colors))

    @property
    def n_vertices(self) -> int:
        return len(self._colors)

    @property
    def colors(self) -> Mapping[int, Hashable]:
        return MappingProxyType(self._colors)

    def color_of(self, v: int) -> Hashable:
        try:
            return self._colors[v]
        except KeyError:
            raise InputError(f"unknown vertex {v}") from None

    @property
    def color_set(self) -> frozenset:
        return frozenset(self._colors.values())

    @property
    def n_colors(self) -> int:
        return len(self.color_set)

    @property
    def edges(self) -> frozenset[TemporalEdge]:
        return self._edges

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    @property
    def domain(self) -> TimeDomain:
        return self._domain

    @property
    def times(self) -> tuple[int, ...]:
        """Sorted distinct timestamps that carry at least one edge."""
        return self._times

    # -- queries ---------------------------------------------------------

    def edges_at(self, t: int) -> tuple[TemporalEdge, ...]:
        """All edges active at timestamp t, sorted by endpoint pair."""
        return self._by_time.get(t, ())

    def neighbors_after(self, v: int, t: int) -> list[tuple[int, int]]:
        """(neighbor, timestamp) pairs reachable from v strictly after t.

        Sorted by timestamp, then neighbor id: the order every sweep in
        this package relies on.
        """
        if v not in self._adj:
            raise InputError(f"unknown vertex {v}")
        pairs = self._adj[v]
        i = bisect.bisect_right(pairs, (t, float("inf")))
        return [(w, tt) for tt, w in pairs[i:]]

    def incident(self, v: int) -> list[tuple[int, int]]:
        """All (neighbor, timestamp) pairs at v in (timestamp, id) order."""
        if v not in self._adj:
            raise InputError(f"unknown vertex {v}")
        return [(w, tt) for tt, w in self._adj[v]]

    def earliest_edge_time(
        self, a: int, b: int, after: int, before: Optional[int] = None
    ) -> Optional[int]:
        """Earliest t with edge {a, b, t} and after < t (< before), or None."""
        key = (a, b) if a < b else (b, a)
        ts = self._pair_times.get(key)
        if not ts:
            return None
        i = bisect.bisect_right(ts, after)
        if i == len(ts):
            return None
        t = ts[i]
        if before is not None and t >= before:
            return None
        return t

    def with_colors(self, colors: Mapping[int, Hashable]) -> "ColoredTemporalGraph":
        """Same edges and domain under a new coloring of the same vertices."""
        if set(colors) != set(self._colors):
            raise InputError("recoloring must cover exactly the same vertices")
        return ColoredTemporalGraph(colors, self._edges, self._domain)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredTemporalGraph):
            return NotImplemented
        return (
            self._colors == other._colors
            and self._edges == other._edges
            and self._domain == other._domain
        )

    __hash__ = None  # type: ignore[assignment]  # mutable-dict innards

    def __repr__(self) -> str:
        return (
            f"ColoredTemporalGraph(n={self.n_vertices}, "
            f"m={self.n_edges}, colors={self.n_colors}, "
            f"domain=[{self._domain.t_min}, {self._domain.t_max}])"
        )


@dataclass(frozen=True)
class TemporalPath:
    """Vertex sequence plus the timestamps of its consecutive edges.

    Only shape is enforced here (len(times) == len(vertices) - 1, at least
    one vertex); whether the sequence is an actual temporal path of some
    graph is a property of that graph, checked by validate_path.
    """

    vertices: tuple[int, ...]
    times: tuple[int, ...]

    def __init__(self, vertices: Iterable[int], times: Iterable[int]) -> None:
        vs = tuple(vertices)
        ts = tuple(times)
        if not vs:
            raise InputError("a path has at least one vertex")
        if len(ts) != len(vs) - 1:
            raise InputError(
                f"{len(vs)} vertices need {len(vs) - 1} edge times, "
                f"got {len(ts)}")
        for x in vs + ts:
            if not isinstance(x, int):
                raise InputError(f"path entries must be integers, got {x!r}")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "times", ts)

    @property
    def length(self) -> int:
        """Number of vertices (the objective value for colorful paths)."""
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)


@dataclass(frozen=True)
class PathViolation:
    """First reason a vertex/time sequence fails to be a colorful
    temporal path: kind is one of 'unknown-vertex', 'repeated-vertex',
    'missing-edge', 'time-order', 'repeated-color'; index points at the
    offending vertex (vertex kinds) or edge (edge kinds).
    """

    kind: str
    index: int
    detail: str


def validate_path(
    graph: ColoredTemporalGraph, path: TemporalPath
) -> Optional[PathViolation]:
    """None if path is a temporal path of graph, else the first violation.

    Scans left to right; at each step vertex conditions are reported
    before the edge conditions of the arriving edge.  Color repetition is
    not checked here (see is_colorful).
    """
    vs, ts = path.vertices, path.times
    if vs[0] not in graph.colors:
        return PathViolation("unknown-vertex", 0, f"vertex {vs[0]}")
    seen = {vs[0]}
    for j in range(1, len(vs)):
        v = vs[j]
        if v not in graph.colors:
            return PathViolation("unknown-vertex", j, f"vertex {v}")
        if v in seen:
            return PathViolation("repeated-vertex", j, f"vertex {v}")
        seen.add(v)
        e = TemporalEdge(vs[j - 1], v, ts[j - 1])
        if e not in graph.edges:
            return PathViolation(
                "missing-edge", j - 1,
                f"no edge {{{vs[j - 1]}, {v}}} at t={ts[j - 1]}")
        if j >= 2 and ts[j - 1] <= ts[j - 2]:
            return PathViolation(
                "time-order", j - 1,
                f"t={ts[j - 1]} does not increase past t={ts[j - 2]}")
    return None


def path_colors(graph: ColoredTemporalGraph, path: TemporalPath) -> frozenset:
    """Set of colors visited by the path (vertices must exist)."""
    return frozenset(graph.color_of(v) for v in path.vertices)


def validate_colorful(
    graph: ColoredTemporalGraph, path: TemporalPath
) -> Optional[PathViolation]:
    """Like validate_path, but additionally requires pairwise distinct
    colors; reports 'repeated-color' at the second vertex of a clash.
    """
    bad = validate_path(graph, path)
    if bad is not None:
        return bad
    seen: dict[Hashable, int] = {}
    for j, v in enumerate(path.vertices):
        c = graph.color_of(v)
        if c in seen:
            return PathViolation(
                "repeated-color", j,
                f"color {c!r} already used by vertex {path.vertices[seen[c]]}")
        seen[c] = j
    return None


def is_colorful(graph: ColoredTemporalGraph, path: TemporalPath) -> bool:
    """True iff path is a valid temporal path with pairwise distinct colors."""
    return validate_colorful(graph, path) is None
