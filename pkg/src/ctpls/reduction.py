"""Executable hardness gadget: maximum independent set embedded into
maximum colorful temporal path.

From a static graph on n vertices the builder produces a vertex-colored
temporal graph of (n+1)^2 vertices arranged in n+1 segments, each a
colorful chain active in its own time interval, with connector edges
between segment ends exactly where the static graph has a non-edge.
Independent sets map to colorful temporal paths of length
(|I|+1)(n+1) and back; both directions are implemented and the round
trip is checked in the tests, which makes the reduction's correctness an
executable fact rather than an argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import (
    ColoredTemporalGraph,
    InputError,
    LimitError,
    TemporalEdge,
    TemporalPath,
    TimeDomain,
    is_colorful,
    validate_colorful,
)


@dataclass(frozen=True)
class StaticGraph:
    """Plain undirected graph with vertices 1..n, no self-loops.

    Text form: first line "n m", then m lines "i j" (1-based endpoints);
    blank lines and '#' comments are skipped.
    """

    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]) -> None:
        if not isinstance(n, int) or n < 1:
            raise InputError(f"vertex count must be a positive integer, got {n!r}")
        norm = set()
        for i, j in edges:
            if not (isinstance(i, int) and isinstance(j, int)):
                raise InputError(f"edge endpoints must be integers: {(i, j)!r}")
            if i == j:
                raise InputError(f"self-loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise InputError(f"edge {(i, j)} outside 1..{n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.n:
            raise InputError(f"vertex {i} outside 1..{self.n}")
        return tuple(sorted(
            b if a == i else a for a, b in self.edges if i in (a, b)))

    def is_independent(self, vs: Iterable[int]) -> bool:
        members = sorted(set(vs))
        for idx, a in enumerate(members):
            for b in members[idx + 1:]:
                if (a, b) in self.edges:
                    return False
        return True

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines.extend(f"{a} {b}" for a, b in sorted(self.edges))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "StaticGraph":
        rows = []
        for ln, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise InputError(f"line {ln}: expected two integers, got {raw!r}")
            try:
                rows.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise InputError(f"line {ln}: expected two integers, got {raw!r}") from None
        if not rows:
            raise InputError("empty graph text")
        n, m = rows[0]
        if m != len(rows) - 1:
            raise InputError(
                f"header declares {m} edges, found {len(rows) - 1}")
        return cls(n, rows[1:])


@dataclass(frozen=True)
class ReducedInstance:
    """A static graph together with its gadget temporal graph.

    Gadget vertex v_(i,x) (segment i in 1..n+1, offset x in 0..n) has the
    flat id (i-1)(n+1) + x.  Segment i's chain runs through timestamps
    n(i-1)+i .. (n+1)i - 1; the segment's last timestamp (n+1)i carries
    only connector edges.
    """

    source: StaticGraph
    graph: ColoredTemporalGraph

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def segment_of(self) -> dict[int, tuple[int, int]]:
        """Flat vertex id -> (segment, offset) for every gadget vertex."""
        return {v: self.segment(v) for v in self.graph.vertices}

    @property
    def interval_table(self) -> tuple[tuple[int, int], ...]:
        """The n+1 segment intervals in order; they concatenate to the
        full time domain."""
        return tuple(self.interval(i) for i in range(1, self.n + 2))

    def vertex_id(self, i: int, x: int) -> int:
        n = self.n
        if not (1 <= i <= n + 1 and 0 <= x <= n):
            raise InputError(f"no gadget vertex ({i}, {x}) for n={n}")
        return (i - 1) * (n + 1) + x

    def segment(self, vid: int) -> tuple[int, int]:
        n = self.n
        if not 0 <= vid < (n + 1) * (n + 1):
            raise InputError(f"no gadget vertex id {vid} for n={n}")
        i, x = divmod(vid, n + 1)
        return i + 1, x

    def interval(self, i: int) -> tuple[int, int]:
        """Closed time interval assigned to segment i."""
        n = self.n
        return n * (i - 1) + i, (n + 1) * i

    def connector_time(self, i: int) -> int:
        return (self.n + 1) * i

    def segment_path(self, i: int) -> TemporalPath:
        """The full chain through segment i as a temporal path."""
        n = self.n
        start = self.interval(i)[0]
        return TemporalPath(
            [self.vertex_id(i, x) for x in range(n + 1)],
            [start + x for x in range(n)])


def _gadget_color(source: StaticGraph, i: int, x: int):
    """Color of gadget vertex (i, x); tuples keep the families apart."""
    n = source.n
    if i == n + 1 or x == 0 or i == x or not source.has_edge(i, x):
        return ("a", i, x)
    return ("c", min(i, x), max(i, x))


def build_instance(source: StaticGraph) -> ReducedInstance:
    """Construct the gadget temporal graph for a static graph.

    Per segment i (1..n+1) a chain v_(i,0) .. v_(i,n) with one edge per
    timestamp n(i-1)+i+x; at timestamp (n+1)i, for i <= n, connectors
    from v_(i,n) to v_(z,0) for every non-adjacent z > i and to
    v_(n+1,0) unconditionally.  Chain vertex (i, x) is colored by the
    shared edge color ("c", i, x)-normalized when {i, x} is an edge of
    the source, else by the private color ("a", i, x); segment n+1 is
    all private colors.

    Two structural invariants are verified on the result: every segment
    chain is colorful, and (for n <= 12, where the quadratic pair scan
    stays cheap) non-adjacent segments share no color.
    """
    n = source.n
    colors = {}
    inst_edges = []
    for i in range(1, n + 2):
        base = (i - 1) * (n + 1)
        t0 = n * (i - 1) + i
        for x in range(n + 1):
            colors[base + x] = _gadget_color(source, i, x)
        for x in range(n):
            inst_edges.append(TemporalEdge(base + x, base + x + 1, t0 + x))
    for i in range(1, n + 1):
        t = (n + 1) * i
        tail = (i - 1) * (n + 1) + n
        for z in range(i + 1, n + 1):
            if not source.has_edge(i, z):
                inst_edges.append(TemporalEdge(tail, (z - 1) * (n + 1), t))
        inst_edges.append(TemporalEdge(tail, n * (n + 1), t))
    graph = ColoredTemporalGraph(
        colors, inst_edges, TimeDomain(1, (n + 1) * (n + 1)))
    inst = ReducedInstance(source, graph)

    for i in range(1, n + 2):
        assert is_colorful(graph, inst.segment_path(i)), \
            f"segment {i} chain is not colorful"
    if n <= 12:
        seg_colors = [
            {colors[(i - 1) * (n + 1) + x] for x in range(n + 1)}
            for i in range(1, n + 1)]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if not source.has_edge(i, j):
                    shared = seg_colors[i - 1] & seg_colors[j - 1]
                    assert not shared, \
                        f"non-adjacent segments {i}, {j} share colors {shared}"
    return inst


def is_to_path(inst: ReducedInstance, members: Iterable[int]) -> TemporalPath:
    """Colorful temporal path of length (|I|+1)(n+1) from independent set I.

    Concatenates the full segment chains of the members in ascending
    order, then the last segment's chain, joined by the connector edges
    at each member's closing timestamp.
    """
    n = inst.n
    chosen = sorted(set(members))
    for i in chosen:
        if not 1 <= i <= n:
            raise InputError(f"member {i} outside 1..{n}")
    if not inst.source.is_independent(chosen):
        raise InputError(f"{chosen} is not independent in the source graph")

    verts: list[int] = []
    times: list[int] = []
    for i in chosen + [n + 1]:
        seg = inst.segment_path(i)
        if verts:
            times.append(inst.connector_time(prev))
        verts.extend(seg.vertices)
        times.extend(seg.times)
        prev = i
    path = TemporalPath(verts, times)
    assert validate_colorful(inst.graph, path) is None
    assert path.length == (len(chosen) + 1) * (n + 1)
    return path


def path_to_is(inst: ReducedInstance, path: TemporalPath) -> frozenset:
    """Independent set recovered from a colorful temporal path.

    The path is first normalized so it ends with the full last-segment
    chain, by the ending shape: inside the last segment, walk the chain
    to its end; at a segment tail v_(b,n), append the connector and the
    whole last chain; elsewhere inside a segment b <= n, drop the
    trailing partial piece of segment b first.  Each appended step is
    guarded (time strictly increasing, vertex unvisited), so degenerate
    inputs that cannot be normalized are simply left as they are; such
    paths are short and contribute no complete segment anyway.  The
    result is every i <= n whose segment chain is entirely on the
    normalized path; size is at least path.length / (n+1) - 1.
    """
    if validate_colorful(inst.graph, path) is not None:
        raise InputError("not a colorful temporal path of the gadget graph")
    n = inst.n
    verts = list(path.vertices)
    times = list(path.times)

    def try_extend(more_vs: list[int], more_ts: list[int]) -> None:
        for v, t in zip(more_vs, more_ts):
            if v in seen or (times and t <= times[-1]):
                return
            verts.append(v)
            times.append(t)
            seen.add(v)

    seen = set(verts)
    b, z = inst.segment(verts[-1])
    if b == n + 1:
        if z < n:
            tail = inst.segment_path(n + 1)
            try_extend(list(tail.vertices[z + 1:]), list(tail.times[z:]))
    else:
        if z < n:
            # Trailing partial piece of segment b: peel it off before
            # appending the closing chain.
            while verts and inst.segment(verts[-1])[0] == b:
                seen.discard(verts.pop())
                if times:
                    times.pop()
        if verts:
            a, za = inst.segment(verts[-1])
            if a <= n and za == n:
                tail = inst.segment_path(n + 1)
                try_extend(
                    list(tail.vertices), [inst.connector_time(a)] + list(tail.times))
        else:
            tail = inst.segment_path(n + 1)
            verts = list(tail.vertices)
            times = list(tail.times)
            seen = set(verts)

    if __debug__ and len(verts) >= len(path.vertices):
        assert is_colorful(inst.graph, TemporalPath(verts, times))

    per_segment: dict[int, set[int]] = {}
    for v in verts:
        i, x = inst.segment(v)
        per_segment.setdefault(i, set()).add(x)
    full = frozenset(
        i for i, xs in per_segment.items() if i <= n and len(xs) == n + 1)
    assert inst.source.is_independent(full), \
        "colorful path covered two adjacent segments fully"
    return full


def brute_force_max_is(g: StaticGraph) -> frozenset:
    """Maximum independent set by branch and bound; n <= 20 only.

    Vertices are decided in ascending order, include branch first, and
    only strictly larger sets replace the incumbent, so the returned set
    is the lexicographically smallest maximum independent set.
    """
    if g.n > 20:
        raise LimitError(
            f"brute force wants n <= 20, got n={g.n}")
    n = g.n
    nbr_mask = [0] * (n + 1)
    for a, b in g.edges:
        nbr_mask[a] |= 1 << b
        nbr_mask[b] |= 1 << a
    all_mask = ((1 << (n + 1)) - 1) & ~1  # bits 1..n

    best: list[int] = []

    def walk(allowed: int, chosen: list[int]) -> None:
        if not allowed:
            if len(chosen) > len(best):
                best[:] = chosen
            return
        if len(chosen) + allowed.bit_count() <= len(best):
            return
        v = (allowed & -allowed).bit_length() - 1  # lowest allowed vertex
        chosen.append(v)
        walk(allowed & ~((1 << v) | nbr_mask[v]), chosen)
        chosen.pop()
        walk(allowed & ~(1 << v), chosen)

    walk(all_mask, [])
    return frozenset(best)
