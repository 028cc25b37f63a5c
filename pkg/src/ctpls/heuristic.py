"""CTPLS: colorful temporal path via local search.

Pipeline: split the time domain into as many intervals as there are
colors, grow a seed path greedily with at most one fresh-colored vertex
per interval, then alternate two local-search sweeps until neither
improves.  LS1 replaces one edge of the path by two (inserting a vertex
of an unused color); LS2 replaces one vertex by two such vertices.  Both
only ever lengthen the path, so the colorful invariant and termination
are immediate.
"""

from __future__ import annotations

import bisect
import time
from dataclasses import dataclass
from typing import Optional

from .graph import (
    ColoredTemporalGraph,
    InputError,
    TemporalPath,
    TimeDomain,
    is_colorful,
)


@dataclass(frozen=True)
class Segmentation:
    """Time domain cut into k consecutive intervals.

    intervals holds closed (lo, hi) bounds; a None entry is an
    empty-marked slot.  When the domain has fewer timestamps than k, the
    split degenerates to one singleton interval per timestamp plus empty
    slots at the end, and degenerate is set.
    """

    domain: TimeDomain
    intervals: tuple[Optional[tuple[int, int]], ...]
    degenerate: bool = False

    @property
    def k(self) -> int:
        return len(self.intervals)


def segment_domain(domain: TimeDomain, k: int) -> Segmentation:
    """Split [t_min, t_max] into k intervals of span // k timestamps each,
    the remainder going to the last interval.
    """
    if k < 1:
        raise InputError(f"need at least one interval, got k={k}")
    span = domain.span
    base = span // k
    if base == 0:
        singles = tuple(
            (t, t) for t in range(domain.t_min, domain.t_max + 1))
        return Segmentation(
            domain, singles + (None,) * (k - span), degenerate=True)
    bounds = []
    for i in range(k):
        lo = domain.t_min + i * base
        hi = domain.t_max if i == k - 1 else lo + base - 1
        bounds.append((lo, hi))
    return Segmentation(domain, tuple(bounds))


@dataclass(frozen=True)
class LsMove:
    """One applied local-search replacement.

    kind is "LS1" (edge replaced by two edges through one new vertex) or
    "LS2" (vertex replaced by two new vertices); position indexes the
    replaced edge (LS1) or vertex (LS2) in the pre-move path; inserted
    and new_times record what went in.  Applying a move always yields a
    valid colorful temporal path exactly one vertex longer.
    """

    kind: str
    position: int
    inserted: tuple[int, ...]
    new_times: tuple[int, ...]


def greedy_build(
    graph: ColoredTemporalGraph, seg: Segmentation
) -> tuple[TemporalPath, bool]:
    """Interval-guided greedy seed path.

    Seeds on the first edge (by timestamp, then endpoint ids) whose
    endpoints have distinct colors, searching intervals left to right;
    every later interval contributes at most one extension to a vertex of
    a color not yet on the path, again earliest-first.  Returns the path
    and a fallback flag: True means no seed edge existed anywhere and the
    path is just the smallest vertex id.
    """
    times = graph.times
    seed: Optional[tuple[int, int, int]] = None
    seed_idx = -1
    for idx, iv in enumerate(seg.intervals):
        if iv is None:
            continue
        lo, hi = iv
        for t in _times_within(times, lo, hi):
            for e in graph.edges_at(t):
                if graph.color_of(e.u) != graph.color_of(e.v):
                    seed = (e.u, e.v, t)
                    break
            if seed:
                break
        if seed:
            seed_idx = idx
            break
    if seed is None:
        return TemporalPath([graph.vertices[0]], []), True

    verts = [seed[0], seed[1]]
    ts = [seed[2]]
    used = {graph.color_of(seed[0]), graph.color_of(seed[1])}
    for iv in seg.intervals[seed_idx + 1:]:
        if iv is None:
            continue
        lo, hi = iv
        for w, t in graph.neighbors_after(verts[-1], max(ts[-1], lo - 1)):
            if t > hi:
                break
            c = graph.color_of(w)
            if c not in used:
                verts.append(w)
                ts.append(t)
                used.add(c)
                break
    return TemporalPath(verts, ts), False


def _times_within(times: tuple[int, ...], lo: int, hi: int):
    i = bisect.bisect_left(times, lo)
    while i < len(times) and times[i] <= hi:
        yield times[i]
        i += 1


def ls1_sweep(
    graph: ColoredTemporalGraph, path: TemporalPath
) -> tuple[TemporalPath, tuple[LsMove, ...]]:
    """One left-to-right pass of edge replacement.

    For each path edge {u, v} in turn, look for a detour u -> x -> v with
    c(x) unused, t_prev < t1 < t2 < t_next (the neighboring path times
    bound the new ones, exclusively; the replaced edge's own time is
    free to go).  The first detour found (earliest t1, then x id, then
    earliest t2) is applied and the sweep resumes after the inserted
    vertex.  Returns the new path and the applied moves in order; an
    empty move tuple means the pass improved nothing.
    """
    verts = list(path.vertices)
    ts = list(path.times)
    used = {graph.color_of(v) for v in verts}
    dawn = graph.domain.t_min - 1
    moves: list[LsMove] = []
    j = 0
    while j < len(ts):
        u, v = verts[j], verts[j + 1]
        t_prev = ts[j - 1] if j > 0 else dawn
        t_next = ts[j + 1] if j + 1 < len(ts) else None
        found = None
        for x, t1 in graph.neighbors_after(u, t_prev):
            if t_next is not None and t1 >= t_next - 1:
                break  # no room for t1 < t2 < t_next
            if graph.color_of(x) in used:
                continue
            t2 = graph.earliest_edge_time(x, v, after=t1, before=t_next)
            if t2 is not None:
                found = (x, t1, t2)
                break
        if found is None:
            j += 1
            continue
        x, t1, t2 = found
        moves.append(LsMove("LS1", j, (x,), (t1, t2)))
        verts[j + 1:j + 1] = [x]
        ts[j:j + 1] = [t1, t2]
        used.add(graph.color_of(x))
        if __debug__:
            assert is_colorful(graph, TemporalPath(verts, ts))
        j += 2
    return TemporalPath(verts, ts), tuple(moves)


def ls2_sweep(
    graph: ColoredTemporalGraph, path: TemporalPath
) -> tuple[TemporalPath, tuple[LsMove, ...]]:
    """One left-to-right pass of vertex replacement.

    Each path vertex x in turn may be replaced by two vertices y, z that
    are not on the path and whose colors are distinct and unused (the
    color of x itself is freed by the removal).  Interior replacements
    need three edges u-y, y-z, z-w strictly inside the surrounding time
    window; at the ends only two edges are needed and the outer bound
    drops away.  First feasible replacement wins (scanning earliest
    timestamps first), sweep resumes after the inserted pair.  Returns
    the new path and the applied moves in order; an empty move tuple
    means the pass improved nothing.
    """
    verts = list(path.vertices)
    ts = list(path.times)
    dawn = graph.domain.t_min - 1
    moves: list[LsMove] = []
    i = 0
    while i < len(verts):
        if len(verts) < 2:
            break
        x = verts[i]
        on_path = set(verts)
        used = {graph.color_of(v) for v in verts} - {graph.color_of(x)}
        found = None

        if i == 0:
            w = verts[1]
            t_next = ts[1] if len(ts) >= 2 else None
            # New head y -> z -> w: scan w's incidences for t2, then z's
            # earlier incidences for t1 < t2.
            for z, t2 in graph.incident(w):
                if t_next is not None and t2 >= t_next:
                    break
                if z in on_path or graph.color_of(z) in used:
                    continue
                for y, t1 in graph.incident(z):
                    if t1 >= t2:
                        break
                    if y in on_path:
                        continue
                    cy, cz = graph.color_of(y), graph.color_of(z)
                    if cy in used or cy == cz:
                        continue
                    found = ([y, z], [t1, t2], 0, 1, 0, 1)
                    break
                if found:
                    break
        elif i == len(verts) - 1:
            u = verts[i - 1]
            t_prev = ts[i - 2] if len(ts) >= 2 else dawn
            for y, t1 in graph.neighbors_after(u, t_prev):
                if y in on_path or graph.color_of(y) in used:
                    continue
                for z, t2 in graph.neighbors_after(y, t1):
                    if z in on_path:
                        continue
                    cy, cz = graph.color_of(y), graph.color_of(z)
                    if cz in used or cz == cy:
                        continue
                    found = ([y, z], [t1, t2], i, i + 1, i - 1, i)
                    break
                if found:
                    break
        else:
            u, w = verts[i - 1], verts[i + 1]
            t_prev = ts[i - 2] if i >= 2 else dawn
            t_next = ts[i + 1] if i + 1 < len(ts) else None
            for y, t1 in graph.neighbors_after(u, t_prev):
                if t_next is not None and t1 >= t_next - 2:
                    break  # need t1 < t2 < t3 < t_next
                if y in on_path or graph.color_of(y) in used:
                    continue
                for z, t2 in graph.neighbors_after(y, t1):
                    if t_next is not None and t2 >= t_next - 1:
                        break
                    if z in on_path:
                        continue
                    cy, cz = graph.color_of(y), graph.color_of(z)
                    if cz in used or cz == cy:
                        continue
                    t3 = graph.earliest_edge_time(
                        z, w, after=t2, before=t_next)
                    if t3 is not None:
                        found = ([y, z], [t1, t2, t3], i, i + 1, i - 1, i + 1)
                        break
                if found:
                    break

        if found is None:
            i += 1
            continue
        new_vs, new_ts, v_lo, v_hi, t_lo, t_hi = found
        moves.append(LsMove("LS2", i, tuple(new_vs), tuple(new_ts)))
        verts[v_lo:v_hi] = new_vs
        ts[t_lo:t_hi] = new_ts
        if __debug__:
            assert is_colorful(graph, TemporalPath(verts, ts))
        i += 2
    return TemporalPath(verts, ts), tuple(moves)


@dataclass(frozen=True)
class CtplsTrace:
    """What happened inside one ctpls run."""

    greedy_length: int
    greedy_fallback: bool
    ls1_moves: int
    ls2_moves: int
    rounds: int
    colors_found: int
    n_colors: int
    elapsed_s: float

    @property
    def all_colors(self) -> bool:
        return self.colors_found == self.n_colors


def ctpls(graph: ColoredTemporalGraph) -> tuple[TemporalPath, CtplsTrace]:
    """Full heuristic: segmentation, greedy seed, alternating LS1/LS2.

    Sweeps alternate until a full round applies no move, or the path
    already spans every color in the graph (no improvement possible).
    The result is always a valid colorful temporal path, or the flagged
    single-vertex fallback on edgeless-in-effect inputs.
    """
    t0 = time.perf_counter()
    seg = segment_domain(graph.domain, graph.n_colors)
    path, fallback = greedy_build(graph, seg)
    greedy_len = path.length
    n_colors = graph.n_colors
    ls1_total = 0
    ls2_total = 0
    rounds = 0
    while path.length < n_colors:
        rounds += 1
        path, m1 = ls1_sweep(graph, path)
        ls1_total += len(m1)
        if path.length >= n_colors:
            break
        path, m2 = ls2_sweep(graph, path)
        ls2_total += len(m2)
        if not m1 and not m2:
            break
    trace = CtplsTrace(
        greedy_length=greedy_len,
        greedy_fallback=fallback,
        ls1_moves=ls1_total,
        ls2_moves=ls2_total,
        rounds=rounds,
        colors_found=path.length,
        n_colors=n_colors,
        elapsed_s=time.perf_counter() - t0,
    )
    return path, trace
