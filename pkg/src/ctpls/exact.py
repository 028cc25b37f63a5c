"""Exact maximum colorful temporal path solvers for small instances.

Two independent routes:

* exact_max_colorful_path: a sweep over edges in timestamp order that
  keeps, per (endpoint, color set), only the minimal arrival time, plus a
  second pass that reconstructs the lexicographically smallest optimal
  path.  Exponential in the number of colors, fine for a few dozen.
* naive_enumerate: plain DFS over every colorful temporal path.  Only
  viable for tiny graphs; exists so the clever solver has something
  dumber to be checked against.

Both break ties identically: maximum length first, then smallest vertex
sequence, then smallest timestamp sequence.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Hashable, Optional

from .graph import ColoredTemporalGraph, LimitError, TemporalPath


@dataclass(frozen=True)
class ExactLimits:
    """Size guards for the exact solver.

    Exceeding max_vertices/max_edges refuses up front (LimitError);
    max_colors_for_subset_dp switches the color-set state representation
    from a dense int bitmask to frozensets of color ids (slower, but not
    bounded at machine-word width); time_budget_s cuts the search off
    with a best-so-far result instead of an exception.
    """

    max_vertices: int = 64
    max_edges: int = 512
    max_colors_for_subset_dp: int = 24
    time_budget_s: float = 60.0


@dataclass(frozen=True)
class ExactResult:
    path: TemporalPath
    proven: bool
    explored_states: int
    elapsed_s: float
    note: str = ""


class _Budget(Exception):
    """Internal: time budget exhausted."""


class _ColorSpace:
    """Color-set states as int bitmasks or frozensets, same interface."""

    def __init__(self, colors: frozenset, dense: bool) -> None:
        self.dense = dense
        if dense:
            order = sorted(colors, key=repr)
            self._bit = {c: 1 << i for i, c in enumerate(order)}

    def single(self, c: Hashable):
        return self._bit[c] if self.dense else frozenset((c,))

    def has(self, state, c: Hashable) -> bool:
        return bool(state & self._bit[c]) if self.dense else c in state

    def add(self, state, c: Hashable):
        return state | self._bit[c] if self.dense else state | {c}

    def size(self, state) -> int:
        return state.bit_count() if self.dense else len(state)


def exact_max_colorful_path(
    graph: ColoredTemporalGraph, limits: ExactLimits = ExactLimits()
) -> ExactResult:
    """Maximum colorful temporal path, tie-broken to the lexicographically
    smallest optimal (vertex sequence, then timestamp sequence).

    Pass 1 sweeps edges grouped by increasing timestamp over states
    (endpoint vertex, set of colors on the path so far), keeping per state
    the minimal arrival time.  Dominance argument: two partial paths that
    end at the same vertex with the same color set admit exactly the same
    future extensions, except that the one arriving earlier can use every
    continuation the later one can (any edge departing strictly after the
    later arrival departs strictly after the earlier one too) and possibly
    more.  Colors subsume vertex distinctness here: a colorful path can
    never revisit a vertex anyway, because it would revisit its color.  So
    dropping the later arrival loses no optimal solution, and the state
    space is |V| * 2^|C| instead of all vertex sequences.

    Pass 2 re-derives the optimum's shape: f(v, S, t) = the greatest
    number of vertices appendable after arriving at v with colors S at
    time t (memoized DFS over the same state space).  Walking f greedily,
    always choosing the smallest next vertex and then its smallest
    feasible timestamp that still achieves the proven optimum, yields the
    canonical optimal path.  The separate pass exists because dominance by
    arrival time may discard the lex-smallest optimum mid-sweep.

    Budget exhaustion in pass 1 returns best-so-far with proven=False; in
    pass 2 the optimum length is already proven, so the sweep's own
    (non-canonical) witness is returned with a note.
    """
    if graph.n_vertices > limits.max_vertices:
        raise LimitError(
            f"{graph.n_vertices} vertices exceed the exact-solver limit "
            f"of {limits.max_vertices}")
    if graph.n_edges > limits.max_edges:
        raise LimitError(
            f"{graph.n_edges} edges exceed the exact-solver limit "
            f"of {limits.max_edges}")

    t0 = time.perf_counter()
    deadline = t0 + limits.time_budget_s
    space = _ColorSpace(
        graph.color_set, dense=graph.n_colors <= limits.max_colors_for_subset_dp)

    # Pass 1: state -> minimal arrival time (None = present from the
    # start, before any edge).  pred carries one witness per state.
    best: dict[tuple, Optional[int]] = {}
    pred: dict[tuple, Optional[tuple]] = {}
    by_vertex: dict[int, list] = {v: [] for v in graph.vertices}
    for v in graph.vertices:
        key = (v, space.single(graph.color_of(v)))
        best[key] = None
        pred[key] = None
        by_vertex[v].append(key[1])

    explored = len(best)
    top_key = max(best, key=lambda k: (space.size(k[1]), -k[0]))

    def settled(key: tuple, t: int) -> bool:
        """Arrival recorded for key strictly before t (usable at t)."""
        if key not in best:
            return False
        arr = best[key]
        return arr is None or arr < t

    for t in graph.times:
        if time.perf_counter() > deadline:
            return ExactResult(
                _witness(graph, pred, top_key, best),
                proven=False,
                explored_states=explored,
                elapsed_s=time.perf_counter() - t0,
                note="time budget exhausted during sweep; best-so-far")
        fresh: dict[tuple, tuple] = {}
        for e in graph.edges_at(t):
            for a, b in ((e.u, e.v), (e.v, e.u)):
                cb = graph.color_of(b)
                for s in by_vertex[a]:
                    if space.has(s, cb) or not settled((a, s), t):
                        continue
                    nk = (b, space.add(s, cb))
                    if nk in best or nk in fresh:
                        continue
                    fresh[nk] = (a, s, t)
        for nk, origin in fresh.items():
            best[nk] = t
            pred[nk] = origin
            by_vertex[nk[0]].append(nk[1])
            explored += 1
            if (space.size(nk[1]), -nk[0]) > (
                    space.size(top_key[1]), -top_key[0]):
                top_key = nk

    optimum = space.size(top_key[1])
    sweep_path = _witness(graph, pred, top_key, best)
    assert sweep_path.length == optimum

    # Pass 2: canonical reconstruction.
    dawn = graph.domain.t_min - 1  # sentinel strictly before every edge
    memo: dict[tuple, int] = {}
    calls = 0

    def future(v: int, s, t: Optional[int]) -> int:
        # Monotone in t: a later arrival only shrinks the option set, so
        # memoizing on the exact arrival time is sound and the table stays
        # within the pass-1 state space.
        nonlocal calls
        calls += 1
        if calls % 4096 == 0 and time.perf_counter() > deadline:
            raise _Budget
        key = (v, s, t)
        got = memo.get(key)
        if got is not None:
            return got
        out = 0
        for w, tw in graph.neighbors_after(v, dawn if t is None else t):
            cw = graph.color_of(w)
            if space.has(s, cw):
                continue
            cand = 1 + future(w, space.add(s, cw), tw)
            if cand > out:
                out = cand
        memo[key] = out
        return out

    try:
        start = None
        for v in graph.vertices:
            s = space.single(graph.color_of(v))
            if 1 + future(v, s, None) == optimum:
                start = v
                break
        assert start is not None
        verts = [start]
        times: list[int] = []
        s = space.single(graph.color_of(start))
        t: Optional[int] = None
        remaining = optimum - 1
        while remaining:
            nxt = None
            for w, tw in graph.neighbors_after(verts[-1], dawn if t is None else t):
                cw = graph.color_of(w)
                if space.has(s, cw):
                    continue
                if nxt is not None and w >= nxt[0]:
                    # Candidates arrive in (time, id) order; track the
                    # smallest id that still reaches the optimum, and for
                    # it the smallest feasible timestamp (the first seen).
                    continue
                if 1 + future(w, space.add(s, cw), tw) == remaining:
                    nxt = (w, tw)
            assert nxt is not None
            verts.append(nxt[0])
            times.append(nxt[1])
            s = space.add(s, graph.color_of(nxt[0]))
            t = nxt[1]
            remaining -= 1
        path = TemporalPath(verts, times)
    except _Budget:
        return ExactResult(
            sweep_path,
            proven=True,
            explored_states=explored,
            elapsed_s=time.perf_counter() - t0,
            note="optimum proven; canonical tie-break skipped (budget)")

    return ExactResult(
        path,
        proven=True,
        explored_states=explored,
        elapsed_s=time.perf_counter() - t0)


def _witness(
    graph: ColoredTemporalGraph,
    pred: dict,
    key: tuple,
    best: dict,
) -> TemporalPath:
    """Unwind pass-1 predecessor links into a path ending at key."""
    verts = [key[0]]
    times = []
    cur = key
    while pred[cur] is not None:
        a, s, t = pred[cur]
        verts.append(a)
        times.append(t)
        cur = (a, s)
    verts.reverse()
    times.reverse()
    return TemporalPath(verts, times)


def naive_enumerate(graph: ColoredTemporalGraph) -> TemporalPath:
    """Best colorful temporal path by exhaustive DFS over all of them.

    Ties broken exactly as in exact_max_colorful_path.  Guarded to
    graphs with at most 10 vertices or at most 16 temporal edges; anything
    larger raises LimitError (the search is factorial).
    """
    if graph.n_vertices > 10 and graph.n_edges > 16:
        raise LimitError(
            f"naive enumeration wants <=10 vertices or <=16 edges, "
            f"got {graph.n_vertices} vertices / {graph.n_edges} edges")

    best: Optional[tuple] = None

    def consider(verts: list[int], times: list[int]) -> None:
        nonlocal best
        key = (-len(verts), tuple(verts), tuple(times))
        if best is None or key < best:
            best = key

    def walk(verts: list[int], times: list[int], used: set) -> None:
        consider(verts, times)
        last_t = times[-1] if times else graph.domain.t_min - 1
        for w, t in graph.neighbors_after(verts[-1], last_t):
            c = graph.color_of(w)
            if c in used:
                continue
            verts.append(w)
            times.append(t)
            used.add(c)
            walk(verts, times, used)
            used.discard(c)
            times.pop()
            verts.pop()

    for v in graph.vertices:
        walk([v], [], {graph.color_of(v)})
    assert best is not None
    return TemporalPath(list(best[1]), list(best[2]))
