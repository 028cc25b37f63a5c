"""Synthetic temporal instances and dataset transforms.

Static ER/BA backbones are lifted to temporal graphs by giving every
static edge one timestamp drawn uniformly from [1, horizon], then a
colorful path covering the whole palette is planted so the instance's
optimum is |C| by construction.  yes_op_transform does the analogous
planting on an existing (typically real) colored graph.

All randomness flows through random.Random seeded per call, so a
(config, seed) pair is a complete recipe for an instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Hashable, Optional, Union

from .graph import (
    ColoredTemporalGraph,
    InputError,
    TemporalEdge,
    TemporalPath,
    TimeDomain,
)


@dataclass(frozen=True)
class ErdosRenyi:
    """Each of the n(n-1)/2 vertex pairs is an edge with probability p."""

    p: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise InputError(f"edge probability must be in [0, 1], got {self.p}")

    def spec_string(self) -> str:
        return f"er:{self.p:g}"

    def static_edges(self, n: int, rng: random.Random) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < self.p
        ]


@dataclass(frozen=True)
class BarabasiAlbert:
    """Complete core of m vertices; each later vertex attaches m
    preferential edges to distinct earlier vertices.
    """

    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InputError(f"attachment count must be >= 1, got {self.m}")

    def spec_string(self) -> str:
        return f"ba:{self.m}"

    def static_edges(self, n: int, rng: random.Random) -> list[tuple[int, int]]:
        m = self.m
        if n < m:
            raise InputError(f"BA({m}) needs at least {m} vertices, got {n}")
        edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
        # Degree-proportional sampling via the repeated-endpoints list.
        pool = [v for e in edges for v in e]
        if not pool:
            pool = [0]  # m=1: the core is a single isolated vertex
        for v in range(m, n):
            targets: set[int] = set()
            while len(targets) < m:
                targets.add(rng.choice(pool))
            for w in sorted(targets):
                edges.append((w, v))
            pool.extend([v] * m)
            pool.extend(sorted(targets))
        return edges


Topology = Union[ErdosRenyi, BarabasiAlbert]


def parse_topology(text: str) -> Topology:
    """'er:P' or 'ba:M' -> topology object."""
    kind, sep, arg = text.partition(":")
    if not sep:
        raise InputError(f"topology must look like er:0.4 or ba:10, got {text!r}")
    try:
        if kind == "er":
            return ErdosRenyi(float(arg))
        if kind == "ba":
            return BarabasiAlbert(int(arg))
    except ValueError:
        raise InputError(f"bad topology parameter in {text!r}") from None
    raise InputError(f"unknown topology kind {kind!r} in {text!r}")


@dataclass(frozen=True)
class SynthConfig:
    """Recipe for one synthetic instance."""

    n_vertices: int
    horizon: int
    topology: Topology
    n_colors: int
    seed: int

    def __post_init__(self) -> None:
        if self.n_vertices < 1:
            raise InputError("need at least one vertex")
        if self.horizon < 1:
            raise InputError("horizon must be >= 1")
        if not 1 <= self.n_colors <= self.n_vertices:
            raise InputError(
                f"need 1 <= n_colors <= n_vertices, got "
                f"{self.n_colors} colors for {self.n_vertices} vertices")
        if self.n_colors > self.horizon + 1:
            raise InputError(
                f"a planted path of {self.n_colors} vertices needs "
                f"{self.n_colors - 1} strictly increasing timestamps, but "
                f"the horizon is {self.horizon}")


@dataclass(frozen=True)
class PlantRecord:
    """The colorful path planted into an instance.

    colors lists the color of each planted vertex in path order (all |C|
    colors, each once).  recolored lists vertices whose color was
    changed by yes_op_transform to cover colors absent from the input
    graph; empty for synthetic generation.
    """

    path: TemporalPath
    colors: tuple[Hashable, ...]
    recolored: tuple[int, ...] = field(default=())


def gen_synthetic(cfg: SynthConfig) -> tuple[ColoredTemporalGraph, PlantRecord]:
    """Synthetic instance whose exact optimum is n_colors by construction.

    Steps, each consuming the shared RNG in a fixed order: build the
    static backbone, stamp each backbone edge with a uniform timestamp in
    [1, horizon], choose n_colors distinct vertices and connect them by a
    planted path on sorted without-replacement timestamps, then color
    every remaining vertex uniformly at random.  Planted edges that
    collide with backbone edges merge in the edge set.
    """
    rng = random.Random(cfg.seed)
    n, k = cfg.n_vertices, cfg.n_colors
    backbone = cfg.topology.static_edges(n, rng)
    edges = [
        TemporalEdge(u, v, rng.randint(1, cfg.horizon)) for u, v in backbone
    ]

    planted_vertices = rng.sample(range(n), k)
    plant_times = sorted(rng.sample(range(1, cfg.horizon + 1), k - 1))
    edges.extend(
        TemporalEdge(a, b, t)
        for a, b, t in zip(planted_vertices, planted_vertices[1:], plant_times)
    )

    colors = {v: c for c, v in enumerate(planted_vertices)}
    for v in range(n):
        if v not in colors:
            colors[v] = rng.randrange(k)

    graph = ColoredTemporalGraph(colors, edges, TimeDomain(1, cfg.horizon))
    record = PlantRecord(
        TemporalPath(planted_vertices, plant_times), tuple(range(k)))
    return graph, record


def assign_random_colors(
    graph: ColoredTemporalGraph, n_colors: int, seed: int
) -> ColoredTemporalGraph:
    """Recolor every vertex independently and uniformly from 0..n_colors-1."""
    if n_colors < 1:
        raise InputError(f"need at least one color, got {n_colors}")
    rng = random.Random(seed)
    return graph.with_colors(
        {v: rng.randrange(n_colors) for v in graph.vertices})


def yes_op_transform(
    graph: ColoredTemporalGraph,
    seed: int,
    universe: Optional[set] = None,
) -> tuple[ColoredTemporalGraph, PlantRecord]:
    """Add a colorful path through one random vertex per color.

    The planted path visits the colors in sorted order on |C|-1 strictly
    increasing timestamps spread evenly across the domain hull; added
    edges that already exist merge in the edge set, so the transform is
    idempotent on its own output.  universe widens the color set beyond
    what the graph carries: colors with no vertex are assigned to
    randomly chosen planted vertices first (recorded in
    PlantRecord.recolored).  The result's optimum is |C|: the plant
    realizes it and a colorful path cannot exceed the color count.
    """
    rng = random.Random(seed)
    present = graph.color_set
    if universe is None:
        universe = set(present)
    elif not present <= universe:
        raise InputError("graph carries colors outside the declared universe")
    try:
        palette = sorted(universe)
    except TypeError:
        palette = sorted(universe, key=repr)
    k = len(palette)
    lo, hi = graph.domain.t_min, graph.domain.t_max
    if hi - lo + 1 < k - 1:
        raise InputError(
            f"domain spans {hi - lo + 1} timestamps; a colorful path over "
            f"{k} colors needs {k - 1}")

    by_color: dict[Hashable, list[int]] = {c: [] for c in palette}
    for v in graph.vertices:  # sorted, so picks are reproducible
        by_color[graph.color_of(v)].append(v)

    missing = [c for c in palette if not by_color[c]]
    picks: dict[Hashable, int] = {}
    recolored: list[int] = []
    colors = dict(graph.colors)
    if missing:
        donors = rng.sample(graph.vertices, len(missing))
        for c, v in zip(missing, donors):
            colors[v] = c
            picks[c] = v
            recolored.append(v)
        by_color = {c: [] for c in palette}
        for v, c in colors.items():
            by_color[c].append(v)
        for c in palette:
            by_color[c].sort()
    for c in palette:
        if c not in picks:
            picks[c] = rng.choice(by_color[c])

    route = [picks[c] for c in palette]
    span = hi - lo
    m = k - 1
    plant_times = [lo + (j * span) // m for j in range(1, m + 1)] if m else []
    new_edges = set(graph.edges)
    new_edges.update(
        TemporalEdge(a, b, t) for a, b, t in zip(route, route[1:], plant_times))
    out = ColoredTemporalGraph(colors, new_edges, graph.domain)
    record = PlantRecord(
        TemporalPath(route, plant_times),
        tuple(palette),
        tuple(sorted(recolored)))
    return out, record
