"""Shared helpers for the test suite."""
import random

from ctpls.graph import ColoredTemporalGraph, TimeDomain


def small_instance(seed, n=8, m=12, horizon=15, k=5):
    """Seed-fixed random colored temporal graph for solver batteries."""
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = rng.sample(pairs, min(m, len(pairs)))
    edges = [(u, v, rng.randint(1, horizon)) for u, v in chosen]
    colors = {v: rng.randrange(k) for v in range(n)}
    return ColoredTemporalGraph(colors, edges, domain=TimeDomain(1, horizon))
