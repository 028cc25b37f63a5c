"""Core data model: edges, domains, graphs, paths, validation."""
import pytest

from ctpls.graph import (
    ColoredTemporalGraph,
    InputError,
    TemporalEdge,
    TemporalPath,
    TimeDomain,
    is_colorful,
    path_colors,
    validate_colorful,
    validate_path,
)

from conftest import small_instance


def test_edge_normalizes_endpoints():
    e = TemporalEdge(5, 2, 9)
    assert (e.u, e.v, e.t) == (2, 5, 9)
    assert e == TemporalEdge(2, 5, 9)
    assert e.other(2) == 5
    assert e.other(5) == 2


def test_edge_rejects_self_loop_and_bad_types():
    with pytest.raises(InputError):
        TemporalEdge(3, 3, 1)
    with pytest.raises(InputError):
        TemporalEdge(1, "2", 0)
    with pytest.raises(InputError):
        TemporalEdge(1, 2, 1.5)


def test_edge_other_rejects_non_endpoint():
    with pytest.raises(InputError):
        TemporalEdge(1, 2, 3).other(7)


def test_time_domain():
    d = TimeDomain(-3, 4)
    assert d.span == 8
    assert -3 in d and 4 in d and 0 in d
    assert -4 not in d and 5 not in d
    assert "3" not in d
    with pytest.raises(InputError):
        TimeDomain(5, 3)
    with pytest.raises(InputError):
        TimeDomain(0.0, 3)


def test_graph_needs_vertices_and_colored_endpoints():
    with pytest.raises(InputError):
        ColoredTemporalGraph({}, [])
    with pytest.raises(InputError):
        ColoredTemporalGraph({0: 0}, [(0, 1, 3)])
    with pytest.raises(InputError):
        ColoredTemporalGraph({"a": 0}, [])


def test_graph_rejects_edge_outside_declared_domain():
    with pytest.raises(InputError):
        ColoredTemporalGraph({0: 0, 1: 1}, [(0, 1, 11)], TimeDomain(1, 10))


def test_domain_defaults_to_hull():
    g = ColoredTemporalGraph({0: 0, 1: 1, 2: 2}, [(0, 1, -5), (1, 2, 7)])
    assert g.domain == TimeDomain(-5, 7)
    edgeless = ColoredTemporalGraph({0: 0}, [])
    assert edgeless.domain == TimeDomain(0, 0)
    assert edgeless.n_edges == 0


def test_duplicate_and_reversed_edges_collapse():
    g = ColoredTemporalGraph(
        {0: 0, 1: 1}, [(0, 1, 3), (1, 0, 3), TemporalEdge(0, 1, 3)])
    assert g.n_edges == 1


def test_basic_accessors():
    g = ColoredTemporalGraph(
        {3: "r", 1: "g", 2: "r"},
        [(1, 2, 4), (2, 3, 4), (1, 3, 6)],
    )
    assert g.vertices == (1, 2, 3)
    assert g.n_vertices == 3
    assert g.color_of(3) == "r"
    assert g.color_set == frozenset({"r", "g"})
    assert g.n_colors == 2
    assert g.times == (4, 6)
    assert {(e.u, e.v) for e in g.edges_at(4)} == {(1, 2), (2, 3)}
    assert g.edges_at(5) == ()


def test_colors_mapping_is_read_only():
    g = ColoredTemporalGraph({0: 0, 1: 1}, [(0, 1, 1)])
    with pytest.raises(TypeError):
        g.colors[0] = 9


def test_neighbors_after_is_sorted_and_strict():
    g = ColoredTemporalGraph(
        {0: 0, 1: 1, 2: 2, 3: 3},
        [(0, 1, 2), (0, 2, 2), (0, 3, 5), (0, 1, 7)],
    )
    assert g.neighbors_after(0, 1) == [(1, 2), (2, 2), (3, 5), (1, 7)]
    assert g.neighbors_after(0, 2) == [(3, 5), (1, 7)]
    assert g.neighbors_after(0, 7) == []
    assert g.incident(1) == [(0, 2), (0, 7)]


def test_earliest_edge_time_window():
    g = ColoredTemporalGraph({0: 0, 1: 1}, [(0, 1, 3), (0, 1, 6), (0, 1, 9)])
    assert g.earliest_edge_time(0, 1, after=2) == 3
    assert g.earliest_edge_time(0, 1, after=3) == 6
    assert g.earliest_edge_time(1, 0, after=3, before=6) is None
    assert g.earliest_edge_time(0, 1, after=3, before=7) == 6
    assert g.earliest_edge_time(0, 1, after=9) is None


def test_edges_at_partitions_edges():
    g = small_instance(3, n=10, m=20, horizon=12)
    seen = []
    for t in g.times:
        batch = g.edges_at(t)
        assert all(e.t == t for e in batch)
        seen.extend(batch)
    assert sorted(seen) == sorted(g.edges)


def test_with_colors_swaps_palette_only():
    g = ColoredTemporalGraph({0: 0, 1: 1}, [(0, 1, 2)])
    h = g.with_colors({0: "x", 1: "x"})
    assert h.edges == g.edges
    assert h.n_colors == 1
    with pytest.raises(InputError):
        g.with_colors({0: "x"})


def test_graph_equality():
    a = small_instance(4)
    b = small_instance(4)
    assert a == b
    assert a != small_instance(5)


def test_path_shape_checks():
    p = TemporalPath([4, 2, 7], [1, 5])
    assert p.length == 3
    assert p.vertices == (4, 2, 7)
    assert p.times == (1, 5)
    assert list(p) == [4, 2, 7]
    assert TemporalPath([9], []).length == 1
    with pytest.raises(InputError):
        TemporalPath([], [])
    with pytest.raises(InputError):
        TemporalPath([1, 2], [])
    with pytest.raises(InputError):
        TemporalPath([1], [3])


def _diamond():
    return ColoredTemporalGraph(
        {0: 0, 1: 1, 2: 2, 3: 0},
        [(0, 1, 2), (1, 2, 5), (2, 3, 7), (1, 2, 1)],
    )


def test_validate_path_accepts_valid():
    g = _diamond()
    assert validate_path(g, TemporalPath([0, 1, 2, 3], [2, 5, 7])) is None
    assert validate_path(g, TemporalPath([2], [])) is None


def test_validate_path_unknown_vertex():
    v = validate_path(_diamond(), TemporalPath([0, 9], [2]))
    assert v.kind == "unknown-vertex"
    assert v.index == 1


def test_validate_path_repeated_vertex():
    v = validate_path(_diamond(), TemporalPath([1, 2, 1], [1, 5]))
    assert v.kind == "repeated-vertex"
    assert v.index == 2


def test_validate_path_missing_edge():
    v = validate_path(_diamond(), TemporalPath([0, 3], [4]))
    assert v.kind == "missing-edge"
    assert v.index == 0


def test_validate_path_time_order():
    g = _diamond()
    v = validate_path(g, TemporalPath([0, 1, 2], [2, 1]))
    assert v.kind == "time-order"
    assert v.index == 1
    # equal timestamps are just as illegal as decreasing ones
    gg = ColoredTemporalGraph({0: 0, 1: 1, 2: 2}, [(0, 1, 5), (1, 2, 5)])
    assert validate_path(gg, TemporalPath([0, 1, 2], [5, 5])).kind == "time-order"


def test_vertex_checks_come_before_edge_checks():
    # both an unknown vertex and a nonsense timestamp: vertex wins
    v = validate_path(_diamond(), TemporalPath([0, 9, 1], [99, 1]))
    assert v.kind == "unknown-vertex"


def test_colorfulness():
    g = _diamond()
    p = TemporalPath([0, 1, 2, 3], [2, 5, 7])  # colors 0,1,2,0
    assert is_colorful(g, TemporalPath([0, 1, 2], [2, 5]))
    assert not is_colorful(g, p)
    v = validate_colorful(g, p)
    assert v.kind == "repeated-color"
    assert v.index == 3
    assert path_colors(g, TemporalPath([0, 1], [2])) == frozenset({0, 1})


def test_reversing_timestamps_breaks_validity():
    # property over a seeded battery: a valid 2+ edge path never survives
    # reversing its timestamp sequence
    from ctpls.exact import naive_enumerate

    found = 0
    for seed in range(40):
        g = small_instance(seed, n=7, m=10, horizon=10, k=7)
        p = naive_enumerate(g)
        if p.length < 3:
            continue
        assert validate_path(g, p) is None
        rev = TemporalPath(p.vertices, tuple(reversed(p.times)))
        assert validate_path(g, rev) is not None
        found += 1
    assert found > 10
