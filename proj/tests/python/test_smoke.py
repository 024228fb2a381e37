"""Smoke tests for the python bindings: one happy path per exposed operation."""

import pytest

import netbound as nb


def test_generators_expose_graph_shape():
    g = nb.square_grid(3)
    assert g.vertex_count == 9
    assert g.edge_count == 12
    assert g.degree(4) == 4  # center of the grid
    walk = g.peripheral_walk()
    assert walk[0] == walk[-1]
    assert len(walk) == 4 * 2 + 1
    assert (0, 1) in g.edges()
    assert 1 in g.rotation(0)


def test_graph_from_rotations_and_anchor():
    triangle = nb.Graph([[1, 2], [2, 0], [0, 1]], anchor=(0, 1))
    assert triangle.vertex_count == 3
    assert triangle.edge_count == 3


def test_disconnected_rotations_are_rejected():
    with pytest.raises(nb.Error):
        nb.Graph([[1], [0], []])


def test_frame_sides_partition_the_walk():
    g = nb.cycle(6)
    f = nb.frame(g, 2, 4)
    assert (f.j, f.k, f.length) == (2, 4, 6)
    assert f.colors_of(0) == ("blue", "yellow")
    assert f.colors_of(2) == ("blue", "red")
    assert f.colors_of(3) == ("red",)
    assert f.side("red") == [2, 3, 4]
    assert nb.default_frame(g).length == 6


def test_triangular_grid_net_order_is_n():
    for n in (3, 4, 5):
        g = nb.triangular_grid(n)
        f = nb.frame(g, n - 1, 2 * (n - 1))
        r = nb.net_cover(g, f)
        assert r["order"] == n
        assert nb.verify_cover(g, f, r["cover"])


def test_fifteen_cycle_cover():
    g = nb.cycle(15)
    f = nb.frame(g, 5, 10)
    assert nb.net_cover(g, f)["order"] == 2
    assert nb.verify_cover(g, f, [5, 10])
    assert not nb.verify_cover(g, f, [7])


def test_bounds_and_decomposition_are_consistent():
    g = nb.square_grid(5)
    b = nb.bounds(g)
    assert b["kb"] == b["bramble_lower"]
    assert b["treewidth_lower"] <= 5 <= b["treewidth_upper"]  # true treewidth of the 5-grid
    d = nb.decompose(g)
    ok, message = nb.validate_decomposition(g, d["bags"], d["tree_edges"])
    assert ok, message
    assert d["width"] <= 4 * d["kb"] - 1
    assert d["width"] == b["treewidth_upper"]


def test_oracles_agree_with_fast_algorithms():
    g = nb.random_triangulation(8, seed=1234)
    f = nb.default_frame(g)
    assert nb.net_cover(g, f)["order"] == nb.brute_net_order(g, f)["order"]
    tw = nb.brute_treewidth(g)
    b = nb.bounds(g)
    assert b["kb"] <= tw + 1
    assert tw <= 4 * b["kb"] - 1


def test_pgr_round_trip():
    g = nb.triangular_grid(3)
    text = nb.to_pgr(g)
    assert text.startswith("p pgr 6 ")
    components = nb.from_pgr(text)
    assert len(components) == 1
    h, original_ids = components[0]
    assert original_ids == list(range(g.vertex_count))
    assert h.edges() == g.edges()
    assert h.peripheral_walk() == g.peripheral_walk()


def test_td_round_trip():
    g = nb.cycle(6)
    d = nb.decompose(g)
    text = nb.to_td(d["bags"], d["tree_edges"], g.vertex_count)
    parsed = nb.from_td(text)
    assert parsed["vertex_count"] == g.vertex_count
    assert parsed["bags"] == d["bags"]
    assert parsed["tree_edges"] == d["tree_edges"]
    assert parsed["width"] == d["width"]


def test_parse_errors_surface_as_module_errors():
    with pytest.raises(nb.Error):
        nb.from_pgr("p pgr 1 5\nr 1\n")
