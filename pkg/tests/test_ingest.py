import math
import random

import numpy as np
import pytest

from xcut.errors import BadGridError, LengthMismatchError, ParseError
from xcut.ingest import (
    GrayImage,
    classification_rate,
    emit_edge_list,
    image_grid_graph,
    knn_eps_graph,
    largest_component,
    parse_csv_image,
    parse_edge_list,
    parse_pgm,
    parse_points_csv,
    sample_gaussian_mixture,
    write_points_csv,
)
from xcut.oracle import random_connected_graph

D6_TEXT = """\
# two triangles bridged at 2-3
0 1 1
0 2 1
1 2 1
3 4 1
3 5 1
4 5 1
2 3 0.5
"""


def test_parse_edge_list_fixture():
    g, ids = parse_edge_list(D6_TEXT)
    assert g.n == 6
    assert g.m == 7
    assert ids == (0, 1, 2, 3, 4, 5)
    assert g.total_volume == 13.0


def test_parse_edge_list_remaps_sparse_ids():
    g, ids = parse_edge_list("5 9 1.0\n9 7 2.0\n")
    assert ids == (5, 7, 9)
    assert g.edges == ((0, 2, 1.0), (1, 2, 2.0))


def test_parse_edge_list_weight_defaults_to_one():
    g, _ = parse_edge_list("0 1\n1 2 3.5\n")
    assert g.edges == ((0, 1, 1.0), (1, 2, 3.5))


def test_parse_edge_list_merges_duplicates():
    g, _ = parse_edge_list("0 1 1\n1 0 2\n")
    assert g.edges == ((0, 1, 3.0),)


def test_parse_edge_list_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_edge_list("0 1 1\n0 1 2 3\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_edge_list("0 x 1\n")
    with pytest.raises(ParseError):
        parse_edge_list("-1 0 1\n")
    with pytest.raises(ParseError):
        parse_edge_list("0 1 inf\n")


def test_edge_list_roundtrip():
    rng = random.Random(17)
    g = random_connected_graph(rng, 9, p=0.4)
    back, ids = parse_edge_list(emit_edge_list(g))
    assert ids == tuple(range(9))
    assert back.n == g.n
    assert all(u == x and v == y and abs(w - z) < 1e-15
               for (u, v, w), (x, y, z) in zip(back.edges, g.edges))


def test_largest_component():
    g, _ = parse_edge_list("0 1 1\n2 3 1\n2 4 1\n3 4 1\n")
    sub = largest_component(g)
    assert sub.n == 3
    assert sub.m == 3


def test_parse_pgm():
    img = parse_pgm("P2\n# comment\n2 2\n255\n10 20\n30 40\n")
    assert (img.width, img.height) == (2, 2)
    assert img.intensities == (10.0, 20.0, 30.0, 40.0)


def test_parse_pgm_errors():
    with pytest.raises(ParseError):
        parse_pgm("P5\n2 2\n255\n0 0 0 0\n")
    with pytest.raises(ParseError):
        parse_pgm("P2\n2 2\n255\n0 0 0\n")
    with pytest.raises(ParseError):
        parse_pgm("P2\n2 2\n15\n0 0 0 99\n")
    with pytest.raises(ParseError):
        parse_pgm("P2\n2 2\n")


def test_parse_csv_image():
    img = parse_csv_image("1, 2\n3, 4\n")
    assert (img.width, img.height) == (2, 2)
    assert img.intensities == (1.0, 2.0, 3.0, 4.0)
    with pytest.raises(ParseError):
        parse_csv_image("1,2\n3\n")
    with pytest.raises(ParseError):
        parse_csv_image("1,-2\n")
    with pytest.raises(ParseError):
        parse_csv_image("")


def test_grid_graph_constant_image():
    img = parse_csv_image("1,1\n1,1\n")
    g, maxima = image_grid_graph(img, 2)
    assert g.n == 4
    assert g.m == 6  # 8-neighborhood on 2x2 is complete
    assert all(w == 1.0 for _, _, w in g.edges)
    assert maxima == frozenset({0, 1, 2, 3})


def test_grid_graph_zero_cell_is_isolated():
    img = parse_csv_image("1,0\n1,1\n")
    g, maxima = image_grid_graph(img, 2)
    assert g.m == 3
    assert g.degree(1) == 0.0
    assert not g.is_connected()
    assert maxima == frozenset({0, 2, 3})


def test_grid_graph_downsamples_by_block_average():
    img = parse_csv_image("4,2\n0,2\n")
    g, _ = image_grid_graph(img, 1)
    assert g.n == 1
    # single 2x2 block averaging to 2; no edges
    assert g.m == 0

    img = parse_csv_image("1,2,3\n4,5,6\n7,8,9\n")
    g, maxima = image_grid_graph(img, 2)
    # uneven split: blocks [[1]], [[2,3]], [[4],[7]], [[5,6],[8,9]]
    weights = {(u, v): w for u, v, w in g.edges}
    assert abs(weights[(0, 1)] - 1 * 2.5) < 1e-12
    assert abs(weights[(2, 3)] - 5.5 * 7) < 1e-12
    assert maxima == frozenset({3})


def test_grid_graph_positive_image_connected():
    rng = random.Random(29)
    vals = [rng.randint(1, 255) for _ in range(12 * 12)]
    img = GrayImage(12, 12, tuple(float(v) for v in vals))
    for r in (3, 5, 12):
        g, _ = image_grid_graph(img, r)
        assert g.is_connected()


def test_grid_size_bounds():
    img = parse_csv_image("1,1\n1,1\n")
    with pytest.raises(BadGridError):
        image_grid_graph(img, 0)
    with pytest.raises(BadGridError):
        image_grid_graph(img, 3)


def test_points_csv_roundtrip():
    points = [(0.25, -1.5), (3.125, 2.0)]
    text = write_points_csv(points, [1, 0])
    back, labels = parse_points_csv(text)
    assert back == points
    assert labels == [1, 0]

    text = write_points_csv(points)
    back, labels = parse_points_csv(text)
    assert back == points
    assert labels is None


def test_points_csv_errors():
    with pytest.raises(ParseError):
        parse_points_csv("1,2\n1,2,0\n")
    with pytest.raises(ParseError):
        parse_points_csv("1,x\n")
    with pytest.raises(LengthMismatchError):
        write_points_csv([(0.0, 0.0)], [0, 1])


def test_knn_path_on_collinear_points():
    pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]
    g = knn_eps_graph(pts, k=1, eps=0.01, scale=1.0)
    # 1's nearest-neighbor tie between 0 and 2 breaks to the lower index
    assert [(u, v) for u, v, _ in g.edges] == [(0, 1), (1, 2)]
    assert all(abs(w - math.exp(-1.0)) < 1e-12 for _, _, w in g.edges)


def test_eps_ball_adds_edges_beyond_knn():
    # neither 0 nor 2 is the other's nearest neighbor
    pts = [(0.0, 0.0), (1.0, 0.0), (1.2, 0.0)]
    only_knn = knn_eps_graph(pts, k=1, eps=0.01, scale=1.0)
    assert (0, 2) not in {(u, v) for u, v, _ in only_knn.edges}
    with_ball = knn_eps_graph(pts, k=1, eps=1.5, scale=1.0)
    assert (0, 2) in {(u, v) for u, v, _ in with_ball.edges}


def test_duplicate_points_get_unit_weight():
    g = knn_eps_graph([(0.5, 0.5), (0.5, 0.5)], k=1)
    assert g.edges == ((0, 1, 1.0),)


def test_knn_leaves_no_isolated_vertices():
    rng = np.random.default_rng(5)
    for _ in range(10):
        pts = [tuple(p) for p in rng.standard_normal((rng.integers(2, 40), 2))]
        g = knn_eps_graph(pts, k=1, eps=0.0001)
        assert all(g.degree(v) > 0 for v in range(g.n))


def test_knn_input_validation():
    with pytest.raises(ValueError):
        knn_eps_graph([(0.0, 0.0)])
    with pytest.raises(ValueError):
        knn_eps_graph([(0.0, 0.0, 1.0), (1.0, 1.0, 0.0)])


def test_mixture_determinism():
    a = sample_gaussian_mixture(50, 2.0, seed=9)
    b = sample_gaussian_mixture(50, 2.0, seed=9)
    assert a.points == b.points
    assert a.labels == b.labels
    c = sample_gaussian_mixture(50, 2.0, seed=10)
    assert c.points != a.points


def test_mixture_component_means():
    sample = sample_gaussian_mixture(10_000, 4.0, seed=0)
    pts = np.asarray(sample.points)
    labs = np.asarray(sample.labels)
    assert set(sample.labels) == {0, 1}
    assert np.allclose(pts[labs == 0].mean(axis=0), (0.0, 0.0), atol=0.1)
    assert np.allclose(pts[labs == 1].mean(axis=0), (4.0, 4.0), atol=0.1)


def test_mixture_validation():
    with pytest.raises(ValueError):
        sample_gaussian_mixture(0, 1.0, seed=0)
    with pytest.raises(ValueError):
        sample_gaussian_mixture(5, -1.0, seed=0)
    sample = sample_gaussian_mixture(5, 0.0, seed=0)
    assert len(sample.points) == 5


def test_classification_rate():
    assert classification_rate([0, 1, 0, 1], [0, 1, 0, 1]) == 1.0
    assert classification_rate([0, 1, 0, 1], [1, 0, 1, 0]) == 1.0
    assert classification_rate([0, 0, 1, 1], [0, 0, 0, 0]) == 0.5
    assert classification_rate([0, 1, 0, 1], [0, 1, 1, 1]) == 0.75
    with pytest.raises(LengthMismatchError):
        classification_rate([0], [0, 1])
    with pytest.raises(ValueError):
        classification_rate([], [])
