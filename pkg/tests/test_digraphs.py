"""Digraph layer: walk counts, girth, layered certificates, shift graphs."""

import math

import pytest
from hypothesis import given, strategies as st

from smallstretch.digraphs import (
    DiGraph,
    LayeredPartition,
    build_shift_graph,
    check_girth_threshold,
    check_layered_partition,
    check_path_counts,
    count_paths,
    from_matrix,
    girth_directed,
    layered_path_bound,
    max_paths,
    path_counts,
    path_type_count,
    predicted_girth,
    random_layered_graph,
    shift_graph_dot,
    shift_graph_girth,
    to_matrix,
    validate_shift_graph,
    weighted_path_cap,
)
from smallstretch.intmatrix import IntMatrix, mat_pow


def small_digraphs(max_dim=5):
    return st.integers(1, max_dim).flatmap(
        lambda d: st.lists(
            st.lists(st.integers(0, 1), min_size=d, max_size=d),
            min_size=d, max_size=d
        ).map(lambda rows: from_matrix(IntMatrix.from_rows(rows))))


def test_from_edges_accumulates_multiplicity():
    g = DiGraph.from_edges(3, [(0, 1), (0, 1), (1, 2)])
    assert g.edges == ((0, 1, 2), (1, 2, 1))
    assert g.out_degree(0) == 2
    assert g.out_degree(2) == 0
    assert g.edge_count == 3
    assert g.successors() == [[(1, 2)], [(2, 1)], []]
    with pytest.raises(ValueError):
        DiGraph.from_edges(2, [(0, 5)])


def test_matrix_round_trip():
    a = IntMatrix.from_rows(((0, 2), (1, 0)))
    assert to_matrix(from_matrix(a)).rows == a.rows


def test_walk_counts_fibonacci_anchor():
    g = from_matrix(IntMatrix.from_rows(((1, 1), (1, 0))))
    assert count_paths(g, 0, 10) == 144
    assert count_paths(g, 1, 10) == 89
    assert max_paths(g, 10) == (0, 144)
    assert path_counts(g, 0) == [1, 1]


def test_walk_counts_match_matrix_power_row_sums():
    a = IntMatrix.from_rows(((1, 2, 0), (0, 0, 1), (1, 0, 1)))
    g = from_matrix(a)
    for length in range(6):
        sums = mat_pow(a, length).row_sums()
        assert path_counts(g, length) == list(sums)


def test_girth_directed_basics():
    assert girth_directed(from_matrix(IntMatrix.from_rows(((1,),)))) == 1
    two_cycle = from_matrix(IntMatrix.from_rows(((0, 1), (1, 0))))
    assert girth_directed(two_cycle) == 2
    three_cycle = DiGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert girth_directed(three_cycle) == 3
    dag = DiGraph.from_edges(3, [(0, 1), (1, 2)])
    assert girth_directed(dag) == math.inf


@given(small_digraphs())
def test_girth_directed_matches_trace_oracle(g):
    # Shortest cycle length is the least L with a nonzero diagonal in A^L.
    a = to_matrix(g)
    expected = math.inf
    power = IntMatrix.identity(a.dim)
    for length in range(1, a.dim + 1):
        power = power * a
        if any(power.rows[i][i] > 0 for i in range(a.dim)):
            expected = length
            break
    assert girth_directed(g) == expected


def test_layered_partition_validation():
    with pytest.raises(ValueError, match="at least 5 layers"):
        LayeredPartition((1, 2, 3, 4), 4, 2)
    with pytest.raises(ValueError, match="degree cap"):
        LayeredPartition((1, 1, 2, 3, 4), 5, 0)
    with pytest.raises(ValueError, match="outside"):
        LayeredPartition((0, 1, 2, 3, 4), 5, 2)
    part = LayeredPartition((1, 2, 3, 4, 5), 5, 2)
    assert part.layer_members(3) == (2,)


def test_random_layered_graphs_satisfy_hypotheses():
    for seed in range(12):
        g, part = random_layered_graph(5 + seed % 4, 1 + seed % 3, seed)
        report = check_layered_partition(g, part)
        assert report.ok, report.violations


def test_check_layered_partition_flags_extra_edge():
    g, part = random_layered_graph(5, 2, seed=3)
    # A second outgoing edge from a vertex past layer 3 breaks the
    # unique-continuation condition.
    tail = part.layer_members(4)[0]
    g2 = DiGraph.from_edges(g.vertex_count,
                            [(s, d) for s, d, m in g.edges for _ in range(m)]
                            + [(tail, tail)])
    report = check_layered_partition(g2, part)
    assert not report.ok
    assert any("instead of exactly one" in v for v in report.violations)


def test_layered_path_bound_anchor():
    g, part = random_layered_graph(6, 2, seed=0)
    rep = layered_path_bound(g, part)
    assert rep.cap == 64
    assert rep.length == 5
    assert rep.bound_holds
    assert rep.spectral_consistent
    assert rep.max_count <= rep.cap
    with pytest.raises(ValueError, match="cover"):
        layered_path_bound(DiGraph.from_edges(2, [(0, 1)]), part)


def test_path_type_and_weighted_caps():
    # Walk shapes through 5 marked vertices: sum over subsets of ordered visits.
    assert path_type_count() == sum(
        math.comb(5, t) * math.factorial(t) for t in range(6)) == 326
    assert weighted_path_cap(1) == 326
    assert weighted_path_cap(2) == 10432
    assert weighted_path_cap(3) == 326 * 243


def test_build_shift_graph_anchor_3_4():
    sg = build_shift_graph(3, 4)
    assert sg.shift == 7
    assert sg.graph.vertex_count == 12
    assert sg.graph.edge_count == 16
    assert sg.exceptional_target == sg.vertex(7, 7) == sg.vertex(1, 3)
    assert validate_shift_graph(sg) == ()
    degrees = sorted(sg.graph.out_degree(v) for v in range(12))
    assert degrees == [1] * 8 + [2] * 4
    assert set(sg.branch_vertices) == {sg.vertex(0, 1), sg.vertex(0, 3),
                                       sg.vertex(1, 0), sg.vertex(2, 0)}


def test_build_shift_graph_rejects_bad_pairs():
    with pytest.raises(ValueError, match="at least 3"):
        build_shift_graph(2, 5)
    with pytest.raises(ValueError, match="coprime"):
        build_shift_graph(4, 6)


def test_shift_graph_girth_anchors():
    assert shift_graph_girth(3, 4) == 3
    assert predicted_girth(3, 4) == 3
    assert shift_graph_girth(5, 7) == 14
    # Implicit BFS agrees with the materialized graph.
    assert girth_directed(build_shift_graph(5, 7).graph) == 14
    assert girth_directed(build_shift_graph(3, 4).graph) == 3


def test_check_girth_threshold_methods_agree():
    for n, k in ((3, 4), (3, 5), (4, 5), (5, 7), (5, 8)):
        bfs = check_girth_threshold(n, k, method="bfs")
        implicit = check_girth_threshold(n, k, method="implicit")
        assert bfs.girth == implicit.girth
        assert bfs.holds and implicit.holds
        assert bfs.girth > n * k / 7
    with pytest.raises(ValueError, match="method"):
        check_girth_threshold(3, 4, method="dfs")


def test_check_path_counts_anchor_3_4():
    rep = check_path_counts(3, 4, 1)
    assert rep.length == 2
    assert rep.unweighted_max == 3
    assert rep.unweighted_cap == 32
    assert rep.weighted_max == 3
    assert rep.weighted_cap == 326
    assert rep.holds
    assert check_path_counts(3, 4, 2).weighted_max == 10
    assert check_path_counts(3, 4, 3).weighted_max == 21


def test_shift_graph_dot_output():
    dot = shift_graph_dot(build_shift_graph(3, 4))
    assert dot.startswith("digraph")
    assert "doublecircle" in dot
    assert dot.count("->") == 16
