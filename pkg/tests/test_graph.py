import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adimlab.bitset import VertexSet
from adimlab.errors import BadParameter, OutOfRange, SelfLoop
from adimlab.graph import (
    FALSE_TWIN,
    SINGLETON,
    TRUE_TWIN,
    are_twins,
    bfs_distances,
    complement,
    complete,
    complete_bipartite,
    cycle,
    diameter,
    disjoint_union,
    empty_graph,
    fan,
    fig1_graph,
    fig2_graph,
    fig5_graph,
    format_edge_list,
    from_edge_list,
    hypercube,
    is_connected,
    is_tree,
    join,
    path,
    petersen,
    read_edge_list,
    twin_partition,
    wheel,
)

from conftest import graphs, random_graph


def test_from_edge_list_basic():
    g = from_edge_list(2, [(0, 1)])
    assert g.neighbors(0).to_list() == [1]
    assert empty_graph(3).edge_count() == 0


def test_from_edge_list_dedup_and_errors():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count() == 1
    with pytest.raises(OutOfRange):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(SelfLoop):
        from_edge_list(3, [(1, 1)])


def test_fig5_degree_profile():
    # hub vertex 0 is adjacent to everything except vertex 3
    g = fig5_graph()
    assert g.n == 9
    assert g.degree(0) == 7
    assert not g.has_edge(0, 3)


def test_generator_shapes():
    assert path(4).degrees() == [1, 2, 2, 1]
    q3 = hypercube(3)
    assert (q3.n, q3.edge_count()) == (8, 12)
    assert all(d == 3 for d in q3.degrees())
    assert complete(5).degrees() == [4] * 5
    assert complete_bipartite(2, 3).degrees() == [3, 3, 2, 2, 2]
    assert petersen().degrees() == [3] * 10
    assert cycle(6).degrees() == [2] * 6


def test_generator_parameter_errors():
    with pytest.raises(BadParameter):
        cycle(2)
    with pytest.raises(BadParameter):
        wheel(2)
    with pytest.raises(BadParameter):
        path(0)


def test_join_is_fan_and_wheel():
    assert join(complete(1), path(3)) == fan(3)
    assert fan(3).max_degree() == 3
    w5 = join(empty_graph(1), cycle(5))
    assert w5 == wheel(5)
    assert w5.degrees()[0] == 5 and all(d == 3 for d in w5.degrees()[1:])


def test_join_degrees_and_diameter():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 6))
        h = random_graph(rng, rng.randint(2, 6))
        gh = join(g, h)
        for v in range(g.n):
            assert gh.degree(v) == g.degree(v) + h.n
        assert diameter(gh) <= 2


def test_complement_involution_and_fixeds():
    assert complement(complete(3)) == empty_graph(3).relabel(None)
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 9))
        assert complement(complement(g)) == g


def test_disjoint_union_keeps_components():
    g = disjoint_union(complete(1), complete(1))
    assert bfs_distances(g, 0)[1] == math.inf
    assert diameter(g) == math.inf
    assert not is_connected(g)


def test_bfs_distances_path_and_errors():
    assert bfs_distances(path(5), 0) == [0, 1, 2, 3, 4]
    with pytest.raises(OutOfRange):
        bfs_distances(path(5), 5)


def test_diameter_fixeds():
    assert diameter(petersen()) == 2
    assert diameter(path(6)) == 5
    assert diameter(fig2_graph()) == 5
    assert diameter(complete(1)) == 0


def test_twin_partition_complete():
    part = twin_partition(complete(4))
    assert len(part.classes) == 1
    assert part.kinds == (TRUE_TWIN,)
    assert len(part.classes[0]) == 4


def test_twin_partition_path_singletons():
    part = twin_partition(path(4))
    assert all(kind == SINGLETON for kind in part.kinds)
    assert len(part.classes) == 4


def test_twin_partition_bipartite():
    # brute-force neighborhood comparison fixes the expected classes
    g = complete_bipartite(2, 3)
    expected_pairs = {
        (u, v)
        for u in range(5)
        for v in range(u + 1, 5)
        if g.rows[u] & ~(1 << v) == g.rows[v] & ~(1 << u)
    }
    assert expected_pairs == {(0, 1), (2, 3), (2, 4), (3, 4)}
    part = twin_partition(g)
    sizes = sorted(len(c) for c in part.classes)
    assert sizes == [2, 3]
    assert set(part.kinds) == {FALSE_TWIN}


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_adjacency_symmetric_irreflexive(g):
    for i in range(g.n):
        assert not (g.rows[i] >> i) & 1
        for j in g.neighbors(i):
            assert g.has_edge(j, i)


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=120, deadline=None)
def test_twin_classes_are_neighborhood_equalities(g):
    part = twin_partition(g)
    covered = 0
    for cls, kind in zip(part.classes, part.kinds):
        members = cls.members()
        covered += len(members)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                assert are_twins(g, u, v)
                if kind == TRUE_TWIN:
                    assert g.closed_row(u) == g.closed_row(v)
                elif kind == FALSE_TWIN:
                    assert g.rows[u] == g.rows[v]
    assert covered == g.n


def test_vertexset_operations():
    a = VertexSet.from_iterable(6, [0, 2, 4])
    b = VertexSet.from_iterable(6, [2, 3])
    assert (a & b).to_list() == [2]
    assert (a | b).to_list() == [0, 2, 3, 4]
    assert (a - b).to_list() == [0, 4]
    assert a.complement().to_list() == [1, 3, 5]
    assert len(a) == 3 and 4 in a and 5 not in a
    with pytest.raises(OutOfRange):
        VertexSet(3, 0b1000)


def test_edge_list_text_round_trip():
    g = fig1_graph(3)
    text = format_edge_list(g)
    assert text.splitlines()[0] == "7 7"
    assert read_edge_list(text) == g


def test_tree_recognition():
    assert is_tree(path(7))
    assert not is_tree(cycle(5))
    assert not is_tree(disjoint_union(path(2), path(2)))


def test_graph_equality_hash():
    assert path(3) == from_edge_list(3, [(1, 2), (0, 1)])
    assert hash(path(3)) == hash(from_edge_list(3, [(0, 1), (1, 2)]))
    assert path(3) != cycle(3)
