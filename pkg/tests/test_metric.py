import math
import random

import pytest
from hypothesis import given, settings

from adimlab.errors import BadParameter, KTooLarge, SamePair, TooSmall
from adimlab.graph import (
    bfs_distances,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    hypercube,
    join,
    path,
    petersen,
)
from adimlab.metric import (
    adjacency_dimensionality,
    build_table,
    cone_dimensionality,
    dimensionality,
    distinguishing_set,
    forced_set,
    join_dimensionality,
    pair_of_rank,
    pair_rank,
    truncated_distance,
)

from conftest import graphs, random_graph


def oracle_pair_set(g, t, x, y):
    """Distinguishing set straight from the definition via BFS distances."""
    dx = bfs_distances(g, x)
    dy = bfs_distances(g, y)
    return {z for z in range(g.n) if min(dx[z], t) != min(dy[z], t)}


def test_truncated_distance_values():
    p5 = path(5)
    assert truncated_distance(p5, 2, 0, 4) == 2
    assert truncated_distance(p5, 4, 0, 4) == 4
    assert truncated_distance(p5, 2, 1, 1) == 0
    g = disjoint_union(complete(1), complete(2))
    assert truncated_distance(g, 2, 0, 1) == 2  # unreachable saturates to t
    with pytest.raises(BadParameter):
        truncated_distance(p5, 0, 0, 1)


def test_distinguishing_set_paper_values():
    assert distinguishing_set(complete(3), 2, 0, 1).to_list() == [0, 1]
    assert distinguishing_set(path(4), 2, 0, 1).to_list() == [0, 1, 2]
    assert distinguishing_set(cycle(7), 2, 3, 4).to_list() == [2, 3, 4, 5]
    with pytest.raises(SamePair):
        distinguishing_set(path(4), 2, 2, 2)


def test_pair_rank_round_trip():
    n = 9
    ranks = [pair_rank(n, x, y) for x in range(n) for y in range(x + 1, n)]
    assert ranks == list(range(n * (n - 1) // 2))
    for r in ranks:
        x, y = pair_of_rank(n, r)
        assert pair_rank(n, x, y) == r


def test_build_table_small():
    t = build_table(complete(2), 2)
    assert t.pair_set(0, 1).to_list() == [0, 1]
    assert t.min_pair_size() == 2


def test_petersen_pair_sizes():
    # brute-force per-pair scan: strongly regular, so every pair set has 6
    t = build_table(petersen(), 2)
    sizes = {len(oracle_pair_set(petersen(), 2, x, y))
             for x in range(10) for y in range(x + 1, 10)}
    assert sizes == {6}
    assert t.min_pair_size() == 6
    assert t.max_pair_size() == 6


def test_path6_end_pairs():
    t = build_table(path(6), 2)
    assert t.pair_set(0, 1).to_list() == [0, 1, 2]
    assert 3 in t.pair_sizes


def test_dimensionality_paper_values():
    assert adjacency_dimensionality(hypercube(3)) == 4
    assert adjacency_dimensionality(cycle(8)) == 4
    assert adjacency_dimensionality(path(7)) == 3
    assert adjacency_dimensionality(complete_bipartite(3, 4)) == 2
    with pytest.raises(TooSmall):
        dimensionality(build_table(complete(1), 2))


def test_forced_set_values():
    c5 = build_table(cycle(5), 2)
    assert forced_set(c5, 4).to_list() == [0, 1, 2, 3, 4]
    p6 = build_table(path(6), 2)
    assert forced_set(p6, 3).to_list() == [0, 1, 2, 3, 4, 5]
    pet = build_table(petersen(), 2)
    assert forced_set(pet, 2).to_list() == []
    with pytest.raises(KTooLarge):
        forced_set(p6, 4)


def test_cone_join_dimensionality_closed_forms():
    assert cone_dimensionality(cycle(7)) == 4
    assert join_dimensionality(complete(3), complete(3)) == 2
    assert cone_dimensionality(path(9)) == 3
    rng = random.Random(17)
    for _ in range(60):
        h = random_graph(rng, rng.randint(2, 7))
        assert cone_dimensionality(h) == adjacency_dimensionality(
            join(complete(1), h)
        )
        g = random_graph(rng, rng.randint(2, 5))
        assert join_dimensionality(g, h) == adjacency_dimensionality(join(g, h))


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=300, deadline=None)
def test_shortcut_matches_bfs_definition(g):
    t = build_table(g, 2)
    for x, y, mask in t.pairs():
        assert set(t.pair_set(x, y)) == oracle_pair_set(g, 2, x, y)
        assert x in t.pair_set(x, y) and y in t.pair_set(x, y)


@given(graphs(min_n=2, max_n=7))
@settings(max_examples=150, deadline=None)
def test_higher_levels_match_definition(g):
    for t in (1, 3, 4):
        table = build_table(g, t)
        for x, y, mask in table.pairs():
            assert set(table.pair_set(x, y)) == oracle_pair_set(g, t, x, y)


def test_generator_survives_level_increase():
    # if S hits every pair set at level t, it still does at level t+1
    rng = random.Random(23)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 7))
        smask = rng.getrandbits(g.n)
        for t in (2, 3):
            lo = build_table(g, t)
            hi = build_table(g, t + 1)
            if all((smask & m).bit_count() >= 1 for m in lo.pair_masks):
                assert all((smask & m).bit_count() >= 1 for m in hi.pair_masks)


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=200, deadline=None)
def test_complement_has_identical_pair_sets(g):
    assert build_table(g, 2).pair_masks == build_table(complement(g), 2).pair_masks


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=200, deadline=None)
def test_degree_bound(g):
    t = build_table(g, 2)
    for x, y, mask in t.pairs():
        assert mask.bit_count() <= g.degree(x) + g.degree(y) + 2


def test_girth_bound_examples():
    # girth >= 5 with min degree >= 2 pushes the bound to 2*delta
    assert adjacency_dimensionality(petersen()) >= 6
    for n in range(5, 12):
        assert adjacency_dimensionality(cycle(n)) >= 4


def test_table_json_shape():
    d = build_table(path(3), 2).to_json_dict()
    assert d["n"] == 3 and d["t"] == 2
    assert d["pairs"][0] == {"x": 0, "y": 1, "set": [0, 1, 2]}
    assert len(d["pairs"]) == 3


def test_infinite_distance_is_sentinel():
    g = disjoint_union(complete(1), complete(1))
    assert bfs_distances(g, 0)[1] is math.inf
    # saturation: the pair is indistinguishable beyond its own members
    t = build_table(g, 5)
    assert t.pair_set(0, 1).to_list() == [0, 1]
