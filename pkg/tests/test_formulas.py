import random

import pytest

from adimlab.errors import (
    KExceedsDimensionality,
    NotATree,
    OutOfProvenRange,
    TooSmall,
)
from adimlab.formulas import (
    ConeBound,
    CriterionReport,
    FormulaQuery,
    adim2_upper_cone,
    cone_equality_criterion,
    cone_full_dimension_criterion,
    cone_plus_one_criterion,
    formula_adim,
    full_dimension_criteria,
    full_dimension_twin_criterion,
    join_bounds,
    join_equality_criterion,
    tree_dimensionality,
)
from adimlab.graph import (
    complete,
    complete_bipartite,
    cycle,
    empty_graph,
    fan,
    fig3_graph,
    fig4_graph,
    from_edge_list,
    join,
    path,
    petersen,
    wheel,
)
from adimlab.metric import adjacency_dimensionality, cone_dimensionality
from adimlab.solver import adim_ladder, solve_adim
from adimlab.verify import enumerate_all_graphs, enumerate_trees

from conftest import random_graph


def q(family, params, k):
    return FormulaQuery(family, params if isinstance(params, tuple) else (params,), k)


def test_formula_examples():
    assert formula_adim(q("path", 10, 2)) == 6
    assert formula_adim(q("wheel", 6, 1)) == 3
    assert formula_adim(q("fan", 5, 3)) == 5
    assert formula_adim(q("cycle", 9, 4)) == 9
    assert formula_adim(q("petersen", (), 5)) == 9
    assert formula_adim(q("complete", 6, 1)) == 5
    assert formula_adim(q("empty", 6, 2)) == 6
    assert formula_adim(q("complete_bipartite", (2, 3), 1)) == 3
    assert formula_adim(q("complete_bipartite", (2, 3), 2)) == 5


def test_formula_refusals_carry_range():
    with pytest.raises(OutOfProvenRange, match="n >= 4"):
        formula_adim(q("path", 3, 2))
    with pytest.raises(OutOfProvenRange, match="n >= 5"):
        formula_adim(q("cycle", 4, 2))
    with pytest.raises(OutOfProvenRange, match="k <= 6"):
        formula_adim(q("petersen", (), 7))
    with pytest.raises(OutOfProvenRange):
        formula_adim(q("fan", 3, 3))
    with pytest.raises(OutOfProvenRange):
        formula_adim(q("unknown_family", 3, 1))


def test_formulas_match_solver_everywhere_in_range():
    for n in range(2, 15):
        ladder = adim_ladder(path(n))
        for k in (1, 2, 3):
            try:
                value = formula_adim(q("path", n, k))
            except OutOfProvenRange:
                continue
            assert value == ladder[k - 1], (n, k)
    for n in range(3, 15):
        ladder = adim_ladder(cycle(n))
        for k in (1, 2, 3, 4):
            try:
                value = formula_adim(q("cycle", n, k))
            except OutOfProvenRange:
                continue
            assert value == ladder[k - 1], (n, k)
    for n in range(1, 15):
        ladder = adim_ladder(fan(n)) if n >= 1 else []
        for k in (1, 2, 3):
            try:
                value = formula_adim(q("fan", n, k))
            except OutOfProvenRange:
                continue
            assert value == ladder[k - 1], (n, k)
    for n in range(3, 15):
        ladder = adim_ladder(wheel(n))
        for k in (1, 2, 3, 4):
            try:
                value = formula_adim(q("wheel", n, k))
            except OutOfProvenRange:
                continue
            assert value == ladder[k - 1], (n, k)
    for n in range(2, 15):
        assert formula_adim(q("complete", n, 1)) == adim_ladder(complete(n))[0]
        assert formula_adim(q("complete", n, 2)) == adim_ladder(complete(n))[1]
        assert formula_adim(q("empty", n, 2)) == adim_ladder(empty_graph(n))[1]
    for r in range(1, 7):
        for s in range(r, 15 - r + 1):
            ladder = adim_ladder(complete_bipartite(r, s))
            for k in (1, 2):
                try:
                    value = formula_adim(q("complete_bipartite", (r, s), k))
                except OutOfProvenRange:
                    continue
                assert value == ladder[k - 1], (r, s, k)
    for k in range(1, 7):
        assert formula_adim(q("petersen", (), k)) == adim_ladder(petersen())[k - 1]


def test_cone_equality_fixtures():
    assert cone_equality_criterion(path(9), 2).holds
    rep = cone_equality_criterion(fig3_graph(), 2)
    assert not rep.holds
    assert solve_adim(join(complete(1), fig3_graph()), 2).dimension == 5


def test_cone_equality_biconditional_exhaustive_small():
    for n in range(2, 6):
        for h in enumerate_all_graphs(n):
            top = cone_dimensionality(h)
            lh = adim_ladder(h)
            lc = adim_ladder(join(complete(1), h))
            for k in range(1, top + 1):
                rep = cone_equality_criterion(h, k)
                assert rep.holds == (lc[k - 1] == lh[k - 1]), (h.edges(), k)
                if rep.holds:
                    basis = rep.witness
                    assert all(
                        (basis.mask & ~h.rows[y]).bit_count() >= k
                        for y in range(h.n)
                    )


def test_cone_equality_biconditional_sampled():
    rng = random.Random(2024)
    done = 0
    while done < 150:
        h = random_graph(rng, rng.randint(6, 7))
        top = cone_dimensionality(h)
        k = rng.randint(1, top)
        rep = cone_equality_criterion(h, k)
        equal = (
            solve_adim(join(complete(1), h), k).dimension
            == solve_adim(h, k).dimension
        )
        assert rep.holds == equal
        done += 1


def test_cone_equality_biconditional_exhaustive_n6():
    for h in enumerate_all_graphs(6):
        lh = adim_ladder(h)
        lc = adim_ladder(join(complete(1), h))
        for k in range(1, len(lc) + 1):
            assert cone_equality_criterion(h, k).holds == (lc[k - 1] == lh[k - 1])


def test_diameter_six_forces_equality():
    for n in range(7, 12):
        h = path(n)
        for k in range(1, cone_dimensionality(h) + 1):
            assert cone_equality_criterion(h, k).holds
    for t in enumerate_trees(9, 8):
        ecc = max(
            max(d for d in __import__("adimlab").bfs_distances(t, v))
            for v in range(t.n)
        )
        if ecc >= 6:
            for k in range(1, cone_dimensionality(t) + 1):
                assert cone_equality_criterion(t, k).holds


def test_girth5_mindeg3_forces_equality():
    h = petersen()
    for k in range(1, cone_dimensionality(h) + 1):
        assert cone_equality_criterion(h, k).holds


def test_cone_plus_one_fixtures():
    rep = cone_plus_one_criterion(fig4_graph(), 3)
    assert rep.holds
    assert solve_adim(join(complete(1), fig4_graph()), 3).dimension == 8
    assert not cone_plus_one_criterion(path(9), 2).holds
    # K3's unique 2-basis is V; every vertex leaves exactly one outside,
    # so the premise holds and the cone value is 3 + 1 = 4
    rep = cone_plus_one_criterion(complete(3), 2)
    assert rep.holds
    assert solve_adim(join(complete(1), complete(3)), 2).dimension == 4


def test_cone_plus_one_implies_plus_one():
    rng = random.Random(911)
    done = 0
    while done < 120:
        h = random_graph(rng, rng.randint(2, 7))
        top = cone_dimensionality(h)
        k = rng.randint(1, top)
        if cone_plus_one_criterion(h, k).holds:
            assert (
                solve_adim(join(complete(1), h), k).dimension
                == solve_adim(h, k).dimension + 1
            )
        done += 1


def test_adim2_upper_cone():
    b = adim2_upper_cone(fan(7))
    assert isinstance(b, ConeBound)
    assert b.equality and b.reason == "universal-vertex"
    assert (
        solve_adim(join(complete(1), fan(7)), 2).dimension
        == solve_adim(fan(7), 2).dimension + 2
    )
    assert adim2_upper_cone(wheel(7)).equality
    b5 = adim2_upper_cone(path(5))
    assert b5.bound == 5 and not b5.equality
    assert solve_adim(join(complete(1), path(5)), 2).dimension < b5.bound


def test_adim2_upper_cone_is_always_an_upper_bound():
    rng = random.Random(6)
    for _ in range(80):
        h = random_graph(rng, rng.randint(2, 7))
        bound = adim2_upper_cone(h).bound
        assert solve_adim(join(complete(1), h), 2).dimension <= bound


def test_join_bounds_examples():
    lower, upper = join_bounds(cycle(7), cycle(7), 2)
    assert lower == 8
    exact = solve_adim(join(cycle(7), cycle(7)), 2).dimension
    assert lower <= exact <= upper
    assert solve_adim(join(complete(3), cycle(7)), 2).dimension == 7
    assert solve_adim(join(petersen(), petersen()), 2).dimension == 8


def test_join_bounds_sandwich_random_pairs():
    rng = random.Random(321)
    done = 0
    while done < 60:
        g = random_graph(rng, rng.randint(2, 5))
        h = random_graph(rng, rng.randint(2, 5))
        try:
            lower, upper = join_bounds(g, h, rng.randint(1, 2))
        except KExceedsDimensionality:
            continue
        done += 1
        assert lower <= upper


def test_join_equality_criterion():
    for g in (complete(2), empty_graph(2)):
        rep = join_equality_criterion(g, cycle(6), 2)
        assert rep.holds
        assert (
            solve_adim(join(g, cycle(6)), 2).dimension
            == solve_adim(g, 2).dimension + solve_adim(cycle(6), 2).dimension
        )
    rep = join_equality_criterion(complete(2), complete(2), 1)
    assert not rep.holds
    assert solve_adim(join(complete(2), complete(2)), 1).dimension == 3


def test_join_equality_biconditional_random():
    rng = random.Random(777)
    done = 0
    while done < 80:
        g = random_graph(rng, rng.randint(2, 5))
        h = random_graph(rng, rng.randint(2, 5))
        from adimlab.metric import join_dimensionality

        top = join_dimensionality(g, h)
        k = rng.randint(1, top)
        rep = join_equality_criterion(g, h, k)
        additive = (
            solve_adim(join(g, h), k).dimension
            == solve_adim(g, k).dimension + solve_adim(h, k).dimension
        )
        assert rep.holds == additive
        done += 1


def test_full_dimension_criteria():
    assert full_dimension_criteria(complete_bipartite(2, 3), 2).holds
    rep = full_dimension_criteria(path(5), 2)
    assert not rep.holds and isinstance(rep.witness, int)
    assert full_dimension_criteria(cycle(5), 4).holds
    assert full_dimension_twin_criterion(complete_bipartite(2, 3)).holds
    assert not full_dimension_twin_criterion(path(5)).holds


def test_full_dimension_cone_variant():
    # a star has a universal center and twinned leaves, so its cone is full
    star = complete_bipartite(1, 4)
    assert cone_full_dimension_criterion(star).holds
    assert (
        solve_adim(join(complete(1), star), 2).dimension == star.n + 1
    )
    assert not cone_full_dimension_criterion(path(4)).holds
    rng = random.Random(15)
    for _ in range(60):
        h = random_graph(rng, rng.randint(2, 6))
        holds = cone_full_dimension_criterion(h).holds
        full = solve_adim(join(complete(1), h), 2).dimension == h.n + 1
        assert holds == full


def test_criterion_report_json():
    rep = CriterionReport("cone-equality", True, None)
    assert rep.to_json_dict() == {
        "criterion": "cone-equality",
        "holds": True,
        "witness": None,
    }


def test_tree_dimensionality():
    assert tree_dimensionality(complete_bipartite(1, 3)) == 2
    assert tree_dimensionality(path(6)) == 3
    spider = from_edge_list(
        7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
    )
    assert tree_dimensionality(spider) == 3
    with pytest.raises(NotATree):
        tree_dimensionality(cycle(4))
    with pytest.raises(TooSmall):
        tree_dimensionality(path(2))


def test_tree_dimensionality_matches_table():
    for t in enumerate_trees(9, 3):
        assert tree_dimensionality(t) == adjacency_dimensionality(t)
