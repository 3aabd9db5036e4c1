"""g-algorithm: exact hitting sets, feasibility pruning, perfect matchings."""

import itertools

import pytest

from minhit.errors import MinhitError
from minhit.exact import ehs_feasible, enumerate_ehs, impose_exact, stars_hypergraph
from minhit.rows import KIND_G, Hypergraph, WildcardRow

from oracles import brute_ehs, random_full_hypergraph, row_members, union_of_rows


def test_three_edge_instance():
    h = Hypergraph.from_sets(9, [{2, 3, 4, 6}, {1, 2, 3, 4, 5, 7}, {2, 8, 9}])
    run = enumerate_ehs(h)
    assert len(run.final_rows) == 3
    assert run.total_count == 11
    assert union_of_rows(run.final_rows) == brute_ehs(h)


def test_impose_partitions_the_row():
    row = WildcardRow.all_twos(5, KIND_G)
    edge = 0b01011
    sons = impose_exact(row, edge)
    pooled = set()
    for son in sons:
        members = row_members(son)
        assert not (pooled & members)
        pooled |= members
    assert pooled == {x for x in row_members(row) if (x & edge).bit_count() == 1}


def test_impose_dead_when_two_fixed_ones():
    row = WildcardRow.make(4, KIND_G, ones=0b0011, zeros=0b1100)
    assert impose_exact(row, 0b0011) == []


def test_random_cross_check(rng):
    for _ in range(60):
        h = random_full_hypergraph(rng, rng.randint(3, 9), rng.randint(2, 5))
        run = enumerate_ehs(h)
        assert union_of_rows(run.final_rows) == brute_ehs(h)
        # feasibility pruning must not change the answer
        plain = enumerate_ehs(h, use_feasibility=False)
        assert union_of_rows(plain.final_rows) == brute_ehs(h)


def test_feasibility_is_sound(rng):
    for _ in range(40):
        h = random_full_hypergraph(rng, rng.randint(3, 8), rng.randint(2, 4))
        row = WildcardRow.all_twos(h.width, KIND_G)
        assert ehs_feasible(row, h) == bool(brute_ehs(h))


def test_matchings_of_cycle():
    # C6 has exactly two perfect matchings
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]
    h = stars_hypergraph(edges)
    run = enumerate_ehs(h)
    assert run.total_count == 2


def test_matchings_cross_check():
    edges = list(itertools.combinations(range(1, 7), 2))  # K6
    h = stars_hypergraph(edges)
    run = enumerate_ehs(h)
    assert run.total_count == 15  # (6-1)!! perfect matchings of K6


def test_stars_rejects_isolated_vertex():
    with pytest.raises(MinhitError):
        stars_hypergraph([(1, 2)], vertices=[1, 2, 3])


def test_rows_are_g_kind(rng):
    h = random_full_hypergraph(rng, 7, 4)
    for r in enumerate_ehs(h).final_rows:
        assert r.kind == KIND_G
