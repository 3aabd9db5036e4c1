"""Transversal e-algorithm: semifinal rows cover HS(H) disjointly."""

from minhit.eengine import enumerate_hs, impose_at_least_one, minimum_rows
from minhit.rows import KIND_E, WildcardRow, row_degree, row_min_members, row_to_tokens

from oracles import brute_hs, brute_mhs, random_full_hypergraph, row_members, union_of_rows


def test_union_is_all_hitting_sets(h2):
    s = enumerate_hs(h2)
    assert union_of_rows(s.rows) == brute_hs(h2)


def test_known_semifinal_rows(h2):
    assert sorted(row_to_tokens(r) for r in enumerate_hs(h2).rows) == sorted([
        "e1 e1 1 0 0 1",
        "0 1 1 1 0 2",
        "1 e1 2 1 0 e1",
        "2 e1 e2 e2 1 e1",
    ])


def test_impose_partitions():
    row = WildcardRow.all_twos(5, KIND_E)
    edge = 0b10110
    pooled = set()
    for son in impose_at_least_one(row, edge):
        members = row_members(son)
        assert not (pooled & members)
        pooled |= members
    assert pooled == {x for x in range(1 << 5) if x & edge}


def test_random_cross_check(rng):
    for _ in range(50):
        h = random_full_hypergraph(rng, rng.randint(3, 9), rng.randint(2, 5))
        s = enumerate_hs(h)
        assert union_of_rows(s.rows) == brute_hs(h)


def test_cutoff_keeps_low_degree_rows(h2):
    s = enumerate_hs(h2, cutoff=3)
    assert all(row_degree(r) <= 3 for r in s.rows)
    # every minimal hitting set of size <= 3 still appears in some promise
    small = {z for z in brute_mhs(h2) if z.bit_count() <= 3}
    pooled = set()
    for r in s.rows:
        pooled |= set(row_min_members(r).members)
    assert small <= pooled


def test_minimum_rows_pool_to_minimum_transversals(h2):
    mu, rows = minimum_rows(enumerate_hs(h2))
    assert mu == 3
    pooled = set()
    for r in rows:
        pooled |= set(row_min_members(r).members)
    assert pooled == {z for z in brute_mhs(h2) if z.bit_count() == mu}


def test_shuffle_changes_order_not_content(h2):
    plain = enumerate_hs(h2)
    shuffled = enumerate_hs(h2, shuffle_seed=5)
    assert set(plain.rows) == set(shuffled.rows)
