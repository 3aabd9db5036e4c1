"""The three badness tests must always agree, and agree with brute force."""

from minhit.badness import (
    badness_auto,
    badness_first,
    badness_second,
    badness_third,
    superkilled,
)
from minhit.eengine import enumerate_hs
from minhit.mc import killers, mc_dud_test, min_not_mc
from minhit.rows import row_min_members

from oracles import random_full_hypergraph


def _brute_survivors(row, h):
    return {z for z in row_min_members(row).members if mc_dud_test(z, h)}


def test_all_tests_agree_with_brute(rng):
    for _ in range(40):
        h = random_full_hypergraph(rng, rng.randint(3, 9), rng.randint(2, 5))
        mnmc = min_not_mc(h)
        for row in enumerate_hs(h).rows:
            survivors = _brute_survivors(row, h)
            ki = killers(row, mnmc)
            v1 = badness_first(row, h)
            v2 = badness_second(row, ki)
            v3 = badness_third(row, ki)
            assert v1.is_bad == v2.is_bad == v3.is_bad == (not survivors)
            assert set(v1.survivors.members) == survivors
            if v2.survivors is not None:
                assert set(v2.survivors.members) == survivors


def test_vertical_first_test_matches_scalar(rng):
    for _ in range(25):
        h = random_full_hypergraph(rng, rng.randint(3, 9), rng.randint(2, 5))
        for row in enumerate_hs(h).rows:
            scalar = badness_first(row, h, vertical=False)
            vertical = badness_first(row, h, vertical=True)
            assert scalar.is_bad == vertical.is_bad
            assert set(scalar.survivors.members) == set(vertical.survivors.members)


def test_superkilled_is_sufficient_for_bad(rng):
    hits = 0
    for _ in range(60):
        h = random_full_hypergraph(rng, rng.randint(3, 9), rng.randint(2, 5))
        for row in enumerate_hs(h).rows:
            if superkilled(row, h):
                hits += 1
                assert not _brute_survivors(row, h)
    # the generator must actually produce some superkilled rows
    assert hits > 0


def test_auto_dispatch_consistent(rng):
    for _ in range(25):
        h = random_full_hypergraph(rng, rng.randint(3, 9), rng.randint(2, 5))
        mnmc = min_not_mc(h)
        for row in enumerate_hs(h).rows:
            verdict = badness_auto(row, h, mnmc)
            assert verdict.is_bad == (not _brute_survivors(row, h))
            assert verdict.method in ("superkiller", "first", "second", "third")
