"""MC-condition machinery: dud test, MinNotMC, killers."""

from minhit.eengine import enumerate_hs
from minhit.mc import crit, is_very_good, killers, mc_dud_test, min_not_mc
from minhit.rows import Hypergraph, SetFamily, row_min_members

from oracles import all_subsets, brute_mc, brute_mhs, is_hitting, random_full_hypergraph


def test_crit(h2):
    s = 0b000110  # {2,3}
    assert crit(3, s, h2) == (2, 4)
    assert crit(2, s, h2) == (1, 5)


def test_dud_test_matches_brute(rng):
    for _ in range(30):
        h = random_full_hypergraph(rng, rng.randint(3, 10), rng.randint(2, 6))
        for z in all_subsets(h.width):
            assert mc_dud_test(z, h) == brute_mc(z, h)


def test_dud_test_decides_minimality_for_hitting_sets(rng):
    for _ in range(20):
        h = random_full_hypergraph(rng, rng.randint(3, 9), rng.randint(2, 5))
        mhs = brute_mhs(h)
        for z in all_subsets(h.width):
            if is_hitting(z, h):
                assert mc_dud_test(z, h) == (z in mhs)


def test_min_not_mc_properties(rng):
    for _ in range(15):
        h = random_full_hypergraph(rng, rng.randint(3, 8), rng.randint(2, 5))
        fam = min_not_mc(h).family
        members = set(fam.members)
        # exactly the minimal non-MC sets, straight from the definition
        expect = set()
        for z in all_subsets(h.width):
            if brute_mc(z, h):
                continue
            m, minimal = z, True
            while m:
                low = m & -m
                if not brute_mc(z & ~low, h):
                    minimal = False
                    break
                m ^= low
            if minimal:
                expect.add(z)
        assert members == expect


def test_killers_match_definition(h2):
    mnmc = min_not_mc(h2)
    for row in enumerate_hs(h2).rows:
        got = set(killers(row, mnmc).members)
        expect = set()
        for y in mnmc.family.members:
            if any(y & ~z == 0 for z in row_min_members(row).members):
                expect.add(y)
        assert got == expect


def test_is_very_good_matches_promise_scan(rng):
    for _ in range(25):
        h = random_full_hypergraph(rng, rng.randint(3, 9), rng.randint(2, 5))
        mnmc = min_not_mc(h)
        for row in enumerate_hs(h).rows:
            all_minimal = all(
                mc_dud_test(z, h) for z in row_min_members(row).members)
            assert is_very_good(row, mnmc) == all_minimal
