"""Inclusion-exclusion spoiler counting."""

from minhit.eengine import enumerate_hs
from minhit.mc import mc_dud_test
from minhit.rows import row_min_members
from minhit.spoiler import (
    NOT_VERY_GOOD,
    VERY_GOOD,
    n_term,
    potential_spoiler_rows,
    spoiler_count,
)

from oracles import is_hitting, random_full_hypergraph, row_members


def _brute_spoilers(row, h):
    """Potential spoilers that are transversals, counted row by row."""
    rows, _ = potential_spoiler_rows(row)
    return sum(1 for d in rows for x in row_members(d) if is_hitting(x, h))


def test_pot_counts_the_rows(rng):
    for _ in range(40):
        h = random_full_hypergraph(rng, rng.randint(3, 9), rng.randint(2, 5))
        for row in enumerate_hs(h).rows:
            rows, pot = potential_spoiler_rows(row)
            assert pot == sum(len(row_members(d)) for d in rows)


def test_spoilers_are_dropped_minimal_members(h2):
    # X is a potential spoiler of r iff X = Y \ {a} for some Y in min(r)
    for row in enumerate_hs(h2).rows:
        rows, _ = potential_spoiler_rows(row)
        pooled = set()
        for d in rows:
            pooled |= row_members(d)
        expect = set()
        for y in row_min_members(row).members:
            m = y
            while m:
                low = m & -m
                expect.add(y & ~low)
                m ^= low
        assert pooled == expect


def test_n_term_counts_avoiders(rng):
    for _ in range(30):
        h = random_full_hypergraph(rng, rng.randint(3, 8), rng.randint(2, 4))
        for row in enumerate_hs(h).rows:
            rows, _ = potential_spoiler_rows(row)
            u = h.edges[0] | h.edges[-1]
            expect = sum(1 for d in rows for x in row_members(d) if not x & u)
            assert n_term(rows, u) == expect


def test_exact_count_matches_brute(rng):
    for _ in range(25):
        h = random_full_hypergraph(rng, rng.randint(3, 8), rng.randint(2, 5))
        for row in enumerate_hs(h).rows:
            verdict = spoiler_count(row, h)
            brute = _brute_spoilers(row, h)
            if isinstance(verdict.sp, int):
                assert verdict.sp == brute
            else:
                lo, hi = verdict.sp
                assert lo <= brute <= hi
            if verdict.decision == VERY_GOOD:
                assert brute == 0
            elif verdict.decision == NOT_VERY_GOOD:
                assert brute > 0


def test_decision_matches_promise_scan(rng):
    for _ in range(25):
        h = random_full_hypergraph(rng, rng.randint(3, 8), rng.randint(2, 5))
        for row in enumerate_hs(h).rows:
            verdict = spoiler_count(row, h)
            all_minimal = all(
                mc_dud_test(z, h) for z in row_min_members(row).members)
            if verdict.decision == VERY_GOOD:
                assert all_minimal
            elif verdict.decision == NOT_VERY_GOOD:
                assert not all_minimal


def test_tiny_budget_goes_undecided(h2):
    rows = enumerate_hs(h2).rows
    verdicts = [spoiler_count(r, h2, budget=1) for r in rows]
    assert all(v.decision in ("undecided", VERY_GOOD) for v in verdicts)
