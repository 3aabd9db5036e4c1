"""Row semantics: cardinality, membership, expansion, serialization."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minhit.errors import ExpansionLimitError, MinhitError
from minhit.rows import (
    KIND_E,
    KIND_G,
    KIND_N,
    WildcardRow,
    expand_row,
    finalize_e_to_g,
    row_cardinality,
    row_contains,
    row_degree,
    row_from_json,
    row_from_tokens,
    row_max_members,
    row_min_members,
    row_to_json,
    row_to_tokens,
)

from oracles import row_members


@st.composite
def rows(draw, kinds=(KIND_G, KIND_E, KIND_N), max_width=10):
    width = draw(st.integers(2, max_width))
    kind = draw(st.sampled_from(kinds))
    labels = draw(st.lists(st.integers(0, 5), min_size=width, max_size=width))
    zeros = ones = twos = 0
    bubbles = {}
    for pos, lab in enumerate(labels):
        bit = 1 << pos
        if lab == 0:
            zeros |= bit
        elif lab == 1:
            ones |= bit
        elif lab == 2:
            twos |= bit
        else:
            bubbles[lab] = bubbles.get(lab, 0) | bit
    return WildcardRow.make(width, kind, zeros, ones, twos, tuple(bubbles.values()))


@given(rows())
def test_cardinality_matches_expansion(row):
    members = row_members(row)
    assert len(members) == row_cardinality(row)


@given(rows(max_width=8))
def test_contains_matches_expansion(row):
    members = row_members(row)
    for x in range(1 << row.width):
        assert row_contains(row, x) == (x in members)


@given(rows())
def test_token_roundtrip(row):
    assert row_from_tokens(row_to_tokens(row)) == row


@given(rows())
def test_json_roundtrip(row):
    assert row_from_json(row_to_json(row)) == row


def test_token_form_example():
    r = row_from_tokens("2 e1 e2 0 1 e2 0 e1 2 e2 1")
    assert r.width == 11
    assert r.kind == KIND_E
    assert row_to_tokens(r) == "2 e1 e2 0 1 e2 0 e1 2 e2 1"


def test_singleton_bubbles_normalize():
    r = WildcardRow.make(4, KIND_E, bubbles=(0b0001, 0b0110))
    assert r.ones == 0b0001 and r.bubbles == (0b0110,)
    r = WildcardRow.make(4, KIND_N, bubbles=(0b1000,))
    assert r.zeros == 0b1000 and not r.bubbles
    # a bubble-less row is canonically g-kind
    assert r.kind == KIND_G


def test_overlapping_bubbles_rejected():
    with pytest.raises(MinhitError):
        WildcardRow.make(4, KIND_E, bubbles=(0b0011, 0b0110))


def test_equality_ignores_bubble_order():
    a = WildcardRow.make(6, KIND_E, bubbles=(0b000011, 0b110000))
    b = WildcardRow.make(6, KIND_E, bubbles=(0b110000, 0b000011))
    assert a == b and hash(a) == hash(b)


@given(rows(kinds=(KIND_G, KIND_E)))
def test_min_members_are_members_of_minimum_size(row):
    mins = row_min_members(row)
    members = row_members(row)
    d = row_degree(row)
    assert len(set(mins.members)) == len(mins.members)
    for z in mins.members:
        assert z.bit_count() == d
        if row.kind == KIND_E:
            assert z in members
    if row.kind == KIND_E:
        assert min(x.bit_count() for x in members) == d


@given(rows(kinds=(KIND_N,)))
def test_max_members(row):
    maxs = set(row_max_members(row).members)
    members = row_members(row)
    biggest = max(x.bit_count() for x in members)
    assert maxs <= members
    assert any(x.bit_count() == biggest for x in maxs)
    # every member sits under some maximal one
    for x in members:
        assert any(x & ~m == 0 for m in maxs)


@given(rows(kinds=(KIND_E,)))
def test_finalize_holds_exactly_the_min_members(row):
    g = finalize_e_to_g(row)
    assert g.kind == KIND_G
    assert row_members(g) == set(row_min_members(row).members)


def test_expand_limit():
    r = WildcardRow.make(8, KIND_E, twos=0xFF)
    with pytest.raises(ExpansionLimitError):
        list(expand_row(r, limit=10))
