from hypothesis import given
from hypothesis import strategies as st

from minhit.bitsets import full_mask, iter_bits, lowest_bit, mask_of, vertices_of

vertex_sets = st.sets(st.integers(min_value=1, max_value=60))


@given(vertex_sets)
def test_mask_roundtrip(vs):
    assert set(vertices_of(mask_of(vs))) == vs


@given(vertex_sets)
def test_iter_bits_ascending(vs):
    got = list(iter_bits(mask_of(vs)))
    assert got == sorted(vs)


def test_full_mask():
    assert full_mask(1) == 1
    assert full_mask(6) == 0b111111
    assert vertices_of(full_mask(9)) == tuple(range(1, 10))


@given(vertex_sets)
def test_lowest_bit(vs):
    m = mask_of(vs)
    assert lowest_bit(m) == (min(vs) if vs else 0)
