"""Bitmask helpers.

Vertices are 1-based everywhere in the public API; internally a subset of
[w] is an int whose bit (v-1) is set iff v is a member.  Python ints give
word-parallel bitwise ops at arbitrary width, which is all the "long
bitstring" machinery we need.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    """Yield 1-based positions of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def full_mask(width: int) -> int:
    return (1 << width) - 1


def lowest_bit(mask: int) -> int:
    """1-based position of the lowest set bit (0 for the empty mask)."""
    return (mask & -mask).bit_length()
