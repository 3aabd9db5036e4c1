"""Vertical Layout: column-wise bit machinery over a set family.

A family of m subsets of [w] becomes an m x w 0,1-matrix; a whole column is
one m-bit integer.  Transversality checks, family minimization, vertex
equivalence and feasibility all reduce to a few ORs/ANDs of such columns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import full_mask, iter_bits, lowest_bit
from .rows import Hypergraph, SetFamily


@dataclass(frozen=True)
class BitMatrix:
    width: int
    height: int
    cols: tuple[int, ...]      # cols[j]: bit i set iff member i contains vertex j+1
    rows: tuple[int, ...]      # the member masks themselves

    @property
    def all_rows(self) -> int:
        return (1 << self.height) - 1

    def or_columns(self, positions: int) -> int:
        """BitOr of the columns selected by the position mask."""
        acc = 0
        for v in iter_bits(positions):
            acc |= self.cols[v - 1]
        return acc

    def ge2_columns(self, positions: int) -> int:
        """Rows hit at least twice by the selected columns (saturating add)."""
        once = 0
        twice = 0
        for v in iter_bits(positions):
            c = self.cols[v - 1]
            twice |= once & c
            once |= c
        return twice


def build_matrix(family: SetFamily) -> BitMatrix:
    cols = [0] * family.width
    for i, member in enumerate(family.members):
        bit = 1 << i
        for v in iter_bits(member):
            cols[v - 1] |= bit
    return BitMatrix(family.width, len(family.members), tuple(cols), family.members)


def covers_all(matrix: BitMatrix, positions: int) -> bool:
    """True iff every family member meets the position set (transversal test)."""
    return matrix.or_columns(positions) == matrix.all_rows


def minimize_family(family: SetFamily) -> SetFamily:
    """The inclusion-minimal members, deduplicated, by cardinality sweep.

    Candidates are processed in ascending cardinality; Y is kept iff the
    complement-column BitOr over the current Min matrix is all-ones, i.e.
    no already-kept member fits inside Y.
    """
    buckets: dict[int, list[int]] = {}
    for m in family.members:
        buckets.setdefault(m.bit_count(), []).append(m)
    kept: list[int] = []
    cols = [0] * family.width
    fm = full_mask(family.width)
    for size in sorted(buckets):
        for y in dict.fromkeys(buckets[size]):  # dedupe, keep first occurrence
            all_rows = (1 << len(kept)) - 1
            acc = 0
            outside = fm & ~y
            for v in iter_bits(outside):
                acc |= cols[v - 1]
                if acc == all_rows:
                    break
            if acc == all_rows:
                bit = 1 << len(kept)
                kept.append(y)
                for v in iter_bits(y):
                    cols[v - 1] |= bit
    return SetFamily(family.width, tuple(kept))


def maximize_family(family: SetFamily) -> SetFamily:
    """Inclusion-maximal members: minimal complements, complemented back."""
    fm = full_mask(family.width)
    comp = SetFamily(family.width, tuple(fm & ~m for m in family.members))
    mins = minimize_family(comp)
    return SetFamily(family.width, tuple(fm & ~m for m in mins.members))


def equivalence_classes(h: Hypergraph) -> tuple[int, ...]:
    """Partition of [w] into same-edge-membership classes.

    Two vertices are equivalent iff their edge-membership columns coincide
    (equivalently: the BitOr and BitAnd of the columns both reproduce either
    column).  Classes are returned as masks, ordered by minimum element.
    """
    col: dict[int, int] = {v: 0 for v in range(1, h.width + 1)}
    for i, edge in enumerate(h.edges):
        bit = 1 << i
        for v in iter_bits(edge):
            col[v] |= bit
    groups: dict[int, int] = {}
    for v in range(1, h.width + 1):
        groups[col[v]] = groups.get(col[v], 0) | (1 << (v - 1))
    return tuple(sorted(groups.values(), key=lowest_bit))


def hs_feasible(h: Hypergraph, zero_set: int) -> bool:
    """True iff some hitting set avoids zero_set: no hyperedge is buried in it."""
    for edge in h.edges:
        if edge & ~zero_set == 0:
            return False
    return True
