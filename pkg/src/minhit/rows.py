"""Hypergraphs and wildcard rows.

A wildcard row is a compressed set system over [w]: fixed 0s and 1s, free
positions (printed as 2), and pairwise disjoint "bubbles".  All bubbles of
one row share a kind:

    g : exactly one 1 inside the bubble
    e : at least one 1 inside the bubble
    n : at least one 0 inside the bubble

Size-1 g/e-bubbles degenerate to a fixed 1 and size-1 n-bubbles to a fixed
0; normalization happens at construction, so a well-formed row never
carries a singleton bubble.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator, Sequence

from .bitsets import full_mask, iter_bits, lowest_bit, mask_of, vertices_of
from .errors import ExpansionLimitError, MinhitError

KIND_G = "g"
KIND_E = "e"
KIND_N = "n"
_KINDS = (KIND_G, KIND_E, KIND_N)


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph: ground set [w] plus an ordered edge sequence."""

    width: int
    edges: tuple[int, ...]  # bitmasks over [width]

    def __post_init__(self):
        if self.width <= 0:
            raise MinhitError("hypergraph width must be positive")
        fm = full_mask(self.width)
        for i, edge in enumerate(self.edges):
            if edge == 0:
                raise MinhitError(f"edge {i + 1} is empty")
            if edge & ~fm:
                raise MinhitError(f"edge {i + 1} exceeds width {self.width}")

    @classmethod
    def from_sets(cls, width: int, edge_sets: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(width, tuple(mask_of(e) for e in edge_sets))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def edge_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vertices_of(e) for e in self.edges)

    def is_full(self) -> bool:
        """True iff the edges jointly cover [w]."""
        union = 0
        for e in self.edges:
            union |= e
        return union == full_mask(self.width)

    def require_full(self):
        if not self.is_full():
            raise MinhitError("hypergraph is not full (edges do not cover the ground set)")


@dataclass(frozen=True)
class SetFamily:
    """An explicit finite collection of subsets of [w] (duplicates allowed)."""

    width: int
    members: tuple[int, ...]  # bitmasks

    @classmethod
    def from_sets(cls, width: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(width, tuple(mask_of(s) for s in sets))

    def to_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vertices_of(m) for m in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


@dataclass(frozen=True, eq=False)
class WildcardRow:
    width: int
    kind: str
    zeros: int
    ones: int
    twos: int
    bubbles: tuple[int, ...]

    # bubble order records creation history (it steers later flag splits)
    # but two rows with the same bubbles in different order denote the
    # same set system, so equality ignores it
    def __eq__(self, other) -> bool:
        if not isinstance(other, WildcardRow):
            return NotImplemented
        return (
            self.width == other.width
            and self.kind == other.kind
            and self.zeros == other.zeros
            and self.ones == other.ones
            and self.twos == other.twos
            and frozenset(self.bubbles) == frozenset(other.bubbles)
        )

    def __hash__(self) -> int:
        return hash((self.width, self.kind, self.zeros, self.ones,
                     self.twos, frozenset(self.bubbles)))

    @classmethod
    def make(
        cls,
        width: int,
        kind: str,
        zeros: int = 0,
        ones: int = 0,
        twos: int | None = None,
        bubbles: Sequence[int] = (),
    ) -> "WildcardRow":
        """Build a row from masks, normalizing singleton bubbles.

        If ``twos`` is None, the free positions are whatever is left over.
        """
        if kind not in _KINDS:
            raise MinhitError(f"unknown row kind {kind!r}")
        norm_bubbles = []
        for b in bubbles:
            if b == 0:
                raise MinhitError("empty bubble")
            if b & (b - 1) == 0:  # singleton
                if kind == KIND_N:
                    zeros |= b
                else:
                    ones |= b
            else:
                norm_bubbles.append(b)
        # bubble order is preserved: the flag decompositions depend on the
        # order in which bubbles were created
        bubble_union = 0
        for b in norm_bubbles:
            if b & bubble_union:
                raise MinhitError("bubbles overlap")
            bubble_union |= b
        fm = full_mask(width)
        if twos is None:
            twos = fm & ~(zeros | ones | bubble_union)
        parts = (zeros, ones, twos, bubble_union)
        total = 0
        for p in parts:
            if p & total:
                raise MinhitError("zeros/ones/twos/bubbles are not disjoint")
            total |= p
        if total != fm:
            raise MinhitError("row positions do not cover [w]")
        if not norm_bubbles:
            kind = KIND_G  # 012-rows are canonically g-kind
        return cls(width, kind, zeros, ones, twos, tuple(norm_bubbles))

    @classmethod
    def all_twos(cls, width: int, kind: str) -> "WildcardRow":
        return cls.make(width, kind, twos=full_mask(width))

    @property
    def bubble_union(self) -> int:
        u = 0
        for b in self.bubbles:
            u |= b
        return u


def row_cardinality(row: WildcardRow) -> int:
    """Number of member sets: 2^|twos| times the per-bubble factors."""
    if row.kind == KIND_G:
        factor = prod(b.bit_count() for b in row.bubbles)
    else:
        factor = prod(2 ** b.bit_count() - 1 for b in row.bubbles)
    return (1 << row.twos.bit_count()) * factor


def row_contains(row: WildcardRow, x: int) -> bool:
    if x & row.zeros:
        return False
    if row.ones & ~x:
        return False
    for b in row.bubbles:
        hits = (x & b).bit_count()
        if row.kind == KIND_G:
            if hits != 1:
                return False
        elif row.kind == KIND_E:
            if hits == 0:
                return False
        else:  # at least one 0
            if hits == b.bit_count():
                return False
    return True


def row_min_members(row: WildcardRow) -> SetFamily:
    """min(row) of an e-row: the 2s set to 0, one pick per e-bubble.

    Also accepts g-rows (same formula); for a bubble-less 012-row the single
    minimal member is ones(row).
    """
    if row.kind == KIND_N:
        raise MinhitError("row_min_members is undefined for n-rows")
    choices = [[1 << (v - 1) for v in iter_bits(b)] for b in row.bubbles]
    members = tuple(
        row.ones | _union(picks) for picks in itertools.product(*choices)
    )
    return SetFamily(row.width, members)


def row_max_members(row: WildcardRow) -> SetFamily:
    """max(row) of an n-row: 2s set to 1, each n-bubble filled up to one hole."""
    if row.kind != KIND_N and row.bubbles:
        raise MinhitError("row_max_members requires an n-row")
    base = row.ones | row.twos
    holes = [[1 << (v - 1) for v in iter_bits(b)] for b in row.bubbles]
    bub_union = row.bubble_union
    members = tuple(
        base | (bub_union & ~_union(picks)) for picks in itertools.product(*holes)
    )
    return SetFamily(row.width, members)


def row_degree(row: WildcardRow) -> int:
    """|ones| + bubble count; the common size of all row-minimal sets."""
    if row.kind == KIND_N:
        raise MinhitError("row_degree is undefined for n-rows")
    return row.ones.bit_count() + len(row.bubbles)


def finalize_e_to_g(row: WildcardRow) -> WildcardRow:
    """Turn a (very-good) e-row into the g-row holding exactly min(row)."""
    if row.kind == KIND_N:
        raise MinhitError("finalize_e_to_g is undefined for n-rows")
    return WildcardRow.make(
        row.width,
        KIND_G,
        zeros=row.zeros | row.twos,
        ones=row.ones,
        twos=0,
        bubbles=row.bubbles,
    )


def expand_row(row: WildcardRow, limit: int | None = None) -> Iterator[int]:
    """Stream every member of the row exactly once, in a fixed order.

    Raises ExpansionLimitError when the cardinality exceeds ``limit``.
    """
    if limit is not None and row_cardinality(row) > limit:
        raise ExpansionLimitError(
            f"row has {row_cardinality(row)} members, limit {limit}"
        )
    bubble_options: list[list[int]] = []
    for b in row.bubbles:
        positions = [1 << (v - 1) for v in iter_bits(b)]
        if row.kind == KIND_G:
            opts = positions
        elif row.kind == KIND_E:
            opts = [_union(c) for k in range(1, len(positions) + 1)
                    for c in itertools.combinations(positions, k)]
        else:
            opts = [_union(c) for k in range(len(positions))
                    for c in itertools.combinations(positions, k)]
        bubble_options.append(opts)
    two_positions = [1 << (v - 1) for v in iter_bits(row.twos)]
    two_options = [_union(c) for k in range(len(two_positions) + 1)
                   for c in itertools.combinations(two_positions, k)]
    for picks in itertools.product(two_options, *bubble_options):
        yield row.ones | _union(picks)


def _union(masks: Iterable[int]) -> int:
    u = 0
    for m in masks:
        u |= m
    return u


@dataclass(frozen=True)
class PendingRow:
    """A stack entry: a row plus the index of the next edge to impose."""

    row: WildcardRow
    next_edge_index: int


# ---------------------------------------------------------------------------
# serialization

def row_to_tokens(row: WildcardRow) -> str:
    """Text form: one token per position, e.g. ``2 e1 e2 0 1 e2 0 e1 2 e2 1``.

    Bubble subscripts are assigned by first occurrence left to right, so the
    text form is canonical even though internal bubble order is not.
    """
    order = sorted(range(len(row.bubbles)), key=lambda i: lowest_bit(row.bubbles[i]))
    label = {i: n + 1 for n, i in enumerate(order)}
    tokens = []
    for v in range(1, row.width + 1):
        bit = 1 << (v - 1)
        if bit & row.zeros:
            tokens.append("0")
        elif bit & row.ones:
            tokens.append("1")
        elif bit & row.twos:
            tokens.append("2")
        else:
            for i, b in enumerate(row.bubbles):
                if bit & b:
                    tokens.append(f"{row.kind}{label[i]}")
                    break
    return " ".join(tokens)


def row_from_tokens(text: str) -> WildcardRow:
    tokens = text.split()
    width = len(tokens)
    zeros = ones = twos = 0
    bubbles: dict[str, int] = {}
    kind = None
    for pos, tok in enumerate(tokens, start=1):
        bit = 1 << (pos - 1)
        if tok == "0":
            zeros |= bit
        elif tok == "1":
            ones |= bit
        elif tok == "2":
            twos |= bit
        elif len(tok) >= 2 and tok[0] in _KINDS and tok[1:].isdigit():
            if kind is None:
                kind = tok[0]
            elif kind != tok[0]:
                raise MinhitError(f"mixed bubble kinds in row: {text!r}")
            bubbles[tok] = bubbles.get(tok, 0) | bit
        else:
            raise MinhitError(f"bad row token {tok!r}")
    if kind is None:
        kind = KIND_G  # pure 012-row; kind is immaterial
    return WildcardRow.make(width, kind, zeros, ones, twos, tuple(bubbles.values()))


def row_to_json(row: WildcardRow) -> dict:
    return {
        "width": row.width,
        "kind": row.kind,
        "zeros": list(vertices_of(row.zeros)),
        "ones": list(vertices_of(row.ones)),
        "twos": list(vertices_of(row.twos)),
        "bubbles": [list(vertices_of(b)) for b in row.bubbles],
    }


def row_from_json(obj: dict | str) -> WildcardRow:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return WildcardRow.make(
        obj["width"],
        obj["kind"],
        mask_of(obj["zeros"]),
        mask_of(obj["ones"]),
        mask_of(obj["twos"]),
        tuple(mask_of(b) for b in obj["bubbles"]),
    )
