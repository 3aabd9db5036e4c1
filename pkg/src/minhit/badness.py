"""The three badness tests for semifinal rows.

A semifinal row is bad when none of its row-minimal members is a minimal
hitting set.  Test one scans min(row) with the MC-dud-test (scalar or
column-wise).  Test two removes the victims of each killer from the
promise without materializing set operations, via index stencils on the
mixed-radix enumeration of min(row).  Test three never expands the promise
at all: the row is bad iff it misses every row of NC(killers).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitsets import vertices_of
from .errors import ExpansionLimitError, MinhitError
from .mc import MinNotMCFamily, killers, mc_dud_test
from .noncover import e_intersect_n_empty, enumerate_nc
from .rows import (
    KIND_N,
    Hypergraph,
    SetFamily,
    WildcardRow,
    row_min_members,
)
from .vlayout import build_matrix

FIRST_TEST_LIMIT = 500
SECOND_TEST_LIMIT = 5000


@dataclass
class BadnessVerdict:
    is_bad: bool
    method: str                        # superkiller | first | second | third
    survivors: SetFamily | None = None  # exact MHS(row) when produced
    superkilled: bool = False


def _promise_size(row: WildcardRow) -> int:
    n = 1
    for b in row.bubbles:
        n *= b.bit_count()
    return n


def superkilled(row: WildcardRow, h: Hypergraph) -> bool:
    """True iff the fixed ones already contain a killer (ones not MC)."""
    return not mc_dud_test(row.ones, h)


def badness_first(
    row: WildcardRow,
    h: Hypergraph,
    vertical: bool = False,
    limit: int | None = None,
) -> BadnessVerdict:
    """Scan min(row); survivors are the members passing the MC-dud-test."""
    if limit is not None and _promise_size(row) > limit:
        raise ExpansionLimitError(
            f"promise has {_promise_size(row)} members, limit {limit}")
    promise = row_min_members(row)
    if vertical:
        keep = _vertical_survivor_mask(promise, h)
        members = tuple(m for i, m in enumerate(promise.members) if keep & (1 << i))
    else:
        members = tuple(z for z in promise.members if mc_dud_test(z, h))
    survivors = SetFamily(row.width, members)
    return BadnessVerdict(len(survivors) == 0, "first", survivors,
                          superkilled(row, h))


def _vertical_survivor_mask(promise: SetFamily, h: Hypergraph) -> int:
    """Column-wise first test: duds are members with some critical-free vertex.

    For vertex a, the a-duds are the members containing a that meet every
    hyperedge through a at least twice; the union of all a-duds over a is
    the full dud set.
    """
    m = build_matrix(promise)
    ge2 = [m.ge2_columns(edge) for edge in h.edges]
    duds = 0
    for a in range(1, promise.width + 1):
        rows_a = m.cols[a - 1]
        if not rows_a:
            continue
        d_a = rows_a
        for i, edge in enumerate(h.edges):
            if edge & (1 << (a - 1)):
                d_a &= ge2[i]
                if not d_a:
                    break
        duds |= d_a
    return m.all_rows & ~duds


def badness_second(
    row: WildcardRow,
    ki: SetFamily,
    limit: int | None = None,
    keep_survivors: bool = True,
) -> BadnessVerdict:
    """Peel killer victims off the promise; bad as soon as nothing is left.

    min(row) is never materialized: it is indexed by one digit per bubble
    (the chosen element), so a killer's victims form an axis-aligned slab
    of the boolean survivor array.  Killers cutting fewer bubbles kill
    bigger slabs and are applied first.
    """
    size = _promise_size(row)
    if limit is not None and size > limit:
        raise ExpansionLimitError(f"promise has {size} members, limit {limit}")
    bubble_elems = [vertices_of(b) for b in row.bubbles]
    shape = tuple(len(e) for e in bubble_elems) or (1,)
    alive = np.ones(shape, dtype=bool)

    ranked = sorted(ki.members, key=lambda y: sum(1 for b in row.bubbles if y & b))
    super_hit = False
    for y in ranked:
        index: list[object] = [slice(None)] * len(shape)
        for i, b in enumerate(row.bubbles):
            yb = y & b
            if yb:
                index[i] = bubble_elems[i].index(yb.bit_length())
        if all(isinstance(ix, slice) for ix in index) and row.bubbles:
            super_hit = True
        alive[tuple(index)] = False
        if not alive.any():
            return BadnessVerdict(True, "second", SetFamily(row.width, ()) if
                                  keep_survivors else None, super_hit or not row.bubbles)

    survivors = None
    if keep_survivors:
        members = []
        for idx in np.argwhere(alive):
            z = row.ones
            for i, j in enumerate(idx[: len(bubble_elems)]):
                z |= 1 << (bubble_elems[i][j] - 1)
            members.append(z)
        survivors = SetFamily(row.width, tuple(members))
    return BadnessVerdict(False, "second", survivors, False)


def badness_third(row: WildcardRow, ki: SetFamily) -> BadnessVerdict:
    """Bad iff the row misses every row of NC(killers); no expansion at all."""
    nc = enumerate_nc(ki)
    bad = all(e_intersect_n_empty(row, sigma) for sigma in nc.rows)
    return BadnessVerdict(bad, "third", None, False)


def badness_auto(
    row: WildcardRow,
    h: Hypergraph,
    mnmc: MinNotMCFamily | None = None,
    ki: SetFamily | None = None,
    first_limit: int = FIRST_TEST_LIMIT,
    second_limit: int = SECOND_TEST_LIMIT,
) -> BadnessVerdict:
    """Dispatch: superkiller shortcut, then promise-size thresholds.

    Small promises get the scan, medium ones the killer stencil, large
    ones the expansion-free NC test.  The latter two need killers, hence a
    MinNotMC family (passed directly or via ``mnmc``).
    """
    if row.kind == KIND_N:
        raise MinhitError("badness tests need e-kind (or 012) rows")
    if superkilled(row, h):
        return BadnessVerdict(True, "superkiller", None, True)
    size = _promise_size(row)
    if size <= first_limit or (mnmc is None and ki is None):
        return badness_first(row, h, vertical=size > 50)
    if ki is None:
        ki = killers(row, mnmc)
    if size <= second_limit:
        return badness_second(row, ki)
    return badness_third(row, ki)
