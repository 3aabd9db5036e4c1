"""MC-condition machinery: criticality, dud-testing, MinNotMC, killers.

A set S satisfies the MC-condition when every element of S has a critical
hyperedge (one meeting S in that element alone).  MC is necessary for
minimal transversality, and for hitting sets it is equivalent; the minimal
non-MC sets therefore act as a filter whose generators ("killers") prune
promises of semifinal rows without expanding them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eengine import impose_at_least_one
from .errors import MinhitError
from .rows import (
    KIND_E,
    Hypergraph,
    PendingRow,
    SetFamily,
    WildcardRow,
    row_min_members,
)
from .vlayout import BitMatrix, build_matrix, hs_feasible, minimize_family


@dataclass(frozen=True)
class MinNotMCFamily:
    """Antichain of minimal non-MC sets, with its vertical-layout matrix."""

    family: SetFamily
    matrix: BitMatrix

    def __len__(self) -> int:
        return len(self.family)


def crit(b: int, s: int, h: Hypergraph) -> tuple[int, ...]:
    """1-based indices of the hyperedges meeting S exactly in {b}."""
    bit = 1 << (b - 1)
    if not bit & s:
        raise MinhitError(f"vertex {b} is not in the set")
    return tuple(i + 1 for i, edge in enumerate(h.edges) if s & edge == bit)


def mc_dud_test(z: int, h: Hypergraph) -> bool:
    """True iff Z is an MC-set: one sweep accumulating singleton cuts.

    For a hitting set Z this decides minimality.
    """
    t = 0
    for edge in h.edges:
        inter = z & edge
        if inter and inter & (inter - 1) == 0:
            t |= inter
            if t == z:
                return True
    return t == z


def min_not_mc(h: Hypergraph) -> MinNotMCFamily:
    """The minimal non-MC sets, via one auxiliary hypergraph per vertex.

    For vertex u, the minimal sets that are not-u-MC are exactly {u} joined
    with the minimal transversals of { H_i \\ {u} : u in H_i }.  Pooling over
    all u and sieving to the inclusion-minimal members gives MinNotMC(H).
    """
    h.require_full()
    pool: list[int] = []
    for u in range(1, h.width + 1):
        bit = 1 << (u - 1)
        aux_edges = [edge & ~bit for edge in h.edges if edge & bit]
        if any(e == 0 for e in aux_edges):
            continue  # a singleton edge {u} makes u critical everywhere
        aux = Hypergraph(h.width, tuple(aux_edges))
        for t in _minimal_transversals(aux):
            pool.append(t | bit)
    family = minimize_family(SetFamily(h.width, tuple(pool)))
    return MinNotMCFamily(family, build_matrix(family))


def _minimal_transversals(h: Hypergraph) -> list[int]:
    """Minimal transversals of a small (not necessarily full) hypergraph.

    Semifinal rows from the e-algorithm (fullness is not needed here:
    uncovered vertices just stay free and never enter row-minimal sets),
    each promise sieved naively with the MC-dud-test.  No recursion into
    killer machinery.
    """
    rows = _semifinal_rows_nonfull(h)
    out = []
    for r in rows:
        for z in row_min_members(r).members:
            if mc_dud_test(z, h):
                out.append(z)
    return out


def _semifinal_rows_nonfull(h: Hypergraph):
    finals = []
    stack = [PendingRow(WildcardRow.all_twos(h.width, KIND_E), 0)]
    while stack:
        top = stack.pop()
        if top.next_edge_index == h.edge_count:
            finals.append(top.row)
            continue
        for son in impose_at_least_one(top.row, h.edges[top.next_edge_index]):
            if not hs_feasible(h, son.zeros):
                continue
            stack.append(PendingRow(son, top.next_edge_index + 1))
    return tuple(finals)


def killers(row: WildcardRow, mnmc: MinNotMCFamily) -> SetFamily:
    """The MinNotMC members fitting inside some member of min(row).

    Y is a killer iff it avoids zeros(row) and twos(row) and cuts every
    e-bubble at most once; filtered by a column BitOr plus per-bubble
    saturating column addition.
    """
    m = mnmc.matrix
    blocked = m.or_columns(row.zeros | row.twos)
    for b in row.bubbles:
        blocked |= m.ge2_columns(b)
    keep = m.all_rows & ~blocked
    members = tuple(m.rows[i] for i in range(m.height) if keep & (1 << i))
    return SetFamily(row.width, members)


def is_very_good(row: WildcardRow, mnmc: MinNotMCFamily) -> bool:
    """True iff the row has no killers, i.e. min(row) is all of MHS inside it."""
    return len(killers(row, mnmc)) == 0
