"""The transversal e-algorithm: HS(H) as disjoint semifinal 012e-rows.

Imposing a hyperedge K on a 012e-row splits the free part of K into parts
(one per intersected e-bubble, plus all free 2s grouped); son i demands
"at least one 1 in part i, none in the earlier parts", which keeps the sons
disjoint.  Rows that survive all impositions are the semifinal rows; their
row-minimal sets jointly cover MHS(H).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import MinhitError
from .rows import (
    KIND_E,
    KIND_N,
    Hypergraph,
    PendingRow,
    WildcardRow,
    row_degree,
)
from .vlayout import hs_feasible


@dataclass
class SemifinalSet:
    rows: tuple[WildcardRow, ...]
    cutoff: int | None = None

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def degrees(self) -> tuple[int, ...]:
        return tuple(row_degree(r) for r in self.rows)

    def promise_sizes(self) -> tuple[int, ...]:
        sizes = []
        for r in self.rows:
            n = 1
            for b in r.bubbles:
                n *= b.bit_count()
            sizes.append(n)
        return tuple(sizes)


def impose_at_least_one(row: WildcardRow, edge: int) -> list[WildcardRow]:
    """Candidate sons of a 012e-row under x & edge != 0 (disjoint, exhaustive)."""
    if row.kind == KIND_N:
        raise MinhitError("impose_at_least_one needs an e-kind (or 012) row")
    if row.ones & edge:
        return [row]
    k_free = edge & ~row.zeros
    for b in row.bubbles:
        if b & ~k_free == 0:
            return [row]  # bubble forces a 1 inside the edge already
    if k_free == 0:
        return []

    # flag parts: intersected bubbles in creation order, grouped twos last
    parts: list[tuple[str, int, int]] = []
    for i, b in enumerate(row.bubbles):
        p = b & k_free
        if p:
            parts.append(("bubble", p, i))
    tw = row.twos & k_free
    if tw:
        parts.append(("twos", tw, -1))

    sons = []
    for j, (origin, part, idx) in enumerate(parts):
        son = _e_son(row, parts[:j], origin, part, idx)
        if son is not None:
            sons.append(son)
    return sons


def _e_son(row, earlier_parts, origin, part, idx) -> WildcardRow | None:
    """Some 1 in ``part``, none in the earlier parts."""
    zeros = row.zeros
    ones = row.ones
    twos = row.twos
    bubbles = list(row.bubbles)
    for o, p, i in earlier_parts:
        if o == "twos":
            zeros |= p
            twos &= ~p
        else:
            rest = bubbles[i] & ~p
            if rest == 0:
                return None  # the bubble's 1 has nowhere left to go
            zeros |= p
            bubbles[i] = rest
    if origin == "twos":
        twos &= ~part
        bubbles.append(part)  # fresh e-bubble over the free edge positions
    else:
        b = bubbles[idx]
        twos |= b & ~part  # the rest of the bubble reverts to free
        bubbles[idx] = part
    return WildcardRow.make(row.width, KIND_E, zeros, ones, twos, tuple(bubbles))


def enumerate_hs(
    h: Hypergraph,
    cutoff: int | None = None,
    use_feasibility: bool = True,
    shuffle_seed: int | None = None,
) -> SemifinalSet:
    """LIFO imposition of all edges; optional degree cut-off pruning.

    With ``shuffle_seed`` set, each time a row is finalized the new stack top
    is swapped with a random lower entry, so row output order becomes an
    unbiased sample of the computation tree's leaves.
    """
    h.require_full()
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    finals: list[WildcardRow] = []
    stack = [PendingRow(WildcardRow.all_twos(h.width, KIND_E), 0)]
    while stack:
        top = stack.pop()
        if top.next_edge_index == h.edge_count:
            finals.append(top.row)
            if rng is not None and len(stack) >= 2:
                j = rng.randrange(len(stack))
                stack[j], stack[-1] = stack[-1], stack[j]
            continue
        edge = h.edges[top.next_edge_index]
        for son in impose_at_least_one(top.row, edge):
            if use_feasibility and not hs_feasible(h, son.zeros):
                continue
            if cutoff is not None and row_degree(son) > cutoff:
                continue
            stack.append(PendingRow(son, top.next_edge_index + 1))
    return SemifinalSet(tuple(finals), cutoff)


def minimum_rows(s: SemifinalSet) -> tuple[int, tuple[WildcardRow, ...]]:
    """(mu, rows of minimum degree); their promises pool to MHS(H, mu)."""
    if not s.rows:
        raise MinhitError("empty semifinal set")
    degs = s.degrees()
    mu = min(degs)
    return mu, tuple(r for r, d in zip(s.rows, degs) if d == mu)
