"""The g-algorithm: all exact hitting sets as disjoint 01g-rows.

Edges are imposed one after the other on a LIFO stack of 012g-rows.  One
imposition splits a row into candidate sons by a staircase flag: exactly
one "part" of the edge carries the single 1, every earlier/other part is
zeroed.  A backtracking feasibility search (exact-cover flavoured, decision
only) prunes sons that cannot reach any exact hitting set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import iter_bits
from .errors import MinhitError
from .rows import (
    KIND_G,
    Hypergraph,
    PendingRow,
    WildcardRow,
    row_cardinality,
)

DEFAULT_FEASIBILITY_BUDGET = 100_000


@dataclass
class ExactRun:
    final_rows: tuple[WildcardRow, ...]
    total_count: int
    impositions: int = 0
    feasibility_calls: int = 0


def impose_exact(row: WildcardRow, edge: int) -> list[WildcardRow]:
    """Candidate sons of a 012g-row under |x & edge| = 1.

    Sons are pairwise disjoint and their union is exactly the members of
    ``row`` hitting the edge once.  An empty list is a legal outcome.
    """
    if row.kind != KIND_G:
        raise MinhitError("impose_exact needs a g-kind row")
    hit = row.ones & edge
    if hit.bit_count() >= 2:
        return []
    if hit:
        # the fixed 1 already hits the edge; ban any further 1 inside it
        return _zero_edge_rest(row, edge, keep=hit)

    # staircase: intersected bubbles in creation order, grouped twos part last
    parts: list[tuple[str, int, int]] = []  # (origin, part mask, bubble index)
    for i, b in enumerate(row.bubbles):
        p = b & edge
        if p:
            parts.append(("bubble", p, i))
    tw = row.twos & edge
    if tw:
        parts.append(("twos", tw, -1))

    sons = []
    for origin, part, idx in parts:
        son = _son_with_one_in_part(row, edge, origin, part, idx)
        if son is not None:
            sons.append(son)
    return sons


def _zero_edge_rest(row: WildcardRow, edge: int, keep: int) -> list[WildcardRow]:
    """Zero every edge position except ``keep``; [] if a bubble gets trapped."""
    kill = edge & ~keep
    zeros = row.zeros | kill
    twos = row.twos & ~kill
    bubbles = []
    for b in row.bubbles:
        if b & kill:
            rest = b & ~kill
            if rest == 0:
                return []  # the bubble's 1 cannot escape the edge
            bubbles.append(rest)
        else:
            bubbles.append(b)
    return [WildcardRow.make(row.width, KIND_G, zeros, row.ones, twos, tuple(bubbles))]


def _son_with_one_in_part(
    row: WildcardRow, edge: int, origin: str, part: int, idx: int
) -> WildcardRow | None:
    zeros = row.zeros | (row.twos & edge & ~part)
    twos = row.twos & ~edge
    ones = row.ones
    bubbles = []
    for i, b in enumerate(row.bubbles):
        if i == idx:
            bubbles.append(part)  # the single 1 sits here
            zeros |= b & ~part
        elif b & edge:
            rest = b & ~edge
            if rest == 0:
                return None  # forced second 1 inside the edge
            bubbles.append(rest)
            zeros |= b & edge  # the bubble's 1 escapes the edge
        else:
            bubbles.append(b)
    if origin == "twos":
        bubbles.append(part)  # fresh g-bubble over the edge's free positions
    return WildcardRow.make(row.width, KIND_G, zeros, ones, twos, tuple(bubbles))


# ---------------------------------------------------------------------------
# feasibility: does the row contain some exact hitting set of H?

@dataclass
class _SearchBudget:
    nodes: int


def ehs_feasible(
    row: WildcardRow,
    h: Hypergraph,
    pending_from: int = 0,
    node_budget: int = DEFAULT_FEASIBILITY_BUDGET,
) -> bool:
    """Decide row ∩ EHS(H) != ∅ by backtracking; budget overrun counts as yes.

    Edges before ``pending_from`` are assumed already imposed on the row and
    hence automatically satisfied by every member.
    """
    budget = _SearchBudget(node_budget)
    ok = _search(
        row.ones,
        list(row.bubbles),
        row.twos,
        [h.edges[i] for i in range(pending_from, h.edge_count)],
        budget,
    )
    return True if ok is None else ok


def _search(ones, domains, twos, pending, budget) -> bool | None:
    """Returns True/False, or None when the node budget ran out."""
    if budget.nodes <= 0:
        return None
    budget.nodes -= 1

    # propagate: edges already hit once zero out their remainder everywhere
    changed = True
    while changed:
        changed = False
        next_pending = []
        for edge in pending:
            c = (ones & edge).bit_count()
            if c >= 2:
                return False
            if c == 1:
                twos &= ~edge
                for i, d in enumerate(domains):
                    if d & edge:
                        d &= ~edge
                        if d == 0:
                            return False
                        domains[i] = d
                        if d & (d - 1) == 0:
                            ones |= d
                            changed = True
                domains = [d for d in domains if d & (d - 1)]
            else:
                next_pending.append(edge)
        pending = next_pending
    if not pending:
        return True

    # fail-first: branch on the edge with fewest ways to be hit
    def options(edge):
        opts = [d & edge for d in domains]
        return (edge & twos).bit_count() + sum(o.bit_count() for o in opts)

    best = min(pending, key=options)
    if options(best) == 0:
        return False
    saw_unknown = False
    for i, d in enumerate(domains):
        for v in iter_bits(d & best):
            bit = 1 << (v - 1)
            sub = domains[:i] + domains[i + 1 :]
            res = _search(ones | bit, list(sub), twos, list(pending), budget)
            if res is None:
                saw_unknown = True
            elif res:
                return True
    for v in iter_bits(twos & best):
        bit = 1 << (v - 1)
        res = _search(ones | bit, list(domains), twos & ~bit, list(pending), budget)
        if res is None:
            saw_unknown = True
        elif res:
            return True
    return None if saw_unknown else False


# ---------------------------------------------------------------------------

def enumerate_ehs(
    h: Hypergraph,
    use_feasibility: bool = True,
    node_budget: int = DEFAULT_FEASIBILITY_BUDGET,
) -> ExactRun:
    """Run the g-algorithm: EHS(H) as a disjoint union of 01g-rows."""
    h.require_full()
    run = ExactRun(final_rows=(), total_count=0)
    finals: list[WildcardRow] = []
    stack: list[PendingRow] = []

    seed = WildcardRow.all_twos(h.width, KIND_G)
    run.impositions += 1
    for son in impose_exact(seed, h.edges[0]):
        stack.append(PendingRow(son, 1))

    while stack:
        top = stack.pop()
        if top.next_edge_index == h.edge_count:
            finals.append(top.row)
            continue
        edge = h.edges[top.next_edge_index]
        run.impositions += 1
        for son in impose_exact(top.row, edge):
            nxt = top.next_edge_index + 1
            if use_feasibility and nxt < h.edge_count:
                run.feasibility_calls += 1
                if not ehs_feasible(son, h, nxt, node_budget):
                    continue
            stack.append(PendingRow(son, nxt))

    run.final_rows = tuple(finals)
    run.total_count = sum(row_cardinality(r) for r in finals)
    return run


def stars_hypergraph(
    graph_edges: list[tuple[int, int]], vertices: list[int] | None = None
) -> Hypergraph:
    """Hyperedges = vertex stars over the graph-edge index set [|E|].

    EHS of the result are exactly the perfect matchings of the graph.
    Vertices default to those appearing in some edge; an explicitly listed
    isolated vertex is refused (its star would be empty).
    """
    if not graph_edges:
        raise MinhitError("graph has no edges")
    stars: dict[int, int] = {}
    for i, (u, v) in enumerate(graph_edges):
        if u == v:
            raise MinhitError(f"loop edge at vertex {u}")
        stars.setdefault(u, 0)
        stars.setdefault(v, 0)
        stars[u] |= 1 << i
        stars[v] |= 1 << i
    if vertices is not None:
        for v in vertices:
            if v not in stars:
                raise MinhitError(f"vertex {v} is isolated; no perfect matching")
    edge_order = sorted(stars)
    return Hypergraph(len(graph_edges), tuple(stars[v] for v in edge_order))
