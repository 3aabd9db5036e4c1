"""Spoiler counting: inclusion-exclusion very-goodness for semifinal rows.

A potential spoiler of a semifinal row r is X = Y \\ {a} for some Y in
min(r).  The row is very-good iff no potential spoiler is itself a
transversal.  Potential spoilers pack into disjoint 01g-rows, and the
number of spoilers is an alternating sum of terms N(U) = "potential
spoilers avoiding the vertex union U", each computable by zeroing U's
columns in the g-rows.  Bonferroni prefixes often settle the sign early:
odd-level truncations bound the spoiler count from below, even-level ones
from above.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod

from .bitsets import iter_bits
from .errors import MinhitError
from .rows import KIND_G, KIND_N, Hypergraph, WildcardRow

DEFAULT_TERM_BUDGET = 1 << 20

VERY_GOOD = "veryGood"
NOT_VERY_GOOD = "notVeryGood"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class SpoilerVerdict:
    pot: int
    sp: int | tuple[int, int]   # exact count, or (lower, upper) interval
    decision: str               # veryGood | notVeryGood | undecided
    terms_evaluated: int


def potential_spoiler_rows(row: WildcardRow) -> tuple[tuple[WildcardRow, ...], int]:
    """All potential spoilers of a semifinal row, as disjoint 01g-rows.

    One row per fixed 1 a (a and all free 2s zeroed, bubbles turned g) and
    one per bubble (that bubble zeroed, the others turned g); Pot is the
    closed form sum-of-products over the bubble sizes.
    """
    if row.kind == KIND_N:
        raise MinhitError("potential spoilers need an e-kind (or 012) row")
    base_zeros = row.zeros | row.twos
    rows = []
    for a in iter_bits(row.ones):
        bit = 1 << (a - 1)
        rows.append(WildcardRow.make(
            row.width, KIND_G,
            zeros=base_zeros | bit,
            ones=row.ones & ~bit,
            twos=0,
            bubbles=row.bubbles,
        ))
    for k, b in enumerate(row.bubbles):
        rows.append(WildcardRow.make(
            row.width, KIND_G,
            zeros=base_zeros | b,
            ones=row.ones,
            twos=0,
            bubbles=row.bubbles[:k] + row.bubbles[k + 1:],
        ))
    eps = [b.bit_count() for b in row.bubbles]
    pot = sum(prod(eps[:k] + eps[k + 1:]) for k in range(len(eps)))
    pot += row.ones.bit_count() * prod(eps)
    if not eps and not row.ones:
        # min(row) = {ones} = {emptyset} has no element to drop
        pot = 0
        rows = []
    return tuple(rows), pot


def n_term(spoiler_rows, u: int) -> int:
    """N(I) for the edge set I with union U: spoilers disjoint from U."""
    total = 0
    for d in spoiler_rows:
        if d.ones & u:
            continue
        card = 1
        for b in d.bubbles:
            live = (b & ~u).bit_count()
            if live == 0:
                card = 0
                break
            card *= live
        total += card
    return total


def spoiler_count(
    row: WildcardRow,
    h: Hypergraph,
    budget: int = DEFAULT_TERM_BUDGET,
) -> SpoilerVerdict:
    """Decide very-goodness of the row by spoiler counting against H.

    Bonferroni prefixes are tried first (levels 1-3); if still undecided
    and all 2^h terms fit the budget, the full alternating sum is
    evaluated.  Terms N(I) depend on I only through the union of its
    edges, so they are memoized by that union.
    """
    spoiler_rows, pot = potential_spoiler_rows(row)
    memo: dict[int, int] = {}
    evaluated = 0

    def n_of(u: int) -> int:
        nonlocal evaluated
        if u not in memo:
            memo[u] = n_term(spoiler_rows, u)
            evaluated += 1
        return memo[u]

    if pot == 0:
        return SpoilerVerdict(0, 0, VERY_GOOD, 0)

    lower, upper = 0, pot
    m = h.edge_count
    level_sums = [pot]
    for level in (1, 2, 3):
        if level > m:
            break
        if evaluated + comb(m, level) > budget:
            return SpoilerVerdict(pot, (lower, upper), UNDECIDED, evaluated)
        s = 0
        for combo in combinations(h.edges, level):
            u = 0
            for e in combo:
                u |= e
            s += n_of(u)
        level_sums.append(s)
        prefix = sum((-1) ** i * v for i, v in enumerate(level_sums))
        if level % 2 == 1:
            lower = max(lower, prefix)      # (Bf1)/(Bf3)
            if prefix > 0:
                return SpoilerVerdict(pot, (lower, upper), NOT_VERY_GOOD, evaluated)
        else:
            upper = min(upper, prefix)      # (Bf2)
            if prefix == 0:
                return SpoilerVerdict(pot, 0, VERY_GOOD, evaluated)

    if (1 << m) > budget:
        return SpoilerVerdict(pot, (lower, upper), UNDECIDED, evaluated)

    # full inclusion-exclusion; unions built incrementally over subsets
    unions = [0] * (1 << m)
    sp = pot
    for s in range(1, 1 << m):
        low = s & -s
        unions[s] = unions[s ^ low] | h.edges[low.bit_length() - 1]
        term = n_of(unions[s])
        sp += -term if s.bit_count() % 2 else term
    decision = VERY_GOOD if sp == 0 else NOT_VERY_GOOD
    return SpoilerVerdict(pot, sp, decision, evaluated)


def goodness_guarantee(row: WildcardRow, sp: int) -> bool:
    """Certificate that some minimal member survives: sp below the product
    of all bubble sizes except the largest (a spoiler kills at most
    largest-bubble-size many minimal members)."""
    eps = sorted(b.bit_count() for b in row.bubbles)
    if not eps:
        return sp == 0
    return sp < prod(eps[:-1])
