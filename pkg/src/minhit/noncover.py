"""The noncover n-algorithm and e/n-row intersection emptiness.

NC(S) = all sets containing no member of S, rendered as disjoint 012n-rows
by the 0/1-swapped dual of the e-algorithm: imposing a member Y demands
"at least one 0 inside Y".  Whether a 012e-row meets a 012n-row is decided
by propagating forced 0s and 1s between the two rows to a fixpoint; if no
clash or voided bubble arises, the intersection is nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MinhitError
from .rows import (
    KIND_E,
    KIND_N,
    SetFamily,
    WildcardRow,
)


@dataclass
class NoncoverSet:
    rows: tuple[WildcardRow, ...]
    source: SetFamily


def impose_at_least_zero(row: WildcardRow, member: int) -> list[WildcardRow]:
    """Candidate sons of a 012n-row under "some 0 inside the member set"."""
    if row.kind == KIND_E:
        raise MinhitError("impose_at_least_zero needs an n-kind (or 012) row")
    if row.zeros & member:
        return [row]
    y_free = member & ~row.ones
    for b in row.bubbles:
        if b & ~y_free == 0:
            return [row]  # bubble already forces a 0 inside the member
    if y_free == 0:
        return []

    # flag parts: intersected bubbles in creation order, grouped twos last
    parts: list[tuple[str, int, int]] = []
    for i, b in enumerate(row.bubbles):
        p = b & y_free
        if p:
            parts.append(("bubble", p, i))
    tw = row.twos & y_free
    if tw:
        parts.append(("twos", tw, -1))

    sons = []
    for j, (origin, part, idx) in enumerate(parts):
        son = _n_son(row, parts[:j], origin, part, idx)
        if son is not None:
            sons.append(son)
    return sons


def _n_son(row, earlier_parts, origin, part, idx) -> WildcardRow | None:
    """Some 0 in ``part``, all earlier parts forced to 1."""
    zeros = row.zeros
    ones = row.ones
    twos = row.twos
    bubbles = list(row.bubbles)
    for o, p, i in earlier_parts:
        if o == "twos":
            ones |= p
            twos &= ~p
        else:
            rest = bubbles[i] & ~p
            if rest == 0:
                return None  # the bubble's 0 has nowhere left to go
            ones |= p
            bubbles[i] = rest
    if origin == "twos":
        twos &= ~part
        bubbles.append(part)  # fresh n-bubble
    else:
        b = bubbles[idx]
        twos |= b & ~part  # the rest of the bubble reverts to free
        bubbles[idx] = part
    return WildcardRow.make(row.width, KIND_N, zeros, ones, twos, tuple(bubbles))


def enumerate_nc(source: SetFamily) -> NoncoverSet:
    """NC(source) as disjoint 012n-rows (LIFO imposition of all members).

    Members are imposed largest first (ties by mask): the hardest sets to
    avoid covering constrain rows early, which tends to compress better.
    """
    members = sorted(source.members, key=lambda m: (-m.bit_count(), m))
    finals: list[WildcardRow] = []
    stack: list[tuple[WildcardRow, int]] = [
        (WildcardRow.all_twos(source.width, KIND_N), 0)
    ]
    while stack:
        row, nxt = stack.pop()
        if nxt == len(members):
            finals.append(row)
            continue
        for son in impose_at_least_zero(row, members[nxt]):
            stack.append((son, nxt + 1))
    return NoncoverSet(tuple(finals), source)


# ---------------------------------------------------------------------------
# emptiness of (012e-row) ∩ (012n-row) by 0/1 propagation

def e_intersect_n_empty(r: WildcardRow, sigma: WildcardRow) -> bool:
    """True iff the e-row and the n-row share no member.

    A shared forced-bit assignment is grown to a fixpoint: e-bubbles shed
    forced 0s (void bubble -> empty, singleton -> forced 1), n-bubbles shed
    forced 1s dually, satisfied bubbles are dropped.  Emptiness holds iff a
    0/1 clash or a voided bubble occurs; otherwise a member exists.
    """
    if r.kind == KIND_N or sigma.kind == KIND_E:
        raise MinhitError("expected an e-row and an n-row")
    if r.width != sigma.width:
        raise MinhitError("rows must share one width")
    ones = r.ones | sigma.ones
    zeros = r.zeros | sigma.zeros
    e_bubbles = list(r.bubbles)
    n_bubbles = list(sigma.bubbles)
    while True:
        if ones & zeros:
            return True
        changed = False
        nxt_e = []
        for b in e_bubbles:
            if b & ones:
                changed = True
                continue  # already satisfied
            live = b & ~zeros
            if live == 0:
                return True
            if live & (live - 1) == 0:
                ones |= live
                changed = True
                continue
            if live != b:
                changed = True
            nxt_e.append(live)
        e_bubbles = nxt_e
        nxt_n = []
        for b in n_bubbles:
            if b & zeros:
                changed = True
                continue
            live = b & ~ones
            if live == 0:
                return True
            if live & (live - 1) == 0:
                zeros |= live
                changed = True
                continue
            if live != b:
                changed = True
            nxt_n.append(live)
        n_bubbles = nxt_n
        if not changed:
            return False
