"""Quotient a degenerate hypergraph by vertex equivalence, and inflate back.

A class of equivalent vertices meets an edge iff it is contained in it, so
edges factor through the class partition.  Compressed results computed on
the quotient are pulled back by turning each fixed 1 over a class into a
g-bubble over that class, and widening g-bubbles classwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import iter_bits, lowest_bit
from .errors import MinhitError
from .rows import KIND_G, Hypergraph, WildcardRow
from .vlayout import equivalence_classes


@dataclass(frozen=True)
class ClassMap:
    """Ordered partition of [w]; class i+1 of the quotient is classes[i]."""

    width: int                  # original width
    classes: tuple[int, ...]    # masks over [width], ordered by min element

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(lowest_bit(c) for c in self.classes)

    def class_count(self) -> int:
        return len(self.classes)


def reduce_hypergraph(h: Hypergraph) -> tuple[Hypergraph, ClassMap]:
    """The nondegenerate quotient hypergraph plus the class map."""
    h.require_full()
    classes = equivalence_classes(h)
    cmap = ClassMap(h.width, classes)
    reduced_edges = []
    for edge in h.edges:
        reduced = 0
        for i, cls in enumerate(classes):
            if cls & edge:
                # an intersected class is contained in the edge
                reduced |= 1 << i
        if reduced not in reduced_edges:
            reduced_edges.append(reduced)
    return Hypergraph(len(classes), tuple(reduced_edges)), cmap


def inflate_row(row: WildcardRow, cmap: ClassMap) -> WildcardRow:
    """Pull a g-row over class indices back to a g-row over [w].

    Fixed 1 over a class becomes a fresh g-bubble over the class (a plain 1
    when the class is a singleton); a g-bubble widens to the union of its
    classes; 0s blanket whole classes.
    """
    if row.kind != KIND_G:
        raise MinhitError("inflation needs g-kind rows")
    if row.width != cmap.class_count():
        raise MinhitError("row width does not match the class count")
    zeros = ones = 0
    bubbles = []
    for k in iter_bits(row.zeros):
        zeros |= cmap.classes[k - 1]
    for k in iter_bits(row.ones):
        cls = cmap.classes[k - 1]
        if cls & (cls - 1) == 0:
            ones |= cls
        else:
            bubbles.append(cls)
    for b in row.bubbles:
        widened = 0
        for k in iter_bits(b):
            widened |= cmap.classes[k - 1]
        bubbles.append(widened)
    twos = 0
    for k in iter_bits(row.twos):
        cls = cmap.classes[k - 1]
        if cls & (cls - 1):
            raise MinhitError("cannot inflate a free position over a non-singleton class")
        twos |= cls  # singleton free class stays free
    return WildcardRow.make(cmap.width, KIND_G, zeros, ones, twos, tuple(bubbles))


def inflate_rows(rows, cmap: ClassMap) -> tuple[WildcardRow, ...]:
    return tuple(inflate_row(r, cmap) for r in rows)
