"""Text files for hypergraphs, set families, and cached MinNotMC results.

Shared format: first line ``w h``, then h lines of ascending vertices (one
set each); ``#`` starts a comment.  Vertices are 1-based.  A cached
MinNotMC family carries the source file's content hash in a header comment
and is ignored when stale.
"""

from __future__ import annotations

import hashlib

from .bitsets import mask_of, vertices_of
from .errors import FileFormatError
from .rows import Hypergraph, SetFamily

_CACHE_TAG = "# minnotmc-of"


def _data_lines(text: str):
    """(line_number, payload) for every non-blank, non-comment line."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _parse_sets(text: str, what: str) -> tuple[int, tuple[int, ...]]:
    lines = list(_data_lines(text))
    if not lines:
        raise FileFormatError(f"empty {what} file")
    no, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise FileFormatError(f"line {no}: header must be 'w h', got {header!r}")
    try:
        w, h = int(fields[0]), int(fields[1])
    except ValueError:
        raise FileFormatError(f"line {no}: header must be two integers") from None
    if w <= 0:
        raise FileFormatError(f"line {no}: width must be positive")
    if h < 0:
        raise FileFormatError(f"line {no}: set count must be nonnegative")
    if len(lines) - 1 != h:
        raise FileFormatError(
            f"header announces {h} sets but the file has {len(lines) - 1}")
    masks = []
    for no, line in lines[1:]:
        try:
            verts = [int(t) for t in line.split()]
        except ValueError:
            raise FileFormatError(f"line {no}: non-integer vertex") from None
        if not verts:
            raise FileFormatError(f"line {no}: empty set")
        for v in verts:
            if not 1 <= v <= w:
                raise FileFormatError(f"line {no}: vertex {v} outside 1..{w}")
        if verts != sorted(set(verts)):
            raise FileFormatError(f"line {no}: vertices must be ascending and distinct")
        masks.append(mask_of(verts))
    return w, tuple(masks)


def parse_hypergraph(text: str) -> Hypergraph:
    w, edges = _parse_sets(text, "hypergraph")
    if not edges:
        raise FileFormatError("a hypergraph needs at least one edge")
    return Hypergraph(w, edges)


def parse_family(text: str) -> SetFamily:
    w, members = _parse_sets(text, "set family")
    return SetFamily(w, members)


def _serialize_sets(width: int, masks, header_comments=()) -> str:
    out = list(header_comments)
    out.append(f"{width} {len(masks)}")
    for m in masks:
        out.append(" ".join(str(v) for v in vertices_of(m)))
    return "\n".join(out) + "\n"


def serialize_hypergraph(h: Hypergraph) -> str:
    return _serialize_sets(h.width, h.edges)


def serialize_family(fam: SetFamily) -> str:
    return _serialize_sets(fam.width, fam.members)


def parse_graph_edges(text: str) -> list[tuple[int, int]]:
    """Edge list for matchings input: one ``u v`` pair per line."""
    edges = []
    for no, line in _data_lines(text):
        fields = line.split()
        if len(fields) != 2:
            raise FileFormatError(f"line {no}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FileFormatError(f"line {no}: non-integer vertex") from None
        if u <= 0 or v <= 0:
            raise FileFormatError(f"line {no}: vertices must be positive")
        edges.append((u, v))
    if not edges:
        raise FileFormatError("empty graph file")
    return edges


def content_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def serialize_mnmc_cache(fam: SetFamily, source_text: str) -> str:
    tag = f"{_CACHE_TAG} {content_hash(source_text)}"
    return _serialize_sets(fam.width, fam.members, header_comments=[tag])


def parse_mnmc_cache(cache_text: str, source_text: str) -> SetFamily | None:
    """The cached family, or None when the hash header does not match."""
    first = cache_text.splitlines()[0] if cache_text else ""
    if not first.startswith(_CACHE_TAG):
        return None
    if first[len(_CACHE_TAG):].strip() != content_hash(source_text):
        return None
    return parse_family(cache_text)
