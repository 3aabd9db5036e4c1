"""Compressed enumeration of exact, all, and minimal hitting sets.

Set systems are stored as disjoint unions of wildcard rows: fixed 0s and
1s, free positions, and bubbles demanding exactly one 1 (g), at least one
1 (e), or at least one 0 (n).
"""

from .badness import BadnessVerdict, badness_auto, badness_first, badness_second, badness_third
from .driver import (
    DriverConfig,
    MinhitResult,
    RowVerdict,
    Signature,
    classify_rows,
    expand_merely_good,
    minhit,
    random_hypergraph,
    sample_mhs,
    sample_min,
)
from .eengine import SemifinalSet, enumerate_hs, minimum_rows
from .errors import (
    ExpansionLimitError,
    FileFormatError,
    MinhitError,
    UnresolvedVerdictError,
)
from .exact import ExactRun, enumerate_ehs, stars_hypergraph
from .io import parse_family, parse_hypergraph, serialize_family, serialize_hypergraph
from .mc import MinNotMCFamily, crit, is_very_good, killers, mc_dud_test, min_not_mc
from .noncover import NoncoverSet, e_intersect_n_empty, enumerate_nc
from .reduction import ClassMap, inflate_rows, reduce_hypergraph
from .rows import (
    Hypergraph,
    SetFamily,
    WildcardRow,
    expand_row,
    finalize_e_to_g,
    row_cardinality,
    row_contains,
    row_degree,
    row_from_json,
    row_from_tokens,
    row_max_members,
    row_min_members,
    row_to_json,
    row_to_tokens,
)
from .spoiler import SpoilerVerdict, goodness_guarantee, potential_spoiler_rows, spoiler_count
from .vlayout import BitMatrix, equivalence_classes, maximize_family, minimize_family

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
