"""The minhit pipeline: classify semifinal rows, expand the merely-good
ones, count or estimate the minimal hitting sets.

Pipeline: e-engine -> MinNotMC -> per-row classification (degree-mu
shortcut, promise sampling, killer/spoiler/badness confirmation) ->
first grade (replace merely-good rows by very-good rows, exact count) or
second grade (verdict table plus a sampling estimate).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import comb, prod

from .badness import badness_auto, badness_first
from .bitsets import full_mask, iter_bits, vertices_of
from .eengine import SemifinalSet, enumerate_hs, minimum_rows
from .errors import ExpansionLimitError, MinhitError, UnresolvedVerdictError
from .mc import MinNotMCFamily, killers, mc_dud_test, min_not_mc
from .noncover import e_intersect_n_empty, enumerate_nc
from .rows import (
    KIND_E,
    Hypergraph,
    SetFamily,
    WildcardRow,
    finalize_e_to_g,
    row_cardinality,
    row_degree,
)

VERY_GOOD = "veryGood"
MERELY_GOOD = "merelyGood"
BAD = "bad"
UNRESOLVED = "unresolved"

LIKELY_GOOD = "likelyGood"
LIKELY_BAD = "likelyBad"
MIXED = "mixed"


@dataclass(frozen=True)
class Signature:
    """Random hypergraph shape: h edges of uniform cardinality k on [w]."""

    w: int
    h: int
    k: int
    seed: int = 0

    def __post_init__(self):
        if self.k > self.w:
            raise MinhitError("edge cardinality exceeds the ground set")
        if self.w <= 0 or self.h <= 0 or self.k <= 0:
            raise MinhitError("signature entries must be positive")


@dataclass
class DriverConfig:
    samples: int = 20
    seed: int | None = None
    grade: str = "first"            # first | second
    use_mnmc: bool = True
    cutoff: int | None = None
    use_feasibility: bool = True
    shuffle_seed: int | None = None
    naive_limit: int = 100_000      # promise scan bound when MinNotMC is off
    rows_to_classify: int | None = None  # classify only a prefix (estimation)
    workers: int = 1


@dataclass
class RowVerdict:
    row_index: int
    cls: str                        # veryGood | merelyGood | bad | unresolved
    alpha: int | None               # minimal hits among `samples` draws
    samples: int | None
    likely: str
    promise_size: int
    degree: int


@dataclass
class MinhitResult:
    final_rows: tuple[WildcardRow, ...] | None
    exact_count: int | None
    estimate: float | None
    verdicts: list[RowVerdict]
    stats: dict


def sample_min(
    row: WildcardRow, h: Hypergraph, n: int, seed: int | str | None = None
) -> tuple[SetFamily, int]:
    """n uniform draws from min(row) plus the count alpha of minimal ones."""
    if row.kind != KIND_E and row.bubbles:
        raise MinhitError("sampling needs an e-kind (or 012) row")
    rng = random.Random(seed)
    elems = [vertices_of(b) for b in row.bubbles]
    picks = []
    alpha = 0
    for _ in range(n):
        z = row.ones
        for bubble in elems:
            z |= 1 << (rng.choice(bubble) - 1)
        picks.append(z)
        if mc_dud_test(z, h):
            alpha += 1
    return SetFamily(row.width, tuple(picks)), alpha


def _promise_size(row: WildcardRow) -> int:
    return prod(b.bit_count() for b in row.bubbles)


def classify_rows(
    h: Hypergraph,
    s: SemifinalSet,
    mnmc: MinNotMCFamily | None = None,
    config: DriverConfig | None = None,
) -> list[RowVerdict]:
    """Exact per-row verdicts, cheapest evidence first.

    Degree-mu rows are very-good outright.  Other rows are sampled; a mixed
    sample already proves merely-good, otherwise killers (or spoiler
    counting, or a promise scan) settle the all-minimal case and the
    badness tests settle the none-minimal case.
    """
    config = config or DriverConfig()
    if config.samples <= 0:
        raise MinhitError("sample count must be positive")
    mu, _ = minimum_rows(s)
    limit = config.rows_to_classify
    count = len(s.rows) if limit is None else min(limit, len(s.rows))
    jobs = [(h, s.rows[i], i, mu, mnmc, config) for i in range(count)]
    if config.workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            verdicts = list(pool.map(_classify_one_job, jobs, chunksize=8))
    else:
        verdicts = [_classify_one_job(job) for job in jobs]
    return verdicts


def _classify_one_job(job) -> RowVerdict:
    return _classify_one(*job)


def _classify_one(h, row, i, mu, mnmc, config) -> RowVerdict:
    deg = row_degree(row)
    size = _promise_size(row)
    if deg == mu:
        return RowVerdict(i, VERY_GOOD, None, None, LIKELY_GOOD, size, deg)
    n = config.samples
    # per-row seed: identical verdicts whether rows run sequentially or not
    _, alpha = sample_min(row, h, n, f"{config.seed}:{i}")
    likely = LIKELY_GOOD if alpha == n else LIKELY_BAD if alpha == 0 else MIXED
    if 0 < alpha < n:
        cls = MERELY_GOOD
    elif alpha == n:
        cls = _confirm_all_minimal(row, h, mnmc, config)
    else:
        verdict = badness_auto(row, h, mnmc)
        cls = BAD if verdict.is_bad else MERELY_GOOD
    return RowVerdict(i, cls, alpha, n, likely, size, deg)


def _confirm_all_minimal(row, h, mnmc, config) -> str:
    """alpha = n: very-good, or merely-good with an unlucky sample?"""
    if mnmc is not None:
        ki = killers(row, mnmc)
        return VERY_GOOD if len(ki) == 0 else MERELY_GOOD
    from .spoiler import NOT_VERY_GOOD, VERY_GOOD as SP_GOOD, spoiler_count

    sv = spoiler_count(row, h)
    if sv.decision == SP_GOOD:
        return VERY_GOOD
    if sv.decision == NOT_VERY_GOOD:
        return MERELY_GOOD
    try:
        verdict = badness_first(row, h, vertical=True, limit=config.naive_limit)
    except ExpansionLimitError:
        return UNRESOLVED
    return VERY_GOOD if len(verdict.survivors) == _promise_size(row) else MERELY_GOOD


def expand_merely_good(
    row: WildcardRow,
    ki: SetFamily,
    h: Hypergraph,
    choose_bubble=None,
) -> list[WildcardRow]:
    """Replace a merely-good row by disjoint very-good e-rows, same MHS.

    One bubble is expanded per step (son j: earlier elements 0, element j
    1, later ones free), killers are inherited as K0 plus the slice cut at
    element j, and sons are finalized, dropped, or recursed on according
    to empty killers / badness / neither.  The fast not-bad check reuses
    the father's noncover rows.
    """
    if len(ki) == 0:
        return [row]
    if not row.bubbles:
        return []  # a killed 012-row has its single member non-minimal
    if choose_bubble is not None:
        bi = choose_bubble(row, ki)
    else:
        # heuristic: maximize the killers untouched by the expanded bubble
        bi = max(range(len(row.bubbles)),
                 key=lambda i: sum(1 for y in ki.members if not y & row.bubbles[i]))
    bubble = row.bubbles[bi]
    rest = row.bubbles[:bi] + row.bubbles[bi + 1:]
    k0 = tuple(y for y in ki.members if not y & bubble)
    nc_father = enumerate_nc(ki).rows

    finals: list[WildcardRow] = []
    elems = vertices_of(bubble)
    for j, v in enumerate(elems):
        bit = 1 << (v - 1)
        earlier = 0
        for u in elems[:j]:
            earlier |= 1 << (u - 1)
        later = bubble & ~bit & ~earlier
        son = WildcardRow.make(
            row.width, KIND_E,
            zeros=row.zeros | earlier,
            ones=row.ones | bit,
            twos=row.twos | later,
            bubbles=rest,
        )
        ki_son = SetFamily(row.width,
                           k0 + tuple(y for y in ki.members if y & bubble == bit))
        if len(ki_son) == 0:
            finals.append(son)
            continue
        not_bad = any(not e_intersect_n_empty(son, sigma) for sigma in nc_father)
        if not not_bad:
            nc_son = enumerate_nc(ki_son).rows
            if all(e_intersect_n_empty(son, sigma) for sigma in nc_son):
                continue  # bad: no minimal hitting set survives in this son
        finals.extend(expand_merely_good(son, ki_son, h, choose_bubble))
    return finals


def estimate_total(
    verdicts: list[RowVerdict],
    s: SemifinalSet,
    total_rows: int | None = None,
) -> dict:
    """Estimated |MHS|: exact for very-good/bad rows, alpha/n-scaled for
    merely-good ones; extrapolated by R/sampledRows for prefix runs."""
    very = merely = variance = 0.0
    unresolved = 0
    for v in verdicts:
        size = _promise_size(s.rows[v.row_index])
        if v.cls == VERY_GOOD:
            very += size
        elif v.cls == MERELY_GOOD:
            if v.alpha is None:
                merely += size
            else:
                n = v.samples
                merely += v.alpha / n * size
                # Laplace-smoothed binomial variance: never zero for a row
                # whose dud fraction is only known through sampling
                p = (v.alpha + 1) / (n + 2)
                variance += size * size * p * (1 - p) / n
        elif v.cls == UNRESOLVED:
            unresolved += 1
    total = very + merely
    r = total_rows if total_rows is not None else len(s.rows)
    factor = r / len(verdicts) if verdicts else 1.0
    return {
        "veryGoodContribution": very,
        "merelyGoodContribution": merely,
        "unresolvedRows": unresolved,
        "sampledRows": len(verdicts),
        "totalRows": r,
        "extrapolationFactor": factor,
        "estimate": total * factor,
        "standardError": factor * variance ** 0.5,
    }


def minhit(
    h: Hypergraph,
    config: DriverConfig | None = None,
    mnmc: MinNotMCFamily | None = None,
) -> MinhitResult:
    """Full pipeline; exact |MHS(H)| in first grade, an estimate in second.

    A precomputed (e.g. cached) MinNotMC family can be passed in.
    """
    config = config or DriverConfig()
    h.require_full()
    t0 = time.perf_counter()
    s = enumerate_hs(h, cutoff=config.cutoff,
                     use_feasibility=config.use_feasibility,
                     shuffle_seed=config.shuffle_seed)
    t_rows = time.perf_counter() - t0
    if config.use_mnmc and mnmc is None:
        mnmc = min_not_mc(h)
    elif not config.use_mnmc:
        mnmc = None
    t_mnmc = time.perf_counter() - t0 - t_rows
    verdicts = classify_rows(h, s, mnmc, config)

    mu, mu_rows = minimum_rows(s)
    minimum_count = sum(_promise_size(r) for r in mu_rows)
    counts = {VERY_GOOD: 0, MERELY_GOOD: 0, BAD: 0, UNRESOLVED: 0}
    for v in verdicts:
        counts[v.cls] += 1
    r_count = len(s.rows)
    stats = {
        "R": r_count,
        "mu": mu,
        "minimumCount": minimum_count,
        "avgPromise": (sum(v.promise_size for v in verdicts) / len(verdicts))
        if verdicts else 0.0,
        "avgDegree": (sum(v.degree for v in verdicts) / len(verdicts))
        if verdicts else 0.0,
        "minNotMCSize": len(mnmc) if mnmc is not None else None,
        "percentages": {
            k: 100.0 * counts[k] / len(verdicts) if verdicts else 0.0
            for k in (VERY_GOOD, MERELY_GOOD, BAD)
        },
        "rowSeconds": t_rows,
        "minNotMCSeconds": t_mnmc,
    }

    if config.grade == "second":
        est = estimate_total(verdicts, s)
        stats["estimation"] = est
        stats["totalSeconds"] = time.perf_counter() - t0
        return MinhitResult(None, None, est["estimate"], verdicts, stats)

    if counts[UNRESOLVED]:
        raise UnresolvedVerdictError(
            f"{counts[UNRESOLVED]} rows unresolved; rerun with MinNotMC enabled")
    finals: list[WildcardRow] = []
    for v in verdicts:
        row = s.rows[v.row_index]
        if v.cls == VERY_GOOD:
            finals.append(finalize_e_to_g(row))
        elif v.cls == MERELY_GOOD:
            if mnmc is not None:
                ki = killers(row, mnmc)
                finals.extend(finalize_e_to_g(e) for e in
                              expand_merely_good(row, ki, h))
            else:
                finals.extend(_naive_survivor_rows(row, h, config.naive_limit))
    exact = sum(row_cardinality(r) for r in finals)
    stats["totalSeconds"] = time.perf_counter() - t0
    return MinhitResult(tuple(finals), exact, float(exact), verdicts, stats)


def _naive_survivor_rows(row, h, limit) -> list[WildcardRow]:
    """Fallback without MinNotMC: one 01-row per surviving promise member."""
    verdict = badness_first(row, h, vertical=True, limit=limit)
    fm = full_mask(row.width)
    return [
        WildcardRow.make(row.width, "g", zeros=fm & ~z, ones=z)
        for z in verdict.survivors.members
    ]


def random_hypergraph(sig: Signature) -> Hypergraph:
    """h distinct uniform k-edges on [w], repaired to cover the ground set."""
    if sig.k * sig.h < sig.w:
        raise MinhitError("k*h < w: the edges cannot cover the ground set")
    if comb(sig.w, sig.k) < sig.h:
        raise MinhitError("fewer than h distinct k-edges exist on [w]")
    rng = random.Random(sig.seed)
    universe = list(range(1, sig.w + 1))
    edges: list[int] = []
    seen = set()
    while len(edges) < sig.h:
        e = 0
        for v in rng.sample(universe, sig.k):
            e |= 1 << (v - 1)
        if e not in seen:
            seen.add(e)
            edges.append(e)
    fm = full_mask(sig.w)
    for _ in range(10_000):
        covered = 0
        for e in edges:
            covered |= e
        missing = fm & ~covered
        if not missing:
            break
        v = next(iter_bits(missing))
        # swap a random element of a random edge for the uncovered vertex
        i = rng.randrange(len(edges))
        old = list(iter_bits(edges[i]))
        a = rng.choice(old)
        cand = (edges[i] & ~(1 << (a - 1))) | (1 << (v - 1))
        if cand in seen:
            continue
        seen.discard(edges[i])
        seen.add(cand)
        edges[i] = cand
    else:
        raise MinhitError("could not repair the hypergraph to fullness")
    return Hypergraph(sig.w, tuple(edges))


def sample_mhs(
    h: Hypergraph,
    n: int,
    seed: int | None = None,
    s: SemifinalSet | None = None,
    max_rejections: int = 1_000_000,
) -> SetFamily:
    """n uniform samples from MHS(H): promise-weighted row choice plus
    rejection of non-minimal picks."""
    if s is None:
        s = enumerate_hs(h)
    rng = random.Random(seed)
    weights = [_promise_size(r) for r in s.rows]
    elems = [[vertices_of(b) for b in r.bubbles] for r in s.rows]
    out = []
    rejections = 0
    while len(out) < n:
        i = rng.choices(range(len(s.rows)), weights=weights)[0]
        z = s.rows[i].ones
        for bubble in elems[i]:
            z |= 1 << (rng.choice(bubble) - 1)
        if mc_dud_test(z, h):
            out.append(z)
        else:
            rejections += 1
            if rejections > max_rejections:
                raise MinhitError("rejection sampling stalled; too few minimal sets")
    return SetFamily(h.width, tuple(out))
