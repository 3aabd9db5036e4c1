"""Command-line front end.

Subcommands: gen, ehs, hs, mhs, minnotmc, classify, sample, matchings,
count.  Hypergraphs and set families travel as text files (``w h`` header,
one ascending vertex list per line, ``#`` comments, 1-based vertices); rows
are printed in token form.  Exit codes: 0 ok, 1 usage error, 2 parse
error, 3 unresolved verdicts.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .driver import (
    DriverConfig,
    Signature,
    minhit,
    random_hypergraph,
    sample_mhs,
)
from .eengine import enumerate_hs
from .errors import FileFormatError, MinhitError, UnresolvedVerdictError
from .exact import enumerate_ehs, stars_hypergraph
from .io import (
    parse_graph_edges,
    parse_hypergraph,
    parse_mnmc_cache,
    serialize_family,
    serialize_hypergraph,
    serialize_mnmc_cache,
)
from .mc import MinNotMCFamily, min_not_mc
from .reduction import inflate_rows, reduce_hypergraph
from .rows import row_cardinality, row_to_json, row_to_tokens
from .vlayout import build_matrix


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="minhit", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, with_input=True):
        sp = sub.add_parser(name, help=help_)
        if with_input:
            sp.add_argument("input", help="hypergraph file")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    sp = add("gen", "write a random full hypergraph", with_input=False)
    sp.add_argument("w", type=int)
    sp.add_argument("h", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output", help="output file (default stdout)")

    sp = add("ehs", "all exact hitting sets as 01g-rows")
    sp.add_argument("--no-feasibility", action="store_true")

    sp = add("hs", "all hitting sets as 012e-rows")
    sp.add_argument("--cutoff", type=int, help="drop rows of degree above this")
    sp.add_argument("--no-feasibility", action="store_true")

    for name in ("mhs", "classify", "count"):
        sp = add(name, {
            "mhs": "all minimal hitting sets (rows + count, or estimate)",
            "classify": "per-row verdict table and stats, no expansion",
            "count": "count only, no row output",
        }[name])
        if name == "mhs":
            sp.add_argument("--grade", choices=("first", "second"), default="first")
            sp.add_argument("--reduce", action="store_true",
                            help="quotient equivalent vertices first")
        if name == "count":
            sp.add_argument("--op", choices=("ehs", "hs", "mhs"), default="mhs")
        sp.add_argument("--samples", type=int, default=20)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--cutoff", type=int)
        sp.add_argument("--no-feasibility", action="store_true")
        sp.add_argument("--no-mnmc", action="store_true",
                        help="classify without the minimal-non-MC filter")
        sp.add_argument("--mnmc-cache", help="cache file for the MinNotMC family")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--badness", choices=("auto", "first", "second", "third"),
                        default="auto", help=argparse.SUPPRESS)

    sp = add("minnotmc", "minimal non-MC sets as a set-family file")
    sp.add_argument("-o", "--output", help="also write a cache file")

    sp = add("sample", "uniform minimal hitting sets")
    sp.add_argument("n", type=int)
    sp.add_argument("--seed", type=int)

    sp = add("matchings", "perfect matchings of a graph (edge-list file)")
    sp.add_argument("--no-feasibility", action="store_true")
    return p


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from None


def _load_hypergraph(args):
    text = _read(args.input)
    h = parse_hypergraph(text)
    if not h.is_full():
        print("warning: hypergraph is not full "
              "(some vertex lies in no edge)", file=sys.stderr)
    return h, text


def _load_mnmc(h, text, args) -> MinNotMCFamily | None:
    if getattr(args, "no_mnmc", False):
        return None
    cache = getattr(args, "mnmc_cache", None)
    if cache and Path(cache).exists():
        fam = parse_mnmc_cache(_read(cache), text)
        if fam is not None:
            return MinNotMCFamily(fam, build_matrix(fam))
    mnmc = min_not_mc(h)
    if cache:
        Path(cache).write_text(serialize_mnmc_cache(mnmc.family, text))
    return mnmc


def _emit(args, payload: dict, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _rows_payload(rows, count):
    return {"rows": [row_to_json(r) for r in rows], "count": count}


def _config(args) -> DriverConfig:
    return DriverConfig(
        samples=args.samples,
        seed=args.seed,
        use_mnmc=not args.no_mnmc,
        cutoff=args.cutoff,
        use_feasibility=not args.no_feasibility,
        workers=args.workers,
    )


def _verdict_lines(verdicts):
    for v in verdicts:
        alpha = "-" if v.alpha is None else f"{v.alpha}/{v.samples}"
        yield (f"row {v.row_index + 1} {v.cls} degree {v.degree} "
               f"promise {v.promise_size} alpha {alpha} likely {v.likely}")


def _verdict_json(v):
    return {"rowIndex": v.row_index, "class": v.cls, "alpha": v.alpha,
            "samples": v.samples, "likely": v.likely,
            "promiseSize": v.promise_size, "degree": v.degree}


def _stats_lines(stats):
    yield f"rows {stats['R']}"
    yield f"mu {stats['mu']}"
    yield f"minimumCount {stats['minimumCount']}"
    if stats["minNotMCSize"] is not None:
        yield f"minNotMC {stats['minNotMCSize']}"
    pct = stats["percentages"]
    yield ("percent veryGood {veryGood:.1f} merelyGood {merelyGood:.1f} "
           "bad {bad:.1f}".format(**pct))


def _run(args) -> int:
    cmd = args.command

    if cmd == "gen":
        h = random_hypergraph(Signature(args.w, args.h, args.k, args.seed))
        text = serialize_hypergraph(h)
        if args.output:
            Path(args.output).write_text(text)
        else:
            sys.stdout.write(text)
        return 0

    if cmd == "matchings":
        edges = parse_graph_edges(_read(args.input))
        h = stars_hypergraph(edges)
        run = enumerate_ehs(h, use_feasibility=not args.no_feasibility)
        _emit(args, _rows_payload(run.final_rows, run.total_count),
              [row_to_tokens(r) for r in run.final_rows] + [f"count {run.total_count}"])
        return 0

    h, text = _load_hypergraph(args)

    if cmd == "ehs":
        run = enumerate_ehs(h, use_feasibility=not args.no_feasibility)
        _emit(args, _rows_payload(run.final_rows, run.total_count),
              [row_to_tokens(r) for r in run.final_rows] + [f"count {run.total_count}"])
        return 0

    if cmd == "hs":
        s = enumerate_hs(h, cutoff=args.cutoff,
                         use_feasibility=not args.no_feasibility)
        count = sum(row_cardinality(r) for r in s.rows)
        _emit(args, _rows_payload(s.rows, count),
              [row_to_tokens(r) for r in s.rows] + [f"count {count}"])
        return 0

    if cmd == "minnotmc":
        mnmc = min_not_mc(h)
        body = serialize_family(mnmc.family)
        if args.output:
            Path(args.output).write_text(serialize_mnmc_cache(mnmc.family, text))
        _emit(args, {"family": mnmc.family.to_sets(), "size": len(mnmc)},
              body.splitlines())
        return 0

    if cmd == "sample":
        fam = sample_mhs(h, args.n, seed=args.seed)
        _emit(args, {"samples": fam.to_sets()},
              [" ".join(map(str, s)) for s in fam.to_sets()])
        return 0

    if cmd == "classify":
        cfg = _config(args)
        cfg.grade = "second"
        res = minhit(h, cfg, mnmc=_load_mnmc(h, text, args))
        _emit(args,
              {"verdicts": [_verdict_json(v) for v in res.verdicts],
               "estimate": res.estimate, "stats": res.stats},
              list(_verdict_lines(res.verdicts))
              + [f"estimate {res.estimate:.2f}"] + list(_stats_lines(res.stats)))
        return 0

    if cmd == "count":
        if args.op == "ehs":
            n = enumerate_ehs(h, use_feasibility=not args.no_feasibility).total_count
        elif args.op == "hs":
            s = enumerate_hs(h, cutoff=args.cutoff,
                             use_feasibility=not args.no_feasibility)
            n = sum(row_cardinality(r) for r in s.rows)
        else:
            res = minhit(h, _config(args), mnmc=_load_mnmc(h, text, args))
            n = res.exact_count
        _emit(args, {"count": n}, [str(n)])
        return 0

    # mhs
    cfg = _config(args)
    cfg.grade = args.grade
    cmap = None
    if args.reduce:
        h, cmap = reduce_hypergraph(h)
        text = serialize_hypergraph(h)  # cache key follows the quotient
    res = minhit(h, cfg, mnmc=_load_mnmc(h, text, args))
    if args.grade == "second":
        _emit(args,
              {"verdicts": [_verdict_json(v) for v in res.verdicts],
               "estimate": res.estimate, "stats": res.stats},
              list(_verdict_lines(res.verdicts))
              + [f"estimate {res.estimate:.2f}"] + list(_stats_lines(res.stats)))
        return 0
    rows = res.final_rows
    if cmap is not None:
        rows = inflate_rows(rows, cmap)
        count = sum(row_cardinality(r) for r in rows)
    else:
        count = res.exact_count
    _emit(args, {**_rows_payload(rows, count), "stats": res.stats},
          [row_to_tokens(r) for r in rows] + [f"count {count}"]
          + list(_stats_lines(res.stats)))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except FileFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except UnresolvedVerdictError as exc:
        print(f"unresolved: {exc}", file=sys.stderr)
        return 3
    except MinhitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
