"""Command-line front end.

Exit codes: 0 success (any verdict), 1 usage error, 2 invalid input file,
3 internal invariant failure.  Every error prints one ``error: <Reason>:
<message>`` line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, fileformat, oracle, search
from .census import census
from .errors import MatroidError
from .screen import bound, format_fraction, screen

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _decimal(q) -> str:
    return f"{float(q):.5g}"


def _load(path):
    try:
        return fileformat.load(path)
    except OSError as exc:
        raise fileformat.SemanticError(exc) from exc


def cmd_census(args) -> int:
    M = _load(args.file)
    report = census(M, profiles=args.profiles, workers=args.workers)
    if args.json:
        _emit_json(report.to_dict())
        return EXIT_OK
    c = report.counts
    print(f"{M.name or args.file}: n={M.n} r={M.r} hyperplanes={report.total}")
    print(f"independent={c['independent']} simple={c['simple']} multiple={c['multiple']}")
    for h in report.hyperplanes:
        print(f"  {{{' '.join(map(str, h.elements))}}}  {h.classification.value}")
    if report.per_subset_profiles is not None:
        for S, (s, m) in report.per_subset_profiles.items():
            print(f"  profile {{{' '.join(map(str, S))}}}: simple={s} multiple={m}")
    return EXIT_OK


def cmd_screen(args) -> int:
    M = _load(args.file)
    v = screen(M)
    if args.json:
        _emit_json(v.to_dict())
        return EXIT_OK
    print(f"{M.name or args.file}: n={M.n} r={M.r}")
    if v.bound is not None:
        print(f"bound {format_fraction(v.bound)} (~{_decimal(v.bound)})")
    if v.independent_count is not None:
        print(f"independent hyperplanes {v.independent_count}")
    if v.applicable:
        print(f"threshold {format_fraction(v.threshold)} ({v.threshold_kind})")
    else:
        print(f"not applicable: {v.reason_if_not}")
    print(f"verdict {v.verdict}")
    return EXIT_OK


def cmd_bound(args) -> int:
    q = bound(args.n, args.r)
    if args.json:
        _emit_json({"schema": "pav-bound-v1", "n": args.n, "r": args.r, "bound": format_fraction(q)})
    else:
        print(f"{format_fraction(q)} (~{_decimal(q)})")
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.names():
            print(name)
        return EXIT_OK
    if not args.name:
        raise UsageError(f"catalog {args.action} needs a NAME")
    entry = catalog.get(args.name)
    M = entry.matroid
    if args.action == "show":
        info = {
            "schema": "pav-catalog-v1",
            "name": entry.name,
            "n": M.n,
            "r": M.r,
            "provenance": entry.provenance,
            "expected_census": entry.expected_census,
            "paving": M.is_paving(),
            "sparse_paving": M.is_sparse_paving(),
        }
        if args.json:
            _emit_json(info)
        else:
            for k, v in info.items():
                if k != "schema":
                    print(f"{k}: {v}")
        return EXIT_OK
    text = fileformat.serialize(fileformat.from_matroid(M, entry.name))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_search(args) -> int:
    params = {"n": args.n, "rank": args.rank, "mode": args.mode, "seed": args.seed, "budget": args.budget}
    records = search.scan(args.n, args.rank, args.mode, args.seed, args.budget, workers=args.workers)
    for rec in records:
        if rec.independent_count > rec.hyperplane_total:
            raise AssertionError(f"record with {rec.independent_count} > {rec.hyperplane_total}")
    search.write_jsonl(args.out, params, records)
    low = min(rec.independent_count for rec in records)
    flagged = sum(rec.not_orientable for rec in records)
    print(f"{len(records)} records written to {args.out}; min independent={low}; not_orientable={flagged}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(oracle.SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        res = oracle.SUITES[name]()
        failed += len(res.failed)
        print(f"{name}: passed={res.passed} failed={len(res.failed)}")
        for label in res.failed:
            print(f"  FAIL {label}")
    return EXIT_OK if failed == 0 else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pavingtools", description="Hyperplane census and orientability screen for paving matroids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("census", help="enumerate and classify hyperplanes")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.add_argument("--profiles", action="store_true", help="include (r-2)-subset profiles")
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_census)

    s = sub.add_parser("screen", help="apply the independent-hyperplane bound")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_screen)

    b = sub.add_parser("bound", help="print the exact bound f(n, r)")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bound)

    k = sub.add_parser("catalog", help="list, show or export reference matroids")
    k.add_argument("action", choices=["list", "show", "export"])
    k.add_argument("name", nargs="?")
    k.add_argument("--json", action="store_true")
    k.add_argument("--out")
    k.set_defaults(func=cmd_catalog)

    g = sub.add_parser("search", help="generate sparse paving matroids and record censuses")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--rank", type=int, required=True)
    g.add_argument("--mode", choices=search.MODES, default="random")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--budget", type=int, default=1)
    g.add_argument("--out", required=True)
    g.add_argument("--workers", type=int, default=1)
    g.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("--suite", choices=[*oracle.SUITES, "all"], required=True)
    v.set_defaults(func=cmd_verify)
    return p


def _fail(code: int, reason: str, message: str) -> int:
    message = " ".join(str(message).split())
    sys.stderr.write(f"error: {reason}: {message}\n")
    return code


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be at least 1")
        return args.func(args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "UsageError", exc)
    except fileformat.FileSyntaxError as exc:
        return _fail(EXIT_INPUT, "SyntaxError", exc)
    except fileformat.SemanticError as exc:
        return _fail(EXIT_INPUT, "SemanticError", exc)
    except MatroidError as exc:
        return _fail(EXIT_USAGE, type(exc).__name__, exc)
    except AssertionError as exc:
        return _fail(EXIT_INVARIANT, "InvariantFailure", exc)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
