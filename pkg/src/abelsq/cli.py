"""Command-line entry point: count, minimize, tables, verify, effective.

Exit codes: 0 success / verified, 1 counterexample or table regression,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import closed_forms as cf
from . import search, tables
from .cache import ResultCache
from .counter import census, circular_census, circular_squares, distinct_abelian_squares, occurrences
from .words import WordSyntaxError, format_word, parse_word

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_USAGE = 2

log = logging.getLogger("abelsq")

VERIFY_TARGETS = ("fici_saarela", "extended", "section5", "closed_forms", "two_a", "effective", "identities")


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_count(args) -> int:
    try:
        w = parse_word(args.word)
    except WordSyntaxError as exc:
        raise UsageError(str(exc)) from exc
    if args.circular:
        if not len(w):
            raise UsageError("circular census needs a non-empty word")
        c = circular_census(w)
        members = circular_squares(w)
    else:
        c = census(w)
        members = distinct_abelian_squares(w)
    if args.format == "json":
        payload = {
            "word": w.text,
            "length": len(w),
            "circular": args.circular,
            "theta": c.theta,
            "trivial": c.trivial,
            "nontrivial": c.nontrivial,
            "inequivalent": c.inequivalent,
        }
        if args.factors:
            payload["factors"] = [f.text for f in members.sorted()]
        if args.occurrences and not args.circular:
            payload["occurrences"] = [list(o) for o in occurrences(w)]
        _emit(json.dumps(payload))
        return EXIT_OK
    lines = [c.header()]
    if args.factors:
        lines += [f.text for f in members.sorted()]
    if args.occurrences and not args.circular:
        lines += [f"{o.start} {o.half_length} {w.factor(o.start, o.end).text}" for o in occurrences(w)]
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_minimize(args) -> int:
    if args.n < 0 or not 0 <= args.x <= args.n:
        raise UsageError(f"need 0 <= x <= n, got x={args.x}, n={args.n}")
    cache = ResultCache(args.cache) if args.cache else None
    try:
        result = search.min_over_parikh(
            args.x,
            args.n,
            use_symmetry=not args.no_symmetry,
            workers=args.threads,
            force=args.force,
            cache=cache,
        )
    except (search.BudgetExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if cache is not None and cache.corrupt:
        log.warning("cache had %d corrupt line(s); they were skipped", len(cache.corrupt))
    if args.format == "json":
        _emit(json.dumps(result.to_record()))
    else:
        _emit(
            f"n={result.n} x={result.x} min_theta={result.min_theta} "
            f"minimizers={len(result.minimizers)} examined={result.words_examined}"
        )
        _emit("\n".join(format_word(w, args.runlength) for w in result.minimizers))
    return EXIT_OK


def cmd_tables(args) -> int:
    result = tables.reproduce(args.which, workers=args.threads)
    _emit(tables.render(result, args.format, diff=args.diff))
    if args.diff and not result.ok:
        return EXIT_FOUND
    return EXIT_OK


def _report_text(rep) -> str:
    d = rep.as_dict()
    name = d.get("conjecture_id") or d.get("target")
    lines = [f"{name}: {d['verdict']}"]
    for k in ("range", "checked", "words_checked", "tight_cases", "counterexample_count", "counterexample_words"):
        if k in d:
            lines.append(f"  {k}: {d[k]}")
    for m in d.get("mismatches", []):
        lines.append(f"  MISMATCH {m}")
    for c in d.get("counterexamples", []):
        lines.append(f"  COUNTEREXAMPLE {c['word']} theta={c['theta']} bound={c['bound']}")
    for note in d.get("notes", []):
        lines.append(f"  note: {note}")
    return "\n".join(lines)


def _report_csv(rep) -> str:
    return "\n".join([search.ReportRow.CSV_HEADER] + [r.csv() for r in rep.rows])


def cmd_verify(args) -> int:
    t = args.target
    if t in ("fici_saarela", "extended"):
        fs, ext = search.verify_fici_saarela(args.nmax, workers=args.threads)
        rep = fs if t == "fici_saarela" else ext
    elif t == "section5":
        if args.nmax < 8:
            raise UsageError("section5 needs --nmax >= 8")
        rep = search.verify_section5(args.nmax, workers=args.threads)
    elif t == "closed_forms":
        rep = search.verify_closed_forms(args.nmax, workers=args.threads)
    elif t == "two_a":
        b = args.bounds
        rep = search.verify_two_a_formula(b, b, b)
    elif t == "effective":
        rep = search.verify_effective(4, args.bounds if args.bounds_given else 40)
    else:
        rep = search.verify_identities()
    if args.format == "json":
        _emit(json.dumps(rep.as_dict()))
    elif args.format == "csv":
        _emit(_report_csv(rep))
    else:
        _emit(_report_text(rep))
    return EXIT_OK if rep.ok else EXIT_FOUND


def cmd_effective(args) -> int:
    x, y = args.x, args.y
    if x < 3 or y < 3:
        raise UsageError(f"effective words need x, y >= 3, got x={x}, y={y}")
    w = cf.effective_word(x, y)
    c = census(w)
    ea, eb = cf.effective_partition(x), cf.effective_partition(y)
    bound = cf.fici_saarela_bound(x + y)
    payload = {
        "x": x,
        "y": y,
        "word": format_word(w, runlength=True),
        "length": len(w),
        "partition_a": [ea.p, ea.q],
        "partition_b": [eb.p, eb.q],
        "theta": c.theta,
        "nontrivial": c.nontrivial,
        "theta_effective": cf.theta_effective(x, y),
        "fici_saarela_bound": bound,
        "meets_bound": c.theta >= bound,
    }
    extended = [v for v, e in (("x", ea), ("y", eb)) if e.extended]
    if extended:
        payload["formula_extension"] = extended
    _emit(json.dumps(payload))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="abelsq", description="Abelian squares in binary words.")
    p.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="census of one word")
    c.add_argument("word", help="literal (abaab) or run-length (b^9ab^8)")
    c.add_argument("--factors", action="store_true")
    c.add_argument("--occurrences", action="store_true")
    c.add_argument("--circular", action="store_true")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_count)

    m = sub.add_parser("minimize", help="least theta over one Parikh class")
    m.add_argument("-n", type=int, required=True)
    m.add_argument("-x", type=int, required=True)
    m.add_argument("--threads", type=int)
    m.add_argument("--cache", metavar="PATH")
    m.add_argument("--no-symmetry", action="store_true")
    m.add_argument("--force", action="store_true", help="ignore the class-size budget")
    m.add_argument("--runlength", action="store_true")
    m.add_argument("--format", choices=("text", "json"), default="text")
    m.set_defaults(func=cmd_minimize)

    t = sub.add_parser("tables", help="recompute a published table")
    t.add_argument("which", type=int, choices=(1, 2, 3))
    t.add_argument("--diff", action="store_true")
    t.add_argument("--threads", type=int)
    t.add_argument("--format", choices=("text", "json", "csv", "md"), default="text")
    t.set_defaults(func=cmd_tables)

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("--nmax", type=int, default=search.DEFAULT_NMAX)
    v.add_argument("--bounds", type=int)
    v.add_argument("--threads", type=int)
    v.add_argument("--format", choices=("text", "json", "csv"), default="text")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("effective", help="effective word for x a's and y b's")
    e.add_argument("x", type=int)
    e.add_argument("y", type=int)
    e.set_defaults(func=cmd_effective)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if getattr(args, "threads", None) is not None and args.threads < 1:
        parser.print_usage(sys.stderr)
        sys.stderr.write("abelsq: error: --threads must be positive\n")
        return EXIT_USAGE
    if args.command == "verify":
        args.bounds_given = args.bounds is not None
        if args.bounds is None:
            args.bounds = 12
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"abelsq: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
