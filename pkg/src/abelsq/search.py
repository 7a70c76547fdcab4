"""Exhaustive, symmetry-pruned search over Parikh classes of binary words."""

from __future__ import annotations

import logging
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from . import kernel
from .closed_forms import (
    BoundKind,
    M_closed,
    NoClosedForm,
    conjectured_min,
    extremal_words,
    fici_saarela_bound,
    is_boundary,
    one_a_balanced_pair,
    two_a_decomposition,
    TwoARunShape,
)
from .counter import census, distinct_abelian_squares
from .words import Word, complement, reverse

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 2**30
DEFAULT_NMAX = 24
EXAMPLE_CAP = 64


class BudgetExceeded(RuntimeError):
    pass


def resolve_workers(workers: Optional[int] = None) -> int:
    """Flag beats the ABELSQ_THREADS environment variable, which beats cpu count."""
    if workers is None:
        env = os.environ.get("ABELSQ_THREADS")
        if env:
            workers = int(env)
        else:
            workers = os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    return workers


def _check_class(x: int, n: int) -> None:
    if not 0 <= x <= n:
        raise ValueError(f"need 0 <= x <= n, got x={x}, n={n}")
    if n > kernel.MAX_BITS:
        raise ValueError(f"n={n} exceeds the packed-word limit {kernel.MAX_BITS}")


def enumerate_parikh_class(x: int, n: int) -> Iterator[Word]:
    """All words of length n with x a's, lexicographically (a < b)."""
    _check_class(x, n)
    for pos in combinations(range(n), x):
        letters = ["b"] * n
        for p in pos:
            letters[p] = "a"
        yield Word("".join(letters))


@dataclass(frozen=True)
class WorkChunk:
    n: int
    x: int
    prefix: Word
    remaining: int

    @property
    def a_left(self) -> int:
        return self.x - self.prefix.text.count("a")

    @property
    def size(self) -> int:
        if 0 <= self.a_left <= self.remaining:
            return math.comb(self.remaining, self.a_left)
        return 0

    def words(self) -> Iterator[Word]:
        if self.size:
            for tail in enumerate_parikh_class(self.a_left, self.remaining):
                yield self.prefix + tail


def partition_work(x: int, n: int, chunk_count: int) -> list[WorkChunk]:
    """Split the class into 2^L prefix chunks, L = ceil(log2(chunk_count)).

    Infeasible prefixes are kept as empty chunks so the layout depends on
    chunk_count alone.
    """
    _check_class(x, n)
    if chunk_count < 1:
        raise ValueError("chunk_count must be positive")
    plen = min(n, math.ceil(math.log2(chunk_count)))
    return [
        WorkChunk(n, x, kernel.int_to_word(v, plen) if plen else Word(""), n - plen)
        for v in range(1 << plen)
    ]


@dataclass(frozen=True)
class MinimizationResult:
    n: int
    x: int
    min_theta: int
    minimizers: tuple[Word, ...]
    words_examined: int
    elapsed: float = field(default=0.0, compare=False)

    def to_record(self, version: str = kernel.COUNTER_VERSION) -> dict:
        return {
            "schema": 1,
            "version": version,
            "n": self.n,
            "x": self.x,
            "min_theta": self.min_theta,
            "minimizers": [w.text for w in self.minimizers],
            "words_examined": self.words_examined,
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }

    @classmethod
    def from_record(cls, rec: dict) -> "MinimizationResult":
        return cls(
            n=int(rec["n"]),
            x=int(rec["x"]),
            min_theta=int(rec["min_theta"]),
            minimizers=tuple(Word(t) for t in rec["minimizers"]),
            words_examined=int(rec["words_examined"]),
            elapsed=rec["elapsed_ms"] / 1000,
        )

    def payload(self) -> dict:
        """Record without timing, for deterministic comparisons."""
        rec = self.to_record()
        del rec["elapsed_ms"]
        return rec


def _symmetry_mode(x: int, n: int, use_symmetry: bool) -> int:
    if not use_symmetry:
        return kernel.SYM_NONE
    return kernel.SYM_FULL if 2 * x == n else kernel.SYM_REVERSE


def _run_chunk(chunk: WorkChunk, sym: int) -> tuple[int, list[int], int]:
    size = chunk.size
    if size == 0:
        return -1, [], 0
    out = np.empty(size, np.int64)
    prefix = kernel.word_to_int(chunk.prefix)
    best, cnt, examined = kernel.chunk_minimum(
        chunk.n, prefix, len(chunk.prefix), chunk.n - chunk.x, sym, out
    )
    return int(best), out[:cnt].tolist(), int(examined)


def _expand(v: int, n: int, sym: int) -> set[int]:
    orbit = {v}
    if sym != kernel.SYM_NONE:
        orbit.add(int(kernel.reverse_bits(v, n)))
    if sym == kernel.SYM_FULL:
        c = v ^ ((1 << n) - 1)
        orbit.update((c, int(kernel.reverse_bits(c, n))))
    return orbit


def min_over_parikh(
    x: int,
    n: int,
    use_symmetry: bool = True,
    workers: Optional[int] = None,
    chunk_count: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    force: bool = False,
    cache=None,
) -> MinimizationResult:
    """Exact minimum of theta over the class (x a's, length n) and all minimizers.

    With symmetry on, only words that are lexicographically least under
    reverse (and complement, when 2x = n) are evaluated; minimizer orbits are
    re-expanded so the output matches the unpruned search.
    """
    _check_class(x, n)
    if cache is not None:
        hit = cache.get(n, x)
        if hit is not None:
            return hit
    size = math.comb(n, x)
    if size > budget and not force:
        raise BudgetExceeded(f"class (x={x}, n={n}) has {size} words > budget {budget}")
    workers = resolve_workers(workers)
    if chunk_count is None:
        chunk_count = 1 if workers == 1 else 4 * workers
    sym = _symmetry_mode(x, n, use_symmetry)
    chunks = partition_work(x, n, chunk_count)

    t0 = time.perf_counter()
    if workers == 1:
        parts = [_run_chunk(c, sym) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda c: _run_chunk(c, sym), chunks))
    result = _aggregate(x, n, sym, parts, time.perf_counter() - t0)
    if cache is not None:
        cache.store(result)
    return result


def _aggregate(x, n, sym, parts, elapsed) -> MinimizationResult:
    """Merge chunk results; independent of the order chunks completed in."""
    minima = [best for best, _, _ in parts if best >= 0]
    best = min(minima)
    found: set[int] = set()
    for b, ws, _ in parts:
        if b == best:
            for v in ws:
                found |= _expand(v, n, sym)
    examined = sum(e for _, _, e in parts)
    minimizers = tuple(kernel.int_to_word(v, n) for v in sorted(found))
    return MinimizationResult(n, x, best, minimizers, examined, elapsed)


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class ReportRow:
    n: int
    x: int
    min_theta: int
    bound: int
    kind: BoundKind
    tight: bool

    CSV_HEADER = "n,x,min_theta,bound,kind,tight"

    def csv(self) -> str:
        return f"{self.n},{self.x},{self.min_theta},{self.bound},{self.kind.value},{str(self.tight).lower()}"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "x": self.x,
            "min_theta": self.min_theta,
            "bound": self.bound,
            "kind": self.kind.value,
            "tight": self.tight,
        }


@dataclass
class ConjectureReport:
    conjecture_id: str
    n_range: tuple[int, int]
    counterexamples: list[tuple[Word, int, int]] = field(default_factory=list)
    counterexample_count: int = 0
    counterexample_words: int = 0
    tight_cases: int = 0
    words_checked: int = 0
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "counterexample" if self.counterexamples else "holds"

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "conjecture_id": self.conjecture_id,
            "range": list(self.n_range),
            "verdict": self.verdict,
            "counterexample_count": self.counterexample_count,
            "counterexample_words": self.counterexample_words,
            "counterexamples": [
                {"word": w.text, "theta": t, "bound": b} for w, t, b in self.counterexamples
            ],
            "tight_cases": self.tight_cases,
            "words_checked": self.words_checked,
            "rows": [r.as_dict() for r in self.rows],
        }


@dataclass
class VerificationReport:
    target: str
    checked: int = 0
    mismatches: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def verdict(self) -> str:
        return "holds" if self.ok else "mismatch"

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "verdict": self.verdict,
            "checked": self.checked,
            "mismatches": list(self.mismatches),
            "notes": list(self.notes),
            "rows": [r.as_dict() for r in self.rows],
        }


# ---------------------------------------------------------------------------
# Full-length sweeps


@dataclass(frozen=True)
class LengthSweep:
    """Summary of every word of one length, evaluated up to reverse/complement."""

    n: int
    class_min: tuple[int, ...]  # indexed by number of a's
    words_covered: int
    evaluated: int
    tight_words: int
    fs_examples: tuple[int, ...]
    fs_reps: int
    fs_words: int
    ext_examples: tuple[int, ...]
    ext_reps: int
    ext_words: int


def _sweep_chunk(n: int, lo: int, hi: int):
    class_min = np.full(n + 1, -1, np.int64)
    stats = np.zeros(7, np.int64)
    fs_out = np.empty(EXAMPLE_CAP, np.int64)
    ext_out = np.empty(EXAMPLE_CAP, np.int64)
    kernel.sweep_range(n, lo, hi, class_min, stats, fs_out, ext_out)
    return (
        class_min,
        stats,
        fs_out[: min(stats[2], EXAMPLE_CAP)].tolist(),
        ext_out[: min(stats[3], EXAMPLE_CAP)].tolist(),
    )


@lru_cache(maxsize=None)
def _sweep_length_cached(n: int, chunks: int, workers: int) -> LengthSweep:
    # Canonical words satisfy w <= complement(w), so w[1] = a.
    hi = 1 << (n - 1)
    step = -(-hi // chunks)
    bounds = [(lo, min(hi, lo + step)) for lo in range(0, hi, step)]
    if workers == 1:
        parts = [_sweep_chunk(n, lo, up) for lo, up in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _sweep_chunk(n, *b), bounds))

    raw = np.full(n + 1, -1, np.int64)
    stats = np.zeros(7, np.int64)
    fs: list[int] = []
    ext: list[int] = []
    for cm, st, f, e in parts:
        for xa in range(n + 1):
            if cm[xa] >= 0 and (raw[xa] < 0 or cm[xa] < raw[xa]):
                raw[xa] = cm[xa]
        stats += st
        fs.extend(f)
        ext.extend(e)
    # complement maps class x onto class n - x
    class_min = tuple(
        int(min(v for v in (raw[xa], raw[n - xa]) if v >= 0)) for xa in range(n + 1)
    )
    return LengthSweep(
        n=n,
        class_min=class_min,
        words_covered=int(stats[0]),
        evaluated=int(stats[4]),
        tight_words=int(stats[1]),
        fs_examples=tuple(sorted(fs)[:EXAMPLE_CAP]),
        fs_reps=int(stats[2]),
        fs_words=int(stats[5]),
        ext_examples=tuple(sorted(ext)[:EXAMPLE_CAP]),
        ext_reps=int(stats[3]),
        ext_words=int(stats[6]),
    )


def sweep_length(n: int, workers: Optional[int] = None) -> LengthSweep:
    if not 1 <= n <= 40:
        raise ValueError(f"sweep length must be in 1..40, got {n}")
    workers = resolve_workers(workers)
    chunks = 1 if workers == 1 or n < 12 else 8 * workers
    return _sweep_length_cached(n, chunks, workers)


def verify_fici_saarela(
    n_max: int = DEFAULT_NMAX, workers: Optional[int] = None
) -> tuple[ConjectureReport, ConjectureReport]:
    """Check theta >= floor(n/4) for every word of length 1..n_max, and that
    every word meeting the bound exactly has only trivial squares.

    Returns (fici_saarela, extended) reports.
    """
    fs = ConjectureReport("fici_saarela", (1, n_max))
    ext = ConjectureReport("extended", (1, n_max))
    for n in range(1, n_max + 1):
        sw = sweep_length(n, workers)
        bound = fici_saarela_bound(n)
        for rep in (fs, ext):
            rep.words_checked += sw.words_covered
            rep.tight_cases += sw.tight_words
        fs.counterexample_count += sw.fs_reps
        fs.counterexample_words += sw.fs_words
        ext.counterexample_count += sw.ext_reps
        ext.counterexample_words += sw.ext_words
        for report, examples in ((fs, sw.fs_examples), (ext, sw.ext_examples)):
            for v in examples:
                if len(report.counterexamples) < EXAMPLE_CAP:
                    w = kernel.int_to_word(v, n)
                    report.counterexamples.append((w, kernel.theta_of(w), bound))
        m = min(sw.class_min)
        row = ReportRow(n, sw.class_min.index(m), m, bound, BoundKind.FICI_SAARELA, m == bound)
        fs.rows.append(row)
        ext.rows.append(row)
    return fs, ext


def verify_section5(n_max: int = DEFAULT_NMAX, workers: Optional[int] = None) -> ConjectureReport:
    """Check M(x, n) >= conjectured_min(x, n) for every non-boundary class with
    8 <= n <= n_max. Class minima come from the full-length sweep, which
    evaluates every word of length n up to reverse and complement."""
    if n_max < 8:
        raise ValueError("non-boundary classes need n >= 8")
    rep = ConjectureReport("section5", (8, n_max))
    for n in range(8, n_max + 1):
        sw = sweep_length(n, workers)
        for x in range(4, n - 3):
            m = sw.class_min[x]
            bound = conjectured_min(x, n)
            rep.words_checked += math.comb(n, x)
            if m < bound:
                rep.counterexample_count += 1
                mr = min_over_parikh(x, n, workers=workers)
                rep.counterexample_words += len(mr.minimizers)
                for w in mr.minimizers[:EXAMPLE_CAP]:
                    rep.counterexamples.append((w, m, bound))
            if m == bound:
                rep.tight_cases += 1
            rep.rows.append(ReportRow(n, x, m, bound, BoundKind.CONJECTURED_MIN, m == bound))
    return rep


def verify_closed_forms(
    n_max: int = DEFAULT_NMAX, workers: Optional[int] = None
) -> VerificationReport:
    rep = VerificationReport("closed_forms")
    for x in range(4):
        for n in range(max(x, 1), n_max + 1):
            mr = min_over_parikh(x, n, workers=workers)
            exact = M_closed(x, n)
            rep.checked += 1
            rep.rows.append(ReportRow(n, x, mr.min_theta, exact, BoundKind.EXACT_M, mr.min_theta == exact))
            if mr.min_theta != exact:
                rep.mismatches.append(f"M({x},{n}): brute force {mr.min_theta} != closed form {exact}")
            try:
                family = extremal_words(x, n) if x else None
            except NoClosedForm:
                family = None
            if family is not None and set(mr.minimizers) != family:
                got = {w.text for w in mr.minimizers}
                want = {w.text for w in family}
                rep.mismatches.append(
                    f"extremal set x={x} n={n}: missing {sorted(got - want)}, extra {sorted(want - got)}"
                )
            if x == 1 and set(mr.minimizers) != one_a_balanced_pair(n):
                extra = sorted(w.text for w in set(mr.minimizers) - one_a_balanced_pair(n))
                rep.notes.append(f"x=1 n={n}: minimizers beyond b^ceil((n-1)/2) a b^floor((n-1)/2) and reverse: {extra}")
    return rep


def verify_two_a_formula(i_max: int = 12, j_max: int = 12, k_max: int = 12) -> VerificationReport:
    """Compare S0 + |pairs| against the counting oracle on b^i a b^j a b^k."""
    rep = VerificationReport("two_a")
    for i in range(i_max + 1):
        for j in range(j_max + 1):
            for k in range(k_max + 1):
                shape = TwoARunShape(i, j, k)
                dec = two_a_decomposition(shape)
                squares = distinct_abelian_squares(shape.word())
                both = sum(1 for f in squares.members if f.text.count("a") == 2)
                rep.checked += 1
                if dec.theta != len(squares) or dec.S2 != both:
                    rep.mismatches.append(
                        f"shape {shape}: formula {dec} vs oracle theta={len(squares)} S2={both}"
                    )
    return rep


def verify_effective(lo: int = 4, hi: int = 40) -> VerificationReport:
    from .closed_forms import effective_word, theta_effective

    rep = VerificationReport("effective")
    for x in range(lo, hi + 1):
        for y in range(lo, hi + 1):
            w = effective_word(x, y)
            c = census(w)
            rep.checked += 1
            expected = theta_effective(x, y)
            if c.nontrivial:
                rep.mismatches.append(f"effective_word({x},{y}) has {c.nontrivial} non-trivial squares")
            if c.theta != expected:
                rep.mismatches.append(f"effective_word({x},{y}): theta {c.theta} != {expected}")
            if expected < (x + y) // 4:
                rep.mismatches.append(f"theta_effective({x},{y}) below floor((x+y)/4)")
    return rep


def verify_identities(n_lo: int = -100, n_hi: int = 100, lemma_max: int = 200) -> VerificationReport:
    from .closed_forms import identity_eq1_holds, lemma_superadditive_holds, three_a_identity_holds

    rep = VerificationReport("identities")
    for n in range(n_lo, n_hi + 1):
        rep.checked += 1
        if not identity_eq1_holds(n):
            rep.mismatches.append(f"floor(ceil((n-1)/2)/2) != floor(n/4) at n={n}")
    for m in range(1, lemma_max + 1):
        for n in range(1, lemma_max + 1):
            rep.checked += 1
            if not lemma_superadditive_holds(m, n):
                rep.mismatches.append(f"superadditivity fails at m={m}, n={n}")
    for n in range(3, 1001):
        rep.checked += 1
        if not three_a_identity_holds(n) or M_closed(3, n) != (n + 2) // 4:
            rep.mismatches.append(f"three-a identity chain fails at n={n}")
    return rep


def is_symmetric_class_result(result: MinimizationResult) -> bool:
    """Minimizers closed under reverse, and under complement iff 2x = n."""
    ws = set(result.minimizers)
    if any(reverse(w) not in ws for w in ws):
        return False
    closed_c = all(complement(w) in ws for w in ws)
    return closed_c == (2 * result.x == result.n)


__all__ = [
    "BudgetExceeded",
    "ConjectureReport",
    "LengthSweep",
    "MinimizationResult",
    "ReportRow",
    "VerificationReport",
    "WorkChunk",
    "enumerate_parikh_class",
    "is_boundary",
    "min_over_parikh",
    "partition_work",
    "resolve_workers",
    "sweep_length",
    "verify_closed_forms",
    "verify_effective",
    "verify_fici_saarela",
    "verify_identities",
    "verify_section5",
    "verify_two_a_formula",
]
