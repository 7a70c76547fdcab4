"""Detection, enumeration and counting of abelian squares in binary words."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, NamedTuple, Optional

from .words import Word, WordLike, as_word, max_run, parikh, runs


class Occurrence(NamedTuple):
    """An abelian square located at w[start .. start + 2*half_length - 1] (1-based)."""

    start: int
    half_length: int

    @property
    def end(self) -> int:
        return self.start + 2 * self.half_length - 1


@dataclass(frozen=True)
class FactorSet:
    members: frozenset[Word]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.sorted())

    def __contains__(self, item: object) -> bool:
        if isinstance(item, str):
            item = Word(item)
        return item in self.members

    def sorted(self) -> list[Word]:
        """Members ordered by (length, lexicographic)."""
        return sorted(self.members, key=lambda f: (len(f), f.text))

    def texts(self) -> set[str]:
        return {f.text for f in self.members}


@dataclass(frozen=True)
class SquareCensus:
    theta: int
    trivial: int
    nontrivial: int
    inequivalent: int

    def header(self) -> str:
        return (
            f"theta={self.theta} trivial={self.trivial} "
            f"nontrivial={self.nontrivial} inequivalent={self.inequivalent}"
        )


def _a_prefix_counts(text: str) -> list[int]:
    return list(accumulate((c == "a" for c in text), initial=0))


def is_abelian_square(w: WordLike) -> bool:
    """Even, non-empty, and both halves hold the same number of a's."""
    text = str(w)
    n = len(text)
    if n == 0 or n % 2:
        return False
    h = n // 2
    return text[:h].count("a") == text[h:].count("a")


def is_trivial(w: WordLike) -> bool:
    """True for a^{2i} and b^{2i}; the empty word is not a square at all."""
    text = str(w)
    return bool(text) and len(set(text)) == 1


def occurrences(w: WordLike) -> list[Occurrence]:
    """Every (start, p) whose factor of length 2p is an abelian square.

    Halves have equal length, so equal a-counts is enough; each check is a
    constant-time lookup into the prefix counts.
    """
    text = str(w)
    n = len(text)
    pre = _a_prefix_counts(text)
    out = []
    for s in range(n):
        for p in range(1, (n - s) // 2 + 1):
            if pre[s + p] - pre[s] == pre[s + 2 * p] - pre[s + p]:
                out.append(Occurrence(s + 1, p))
    return out


def _square_texts(text: str) -> set[str]:
    n = len(text)
    pre = _a_prefix_counts(text)
    found = set()
    for s in range(n):
        for p in range(1, (n - s) // 2 + 1):
            if pre[s + p] - pre[s] == pre[s + 2 * p] - pre[s + p]:
                found.add(text[s : s + 2 * p])
    return found


def distinct_abelian_squares(w: WordLike) -> FactorSet:
    return FactorSet(frozenset(Word(t) for t in _square_texts(str(w))))


def _census_of(members: set[str]) -> SquareCensus:
    trivial = sum(1 for t in members if len(set(t)) == 1)
    classes = {parikh(t) for t in members}
    return SquareCensus(
        theta=len(members),
        trivial=trivial,
        nontrivial=len(members) - trivial,
        inequivalent=len(classes),
    )


def census(w: WordLike) -> SquareCensus:
    return _census_of(_square_texts(str(w)))


def theta(w: WordLike) -> int:
    return len(_square_texts(str(w)))


def trivial_count_from_runs(w: WordLike) -> int:
    return max_run(w, "a") // 2 + max_run(w, "b") // 2


def equivalent(u: WordLike, v: WordLike) -> bool:
    """Abelian squares are equivalent when their Parikh vectors agree."""
    for f in (u, v):
        if not is_abelian_square(f):
            raise ValueError(f"{str(f)!r} is not an abelian square")
    return parikh(u) == parikh(v)


def circular_factors(w: WordLike) -> set[str]:
    """Factors of the circular word: every start, lengths 1..|w|, no multi-wrap."""
    text = str(w)
    n = len(text)
    doubled = text + text
    return {doubled[s : s + ln] for s in range(n) for ln in range(1, n + 1)}


def circular_squares(w: WordLike) -> FactorSet:
    text = str(w)
    if not text:
        raise ValueError("circular census needs a non-empty word")
    return FactorSet(
        frozenset(Word(f) for f in circular_factors(text) if is_abelian_square(f))
    )


def circular_census(w: WordLike) -> SquareCensus:
    return _census_of(circular_squares(w).texts())


def five_run_witness(w: WordLike) -> Optional[tuple[Word, Occurrence]]:
    """Locate a non-trivial abelian square forced by five alternating runs.

    Uses the leftmost window x^i1 y^j1 x^i2 y^j2 x^i3 of consecutive runs.
    With j = min(j1, j2): y^j x^i2 y^j if i2 is even; otherwise x y^j x^i2 y^j
    when j1 <= j2, and its mirror y^j x^i2 y^j x when j1 > j2 (the leading x
    would not sit next to a block of exactly j letters y otherwise).
    """
    w = as_word(w)
    rs = runs(w)
    if len(rs) < 5:
        return None
    starts = [0]
    for r in rs:
        starts.append(starts[-1] + r.exponent)
    j1, i2, j2 = rs[1].exponent, rs[2].exponent, rs[3].exponent
    j = min(j1, j2)
    mid = starts[2]  # 0-based start of the x^i2 block
    left = mid - j
    if i2 % 2 == 0:
        begin, length = left, 2 * j + i2
    elif j1 <= j2:
        begin, length = left - 1, 2 * j + i2 + 1
    else:
        begin, length = left, 2 * j + i2 + 1
    witness = w[begin : begin + length]
    return witness, Occurrence(begin + 1, length // 2)
