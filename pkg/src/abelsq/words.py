"""Binary words over {a, b}: parsing, Parikh vectors, run-length codec, symmetries."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Sequence, Union


class WordSyntaxError(ValueError):
    """Raised when text cannot be read as a binary word."""


class Letter(str, Enum):
    A = "a"
    B = "b"

    @property
    def complement(self) -> "Letter":
        return Letter.B if self is Letter.A else Letter.A


_SWAP = str.maketrans("ab", "ba")


@dataclass(frozen=True, order=True)
class Word:
    """An immutable finite word over the alphabet {a, b}.

    Positions are 1-based through :meth:`letter`; ``len``, iteration and
    slicing follow normal Python conventions.
    """

    text: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.text, str):
            raise TypeError(f"Word text must be str, got {type(self.text).__name__}")
        if self.text.strip("ab"):
            raise WordSyntaxError(f"not a word over {{a,b}}: {self.text!r}")

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(c) for c in self.text)

    def __getitem__(self, key: Union[int, slice]) -> "Word":
        return Word(self.text[key])

    def __add__(self, other: "Word") -> "Word":
        return Word(self.text + str(other))

    def __mul__(self, k: int) -> "Word":
        return Word(self.text * k)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Word({self.text!r})"

    def letter(self, i: int) -> Letter:
        """Return w[i] using 1-based indexing."""
        if not 1 <= i <= len(self.text):
            raise IndexError(f"position {i} outside 1..{len(self.text)}")
        return Letter(self.text[i - 1])

    def factor(self, i: int, j: int) -> "Word":
        """Return w[i..j] (1-based, inclusive)."""
        return Word(self.text[i - 1 : j])


class ParikhVector(NamedTuple):
    count_a: int
    count_b: int


class Run(NamedTuple):
    letter: Letter
    exponent: int


RunEncoding = tuple[Run, ...]

WordLike = Union[Word, str]

_TOKEN = re.compile(r"([ab])\s*(?:\^\s*([0-9]+))?\s*")


def as_word(w: WordLike) -> Word:
    if isinstance(w, Word):
        return w
    return parse_word(w)


def parse_word(text: str) -> Word:
    """Parse a literal word (``abaab``) or run-length expression (``b^9ab^8``)."""
    if isinstance(text, Word):
        return text
    parts: list[str] = []
    stripped = text.strip()
    pos = 0
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None:
            raise WordSyntaxError(f"unexpected {stripped[pos]!r} at offset {pos} in {text!r}")
        if m.end() < len(stripped) and stripped[m.end()] == "^":
            raise WordSyntaxError(f"malformed '^' at offset {m.end()} in {text!r}")
        letter, exp = m.groups()
        k = 1 if exp is None else int(exp)
        if k <= 0:
            raise WordSyntaxError(f"exponent must be positive in {text!r}")
        parts.append(letter * k)
        pos = m.end()
    return Word("".join(parts))


def format_word(w: WordLike, runlength: bool = False) -> str:
    w = as_word(w)
    if not runlength:
        return w.text
    return "".join(
        r.letter.value if r.exponent == 1 else f"{r.letter.value}^{r.exponent}"
        for r in runs(w)
    )


def parikh(w: WordLike) -> ParikhVector:
    text = str(w)
    a = text.count("a")
    return ParikhVector(a, len(text) - a)


def complement(w: WordLike) -> Word:
    return Word(str(w).translate(_SWAP))


def reverse(w: WordLike) -> Word:
    return Word(str(w)[::-1])


def conjugate(w: WordLike, split: int) -> Word:
    """Return vu where w = uv and |u| = split."""
    text = str(w)
    if not 0 <= split <= len(text):
        raise ValueError(f"split {split} outside 0..{len(text)}")
    return Word(text[split:] + text[:split])


def runs(w: WordLike) -> RunEncoding:
    text = str(w)
    out: list[Run] = []
    i = 0
    while i < len(text):
        j = i
        while j < len(text) and text[j] == text[i]:
            j += 1
        out.append(Run(Letter(text[i]), j - i))
        i = j
    return tuple(out)


def build_from_runs(encoding: Sequence[tuple[Union[Letter, str], int]]) -> Word:
    parts = []
    prev = None
    for letter, exponent in encoding:
        letter = Letter(letter)
        if exponent <= 0:
            raise ValueError(f"run exponent must be positive, got {exponent}")
        if letter == prev:
            raise ValueError(f"adjacent runs share letter {letter.value!r}")
        parts.append(letter.value * exponent)
        prev = letter
    return Word("".join(parts))


def from_shape(*blocks: tuple[str, int]) -> Word:
    """Build a word from (letter, exponent) blocks, eliding zero exponents and
    merging neighbours that end up adjacent with the same letter."""
    return Word("".join(letter * k for letter, k in blocks if k > 0))


def max_run(w: WordLike, letter: Union[Letter, str]) -> int:
    letter = Letter(letter)
    return max((r.exponent for r in runs(w) if r.letter is letter), default=0)
