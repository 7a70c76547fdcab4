import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abelsq.counter import (
    FactorSet,
    Occurrence,
    census,
    circular_census,
    circular_squares,
    distinct_abelian_squares,
    equivalent,
    five_run_witness,
    is_abelian_square,
    is_trivial,
    occurrences,
    theta,
    trivial_count_from_runs,
)
from abelsq.words import Word, complement, parikh, reverse, runs
from oracles import naive_circular_squares, naive_squares

texts = st.text(alphabet="ab", max_size=30)


@pytest.mark.parametrize("text, expected", [("baab", True), ("aba", False), ("abaababa", False), ("", False)])
def test_is_abelian_square(text, expected):
    assert is_abelian_square(Word(text)) is expected


def test_occurrences_examples():
    assert occurrences(Word("aa")) == [Occurrence(1, 1)]
    assert occurrences(Word("abab")) == [Occurrence(1, 2)]
    assert occurrences(Word("")) == []


def test_occurrence_end():
    assert Occurrence(3, 2).end == 6


def test_distinct_squares_of_listing_word():
    got = distinct_abelian_squares(Word("abaababa"))
    assert got.texts() == {"aa", "abab", "baba", "baab", "abaaba", "aababa"}
    assert len(got) == 6


def test_distinct_squares_power_and_empty():
    assert distinct_abelian_squares(Word("bbbbb")).texts() == {"bb", "bbbb"}
    assert len(distinct_abelian_squares(Word("aba"))) == 0


def test_factor_set_order_and_contains():
    fs = distinct_abelian_squares(Word("abaababa"))
    assert [f.text for f in fs] == ["aa", "abab", "baab", "baba", "aababa", "abaaba"]
    assert "baab" in fs
    assert Word("bb") not in fs
    assert isinstance(fs, FactorSet)


@pytest.mark.parametrize(
    "text, counts",
    [
        ("abaababa", (6, 1, 5, 3)),
        ("aabb", (2, 2, 0, 2)),
        ("abab", (1, 0, 1, 1)),
        ("", (0, 0, 0, 0)),
    ],
)
def test_census(text, counts):
    c = census(Word(text))
    assert (c.theta, c.trivial, c.nontrivial, c.inequivalent) == counts


def test_census_header():
    assert census(Word("aabb")).header() == "theta=2 trivial=2 nontrivial=0 inequivalent=2"


def test_equivalent():
    assert equivalent(Word("abba"), Word("abab"))
    assert not equivalent(Word("aa"), Word("bb"))
    assert equivalent(Word("baab"), Word("baab"))
    with pytest.raises(ValueError):
        equivalent(Word("aba"), Word("abab"))


def test_circular_examples():
    c = circular_census(Word("abab"))
    assert circular_squares(Word("abab")).texts() == {"abab", "baba"}
    assert (c.theta, c.inequivalent) == (2, 1)
    assert circular_squares(Word("aaaa")).texts() == {"aa", "aaaa"}
    assert circular_census(Word("ab")).theta == 0
    with pytest.raises(ValueError):
        circular_census(Word(""))


def test_circular_against_oracle_exhaustive():
    for n in range(1, 11):
        for letters in itertools.product("ab", repeat=n):
            text = "".join(letters)
            assert circular_squares(text).texts() == naive_circular_squares(text)


@pytest.mark.parametrize("n", range(1, 12))
def test_circular_single_letter_matches_linear(n):
    w = Word("a" * n)
    assert circular_census(w) == census(w)


def test_oracle_equivalence_exhaustive():
    for n in range(0, 15):
        for letters in itertools.product("ab", repeat=n):
            text = "".join(letters)
            assert distinct_abelian_squares(text).texts() == naive_squares(text), text


def test_oracle_equivalence_random_long():
    rng = random.Random(20261018)
    for _ in range(100_000):
        n = rng.randint(15, 30)
        text = "".join(rng.choice("ab") for _ in range(n))
        assert distinct_abelian_squares(text).texts() == naive_squares(text)


def test_theta_symmetry_exhaustive():
    for n in range(0, 13):
        for letters in itertools.product("ab", repeat=n):
            w = Word("".join(letters))
            t = theta(w)
            assert t == theta(reverse(w)) == theta(complement(w))


@given(texts)
def test_squares_are_reported(text):
    occ = set(occurrences(text))
    n = len(text)
    for i in range(n):
        for p in range(1, (n - i) // 2 + 1):
            if text[i : i + p] == text[i + p : i + 2 * p]:
                assert (i + 1, p) in occ
    for o in occ:
        assert is_abelian_square(text[o.start - 1 : o.end])


@given(texts)
def test_trivial_count_matches_runs(text):
    c = census(text)
    assert c.trivial == trivial_count_from_runs(text)
    assert c.theta == c.trivial + c.nontrivial
    assert c.inequivalent <= c.theta
    members = distinct_abelian_squares(text)
    assert c.inequivalent == len({parikh(f) for f in members})
    assert all(len(f) % 2 == 0 and is_abelian_square(f) for f in members)


def test_five_run_witness_examples():
    w, occ = five_run_witness(Word("abaaba"))
    assert w == Word("baab")
    w, occ = five_run_witness(Word("ababa"))
    assert w == Word("abab") and occ == Occurrence(1, 2)
    assert five_run_witness(Word("aaabbb")) is None


def test_five_run_witness_mirror_case():
    # j1 = 3 > j2 = 1 and i2 odd: the witness uses the trailing x
    text = "abbbabaa"
    w, occ = five_run_witness(Word(text))
    assert w == Word("baba")
    assert text[occ.start - 1 : occ.end] == "baba"


@given(st.lists(st.integers(1, 5), min_size=5, max_size=9), st.sampled_from("ab"), texts, texts)
def test_five_run_witness_property(exps, first, pre, post):
    other = "b" if first == "a" else "a"
    core = "".join((first if k % 2 == 0 else other) * e for k, e in enumerate(exps))
    text = pre + core + post
    assert len(runs(text)) >= 5
    w, occ = five_run_witness(text)
    assert text[occ.start - 1 : occ.end] == w.text
    assert is_abelian_square(w)
    assert not is_trivial(w)


@given(texts)
def test_five_run_witness_absent_for_few_runs(text):
    if len(runs(text)) < 5:
        assert five_run_witness(text) is None
    else:
        assert five_run_witness(text) is not None
