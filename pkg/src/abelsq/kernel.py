"""Bit-packed abelian-square counting kernels (numba, nogil).

A word of length n is packed into an int64 with w[1] as the most significant
of the n low bits, a = 0 and b = 1. Integer order on equal-length words is
then lexicographic order with a < b.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .words import Word

# Bump when counting semantics change; cached results carry it.
COUNTER_VERSION = "1"

MAX_BITS = 62

SYM_NONE = 0
SYM_REVERSE = 1
SYM_FULL = 2  # reverse and complement


def word_to_int(w) -> int:
    text = str(w)
    return int(text.translate(str.maketrans("ab", "01")), 2) if text else 0


def int_to_word(v: int, n: int) -> Word:
    if n == 0:
        return Word("")
    return Word(format(v, f"0{n}b").translate(str.maketrans("01", "ab")))


@njit(nogil=True, cache=True)
def reverse_bits(w, n):
    r = 0
    for _ in range(n):
        r = (r << 1) | (w & 1)
        w >>= 1
    return r


@njit(nogil=True, cache=True)
def complement_bits(w, n):
    return w ^ ((1 << n) - 1)


@njit(nogil=True, cache=True)
def popcount(v):
    c = 0
    while v:
        v &= v - 1
        c += 1
    return c


@njit(nogil=True, cache=True)
def census_bits(w, n, pre, seen):
    """Return (theta, trivial) for the packed word; pre and seen are scratch
    arrays of length >= n + 1."""
    pre[0] = 0
    for i in range(n):
        pre[i + 1] = pre[i] + ((w >> (n - 1 - i)) & 1)
    theta = 0
    trivial = 0
    for p in range(1, n // 2 + 1):
        length = 2 * p
        mask = (1 << length) - 1
        cnt = 0
        for s in range(n - length + 1):
            if pre[s + p] - pre[s] == pre[s + length] - pre[s + p]:
                v = (w >> (n - s - length)) & mask
                dup = False
                for t in range(cnt):
                    if seen[t] == v:
                        dup = True
                        break
                if not dup:
                    seen[cnt] = v
                    cnt += 1
                    if v == 0 or v == mask:
                        trivial += 1
        theta += cnt
    return theta, trivial


@njit(nogil=True, cache=True)
def is_canonical(w, n, sym):
    if sym == SYM_NONE:
        return True
    r = reverse_bits(w, n)
    if r < w:
        return False
    if sym == SYM_FULL:
        c = complement_bits(w, n)
        if c < w or reverse_bits(c, n) < w:
            return False
    return True


@njit(nogil=True, cache=True)
def orbit_size(w, n):
    r = reverse_bits(w, n)
    c = complement_bits(w, n)
    rc = reverse_bits(c, n)
    size = 1
    if r != w:
        size += 1
    if c != w and c != r:
        size += 1
    if rc != w and rc != r and rc != c:
        size += 1
    return size


@njit(nogil=True, cache=True)
def chunk_minimum(n, prefix, plen, ones, sym, out):
    """Minimise theta over words (prefix . s) where s has n - plen bits and the
    whole word has `ones` b's. Suffixes are visited in increasing order.

    Canonical minimizers are written to `out`; returns (min, count, examined).
    min is -1 when the chunk holds no canonical word.
    """
    r = n - plen
    kr = ones - popcount(prefix)
    best = -1
    cnt = 0
    examined = 0
    if kr < 0 or kr > r:
        return best, cnt, examined
    pre = np.empty(n + 1, np.int64)
    seen = np.empty(n + 1, np.int64)
    limit = 1 << r
    s = (1 << kr) - 1
    base = prefix << r
    while s < limit:
        w = base | s
        if is_canonical(w, n, sym):
            examined += 1
            t, _ = census_bits(w, n, pre, seen)
            if best < 0 or t < best:
                best = t
                cnt = 0
            if t == best:
                out[cnt] = w
                cnt += 1
        if kr == 0:
            break
        c = s & -s
        nxt = s + c
        s = (((nxt ^ s) >> 2) // c) | nxt
    return best, cnt, examined


@njit(nogil=True, cache=True)
def sweep_range(n, lo, hi, class_min, stats, fs_out, ext_out):
    """Scan canonical (reverse/complement) words w in [lo, hi) of length n.

    class_min[x]: least theta seen among canonical words with x a's (-1 if none).
    stats: [words_covered, tight_words, fs_reps, ext_reps, evaluated,
    fs_words, ext_words]; *_words count whole symmetry orbits.
    fs_out / ext_out receive canonical words violating the bound floor(n/4),
    respectively meeting it with a non-trivial square; only the first
    len(out) of each are stored, counts in stats are complete.
    """
    bound = n // 4
    pre = np.empty(n + 1, np.int64)
    seen = np.empty(n + 1, np.int64)
    for w in range(lo, hi):
        if not is_canonical(w, n, SYM_FULL):
            continue
        t, triv = census_bits(w, n, pre, seen)
        weight = orbit_size(w, n)
        stats[0] += weight
        stats[4] += 1
        x = n - popcount(w)
        if class_min[x] < 0 or t < class_min[x]:
            class_min[x] = t
        if t < bound:
            if stats[2] < fs_out.shape[0]:
                fs_out[stats[2]] = w
            stats[2] += 1
            stats[5] += weight
        elif t == bound:
            stats[1] += weight
            if triv < t:
                if stats[3] < ext_out.shape[0]:
                    ext_out[stats[3]] = w
                stats[3] += 1
                stats[6] += weight
    return 0


def census_int(w: int, n: int) -> tuple[int, int]:
    pre = np.empty(n + 1, np.int64)
    seen = np.empty(n + 1, np.int64)
    t, triv = census_bits(np.int64(w), n, pre, seen)
    return int(t), int(triv)


def theta_of(word) -> int:
    text = str(word)
    if len(text) > MAX_BITS:
        raise ValueError(f"packed kernel handles at most {MAX_BITS} letters")
    return census_int(word_to_int(text), len(text))[0]


def warm_up() -> None:
    """Trigger compilation (or cache load) of every kernel."""
    out = np.empty(4, np.int64)
    chunk_minimum(4, 0, 0, 2, SYM_FULL, out)
    stats = np.zeros(7, np.int64)
    sweep_range(4, 0, 16, np.full(5, -1, np.int64), stats, out, out.copy())
    census_int(5, 4)
