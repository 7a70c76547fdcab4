"""Slow, independent reference implementations used only by the tests.

Nothing here shares code with the package: squares are found by slicing
every even-length factor and sorting its halves.
"""

from itertools import product


def naive_squares(text):
    found = set()
    n = len(text)
    for i in range(n):
        for j in range(i + 2, n + 1, 2):
            f = text[i:j]
            h = len(f) // 2
            if sorted(f[:h]) == sorted(f[h:]):
                found.add(f)
    return found


def naive_theta(text):
    return len(naive_squares(text))


def all_words(n):
    return ("".join(p) for p in product("ab", repeat=n))


def naive_class_minimum(x, n):
    best, words = None, []
    for w in all_words(n):
        if w.count("a") != x:
            continue
        t = naive_theta(w)
        if best is None or t < best:
            best, words = t, [w]
        elif t == best:
            words.append(w)
    return best, sorted(words)


def naive_circular_squares(text):
    n = len(text)
    found = set()
    for s in range(n):
        for length in range(2, n + 1, 2):
            f = "".join(text[(s + k) % n] for k in range(length))
            h = length // 2
            if sorted(f[:h]) == sorted(f[h:]):
                found.add(f)
    return found
