"""Closed forms, extremal families and effective words for binary abelian squares.

``M(x, n)`` denotes the least number of distinct abelian squares in a binary
word of length ``n`` with ``x`` letters ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .words import Word, from_shape, reverse


class BoundKind(str, Enum):
    EXACT_M = "exact_M"
    CONJECTURED_MIN = "conjectured_min"
    FICI_SAARELA = "fici_saarela"


class NoClosedForm(ValueError):
    """Raised for (x, n) outside the range where an exact value is known."""


def _ceil_half(n: int) -> int:
    return -(-n // 2)


def fici_saarela_bound(n: int) -> int:
    if n < 0:
        raise ValueError("length must be non-negative")
    return n // 4


def is_boundary(x: int, n: int) -> bool:
    """Classes with x or n - x in {0, 1, 2, 3} are settled exactly."""
    return min(x, n - x) <= 3


def M_closed(x: int, n: int) -> int:
    """Exact minimum of theta over words of length n with x a's.

    Only defined when x or n - x is at most 3; complementation maps
    x to n - x without changing theta.
    """
    if not 0 <= x <= n:
        raise ValueError(f"need 0 <= x <= n, got x={x}, n={n}")
    if x > 3:
        if n - x > 3:
            raise NoClosedForm(f"no closed form for x={x}, n={n}")
        x = n - x
    if x == 0:
        return n // 2
    if x == 1:
        return n // 4
    if x == 2:
        return 1 if n == 2 else (n - 2) // 2
    return (n + 2) // 4


def identity_eq1_holds(n: int) -> bool:
    return _ceil_half(n - 1) // 2 == n // 4


def lemma_superadditive_holds(m: int, n: int) -> bool:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return (m + 2) // 4 + (n + 2) // 4 >= (m + n) // 4


def three_a_identity_holds(n: int) -> bool:
    """The chain floor(ceil((n-3)/2)/2) + 1 = floor(ceil((n+1)/2)/2) = floor((n+2)/4)."""
    lhs = _ceil_half(n - 3) // 2 + 1
    mid = _ceil_half(n + 1) // 2
    return lhs == mid == (n + 2) // 4


class TwoARunShape(NamedTuple):
    i: int
    j: int
    k: int

    def word(self) -> Word:
        return from_shape(("b", self.i), ("a", 1), ("b", self.j), ("a", 1), ("b", self.k))


class TwoADecomposition(NamedTuple):
    S0: int
    S2: int
    theta: int


def two_a_pairs(shape: TwoARunShape) -> list[tuple[int, int]]:
    """Pairs (x, z) such that b^x a b^j a b^z is an abelian square inside the shape."""
    i, j, k = shape
    return [
        (x, z)
        for x in range(i + 1)
        for z in range(k + 1)
        if (x + z - j) % 2 == 0 and abs(x - z) <= j
    ]


def two_a_decomposition(shape: TwoARunShape) -> TwoADecomposition:
    i, j, k = shape = TwoARunShape(*shape)
    if min(shape) < 0:
        raise ValueError("run lengths must be non-negative")
    s0 = max(i // 2, j // 2, k // 2)
    s2 = len(two_a_pairs(shape))
    return TwoADecomposition(s0, s2, s0 + s2)


def _with_reverses(words) -> frozenset[Word]:
    out = set()
    for w in words:
        out.add(w)
        out.add(reverse(w))
    return frozenset(out)


def one_a_balanced_pair(n: int) -> frozenset[Word]:
    """b^ceil((n-1)/2) a b^floor((n-1)/2) and its reverse.

    This pair is the complete minimizer set only when ceil((n-1)/2) is odd;
    see :func:`extremal_words`.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return _with_reverses([from_shape(("b", _ceil_half(n - 1)), ("a", 1), ("b", (n - 1) // 2))])


def _one_a_minimizers(n: int) -> frozenset[Word]:
    # theta(b^i a b^(n-1-i)) = floor(max(i, n-1-i) / 2): no square can hold a single a.
    longest = _ceil_half(n - 1)
    allowed = {longest}
    if longest % 2 == 0 and longest + 1 <= n - 1:
        allowed.add(longest + 1)
    return frozenset(
        from_shape(("b", i), ("a", 1), ("b", n - 1 - i))
        for i in range(n)
        if max(i, n - 1 - i) in allowed
    )


def _two_a_minimizers(n: int) -> frozenset[Word]:
    half = (n - 1) // 2
    family = [
        from_shape(("b", m), ("a", 1), ("b", n - m - 2), ("a", 1))
        for m in range(n - 1)
        if (n - m) % 2 == 1 and (m < half or m % 2 == 1)
    ]
    return _with_reverses(family)


def _three_a_minimizers(n: int) -> frozenset[Word]:
    def block(left: int, right: int) -> Word:
        return from_shape(("b", left), ("a", 3), ("b", right))

    r = n % 4
    if r == 0:
        family = [block((n - 4) // 2, (n - 2) // 2)]
    elif r == 1:
        family = [block((n - 3) // 2, (n - 3) // 2)]
    elif r == 2:
        family = [block((n - 6) // 2, n // 2), block((n - 2) // 2, (n - 4) // 2)]
    else:
        family = [block((n - 3) // 2, (n - 3) // 2), block((n - 1) // 2, (n - 5) // 2)]
    return _with_reverses(family)


def extremal_words(x: int, n: int) -> frozenset[Word]:
    """Every word with x a's and length n attaining M(x, n), closed under reverse.

    Supported: x = 1 (n >= 1), x = 2 (n >= 3), x = 3 (n >= 10). For x = 1 the
    set also holds b^i a b^(n-1-i) with a longest b-run one longer than
    ceil((n-1)/2) whenever that run still has the same floor half.
    """
    if x == 1 and n >= 1:
        return _one_a_minimizers(n)
    if x == 2 and n >= 3:
        return _two_a_minimizers(n)
    if x == 3 and n >= 10:
        return _three_a_minimizers(n)
    raise NoClosedForm(f"no extremal family for x={x}, n={n}")


def best_three_a_word(n: int) -> Word:
    """b^floor((n-3)/2) a^3 b^ceil((n-3)/2)."""
    if n < 3:
        raise ValueError("need n >= 3")
    return from_shape(("b", (n - 3) // 2), ("a", 3), ("b", _ceil_half(n - 3)))


@dataclass(frozen=True)
class EffectivePartition:
    n: int
    p: int
    q: int

    @property
    def extended(self) -> bool:
        """True when p = 0, i.e. the closed formula is used outside n >= 4."""
        return self.p == 0

    def __iter__(self):
        return iter((self.p, self.q))


def effective_partition(n: int) -> EffectivePartition:
    if n <= 2:
        raise ValueError(f"effective partition needs n >= 3, got {n}")
    q = 2 * ((n + 2) // 4) + 1
    return EffectivePartition(n, n - q, q)


def effective_word(x: int, y: int) -> Word:
    """a^h b^i a^j b^k with [h, j] = e(x) and [k, i] = e(y)."""
    if x < 3 or y < 3:
        raise ValueError(f"effective word needs x, y >= 3, got x={x}, y={y}")
    h, j = effective_partition(x)
    k, i = effective_partition(y)
    return from_shape(("a", h), ("b", i), ("a", j), ("b", k))


def theta_effective(x: int, y: int) -> int:
    if x < 3 or y < 3:
        raise ValueError(f"effective word needs x, y >= 3, got x={x}, y={y}")
    return (x + 2) // 4 + (y + 2) // 4


def conjectured_min(x: int, n: int) -> int:
    """Conjectured M(x, n) for non-boundary classes: floor(q_a/2) + floor(q_b/2)."""
    if is_boundary(x, n) or not 0 <= x <= n:
        raise ValueError(f"x={x} is a boundary class for n={n}")
    qa = effective_partition(x).q
    qb = effective_partition(n - x).q
    return qa // 2 + qb // 2
