"""Elliptic exponent pairs: the arithmetic condition and the numeric constraints.

An exponent pair is a sorted tuple a of half-degrees of even generators and
a sorted tuple b with (degree+1)/2 of the odd generators.  The arithmetic
condition asks, for every subset of a, for enough entries of b that are
nonnegative integer combinations of the subset with coefficient sum at
least two.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator


class ExponentPair:
    """Sorted exponent tuples (a; b) with positive a entries and b entries >= 2."""

    __slots__ = ("a", "b")

    def __init__(self, a: Iterable[int], b: Iterable[int]):
        a = tuple(sorted(a))
        b = tuple(sorted(b))
        if any(not isinstance(x, int) or x < 1 for x in a):
            raise ValueError("entries of a must be integers >= 1")
        if any(not isinstance(x, int) or x < 2 for x in b):
            raise ValueError("entries of b must be integers >= 2")
        self.a = a
        self.b = b

    @property
    def q(self) -> int:
        return len(self.a)

    @property
    def r(self) -> int:
        return len(self.b)

    def formal_dimension(self) -> int:
        return 2 * (sum(self.b) - sum(self.a)) - (self.r - self.q)

    def sort_key(self):
        return (self.q, self.a, self.b)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExponentPair) and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __lt__(self, other: "ExponentPair") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"ExponentPair(a={self.a}, b={self.b})"

    def __str__(self) -> str:
        a = ",".join(map(str, self.a))
        b = ",".join(map(str, self.b))
        return f"a=({a}) b=({b})"


@lru_cache(maxsize=None)
def _representable(value: int, weights: tuple[int, ...]) -> bool:
    """value = sum gamma_l * weights_l with gamma_l >= 0 integers, sum gamma_l >= 2."""

    def rec(idx: int, remaining: int, count: int) -> bool:
        if idx == len(weights):
            return remaining == 0 and count >= 2
        w = weights[idx]
        for gamma in range(remaining // w + 1):
            if rec(idx + 1, remaining - gamma * w, count + gamma):
                return True
        return False

    return rec(0, value, 0)


def check_sac(pair: ExponentPair) -> bool:
    """The arithmetic condition on (a; b), decided by exhaustive subset search."""
    a, b = pair.a, pair.b
    for s in range(1, len(a) + 1):
        for subset in set(combinations(a, s)):
            good = sum(1 for value in b if _representable(value, subset))
            if good < s:
                return False
    return True


def check_constraints(pair: ExponentPair, n: int) -> bool:
    """The four numeric constraints at formal dimension n."""
    if pair.q > pair.r:
        return False
    if 2 * sum(pair.a) > n:
        return False
    if sum(2 * x - 1 for x in pair.b) > 2 * n - 1:
        return False
    return pair.formal_dimension() == n


def _sorted_tuples_bounded(min_value: int, weight, budget: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples whose total weight stays within the budget."""
    yield ()
    value = min_value
    while weight(value) <= budget:
        for rest in _sorted_tuples_bounded(value, weight, budget - weight(value)):
            yield (value,) + rest
        value += 1


def enumerate_exponents(n: int) -> list[ExponentPair]:
    """All exponent pairs of formal dimension n, canonically ordered.

    The search region is cut out by the even-degree and odd-degree bounds;
    candidates are filtered by the dimension identity and the arithmetic
    condition.
    """
    if not (1 <= n <= 12):
        raise ValueError("supported dimensions are 1 <= n <= 12")
    out = []
    for a in _sorted_tuples_bounded(1, lambda v: 2 * v, n):
        for b in _sorted_tuples_bounded(2, lambda v: 2 * v - 1, 2 * n - 1):
            if len(a) > len(b):
                continue
            pair = ExponentPair(a, b)
            if pair.formal_dimension() != n:
                continue
            if check_sac(pair):
                out.append(pair)
    return sorted(set(out))


def exponents_of_model(m) -> ExponentPair:
    """Exponents read off the generator degrees of a model."""
    a = []
    b = []
    for deg in m.table.degrees:
        if deg % 2 == 0:
            a.append(deg // 2)
        else:
            b.append((deg + 1) // 2)
    return ExponentPair(a, b)
