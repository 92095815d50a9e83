"""Univariate utilities: Sturm isolation and exact rational root recognition."""

import random
from fractions import Fraction

from sullivan.roots import (
    evaluate,
    isolate_real_roots,
    mul,
    rational_root_in_interval,
    refine_interval,
    squarefree_part,
    upoly,
)


def poly_from_roots(roots, lead=1):
    p = upoly([lead])
    for r in roots:
        p = mul(p, upoly([-Fraction(r), 1]))
    return p


def test_isolation_counts_distinct_roots():
    rng = random.Random(61)
    for _ in range(20):
        roots = sorted({Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(rng.randint(1, 4))})
        p = poly_from_roots(roots)
        intervals = isolate_real_roots(p)
        assert len(intervals) == len(roots)
        for (lo, hi), r in zip(intervals, roots):
            assert lo <= r <= hi


def test_isolation_handles_multiplicities():
    p = mul(poly_from_roots([1, 1, 2]), upoly([1]))
    intervals = isolate_real_roots(p)
    assert len(intervals) == 2


def test_rational_recognition():
    p = poly_from_roots([Fraction(7, 5), Fraction(-3, 2)], lead=10)
    for lo, hi in isolate_real_roots(p):
        root = rational_root_in_interval(p, lo, hi)
        assert root in (Fraction(7, 5), Fraction(-3, 2))


def test_irrational_root_refinement():
    p = upoly([-2, 0, 1])  # x^2 - 2
    intervals = isolate_real_roots(p)
    assert len(intervals) == 2
    positive = [iv for iv in intervals if iv[1] > 0][-1]
    assert rational_root_in_interval(p, *positive) is None
    lo, hi = refine_interval(p, positive[0], positive[1], Fraction(1, 10**6))
    assert hi - lo <= Fraction(1, 10**6)
    assert lo < Fraction(141421356, 10**8) < hi


def test_squarefree_part():
    p = mul(poly_from_roots([1, 1]), poly_from_roots([3]))
    sf = squarefree_part(p)
    assert evaluate(sf, 1) == 0 and evaluate(sf, 3) == 0
    assert len(sf) == 4 - 1  # degree dropped by one
