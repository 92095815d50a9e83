"""Univariate polynomials over Q and exact real-root isolation.

Polynomials are coefficient tuples, constant term first.  Isolation uses
Sturm sequences and exact bisection; rational roots are recognized exactly
via the denominator bound from the leading coefficient, so no integer
factorization is ever needed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

UPoly = tuple[Fraction, ...]


def upoly(coeffs: Sequence) -> UPoly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: UPoly) -> int:
    return len(p) - 1


def is_zero(p: UPoly) -> bool:
    return not p


def add(p: UPoly, q: UPoly) -> UPoly:
    n = max(len(p), len(q))
    return upoly([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def neg(p: UPoly) -> UPoly:
    return tuple(-c for c in p)


def sub(p: UPoly, q: UPoly) -> UPoly:
    return add(p, neg(q))


def mul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return upoly(out)


def scale(p: UPoly, c) -> UPoly:
    c = Fraction(c)
    if c == 0:
        return ()
    return tuple(x * c for x in p)


def power(p: UPoly, e: int) -> UPoly:
    result = upoly([1])
    for _ in range(e):
        result = mul(result, p)
    return result


def evaluate(p: UPoly, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: UPoly) -> UPoly:
    return upoly([c * i for i, c in enumerate(p)][1:])


def divmod_poly(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly]:
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    dq = len(q) - 1
    lc = q[-1]
    while len(rem) - 1 >= dq and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dq:
            break
        shift = len(rem) - 1 - dq
        factor = rem[-1] / lc
        quo[shift] = factor
        for i in range(len(q)):
            rem[shift + i] -= factor * q[i]
        rem.pop()
    return upoly(quo), upoly(rem)


def primitive_integer(p: UPoly) -> tuple[int, ...]:
    """Scale to coprime integer coefficients with positive leading coefficient."""
    if not p:
        return ()
    mult = lcm(*(c.denominator for c in p))
    ints = [int(c * mult) for c in p]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def poly_gcd(p: UPoly, q: UPoly) -> UPoly:
    a, b = p, q
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return ()
    return tuple(Fraction(c) for c in primitive_integer(a))


def squarefree_part(p: UPoly) -> UPoly:
    if degree(p) < 1:
        return p
    g = poly_gcd(p, derivative(p))
    if degree(g) < 1:
        return p
    return divmod_poly(p, g)[0]


def sturm_chain(p: UPoly) -> list[UPoly]:
    chain = [p, derivative(p)]
    while chain[-1] and degree(chain[-1]) > 0:
        rem = divmod_poly(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(neg(rem))
    return [c for c in chain if c]


def sign_variations(chain: Sequence[UPoly], x) -> int:
    signs = []
    for q in chain:
        v = evaluate(q, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_between(chain: Sequence[UPoly], a, b) -> int:
    """Number of distinct real roots in (a, b] for a square-free polynomial."""
    return sign_variations(chain, a) - sign_variations(chain, b)


def root_bound(p: UPoly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-M, M)."""
    lc = abs(p[-1])
    return 1 + max((abs(c) / lc for c in p[:-1]), default=Fraction(0))


def isolate_real_roots(p: UPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals, one distinct real root each; exact roots come out as (r, r).

    The input is replaced by its square-free part, so multiplicities do not
    matter.  Open intervals (lo, hi) have p(lo) != 0 != p(hi).
    """
    p = squarefree_part(p)
    if degree(p) < 1:
        return []
    chain = sturm_chain(p)
    bound = root_bound(p)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots_between(chain, lo, hi)
        if n == 0:
            continue
        if n == 1 and evaluate(p, hi) != 0:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if evaluate(p, mid) == 0:
            out.append((mid, mid))
            eps = (hi - lo) / 4
            while (
                evaluate(p, mid - eps) == 0
                or evaluate(p, mid + eps) == 0
                or count_roots_between(chain, mid - eps, mid + eps) > 1
            ):
                eps /= 2
            stack.append((lo, mid - eps))
            stack.append((mid + eps, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    return sorted(out)


def refine_interval(p: UPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval of a square-free p below the given width."""
    if lo == hi:
        return (lo, hi)
    sign_lo = 1 if evaluate(p, lo) > 0 else -1
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = evaluate(p, mid)
        if v == 0:
            return (mid, mid)
        if (1 if v > 0 else -1) == sign_lo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


def rational_root_in_interval(p: UPoly, lo: Fraction, hi: Fraction) -> Fraction | None:
    """Exact rational root inside an isolating interval, if the root is rational.

    Any rational root of the primitive integer form of p has denominator
    dividing the leading coefficient; once the interval is narrower than
    1/(2*lc) the root is the nearest multiple of 1/lc, which is then
    verified by exact evaluation.
    """
    if lo == hi:
        return lo if evaluate(p, lo) == 0 else None
    ints = primitive_integer(p)
    lc = ints[-1]
    lo, hi = refine_interval(p, lo, hi, Fraction(1, 2 * lc))
    if lo == hi:
        return lo
    mid = (lo + hi) / 2
    candidate = Fraction(round(mid * lc), lc)
    if lo < candidate < hi and evaluate(p, candidate) == 0:
        return candidate
    return None
