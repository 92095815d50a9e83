"""Groebner bases: reduction, finiteness, Hilbert data, regular sequences."""

import random
from fractions import Fraction

import pytest

from sullivan.groebner import (
    PolyRing,
    buchberger,
    is_regular_sequence,
)
from sullivan.linalg import RationalMatrix
from sullivan.parsing import parse_polynomial

R3 = PolyRing(("x1", "x2", "x3"))
R2 = PolyRing(("x1", "x2"))


def polys(ring, *texts):
    return [parse_polynomial(t, ring) for t in texts]


def test_buchberger_one_reduction():
    gb = buchberger(polys(R2, "x1*x2", "x1^2 - x2^2"))
    expected = set(polys(R2, "x1*x2", "x1^2 - x2^2", "x2^3"))
    assert set(gb.generators) == expected


def test_buchberger_monomial_ideal_fixed():
    gens = polys(R3, "x1^2", "x2^2", "x3^2")
    gb = buchberger(gens)
    assert set(gb.generators) == set(gens)


def test_buchberger_empty_is_zero_ideal():
    gb = buchberger([], ring=R3)
    assert gb.is_zero_ideal()
    p = polys(R3, "x1^2 + x2*x3")[0]
    assert gb.normal_form(p) == p


def test_normal_form_examples():
    gb = buchberger(polys(R2, "x1^2"))
    assert gb.normal_form(polys(R2, "x1^3")[0]).is_zero()
    gb = buchberger(polys(R2, "x1^2 - x2^2", "x1*x2"))
    assert gb.normal_form(polys(R2, "x1^2*x2")[0]).is_zero()


def test_normal_form_idempotent_linear_and_kills_generators():
    rng = random.Random(31)
    gens = polys(R3, "x1*x2 - x3^2", "x2^2 + x1*x3")
    gb = buchberger(gens)
    for g in gens:
        assert gb.normal_form(g).is_zero()
    for _ in range(10):
        p = _random_poly(rng, R3, degree=3)
        q = _random_poly(rng, R3, degree=3)
        np = gb.normal_form(p)
        assert gb.normal_form(np) == np
        assert gb.normal_form(p + q) == gb.normal_form(p) + gb.normal_form(q)


def test_is_finite_dimensional_examples():
    assert buchberger(polys(R3, "x1^2", "x2^2", "x3^2")).is_finite_dimensional()
    assert not buchberger(polys(R3, "x1*x2", "x1*x3", "x2*x3")).is_finite_dimensional()
    assert not buchberger([], ring=R3).is_finite_dimensional()


def test_hilbert_function_examples():
    gb = buchberger(polys(R3, "x1^2", "x2^2", "x3^2"))
    assert gb.hilbert_function(5) == (1, 3, 3, 1, 0, 0)
    assert buchberger([], ring=R2).hilbert_function(4) == (1, 2, 3, 4, 5)
    gb = buchberger(polys(R3, "x1*x2", "x1*x3", "x2*x3"))
    assert gb.hilbert_function(5) == (1, 3, 3, 3, 3, 3)


def test_krull_dimension_examples():
    assert buchberger(polys(R3, "x1^2", "x2^2", "x3^2")).krull_dimension() == 0
    assert buchberger(polys(R3, "x1*x2")).krull_dimension() == 2
    assert buchberger([], ring=R3).krull_dimension() == 3


def test_is_regular_sequence_examples():
    assert is_regular_sequence(polys(R3, "x1*x2", "x1^2 - x2^2", "x3^2"), R3)
    assert not is_regular_sequence(polys(R3, "x2^2 + x1*x3", "x3^2", "x2*x3"), R3)
    r1 = PolyRing(("x1",))
    assert is_regular_sequence(polys(r1, "x1"), r1)


def test_regular_sequence_degenerate_rules():
    assert is_regular_sequence([], R3)
    four = polys(R3, "x1^2", "x2^2", "x3^2", "x1*x2")
    assert not is_regular_sequence(four, R3)
    assert not is_regular_sequence(polys(R3, "x1^2", "0"), R3)
    with pytest.raises(ValueError):
        is_regular_sequence(polys(R3, "x1^2 + x2"), R3)
    with pytest.raises(ValueError):
        is_regular_sequence(polys(R3, "2"), R3)


def _random_poly(rng, ring, degree, terms=4):
    out = ring.zero()
    n = len(ring.variables)
    for _ in range(terms):
        expo = [0] * n
        for _ in range(degree):
            expo[rng.randrange(n)] += 1
        out = out + ring.monomial(expo, Fraction(rng.randint(-3, 3)))
    return out


def test_reduced_basis_unique_under_permutation():
    rng = random.Random(41)
    for _ in range(50):
        gens = [_random_poly(rng, R3, rng.choice((2, 3))) for _ in range(3)]
        gens = [g for g in gens if not g.is_zero()]
        reference = buchberger(gens, R3)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled, R3) == reference


def test_regular_sequence_permutation_and_span_invariance():
    rng = random.Random(42)
    rows = [
        ("x1^2", "x2^2", "x3^2"),
        ("x1*x2", "x1^2 - x2^2", "x3^2"),
        ("x2*x3", "x1^2 - x2^2", "x1^2 - x3^2"),
        ("x2^2 + x1*x3", "x3^2", "x2*x3"),
        ("x1*x2", "x1*x3", "x3^2"),
    ]
    for texts in rows:
        seq = polys(R3, *texts)
        verdict = is_regular_sequence(seq, R3)
        shuffled = seq[:]
        rng.shuffle(shuffled)
        assert is_regular_sequence(shuffled, R3) == verdict
        # invertible change of the span
        for _ in range(3):
            coeffs = [[Fraction(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
            det = (
                coeffs[0][0] * (coeffs[1][1] * coeffs[2][2] - coeffs[1][2] * coeffs[2][1])
                - coeffs[0][1] * (coeffs[1][0] * coeffs[2][2] - coeffs[1][2] * coeffs[2][0])
                + coeffs[0][2] * (coeffs[1][0] * coeffs[2][1] - coeffs[1][1] * coeffs[2][0])
            )
            if det == 0:
                continue
            mixed = [
                seq[0].scale(c[0]) + seq[1].scale(c[1]) + seq[2].scale(c[2]) for c in coeffs
            ]
            assert is_regular_sequence(mixed, R3) == verdict


def _ideal_slice_rank(gens, ring, degree):
    """Dimension of the degree-d slice of the ideal, by brute-force linear algebra."""
    monos = ring.monomials_of_degree(degree)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gens:
        gdeg = g.degree()
        if gdeg > degree:
            continue
        for m in ring.monomials_of_degree(degree - gdeg):
            shifted = ring.monomial(m) * g
            row = [Fraction(0)] * len(monos)
            for mono, c in shifted.terms.items():
                row[index[mono]] = c
            rows.append(row)
    if not rows:
        return 0
    return RationalMatrix.from_rows(rows, len(monos)).rank()


def _is_zero_divisor_degreewise(f, prior, ring, max_degree=8):
    """Brute-force witness search: some g not in (prior) with f*g in (prior)."""
    e = f.degree()
    for d in range(0, max_degree + 1):
        monos = ring.monomials_of_degree(d)
        big = ring.monomials_of_degree(d + e)
        index = {m: i for i, m in enumerate(big)}
        ideal_rank_low = _ideal_slice_rank(prior, ring, d)
        ideal_rank_high = _ideal_slice_rank(prior, ring, d + e)
        # columns: f * (degree-d monomials), then a basis of the ideal slice
        cols = []
        for m in monos:
            shifted = ring.monomial(m) * f
            col = [Fraction(0)] * len(big)
            for mono, c in shifted.terms.items():
                col[index[mono]] = c
            cols.append(col)
        ideal_cols = []
        for g in prior:
            gdeg = g.degree()
            if gdeg > d + e:
                continue
            for m in ring.monomials_of_degree(d + e - gdeg):
                shifted = ring.monomial(m) * g
                col = [Fraction(0)] * len(big)
                for mono, c in shifted.terms.items():
                    col[index[mono]] = c
                ideal_cols.append(col)
        combined = RationalMatrix.from_rows(
            [[col[r] for col in cols + ideal_cols] for r in range(len(big))],
            len(cols) + len(ideal_cols),
        )
        rank_map = combined.rank() - ideal_rank_high
        solution_dim = len(monos) - rank_map
        if solution_dim > ideal_rank_low:
            return True
    return False


def _regular_by_iteration(seq, ring, max_degree=8):
    for i, f in enumerate(seq):
        if _is_zero_divisor_degreewise(f, seq[:i], ring, max_degree):
            return False
    return True


def test_regular_sequence_matches_finiteness_for_three_quadrics():
    rng = random.Random(43)
    rows = [
        ("x1^2", "x2^2", "x3^2"),
        ("x1*x2", "x1^2 - x2^2", "x3^2"),
        ("x1*x2", "x1^2 + x3^2", "x2^2 + x3^2"),
        ("x2*x3", "x1^2 - x2^2", "x1^2 + x3^2"),
        ("x2*x3", "x1^2 - x2^2", "x1^2 - x3^2"),
        ("x1*x2", "x3^2", "x1^2 - x1*x3 + x2^2"),
        ("x1*x2", "x3^2", "x1^2 + x1*x3 - x2^2"),
        ("x2^2 + x1*x3", "x3^2", "x2*x3"),
    ]
    cases = [polys(R3, *texts) for texts in rows]
    for _ in range(100):
        cases.append([_random_poly(rng, R3, 2, terms=3) for _ in range(3)])
    for seq in cases:
        if any(p.is_zero() for p in seq):
            continue
        finite = buchberger(seq, R3).is_finite_dimensional()
        assert is_regular_sequence(seq, R3) == finite


def test_regular_sequence_matches_zero_divisor_oracle_for_short_sequences():
    rng = random.Random(44)
    for _ in range(25):
        k = rng.choice((1, 2))
        seq = [_random_poly(rng, R3, rng.choice((1, 2)), terms=2) for _ in range(k)]
        if any(p.is_zero() for p in seq):
            continue
        assert is_regular_sequence(seq, R3) == _regular_by_iteration(seq, R3)


def test_hilbert_function_of_regular_sequence_is_product_formula():
    rng = random.Random(45)
    limit = 12
    for _ in range(10):
        degrees = [rng.choice((1, 2, 3)) for _ in range(rng.choice((1, 2, 3)))]
        seq = [_random_poly(rng, R3, d, terms=3) for d in degrees]
        if any(p.is_zero() for p in seq) or not is_regular_sequence(seq, R3):
            continue
        series = [Fraction(1)] + [Fraction(0)] * limit
        # numerator: product of (1 - t^d); denominator: (1 - t)^3
        for d in degrees:
            series = [series[k] - (series[k - d] if k >= d else 0) for k in range(limit + 1)]
        for _ in range(3):
            acc = [Fraction(0)] * (limit + 1)
            running = Fraction(0)
            for k in range(limit + 1):
                running += series[k]
                acc[k] = running
            series = acc
        hf = buchberger(seq, R3).hilbert_function(limit)
        assert tuple(series) == tuple(hf)
