"""Exact linear algebra: rank, kernels, span membership."""

import random
from fractions import Fraction

from sullivan.linalg import RationalMatrix, in_span


def test_rank_examples():
    assert RationalMatrix.from_rows([[1, 0], [0, 1]]).rank() == 2
    assert RationalMatrix.from_rows([[1, 2], [2, 4]]).rank() == 1
    assert RationalMatrix.from_rows([[0] * 5 for _ in range(3)]).rank() == 0


def test_kernel_examples():
    kernel = RationalMatrix.from_rows([[1, 1]]).kernel_basis()
    assert len(kernel) == 1
    v = kernel[0]
    assert v[0] + v[1] == 0 and v != (0, 0)

    assert RationalMatrix.from_rows([[1, 0], [0, 1]]).kernel_basis() == ()

    kernel = RationalMatrix.from_rows([[1, 1, 1]]).kernel_basis()
    assert len(kernel) == 2
    for v in kernel:
        assert sum(v) == 0


def test_kernel_vectors_annihilate():
    rng = random.Random(5)
    for _ in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 6)
        m = RationalMatrix.from_rows(
            [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)]
        )
        kernel = m.kernel_basis()
        assert m.rank() + len(kernel) == cols
        for v in kernel:
            assert all(x == 0 for x in m.apply(v))


def test_rank_permutation_invariant():
    rng = random.Random(6)
    for _ in range(20):
        rows = rng.randint(2, 5)
        cols = rng.randint(2, 5)
        data = [[Fraction(rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)]
        m = RationalMatrix.from_rows(data)
        shuffled_rows = data[:]
        rng.shuffle(shuffled_rows)
        perm = list(range(cols))
        rng.shuffle(perm)
        permuted = [[row[j] for j in perm] for row in shuffled_rows]
        assert RationalMatrix.from_rows(permuted).rank() == m.rank()


def test_in_span_examples():
    ok, coords = in_span((2, 2), [(1, 1)])
    assert ok and coords == (Fraction(2),)
    ok, coords = in_span((1, 0), [(1, 1)])
    assert not ok and coords is None
    ok, coords = in_span((0, 0, 0), [])
    assert ok and coords == ()
    ok, _ = in_span((1, 0, 0), [])
    assert not ok


def test_in_span_coordinates_reconstruct():
    rng = random.Random(7)
    for _ in range(20):
        dim = rng.randint(2, 5)
        basis = [
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(dim)) for _ in range(rng.randint(1, 3))
        ]
        weights = [Fraction(rng.randint(-3, 3)) for _ in basis]
        v = tuple(sum(w * b[i] for w, b in zip(weights, basis)) for i in range(dim))
        ok, coords = in_span(v, basis)
        assert ok
        rebuilt = tuple(sum(c * b[i] for c, b in zip(coords, basis)) for i in range(dim))
        assert rebuilt == v
