"""Binary and ternary cubic forms over Q.

A form is stored by its symmetric coefficients F_ijk = F(e_i, e_j, e_k);
the polynomial picture carries the multinomial factors.  Ternary forms get
the associated quadric subspace, the ellipticity decisions, singularity
tests and recovery of the diagonal-family parameter through the classical
degree-4/degree-6 invariants (tables in _invariant_tables, regenerated by
tools/derive_cubic_invariants.py).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from . import roots
from ._invariant_tables import CUBIC_MONOMIALS, DEGREE4_TERMS, DEGREE6_TERMS
from .groebner import (
    PolyRing,
    Polynomial,
    buchberger,
    is_regular_sequence,
)
from .linalg import RationalMatrix, integerized, row_space_rref

BINARY_MONOMIALS = ((3, 0), (2, 1), (1, 2), (0, 3))


def _multinomial(i: int, j: int, k: int) -> int:
    if i == j == k:
        return 1
    if i == j or j == k or i == k:
        return 3
    return 6


def _index_triples(dim: int):
    return list(combinations_with_replacement(range(dim), 3))


class CubicForm:
    """Symmetric trilinear form on a 2- or 3-dimensional rational vector space."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: dict[tuple[int, int, int], Fraction]):
        if dim not in (2, 3):
            raise ValueError("cubic forms are supported in dimensions 2 and 3")
        clean = {}
        for key, value in coeffs.items():
            i, j, k = sorted(key)
            if not (0 <= i and k < dim):
                raise ValueError(f"index {key!r} out of range for dimension {dim}")
            value = Fraction(value)
            if value:
                clean[(i, j, k)] = value
        self.dim = dim
        self.coeffs = clean

    def __getitem__(self, key) -> Fraction:
        return self.coeffs.get(tuple(sorted(key)), Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CubicForm)
            and self.dim == other.dim
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        from .parsing import render_polynomial

        return f"<cubic {render_polynomial(self.polynomial())}>"

    # -- conversions ----------------------------------------------------

    def coefficient_vector(self) -> list[Fraction]:
        """Polynomial coefficients in the canonical monomial listing."""
        monos = CUBIC_MONOMIALS if self.dim == 3 else BINARY_MONOMIALS
        vec = []
        for mono in monos:
            triple = []
            for var, e in enumerate(mono):
                triple.extend([var] * e)
            i, j, k = triple
            vec.append(self[(i, j, k)] * _multinomial(i, j, k))
        return vec

    def polynomial(self, ring: PolyRing | None = None) -> Polynomial:
        if ring is None:
            names = ("x", "y", "z")[: self.dim]
            ring = PolyRing(names)
        if len(ring.variables) != self.dim:
            raise ValueError("ring arity does not match the form dimension")
        terms = {}
        monos = CUBIC_MONOMIALS if self.dim == 3 else BINARY_MONOMIALS
        for mono, c in zip(monos, self.coefficient_vector()):
            if c:
                terms[mono] = c
        return ring.from_terms(terms)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "CubicForm":
        dim = len(p.ring.variables)
        if dim not in (2, 3):
            raise ValueError("expected a polynomial in 2 or 3 variables")
        if p.terms and (not p.is_homogeneous() or p.degree() != 3):
            raise ValueError("expected a homogeneous cubic")
        coeffs = {}
        for mono, c in p.terms.items():
            triple = []
            for var, e in enumerate(mono):
                triple.extend([var] * e)
            i, j, k = triple
            coeffs[(i, j, k)] = c / _multinomial(i, j, k)
        return cls(dim, coeffs)

    # -- normalization ----------------------------------------------------

    def canonical(self) -> "CubicForm":
        """Rescale so the F_ijk are coprime integers, first nonzero positive."""
        if not self.coeffs:
            return self
        order = _index_triples(self.dim)
        vec = [self[t] for t in order]
        ints = integerized(vec)
        first = next(x for x in ints if x)
        if first < 0:
            ints = tuple(-x for x in ints)
        return CubicForm(self.dim, {t: Fraction(v) for t, v in zip(order, ints)})

    def proportional_to(self, other: "CubicForm") -> bool:
        return self.dim == other.dim and self.canonical() == other.canonical()

    def scale(self, value) -> "CubicForm":
        value = Fraction(value)
        return CubicForm(self.dim, {t: c * value for t, c in self.coeffs.items()})


def form_of_polynomial(p: Polynomial) -> CubicForm:
    return CubicForm.from_polynomial(p)


def substitute(form: CubicForm, matrix: Sequence[Sequence]) -> CubicForm:
    """Form of P(Mx); exact, requires an invertible matrix."""
    n = form.dim
    rows = [[Fraction(x) for x in row] for row in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected an invertible {n}x{n} matrix")
    if _det(rows) == 0:
        raise ValueError("substitution matrix is singular")
    ring = PolyRing(("x", "y", "z")[:n])
    images = []
    for i in range(n):
        img = ring.zero()
        for j in range(n):
            if rows[i][j]:
                img = img + ring.variable(j).scale(rows[i][j])
        images.append(img)
    return CubicForm.from_polynomial(form.polynomial(ring).compose(images))


def _det(rows) -> Fraction:
    n = len(rows)
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    return (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )


# -- the pairing into the dual of degree two --------------------------------


def _pairing_matrix(form: CubicForm) -> RationalMatrix:
    """Rows indexed by quadric monomials x_i x_j (i <= j), columns by e_k."""
    pairs = list(combinations_with_replacement(range(form.dim), 2))
    data = [[form[(i, j, k)] for k in range(form.dim)] for (i, j) in pairs]
    return RationalMatrix.from_rows(data, form.dim)


def pairing_rank(form: CubicForm) -> int:
    return _pairing_matrix(form).rank()


class QuadricSubspace:
    """Subspace of the degree-two part of Q[x1..xn], held in canonical echelon form."""

    __slots__ = ("ring", "basis", "_coords")

    def __init__(self, ring: PolyRing, quadrics: Sequence[Polynomial]):
        self.ring = ring
        monos = ring.monomials_of_degree(2)
        rows = []
        for q in quadrics:
            if q.ring != ring:
                raise ValueError("quadric lives in a different ring")
            if q.is_zero():
                continue
            if not q.is_homogeneous() or q.degree() != 2:
                raise ValueError("basis entries must be homogeneous of degree 2")
            rows.append([q.coefficient(m) for m in monos])
        canonical = row_space_rref(rows, len(monos))
        self._coords = canonical
        self.basis = tuple(
            ring.from_terms({m: c for m, c in zip(monos, row) if c}) for row in canonical
        )

    def dimension(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuadricSubspace)
            and self.ring == other.ring
            and self._coords == other._coords
        )

    def __repr__(self) -> str:
        return f"QuadricSubspace(dim {self.dimension()} in {self.ring!r})"

    def contains(self, q: Polynomial) -> bool:
        return QuadricSubspace(self.ring, list(self.basis) + [q]) == self

    def transform(self, matrix: Sequence[Sequence]) -> "QuadricSubspace":
        """Image of the subspace under the substitution x -> Mx."""
        rows = [[Fraction(x) for x in row] for row in matrix]
        n = len(self.ring.variables)
        images = []
        for i in range(n):
            img = self.ring.zero()
            for j in range(n):
                if rows[i][j]:
                    img = img + self.ring.variable(j).scale(rows[i][j])
            images.append(img)
        return QuadricSubspace(self.ring, [q.compose(images) for q in self.basis])


def associated_subspace(form: CubicForm) -> QuadricSubspace:
    """Quadrics annihilated by the pairing: the degree-two relations of the ring."""
    if form.dim != 3:
        raise ValueError("the associated subspace is defined for ternary forms")
    pairs = list(combinations_with_replacement(range(3), 2))
    # rows indexed by e_k, columns by quadric coefficients c_ij
    matrix = RationalMatrix.from_rows(
        [[form[(i, j, k)] for (i, j) in pairs] for k in range(3)], len(pairs)
    )
    ring = PolyRing(("x1", "x2", "x3"))
    kernel = matrix.kernel_basis()
    quadrics = []
    for vec in kernel:
        terms = {}
        for (i, j), c in zip(pairs, vec):
            if c:
                expo = [0, 0, 0]
                expo[i] += 1
                expo[j] += 1
                terms[tuple(expo)] = c
        quadrics.append(ring.from_terms(terms))
    return QuadricSubspace(ring, quadrics)


@dataclass(frozen=True)
class EllipticityVerdict:
    elliptic: bool
    reason: str

    def __bool__(self) -> bool:
        return self.elliptic


def is_elliptic_form(form: CubicForm, b2: int) -> EllipticityVerdict:
    """Whether a closed simply connected 6-manifold with b3 = 0 and this cup form is elliptic.

    For b2 = 2 the criterion is that degree-two classes generate, i.e. the
    pairing has full rank.  For b2 = 3 the associated quadric subspace must
    be three-dimensional with a regular sequence as basis.
    """
    if b2 not in (2, 3):
        raise ValueError("b2 must be 2 or 3")
    if form.dim != b2:
        raise ValueError(f"form dimension {form.dim} does not match b2 = {b2}")
    if b2 == 2:
        r = pairing_rank(form)
        if r == 2:
            return EllipticityVerdict(True, "pairing has rank 2: generated in degree two")
        return EllipticityVerdict(False, f"pairing rank {r} < 2")
    sub = associated_subspace(form)
    if sub.dimension() != 3:
        return EllipticityVerdict(
            False, f"associated quadric subspace has dimension {sub.dimension()}, not 3"
        )
    if is_regular_sequence(sub.basis, sub.ring):
        return EllipticityVerdict(True, "associated quadrics form a regular sequence")
    return EllipticityVerdict(False, "associated quadrics are not a regular sequence")


# -- binary forms -------------------------------------------------------


def binary_classify(form: CubicForm) -> str:
    """Real-equivalence class of a binary cubic.

    One of "zero", "cube", "square-times-line", "one-real-root",
    "three-real-roots"; decided exactly from the Hessian and the
    discriminant.
    """
    if form.dim != 2:
        raise ValueError("binary classification needs a binary form")
    if form.is_zero():
        return "zero"
    p0, p1, p2, p3 = form.coefficient_vector()
    ring = PolyRing(("x", "y"))
    P = form.polynomial(ring)
    pxx = P.derivative(0).derivative(0)
    pyy = P.derivative(1).derivative(1)
    pxy = P.derivative(0).derivative(1)
    hess = pxx * pyy - pxy * pxy
    if hess.is_zero():
        return "cube"
    disc = (
        18 * p0 * p1 * p2 * p3
        - 4 * p1**3 * p3
        + p1**2 * p2**2
        - 4 * p0 * p2**3
        - 27 * p0**2 * p3**2
    )
    if disc == 0:
        return "square-times-line"
    return "three-real-roots" if disc > 0 else "one-real-root"


def wall_invariants(form: CubicForm) -> tuple[Fraction, Fraction, Fraction]:
    """The three quadratic coefficient combinations that cut out the unrealizable binary class."""
    if form.dim != 2:
        raise ValueError("expected a binary form")
    f111, f112, f122, f222 = (
        form[(0, 0, 0)],
        form[(0, 0, 1)],
        form[(0, 1, 1)],
        form[(1, 1, 1)],
    )
    return (
        f111 * f222 - f112 * f122,
        f111 * f122 - f112 * f112,
        f112 * f222 - f122 * f122,
    )


# -- ternary invariants and the diagonal family -----------------------------


def _eval_table(table, values):
    total = Fraction(0)
    for expo, coeff in table:
        term = Fraction(coeff)
        for i, e in enumerate(expo):
            if e:
                term *= values[i] ** e
        total += term
    return total


def degree4_invariant(form: CubicForm) -> Fraction:
    if form.dim != 3:
        raise ValueError("expected a ternary form")
    return _eval_table(DEGREE4_TERMS, form.coefficient_vector())


def degree6_invariant(form: CubicForm) -> Fraction:
    if form.dim != 3:
        raise ValueError("expected a ternary form")
    return _eval_table(DEGREE6_TERMS, form.coefficient_vector())


def discriminant(form: CubicForm) -> Fraction:
    """Vanishes exactly on singular ternary cubics (with the table normalization)."""
    s = degree4_invariant(form)
    t = degree6_invariant(form)
    return t * t - s**3


def hesse_form(sigma) -> CubicForm:
    """x^3 + y^3 + z^3 + 6*sigma*xyz as a form."""
    sigma = Fraction(sigma)
    return CubicForm(
        3,
        {
            (0, 0, 0): Fraction(1),
            (1, 1, 1): Fraction(1),
            (2, 2, 2): Fraction(1),
            (0, 1, 2): sigma,
        },
    )


def is_singular_ternary(form: CubicForm) -> bool:
    """Whether the projective cubic curve has a singular point (over the closure)."""
    if form.dim != 3:
        raise ValueError("expected a ternary form")
    if form.is_zero():
        raise ValueError("the zero form has no singularity type")
    ring = PolyRing(("x1", "x2", "x3"))
    P = form.polynomial(ring)
    gradient = [P.derivative(i) for i in range(3)]
    gb = buchberger([g for g in gradient if not g.is_zero()], ring)
    return not gb.is_finite_dimensional()


def _hesse_invariant_polys() -> tuple[roots.UPoly, roots.UPoly]:
    """Degree-4 and degree-6 invariants along the diagonal family, as polynomials in sigma."""
    values = [()] * 10
    one = roots.upoly([1])
    for idx, mono in enumerate(CUBIC_MONOMIALS):
        if mono in ((3, 0, 0), (0, 3, 0), (0, 0, 3)):
            values[idx] = one
        elif mono == (1, 1, 1):
            values[idx] = roots.upoly([0, 6])
    s_poly: roots.UPoly = ()
    for expo, coeff in DEGREE4_TERMS:
        term = roots.upoly([coeff])
        for i, e in enumerate(expo):
            if e:
                term = roots.mul(term, roots.power(values[i], e))
        s_poly = roots.add(s_poly, term)
    t_poly: roots.UPoly = ()
    for expo, coeff in DEGREE6_TERMS:
        term = roots.upoly([coeff])
        for i, e in enumerate(expo):
            if e:
                term = roots.mul(term, roots.power(values[i], e))
        t_poly = roots.add(t_poly, term)
    return s_poly, t_poly


_HESSE_INVARIANTS: tuple[roots.UPoly, roots.UPoly] | None = None


def hesse_sigma_candidates(form: CubicForm, tolerance) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for every diagonal-family parameter with matching invariants.

    The absolute invariant of the form is equated with the one of
    x^3+y^3+z^3+6*sigma*xyz, giving a univariate polynomial whose real
    roots (excluding the singular parameter -1/2) are returned.  Rational
    roots are recognized exactly and come back as zero-width intervals;
    the rest are isolated to at most the given width.
    """
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if is_singular_ternary(form):
        raise ValueError("the form is singular: it has no diagonal-family parameter")
    global _HESSE_INVARIANTS
    if _HESSE_INVARIANTS is None:
        _HESSE_INVARIANTS = _hesse_invariant_polys()
    s_h, t_h = _HESSE_INVARIANTS
    s = degree4_invariant(form)
    t = degree6_invariant(form)
    # s^3 * T(sigma)^2 - t^2 * S(sigma)^3 = 0  <=>  absolute invariants agree
    q = roots.sub(
        roots.scale(roots.mul(t_h, t_h), s**3),
        roots.scale(roots.mul(s_h, roots.mul(s_h, s_h)), t * t),
    )
    if roots.degree(q) < 1:
        raise ArithmeticError("degenerate invariant equation")
    q = roots.squarefree_part(q)
    out = []
    minus_half = Fraction(-1, 2)
    for lo, hi in roots.isolate_real_roots(q):
        exact = roots.rational_root_in_interval(q, lo, hi)
        if exact is not None:
            if exact != minus_half:
                out.append((exact, exact))
            continue
        lo, hi = roots.refine_interval(q, lo, hi, tolerance)
        if lo == hi:
            if lo != minus_half:
                out.append((lo, hi))
            continue
        out.append((lo, hi))
    return sorted(out)


# -- arithmetic of square classes -------------------------------------------


def squarefree_part(q) -> int:
    """Signed square-free integer representing q in Q*/(Q*)^2."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("0 has no class in Q*/(Q*)^2")
    n = abs(q.numerator) * q.denominator  # q and n differ by the square den^2
    sign = 1 if q > 0 else -1
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                result *= d
        d += 1 if d == 2 else 2
    result *= n  # leftover prime
    return sign * result


def same_square_class(a, b) -> bool:
    return squarefree_part(Fraction(a) / Fraction(b)) == 1


# -- rings back to forms -----------------------------------------------------


def cubic_form_of_ring(relations: Sequence[Polynomial], ring: PolyRing) -> CubicForm:
    """Cup-product form of a graded quotient with Hilbert profile (1, n, n, 1).

    Normal forms of the degree-3 monomials land in the one-dimensional top
    piece; the standard cubic monomial is used as the generator, so the
    result is well-defined up to a nonzero scale.
    """
    n = len(ring.variables)
    if n not in (2, 3):
        raise ValueError("expected a ring on 2 or 3 degree-two generators")
    gb = buchberger(list(relations), ring)
    profile = gb.hilbert_function(4)
    if profile != (1, n, n, 1, 0):
        raise ValueError(f"Hilbert profile {profile} is not (1, {n}, {n}, 1, 0)")
    std = gb.standard_monomials(3)
    top = std[0]
    coeffs = {}
    for i, j, k in _index_triples(n):
        expo = [0] * n
        for v in (i, j, k):
            expo[v] += 1
        nf = gb.normal_form(ring.monomial(expo))
        coeffs[(i, j, k)] = nf.coefficient(top)
    return CubicForm(n, coeffs)


def cubic_form_of_quadric_ideal(subspace: QuadricSubspace) -> CubicForm:
    """Inverse of associated_subspace for complete intersections of three quadrics."""
    if subspace.dimension() != 3:
        raise ValueError("expected a three-dimensional quadric subspace")
    return cubic_form_of_ring(subspace.basis, subspace.ring)
