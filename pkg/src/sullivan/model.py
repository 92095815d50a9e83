"""Sullivan models: validation, degreewise cohomology, purity and cup products.

A model is a generator table plus a differential image per generator.  The
differential extends by the graded Leibniz rule; cohomology in each degree
is exact linear algebra on the monomial bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, GeneratorTable, monomial_basis
from .cubic import CubicForm, squarefree_part
from .groebner import PolyRing, Polynomial, buchberger
from .linalg import RationalMatrix, pivot_columns_of_rref, reduce_mod_rows, row_space_rref


@dataclass(frozen=True)
class Violation:
    kind: str  # "degree" | "minimality" | "d-squared"
    generator: str
    message: str


@dataclass(frozen=True)
class CohomologyReport:
    betti: tuple[tuple[int, int], ...]
    max_degree_computed: int
    formal_dimension_claim: int | None
    poincare_symmetric: bool

    def betti_vector(self) -> tuple[int, ...]:
        return tuple(dim for _, dim in self.betti)


class SullivanModel:
    """Free graded-commutative algebra with a degree +1 differential."""

    __slots__ = ("table", "images")

    def __init__(self, table: GeneratorTable, differential: dict[str, AlgebraElement]):
        self.table = table
        images = []
        for name in table.names:
            image = differential.get(name)
            if image is None:
                images.append(table.zero())
                continue
            if image.table != table:
                raise ValueError(f"differential of {name!r} lives over a different table")
            images.append(image)
        for name in differential:
            if name not in table.names:
                raise KeyError(f"differential given for unknown generator {name!r}")
        self.images = tuple(images)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SullivanModel)
            and self.table == other.table
            and self.images == other.images
        )

    def differential_of(self, name_or_index) -> AlgebraElement:
        i = name_or_index if isinstance(name_or_index, int) else self.table.index(name_or_index)
        return self.images[i]

    # -- the Leibniz extension -----------------------------------------

    def d(self, element: AlgebraElement) -> AlgebraElement:
        return extend_differential(self, element)

    # -- validation ------------------------------------------------------

    def validate(self) -> Violation | None:
        """First violation of (degree +1, minimality, d^2 = 0), or None."""
        table = self.table
        for i, name in enumerate(table.names):
            image = self.images[i]
            if image.is_zero():
                continue
            deg = image.degree()
            if deg != table.degrees[i] + 1:
                return Violation(
                    "degree",
                    name,
                    f"d({name}) has degree {deg}, expected {table.degrees[i] + 1}",
                )
            if image.min_word_length() < 2:
                return Violation(
                    "minimality", name, f"d({name}) has a word-length-one term"
                )
        for i, name in enumerate(table.names):
            if not self.d(self.images[i]).is_zero():
                return Violation("d-squared", name, f"d(d({name})) is nonzero")
        return None

    def is_valid(self) -> bool:
        return self.validate() is None

    # -- structure ---------------------------------------------------------

    def even_generator_indices(self) -> tuple[int, ...]:
        return self.table.even_indices()

    def odd_generator_indices(self) -> tuple[int, ...]:
        return self.table.odd_indices()

    def is_pure(self) -> bool:
        """d vanishes on even generators and maps odd ones into the even subalgebra."""
        table = self.table
        for i in table.even_indices():
            if not self.images[i].is_zero():
                return False
        odd = set(table.odd_indices())
        for i in table.odd_indices():
            for mono in self.images[i].terms:
                if any(mono[j] for j in odd):
                    return False
        return True

    def formal_dimension_claim(self) -> int:
        """Formal dimension predicted by the generator degrees of an elliptic model."""
        total = 0
        q = r = 0
        for deg in self.table.degrees:
            if deg % 2 == 0:
                total -= deg // 2
                q += 1
            else:
                total += (deg + 1) // 2
                r += 1
        return 2 * total - (r - q)

    def __repr__(self) -> str:
        return f"SullivanModel({self.table!r})"


def extend_differential(m: SullivanModel, a: AlgebraElement) -> AlgebraElement:
    """Termwise graded Leibniz extension of the generator differentials."""
    if a.table != m.table:
        raise ValueError("element lives over a different table")
    table = m.table
    result = table.zero()
    for mono, coeff in a.terms.items():
        acc = table.zero()
        odd_positions = [i for i in table.odd_indices() if mono[i]]
        # even factors: the image has odd degree, so commuting it past the
        # odd tail of the monomial costs one sign per odd factor
        even_sign = -1 if len(odd_positions) % 2 else 1
        for i in table.even_indices():
            e = mono[i]
            if e == 0 or m.images[i].is_zero():
                continue
            rest = list(mono)
            rest[i] = e - 1
            acc = acc + (table.element({tuple(rest): Fraction(even_sign * e)}) * m.images[i])
        for pos, i in enumerate(odd_positions):
            if m.images[i].is_zero():
                continue
            rest = list(mono)
            rest[i] = 0
            sign = -1 if pos % 2 else 1
            acc = acc + (table.element({tuple(rest): Fraction(sign)}) * m.images[i])
        result = result + acc.scale(coeff)
    return result


# -- cohomology ---------------------------------------------------------------


def differential_matrix(m: SullivanModel, k: int) -> tuple[RationalMatrix, list, list]:
    """Matrix of d_k with rows over the degree-(k+1) basis, plus both bases."""
    source = monomial_basis(m.table, k)
    target = monomial_basis(m.table, k + 1)
    index = {mono: r for r, mono in enumerate(target)}
    columns = []
    for mono in source:
        image = m.d(m.table.element({mono: Fraction(1)}))
        col = [Fraction(0)] * len(target)
        for tm, c in image.terms.items():
            col[index[tm]] = c
        columns.append(col)
    rows = [[columns[c][r] for c in range(len(source))] for r in range(len(target))]
    return RationalMatrix.from_rows(rows, len(source)), source, target


def betti_numbers(m: SullivanModel, max_degree: int) -> tuple[int, ...]:
    """(b_0, ..., b_max) by degreewise kernel/rank bookkeeping."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    ranks = []
    sizes = []
    for k in range(max_degree + 1):
        matrix, source, _ = differential_matrix(m, k)
        sizes.append(len(source))
        ranks.append(matrix.rank())
    betti = []
    for k in range(max_degree + 1):
        prev_rank = ranks[k - 1] if k else 0
        betti.append(sizes[k] - ranks[k] - prev_rank)
    return tuple(betti)


def cohomology_betti(m: SullivanModel, max_degree: int) -> CohomologyReport:
    betti = betti_numbers(m, max_degree)
    n = m.formal_dimension_claim()
    symmetric = False
    if 0 <= n <= max_degree:
        symmetric = all(betti[k] == betti[n - k] for k in range(n + 1))
    return CohomologyReport(
        betti=tuple(enumerate(betti)),
        max_degree_computed=max_degree,
        formal_dimension_claim=n if n >= 0 else None,
        poincare_symmetric=symmetric,
    )


class _DegreeClasses:
    """Coordinates on H^k: reduction of degree-k cocycle vectors modulo im(d_{k-1})."""

    def __init__(self, m: SullivanModel, k: int):
        self.model = m
        self.k = k
        self.basis = monomial_basis(m.table, k)
        self._index = {mono: i for i, mono in enumerate(self.basis)}
        below, source, _ = differential_matrix(m, k - 1) if k else (None, [], [])
        image_rows = []
        if below is not None:
            for c in range(len(source)):
                image_rows.append([below.data[r][c] for r in range(below.rows)])
        self.image_rref = row_space_rref(image_rows, len(self.basis))
        self.pivots = pivot_columns_of_rref(self.image_rref)
        self.matrix, _, _ = differential_matrix(m, k)

    def dimension(self) -> int:
        return len(self.basis) - self.matrix.rank() - len(self.image_rref)

    def class_generator(self) -> tuple[Fraction, ...]:
        """Reduced representative of a nonzero class, first nonzero coordinate +1."""
        for vec in self.matrix.kernel_basis():
            reduced = reduce_mod_rows(vec, self.image_rref, self.pivots)
            if any(reduced):
                lead = next(i for i, c in enumerate(reduced) if c)
                return tuple(c / reduced[lead] for c in reduced)
        raise ArithmeticError(f"H^{self.k} is zero")

    def reduce_element(self, element: AlgebraElement) -> tuple[Fraction, ...]:
        vec = [Fraction(0)] * len(self.basis)
        for mono, c in element.terms.items():
            vec[self._index[mono]] = c
        return reduce_mod_rows(vec, self.image_rref, self.pivots)


def cup_product_cubic_form(m: SullivanModel) -> CubicForm:
    """Cubic form of triple products of degree-two generators into H^6 (up to scale).

    Requires dim H^6 = 1 and two or three degree-two generators, all
    cocycles.  The H^6 generator is the first reduced cocycle-basis vector,
    scaled so its first nonzero coordinate is +1.
    """
    table = m.table
    xs = [i for i, d in enumerate(table.degrees) if d == 2]
    if len(xs) not in (2, 3):
        raise ValueError("need two or three degree-two generators")
    for i in xs:
        if not m.images[i].is_zero():
            raise ValueError("degree-two generators must be cocycles")
    classes = _DegreeClasses(m, 6)
    if classes.dimension() != 1:
        raise ValueError("dim H^6 must be 1")
    generator = classes.class_generator()
    lead = next(i for i, c in enumerate(generator) if c)
    coeffs = {}
    for a in range(len(xs)):
        for b in range(a, len(xs)):
            for c in range(b, len(xs)):
                product = table.generator(xs[a]) * table.generator(xs[b]) * table.generator(xs[c])
                reduced = classes.reduce_element(product)
                coeffs[(a, b, c)] = reduced[lead]
                if any(x - coeffs[(a, b, c)] * g for x, g in zip(reduced, generator)):
                    raise ArithmeticError("degree-6 class is not a multiple of the generator")
    return CubicForm(len(xs), coeffs)


def poincare_duality_check(m: SullivanModel, formal_dimension: int | None = None) -> bool:
    """Betti symmetry, one-dimensional top degree, and a nondegenerate
    pairing of degree two against degree n-2 when b2 > 0."""
    n = m.formal_dimension_claim() if formal_dimension is None else formal_dimension
    if n < 0:
        return False
    betti = betti_numbers(m, n)
    if betti[n] != 1 or any(betti[k] != betti[n - k] for k in range(n + 1)):
        return False
    xs = [i for i, d in enumerate(m.table.degrees) if d == 2]
    if not xs or n < 4:
        return True
    top = _DegreeClasses(m, n)
    generator = top.class_generator()
    lead = next(i for i, c in enumerate(generator) if c)
    middle, _, _ = differential_matrix(m, n - 2)
    rows = []
    for i in xs:
        x = m.table.generator(i)
        row = []
        for vec in middle.kernel_basis():
            element = m.table.element(
                {mono: c for mono, c in zip(monomial_basis(m.table, n - 2), vec) if c}
            )
            row.append(top.reduce_element(x * element)[lead])
        rows.append(row)
    pairing = RationalMatrix.from_rows(rows, len(rows[0]) if rows else 0)
    return pairing.rank() == len(xs)


def pairing_matrix(m: SullivanModel, generator_degree: int = 2) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of the multiplication pairing of the two degree-d generators into H^{2d}."""
    table = m.table
    xs = [i for i, d in enumerate(table.degrees) if d == generator_degree]
    if len(xs) != 2:
        raise ValueError(f"need exactly two generators of degree {generator_degree}")
    classes = _DegreeClasses(m, 2 * generator_degree)
    if classes.dimension() != 1:
        raise ValueError(f"dim H^{2 * generator_degree} must be 1")
    generator = classes.class_generator()
    lead = next(i for i, c in enumerate(generator) if c)
    rows = []
    for i in xs:
        row = []
        for j in xs:
            reduced = classes.reduce_element(table.generator(i) * table.generator(j))
            row.append(reduced[lead])
        rows.append(tuple(row))
    return tuple(rows)


def h4_pairing_discriminant(m: SullivanModel, generator_degree: int = 2) -> int:
    """Square class of the determinant of the middle pairing; basis-independent."""
    rows = pairing_matrix(m, generator_degree)
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if det == 0:
        raise ValueError("the pairing is degenerate")
    return squarefree_part(det)


# -- purity and the regular-sequence criterion ----------------------------


def even_subalgebra_ring(m: SullivanModel) -> PolyRing:
    return PolyRing(tuple(m.table.names[i] for i in m.table.even_indices()))


def even_element_to_polynomial(m: SullivanModel, element: AlgebraElement, ring: PolyRing) -> Polynomial:
    evens = m.table.even_indices()
    odd = set(m.table.odd_indices())
    terms = {}
    for mono, c in element.terms.items():
        if any(mono[j] for j in odd):
            raise ValueError("element is not in the even subalgebra")
        terms[tuple(mono[i] for i in evens)] = c
    return ring.from_terms(terms)


def pure_is_elliptic(m: SullivanModel) -> bool:
    """Finite-dimensionality of (even subalgebra)/(images of the odd generators).

    This is the ellipticity criterion for pure models; for an equal number
    of even and odd generators it coincides with the images forming a
    regular sequence.
    """
    if not m.is_pure():
        raise ValueError("the model is not pure")
    ring = even_subalgebra_ring(m)
    if len(ring.variables) == 0:
        return True
    images = [
        even_element_to_polynomial(m, m.images[i], ring)
        for i in m.table.odd_indices()
        if not m.images[i].is_zero()
    ]
    if not images:
        return False
    return buchberger(images, ring).is_finite_dimensional()


def formal_dimension_from_exponents(pair) -> int:
    """n = 2(sum b - sum a) - (r - q) for an exponent pair."""
    return 2 * (sum(pair.b) - sum(pair.a)) - (len(pair.b) - len(pair.a))
