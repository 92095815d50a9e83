# Biquotient cohomology rings and the higher-dimensional separators.
#
# The three biquotient families and the sporadic example are given by
# quadric relations on three degree-two generators.  Recovering the cubic
# form from the relations, deciding ellipticity, and locating the
# diagonal-family parameter are all exact operations.

from fractions import Fraction

from sullivan import (
    PolyRing,
    cubic_form_of_quadric_ideal,
    hesse_sigma_candidates,
    is_elliptic_form,
    is_singular_ternary,
    parse_polynomial,
)
from sullivan.catalog import biquotient_ring, ring_fragments, square_zero_profile
from sullivan.parsing import render_polynomial

for kind, params in (("b1", (7, 6)), ("b2", (0, 1)), ("b3", (1, 1, 3)), ("bsp", ())):
    ring = biquotient_ring(kind, *params)
    form = cubic_form_of_quadric_ideal(ring)
    verdict = is_elliptic_form(form, 3)
    print(f"{kind}{params}:")
    print(f"   form ~ {render_polynomial(form.canonical().polynomial())}")
    print(f"   elliptic: {verdict.elliptic}")
print()

# the sporadic example is nonsingular, so it sits somewhere on the
# diagonal family; the parameter is an algebraic number near 0.27788
sporadic = cubic_form_of_quadric_ideal(biquotient_ring("bsp"))
print("sporadic form singular?", is_singular_ternary(sporadic))
for lo, hi in hesse_sigma_candidates(sporadic, Fraction(1, 10**8)):
    mid = (lo + hi) / 2
    kind = "exact" if lo == hi else "isolated"
    print(f"   candidate parameter ({kind}): {float(mid):.8f}")
print()

# dimension nine: products with a 2-sphere are told apart from the
# circle bundle by the locus of degree-two classes with vanishing square
ring = PolyRing(("x1", "x2", "s"))
bundle = ring_fragments()[2]
cases = {
    "circle bundle over a product of four 2-spheres": (list(bundle.relations), bundle.ring),
    "diagonal family times the 2-sphere": (
        [parse_polynomial(t, ring) for t in ("x1*x2", "x1^2 - 2*x2^2", "s^2")],
        ring,
    ),
    "rank-three model times the 2-sphere": (
        [parse_polynomial(t, ring) for t in ("x1^2", "x2^2", "x1*x2", "s^2")],
        ring,
    ),
}
for label, (relations, r) in cases.items():
    dim, degree = square_zero_profile(relations, r)
    print(f"{label}: square-zero locus has dimension {dim}, degree {degree}")
