# Rational types of elliptic seven-manifolds.
#
# Four exponent shapes occur in dimension seven.  Three of them pin the
# model down to a product of spheres and projective spaces; the last one
# splits by the rank of the degree-3 differential into a one-parameter
# family (classified by a square class) and a single rank-three model.

from fractions import Fraction

from sullivan import betti_numbers, h4_pairing_discriminant, parse_model, render_model
from sullivan.catalog import (
    classify_dim7,
    cp_model,
    dim7_rank3_model,
    dim7_sigma_model,
    product_model,
    sphere_model,
)

representatives = [
    ("7-sphere", sphere_model(7)),
    ("product of 2- and 5-spheres", product_model(sphere_model(2), sphere_model(5))),
    ("projective plane times 3-sphere", product_model(cp_model(2), sphere_model(3))),
    ("product of 3- and 4-spheres", product_model(sphere_model(3), sphere_model(4))),
    ("rank-three homogeneous model", dim7_rank3_model()),
    ("diagonal family at 2", dim7_sigma_model(2)),
]
for label, model in representatives:
    print(f"{label:35s} -> {classify_dim7(model)}")
print()

# the family parameter only matters through its square class
for s in (2, 8, 3, Fraction(1, 2), 18):
    model = dim7_sigma_model(s)
    print(
        f"family parameter {str(s):4s}: classified {classify_dim7(model)}, "
        f"middle pairing class {h4_pairing_discriminant(model)}"
    )
print()

# the rank-three model has no middle cohomology at all
rank3 = dim7_rank3_model()
print("rank-three model betti:", betti_numbers(rank3, 7))

# models round-trip through the text format
text = render_model(dim7_sigma_model(2))
print()
print("the family member at 2, as a model file:")
print(text)
print("reparsing gives the same classification:", classify_dim7(parse_model(text)))
