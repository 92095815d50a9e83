# Elliptic exponent tables in low dimensions.
#
# The generators of an elliptic minimal model are recorded by two sorted
# tuples: a holds half the degrees of the even generators, b holds
# (degree+1)/2 for the odd ones.  Which pairs occur is a purely
# arithmetic question, and this script walks the answer for dimensions
# two through nine.

from sullivan import ExponentPair, check_constraints, check_sac, enumerate_exponents

for n in range(2, 10):
    pairs = enumerate_exponents(n)
    print(f"dimension {n}: {len(pairs)} exponent pairs")
    for pair in pairs:
        print(f"   {pair}")
print()

# The arithmetic condition in action: (1,2; 2,2) fails because no entry
# of b is a multiple of 2 with coefficient sum at least two.
bad = ExponentPair((1, 2), (2, 2))
print(f"{bad}: arithmetic condition holds? {check_sac(bad)}")

good = ExponentPair((1, 1), (2, 3))
print(f"{good}: arithmetic condition holds? {check_sac(good)}")
print(f"{good}: numeric constraints at n=6? {check_constraints(good, 6)}")
print(f"{good}: formal dimension = {good.formal_dimension()}")
print()

# Exponent pairs multiply: a product of elliptic models concatenates the
# tuples, so the tables are closed under partitioned sums of dimensions.
six = set(enumerate_exponents(6))
for p1 in enumerate_exponents(2):
    for p2 in enumerate_exponents(4):
        merged = ExponentPair(p1.a + p2.a, p1.b + p2.b)
        print(f"{p1} x {p2} -> {merged} in dimension-6 table: {merged in six}")
