"""Characters of Weyl modules as generalized Schur functions.

The character of the Weyl module of shape la expands in the Schur-product
basis with the multiplicity row as coefficients. Those expansions form a new
integer basis of the ring of symmetric polynomials; this script inspects the
basis, its structure constants, and the union-alphabet identity for shapes
concentrated in one component.
"""

from weylchar import (
    MultiPartition,
    Partition,
    ShapeBound,
    character,
    structure_constants,
    union_alphabet_schur,
    weyl_schur,
)

la = MultiPartition([[1], [1]])

print(f"Character basis element for {la}:")
for mp, c in weyl_schur(la).canonical_items():
    print(f"  {c} * S{mp}")

print(f"\nMonomial character of {la} with two variables per alphabet:")
poly = character(la, ShapeBound((2, 2)))
for mc, c in poly.canonical_items():
    print(f"  {c} * x^{mc}")

# Structure constants: the product of two basis elements expanded back in
# the same basis. For shapes concentrated in a common component they are
# literally Littlewood-Richardson coefficients.
a = MultiPartition([[2, 1], []])
b = MultiPartition([[1, 1], []])
print(f"\nProduct of the basis elements of {a} and {b}:")
for nu, c in structure_constants(a, b).canonical_items():
    print(f"  {c} * T{nu}")

# Mixed components: still nonnegative in every case the engine has scanned.
a = MultiPartition([[1], [1]])
b = MultiPartition([[], [2]])
print(f"\nProduct of the basis elements of {a} and {b}:")
for nu, c in structure_constants(a, b).canonical_items():
    print(f"  {c} * T{nu}")

# A shape concentrated in component t has a closed form: its basis element
# is the single Schur function evaluated on the union of the alphabets from
# t onward.
p = Partition([2, 1])
print(f"\nS_{list(p.parts)} on the union of alphabets 1..3 (t=1, r=3):")
for mp, c in union_alphabet_schur(p, 0, 3).canonical_items():
    print(f"  {c} * S{mp}")
concentrated = MultiPartition([[2, 1], [], []])
assert union_alphabet_schur(p, 0, 3).terms == weyl_schur(concentrated).terms
print("matches the character expansion of", concentrated)
