"""The decomposition-matrix factorization harness.

Over a field, the decomposition matrix D of the full algebra, the outer
decomposition matrix Dbar of the product of one-component algebras, and the
restriction matrix X of simples satisfy B * Dbar = D * X, with B the exact
multiplicity matrix computed here. Dbar and X come from modular
representation data the engine does not compute; it consumes them as files
and either derives D (when X is the identity) or reports the residual of a
proposed factorization.
"""

import random

from weylchar import (
    ShapeBound,
    derive_decomposition,
    factorization_residual,
    identity_matrix,
    multiplicity_matrix,
)
from weylchar.branching import IndexedMatrix

bound = ShapeBound.for_size(3, 2)
b = multiplicity_matrix(3, bound)
ident = identity_matrix(3, bound)

print("B at n=3, r=2 (canonical order):")
for mp, row in zip(b.order, b.rows):
    print(f"  {str(mp):>18}  {list(row)}")

# Semisimple parameters: Dbar and X are both the identity, so the derived
# decomposition matrix is B itself.
derived = derive_decomposition(b, ident)
print("\nDbar = X = I  =>  derived D equals B:", derived == b)

# A synthetic modular Dbar (any unitriangular integer matrix works here):
# derived D = B * Dbar, and the residual of (B, Dbar, X=I, D) is zero.
rng = random.Random(5)
dim = b.dim
rows = [
    [1 if i == j else (rng.randint(0, 3) if j > i else 0) for j in range(dim)]
    for i in range(dim)
]
dbar = IndexedMatrix(3, bound, b.order, rows)
derived = derive_decomposition(b, dbar)
report = factorization_residual(b, dbar, ident, derived)
print("synthetic unitriangular Dbar  =>  residual:", report)

# The harness never trusts its inputs blindly: a wrong D shows up at once.
wrong = IndexedMatrix(3, bound, b.order, ident.rows)
report = factorization_residual(b, dbar, ident, wrong)
print("deliberately wrong D          =>  residual:", report)
