"""Crystal graphs on tableaux and the singularity criterion.

Semistandard fillings of a shape carry raising and lowering operators through
their reading words. Each connected component of the resulting graph holds
exactly one singular filling (every raising operator kills it), and the
weight of that filling labels the component. Counting singular fillings of a
fixed weight is what the whole multiplicity machine rests on.
"""

from weylchar import (
    MultiPartition,
    ShapeBound,
    SkewShape,
    crystal_components,
    etilde,
    is_singular,
    operator_indices,
    reading,
    weight_of,
)
from weylchar.serialize import components_to_dot

la = MultiPartition([[1], [1]])
bound = ShapeBound((2, 2))
shape = SkewShape(la)

comps = crystal_components(shape, bound)
print(f"Crystal graph of {la} with alphabets of size 2:")
for comp in comps:
    print(f"  component of size {len(comp.tableaux)}, highest weight {comp.highest_weight}")

# Inspect the singular element of each component.
print("\nSingular fillings and their reading words (0-based letters):")
for comp in comps:
    for t in comp.tableaux:
        if is_singular(t):
            word = reading(t)
            print(f"  weight {weight_of(t)}  words {[list(w) for w in word.words]}")

# The singularity test is a prefix condition on the reading word, equivalent
# to annihilation by every raising operator.
print("\nRaising operators on every filling of the first component:")
for t in comps[0].tableaux:
    w = reading(t)
    killed = all(etilde(w, op) is None for op in operator_indices(bound))
    print(f"  words {[list(x) for x in w.words]}  singular={is_singular(t)}  all-raising-null={killed}")

# DOT output for graphviz.
dot = components_to_dot(comps)
print(f"\nDOT output ({len(dot.splitlines())} lines); render with `dot -Tpng`:")
print("\n".join(dot.splitlines()[:6]))
print("  ...")
