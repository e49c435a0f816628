"""Exact combinatorics of multipartition tableaux, crystal words, branching
multiplicities, Weyl-module characters and their structure constants."""

from .shapes import (
    Cell,
    Grouping,
    MultiComposition,
    MultiPartition,
    Partition,
    ShapeBound,
    SkewShape,
    as_composition,
    canonical_key,
    cell_order_cmp,
    component_sizes,
    dominates,
    group_sizes,
    multicompositions,
    multipartitions,
    partitions_of,
    prefix_dominates,
    skew_cells,
    split_components,
)
from .tableaux import (
    Entry,
    Tableau,
    count_tableaux,
    count_straight_tableaux,
    entry_le,
    enumerate_all_tableaux,
    enumerate_tableaux,
    equivalence_classes,
    equivalence_key,
    is_semistandard,
    superstandard,
    weight_of,
)
from .crystal import (
    CrystalWord,
    OperatorIndex,
    crystal_components,
    etilde,
    ftilde,
    is_singular,
    is_singular_word,
    operator_indices,
    reading,
    word_weight,
)
from .branching import (
    IndexedMatrix,
    derive_decomposition,
    factorization_residual,
    grouping_factorization_check,
    identity_matrix,
    invert_unitriangular,
    kostka,
    layer_chains,
    lr_coeff,
    matrix_product,
    multiplicity,
    multiplicity_by_chains,
    multiplicity_by_singular,
    multiplicity_by_solve,
    multiplicity_matrix,
    multiplicity_row_by_solve,
    skew_singular_count,
)
from .symfunc import (
    MonomialPoly,
    SchurExpansion,
    character,
    scan_structure_constants,
    schur_product,
    schur_to_monomials,
    structure_constants,
    to_schur_basis,
    to_weyl_basis,
    truncate_to_bound,
    union_alphabet_schur,
    weyl_schur,
)
from .errors import ConsistencyError, InputError

__version__ = "0.1.0"
