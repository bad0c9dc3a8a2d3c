"""Exact spectra of normal Cayley graphs on Sym(n) generated by (n-k)-cycles.

The headline objects: symmetric-group characters via the hook-removal
recursion, eigenvalues chi(sigma)/f * |class| with multiplicity f^2,
closed forms for the fourteen low-dimension shapes, quotient matrices of
the point-stabilizer coset partition, dense brute-force spectra, and a
Lanczos certification pipeline for the filtered 5-cycle graphs on Alt(8).
"""

from .characters import (
    character_on_long_cycle,
    character_table,
    character_table_csv,
    conjugacy_class_size,
    cycle_type_sign,
    mn_character,
)
from .eigensolve import (
    MatrixOperator,
    dense_spectrum,
    extremal_eigenvalues,
    five_cycle_lambda2_formula,
    verify_recursive_5cycles,
)
from .errors import SizeLimitError, VerificationError
from .permutations import (
    CayleyOperator,
    GroupSlice,
    Permutation,
    alternating_group,
    cayley_adjacency,
    coset_count,
    enumerate_class_cycles,
    symmetric_group,
    t_filtration,
)
from .quotient import (
    QuotientMatrix,
    coset_cells,
    quotient_eigenvalues_gamma,
    quotient_lambda2_recursive,
    quotient_matrix_gamma,
    verify_equitable,
)
from .spectra import (
    HypothesisFlags,
    Lambda2,
    SpectrumEntry,
    class_size,
    closed_form_table1,
    concrete_shape,
    conjecture_check,
    eigenvalue_for,
    full_spectrum,
    hypothesis_check,
    in_asserted_regime,
    lambda2,
    low_dimension_partitions,
    spectrum_to_csv,
    spectrum_to_json,
)
from .young import (
    count_standard_tableaux,
    dimension,
    enumerate_partitions,
    enumerate_rim_hooks,
    format_partition,
    hook_lengths,
    parse_partition,
    remove_rim_hook,
    transpose,
)

__version__ = "0.1.0"

__all__ = [
    "CayleyOperator",
    "GroupSlice",
    "HypothesisFlags",
    "Lambda2",
    "MatrixOperator",
    "Permutation",
    "QuotientMatrix",
    "SizeLimitError",
    "SpectrumEntry",
    "VerificationError",
    "alternating_group",
    "cayley_adjacency",
    "character_on_long_cycle",
    "character_table",
    "character_table_csv",
    "class_size",
    "closed_form_table1",
    "concrete_shape",
    "conjecture_check",
    "conjugacy_class_size",
    "coset_cells",
    "coset_count",
    "count_standard_tableaux",
    "cycle_type_sign",
    "dense_spectrum",
    "dimension",
    "eigenvalue_for",
    "enumerate_class_cycles",
    "enumerate_partitions",
    "enumerate_rim_hooks",
    "extremal_eigenvalues",
    "five_cycle_lambda2_formula",
    "format_partition",
    "full_spectrum",
    "hook_lengths",
    "hypothesis_check",
    "in_asserted_regime",
    "lambda2",
    "low_dimension_partitions",
    "mn_character",
    "parse_partition",
    "quotient_eigenvalues_gamma",
    "quotient_lambda2_recursive",
    "quotient_matrix_gamma",
    "remove_rim_hook",
    "spectrum_to_csv",
    "spectrum_to_json",
    "symmetric_group",
    "t_filtration",
    "transpose",
    "verify_equitable",
    "verify_recursive_5cycles",
    "__version__",
]
