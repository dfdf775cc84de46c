"""Exact equivariant K-ring computations for even-dimensional quadric GKM graphs.

The package builds the labeled graph of a 2n-dimensional quadric, its
generator K-classes, verifies the relation families among them, and computes
the unique coefficients of any K-class over the canonical free-module basis.
All arithmetic is exact over the integers.
"""

from .decompose import (
    CanonicalBasis,
    Decomposition,
    FreeModuleReport,
    NotAKClassError,
    canonical_basis,
    decompose,
    localization_index_set,
    random_k_class,
    recompose,
    restrict_at,
    verify_free_module,
)
from .gkm import (
    AxiomReport,
    AxiomViolation,
    Connection,
    ConnectionDerivationError,
    GkmGraph,
    KClassReport,
    VertexMap,
    check_axial_axioms,
    check_connection_involution,
    check_three_independence,
    connection_preserves_subset,
    derive_connection,
    is_k_class,
)
from .laurent import (
    LatticeQuotient,
    LaurentPolynomial,
    NonDivisibleError,
    ParseError,
    constant,
    div_exact_binomial,
    div_exact_product,
    divisible_by_binomial,
    emit,
    from_json_dict,
    monomial,
    one,
    one_minus_monomial,
    parse,
    to_json_dict,
    zero,
)
from .quadric import (
    QuadricGraph,
    antipodal_product_class,
    monomial_class,
    supported_class,
    thom_class,
    vertex_map_from_json_dict,
    vertex_map_to_json_dict,
)
from .relations import (
    ClassProvider,
    RelationReport,
    check_antipodal_product,
    check_complete_set_split,
    check_generator_identity,
    check_peeling,
    check_product_vanishing,
    random_empty_intersection_family,
    spare_pole_pair,
    support_index_sets,
    verify_all,
)

__version__ = "0.1.0"
