"""Exact computations in the Faa di Bruno Hopf algebra of formal diffeomorphisms."""
from .arith import TypeVector, binomial, enumerate_type_vectors, factorial, fdb_multinomial
from .cm import a_in_delta, bilinear_part, coproduct_delta, coproduct_delta_closed, delta_in_a, k_coefficient
from .coloured import (
    NSeries,
    coloured_convolution,
    coloured_coproduct,
    enumerate_coloured_partitions,
    nseries_compose,
    nseries_revert,
)
from .dual import DualFunctional, a_prime, b_prime, dual_product, pair
from .errors import (
    CapExceededError,
    DomainError,
    FamilyMismatchError,
    FdbError,
    MissingImageError,
    NotUnitalError,
    ShapeMismatchError,
)
from .hopf import (
    Character,
    antipode,
    check_hopf_axioms,
    convolve,
    coproduct,
    coproduct_poly,
    counit,
    primitive_space,
)
from .partitions import (
    SetPartition,
    bell_partial,
    enumerate_partitions,
    groupoid_cardinality,
    incidence_coproduct,
    partition_type,
    refinement_interval_vector,
    stirling2,
)
from .poly import Generator, Polynomial, TensorElement, a, delta, parse_poly, pi, x
from .series import ExpSeries, compose, compose_oracle, majorant_bound, revert
from .words import (
    WordElement,
    check_hopf_embedding,
    concat_coproduct,
    deconcatenation,
    gamma_closed,
    gamma_recursive,
    shuffle_product,
)

__all__ = [
    "a",
    "a_in_delta",
    "a_prime",
    "antipode",
    "b_prime",
    "bell_partial",
    "bilinear_part",
    "binomial",
    "CapExceededError",
    "Character",
    "check_hopf_axioms",
    "check_hopf_embedding",
    "coloured_convolution",
    "coloured_coproduct",
    "compose",
    "compose_oracle",
    "concat_coproduct",
    "convolve",
    "coproduct",
    "coproduct_delta",
    "coproduct_delta_closed",
    "coproduct_poly",
    "counit",
    "deconcatenation",
    "delta",
    "delta_in_a",
    "DomainError",
    "dual_product",
    "DualFunctional",
    "enumerate_coloured_partitions",
    "enumerate_partitions",
    "enumerate_type_vectors",
    "ExpSeries",
    "factorial",
    "FamilyMismatchError",
    "fdb_multinomial",
    "FdbError",
    "gamma_closed",
    "gamma_recursive",
    "Generator",
    "groupoid_cardinality",
    "incidence_coproduct",
    "k_coefficient",
    "majorant_bound",
    "MissingImageError",
    "NotUnitalError",
    "NSeries",
    "nseries_compose",
    "nseries_revert",
    "pair",
    "parse_poly",
    "partition_type",
    "pi",
    "Polynomial",
    "primitive_space",
    "refinement_interval_vector",
    "revert",
    "SetPartition",
    "ShapeMismatchError",
    "shuffle_product",
    "stirling2",
    "TensorElement",
    "TypeVector",
    "WordElement",
    "x",
]

__version__ = "0.1.0"
