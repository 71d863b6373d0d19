"""Exact homological algebra for bound quiver algebras with monomial relations.

The toolkit computes minimal projective/injective resolutions, Ext groups
over a prime field, projective/injective dimensions, minimal subcategory
approximations and maximal orthogonal subcategories, plus a machine-checked
suite of structural statements about algebras of global dimension two.
"""

from .algebra import (
    AlgebraSpecError,
    Arrow,
    BoundAlgebra,
    MonomialIdeal,
    NonAdmissibleError,
    Path,
    Quiver,
    cartan_matrix,
    is_nakayama,
    opposite,
    parse_algebra,
    path_basis,
)
from .approx import (
    IncompleteUniverseError,
    SubcategorySet,
    is_approximation,
    is_maximal_orthogonal,
    minimal_approximation,
    perp,
    trivial_candidate,
)
from .catalog import Universe, enumerate_indecomposables, r_lambda, reaches, uniserial_module
from .homology import (
    Resolution,
    default_cap,
    dim,
    ext_dim,
    ext_dim_via_injective,
    ext_module,
    global_dimension,
    minimal_resolution,
)
from .rep import (
    DecompositionError,
    Filtration,
    Morphism,
    MorphismParts,
    Representation,
    TruncationError,
    compose,
    cover_envelope,
    decompose,
    direct_sum,
    duality,
    filtration_parts,
    hom_basis,
    hom_dim,
    identity_morphism,
    is_injective,
    is_isomorphic,
    is_minimal,
    is_projective,
    minimal_version,
    morphism_parts,
    rep_from_json_dict,
    rep_to_json_dict,
    standard_module,
    zero_morphism,
    zero_representation,
)
from .verify import (
    CHECK_IDS,
    CheckReport,
    CheckResult,
    StructureFlags,
    run_all_checks,
    run_check,
    structure_flags,
)

__version__ = "0.1.0"
