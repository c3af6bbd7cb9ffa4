"""Exact-rational Hom-Leibniz algebras in the Loday-Pirashvili category.

Structure constants are dense numpy object arrays of Python ints and
``fractions.Fraction``; every check is exact.  Submodules:

``qlinalg``      exact linear algebra (RREF, nullspaces, subspaces)
``homcore``      Hom-vector spaces, Hom-Leibniz algebras, bimodules
``lmcat``        LM objects, morphisms, representations, constructions
``dialg``        dialgebras and the Leibniz structures they induce
``cohomology``   cochains, coboundaries, cocycle checks, cohomology dimensions
``deform``       truncated-polynomial deformations, Nijenhuis pairs, rigidity
``extensions``   abelian extensions, splittings, classification
``zoo``          named and seeded random instances
``fileformat``   JSON instance files
``cli``          the ``homleibniz`` command
"""

from .cohomology import (
    Cochain1,
    Cochain2,
    Cochain3,
    CochainSpace,
    apply_d1,
    apply_d2,
    check_1_cocycle,
    check_2_cocycle,
    cohomology_dim,
    d1_matrix,
    d2_matrix,
    solve_coboundary,
)
from .deform import (
    DeformationData,
    NijenhuisPair,
    TruncatedPolynomial,
    check_formal_deformation,
    check_infinitesimal_deformation,
    deformation_from_nijenhuis,
    deformations_equivalent_first_order,
    deformed_structure,
    is_nijenhuis,
    is_rigid,
    is_trivial_deformation,
)
from .dialg import (
    Dialgebra,
    check_admissible,
    check_left_dialgebra,
    check_right_dialgebra,
    dialgebra_from_lm,
    leibniz_from_admissible,
    symmetric_lm_products,
)
from .extensions import (
    AbelianExtension,
    Splitting,
    are_equivalent,
    canonical_splitting,
    check_extension,
    extension_from_cocycle,
    extract_cocycle,
    induced_bimodule,
)
from .homcore import (
    LEFT,
    RIGHT,
    Bimodule,
    ConstructionError,
    HomAlgebra,
    HomVectorSpace,
    adjoint_bimodule,
    check_bimodule,
    check_hom_leibniz,
    opposite,
    semidirect_product,
    yau_twist,
)
from .lmcat import (
    LMMorphism,
    LMObject,
    LMRepresentation,
    adjoint_object,
    adjoint_representation,
    check_lm_morphism,
    check_lm_object,
    check_lm_representation,
    check_via_semidirect_hom,
    lm_semidirect,
    tensor_square_lm,
    zero_object,
)
from .qlinalg import ContainmentError, Subspace, parse_rational
from .reports import Check, CheckReport

__version__ = "0.1.0"

__all__ = [
    "AbelianExtension",
    "adjoint_bimodule",
    "adjoint_object",
    "adjoint_representation",
    "apply_d1",
    "apply_d2",
    "are_equivalent",
    "Bimodule",
    "canonical_splitting",
    "Check",
    "check_1_cocycle",
    "check_2_cocycle",
    "check_admissible",
    "check_bimodule",
    "check_extension",
    "check_formal_deformation",
    "check_hom_leibniz",
    "check_infinitesimal_deformation",
    "check_left_dialgebra",
    "check_lm_morphism",
    "check_lm_object",
    "check_lm_representation",
    "check_right_dialgebra",
    "check_via_semidirect_hom",
    "CheckReport",
    "Cochain1",
    "Cochain2",
    "Cochain3",
    "CochainSpace",
    "cohomology_dim",
    "ConstructionError",
    "ContainmentError",
    "d1_matrix",
    "d2_matrix",
    "deformation_from_nijenhuis",
    "DeformationData",
    "deformations_equivalent_first_order",
    "deformed_structure",
    "Dialgebra",
    "dialgebra_from_lm",
    "extension_from_cocycle",
    "extract_cocycle",
    "HomAlgebra",
    "HomVectorSpace",
    "induced_bimodule",
    "is_nijenhuis",
    "is_rigid",
    "is_trivial_deformation",
    "LEFT",
    "leibniz_from_admissible",
    "lm_semidirect",
    "LMMorphism",
    "LMObject",
    "LMRepresentation",
    "NijenhuisPair",
    "opposite",
    "parse_rational",
    "RIGHT",
    "semidirect_product",
    "solve_coboundary",
    "Splitting",
    "Subspace",
    "symmetric_lm_products",
    "tensor_square_lm",
    "TruncatedPolynomial",
    "yau_twist",
    "zero_object",
    "__version__",
]
