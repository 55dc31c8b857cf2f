"""gammacalc: exhaustive finite computation with pointed-set functors and strong monads."""

from .errors import (
    AlgebraInvalid,
    BinaturalityViolation,
    DegreeMismatch,
    GammaCalcError,
    NotCofibrant,
    NotGenerated,
    NotReflexive,
    SizeGuardExceeded,
    StructureNotInduced,
    SubobjectNotClosed,
    SubsetNotInvariant,
    TheoryInvalid,
)
from .pointed import (
    UNIT,
    FinPointedSet,
    PointedMap,
    identity,
    map_space,
    quotient_by_relations,
    smash,
    smash_map,
    smash_pair,
    smash_unpair,
    wedge,
)
from .gammacat import GammaOperator
from .gammaset import (
    GammaMap,
    GammaSet,
    build_gamma_set,
    is_cofibrant,
    representable,
    truncate,
)
from .prolong import (
    CircleProduct,
    CoendTable,
    DayProduct,
    assembly,
    circle,
    day_smash,
    evaluation_comparison,
    prolong,
    strength,
)
from .theories import (
    FiniteMonoid,
    GammaRing,
    GammaTheory,
    LawReport,
    MonoidModule,
    SmashMonad,
    TheoryMonad,
    check_strong_monad,
    endomorphism_gamma_ring,
    endomorphism_monoid,
    enrichment_to_strength,
    free_semilattice_theory,
    lambda_monad_morphism,
    module_category_check,
    monad_from_theory,
    monoid_to_monad,
    reader_theory,
    strength_to_enrichment,
    suite_monads,
    trivial_theory,
    validate_ring,
    validate_theory,
)
from .algebras import (
    Algebra,
    algebra_coequalizer,
    bar_resolution,
    cotensor_algebra,
    enriched_hom_algebras,
    enumerate_algebras,
    free_algebra,
    restrict_along_lambda,
    split_coequalizer_check,
    tensor_algebra,
    validate_algebra,
)
from .spheres import (
    cofiber_sequence_spheres,
    partition_correspondence,
    set_partitions,
    sphere_table,
)

__all__ = [
    "AlgebraInvalid",
    "BinaturalityViolation",
    "DegreeMismatch",
    "GammaCalcError",
    "NotCofibrant",
    "NotGenerated",
    "NotReflexive",
    "SizeGuardExceeded",
    "StructureNotInduced",
    "SubobjectNotClosed",
    "SubsetNotInvariant",
    "TheoryInvalid",
    "UNIT",
    "FinPointedSet",
    "PointedMap",
    "identity",
    "map_space",
    "quotient_by_relations",
    "smash",
    "smash_map",
    "smash_pair",
    "smash_unpair",
    "wedge",
    "GammaOperator",
    "GammaMap",
    "GammaSet",
    "build_gamma_set",
    "is_cofibrant",
    "representable",
    "truncate",
    "CircleProduct",
    "CoendTable",
    "DayProduct",
    "assembly",
    "circle",
    "day_smash",
    "evaluation_comparison",
    "prolong",
    "strength",
    "FiniteMonoid",
    "GammaRing",
    "GammaTheory",
    "LawReport",
    "MonoidModule",
    "SmashMonad",
    "TheoryMonad",
    "check_strong_monad",
    "endomorphism_gamma_ring",
    "endomorphism_monoid",
    "enrichment_to_strength",
    "free_semilattice_theory",
    "lambda_monad_morphism",
    "module_category_check",
    "monad_from_theory",
    "monoid_to_monad",
    "reader_theory",
    "strength_to_enrichment",
    "suite_monads",
    "trivial_theory",
    "validate_ring",
    "validate_theory",
    "Algebra",
    "algebra_coequalizer",
    "bar_resolution",
    "cotensor_algebra",
    "enriched_hom_algebras",
    "enumerate_algebras",
    "free_algebra",
    "restrict_along_lambda",
    "split_coequalizer_check",
    "tensor_algebra",
    "validate_algebra",
    "cofiber_sequence_spheres",
    "partition_correspondence",
    "set_partitions",
    "sphere_table",
]
