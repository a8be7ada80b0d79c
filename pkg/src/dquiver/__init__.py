"""Toolkit for quivers in Dynkin A and D mutation classes: mutation,
parametric recognition, exact Cartan invariants, good-mutation analysis
and derived-equivalence standard forms."""

from .quiver import (
    ClassReport,
    Quiver,
    QuiverError,
    canonical_key,
    dynkin_d,
    linear_a,
    mutation_class,
    oriented_cycle,
    parse_quiver,
    to_json,
    to_text,
)
from .typeforms import (
    AShape,
    InvalidForm,
    NotTypeA,
    NotTypeD,
    TypeDForm,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    TypeIVCycle,
    analyze_type_a,
    classify_type_d,
    decompose,
    forms_equal,
    normalize_form,
    parse_form,
    realize,
)
from .relations import (
    CartanMatrix,
    PathOracle,
    RelationSet,
    cartan_matrix,
    is_nonzero_path,
    quiver_relations,
)
from .intpoly import IntPolynomial
from .invariants import (
    UnsupportedChiShape,
    associated_polynomial,
    associated_polynomial_formula,
    asymmetry_similar_mod_p,
    cartan_det,
    chi_formula,
    det_formula,
    frobenius_data_mod_p,
)
from .mutation_analysis import (
    ALLOWED_PATTERNS,
    Definedness,
    GoodBadReport,
    classify_mutation,
    mutation_definedness,
    mutation_report,
    parametric_double_moves,
    parametric_good_moves,
)
from .equivalence import (
    DerA,
    DerB,
    DerC,
    DerD1,
    DerD2,
    DerD3,
    DerivedStdForm,
    GoodMutationParams,
    ParamsC3,
    ParamsD21,
    ParamsD22,
    ParamsD31,
    ParamsD32,
    count_derived_classes,
    count_is_exact,
    derived_form_parameters,
    derived_standard_form,
    enumerate_standard_forms,
    good_equivalent,
    good_params,
    good_standard_form,
    interval_quantities,
    params_equal,
    params_to_form,
)

__version__ = "0.1.0"
