"""Exact local indices of holomorphic vector fields on singular germs."""

from .polyalg import (
    DEGREVLEX,
    NEGDEGREVLEX,
    MonomialOrder,
    Polynomial,
    compare_monomials,
    parse_polynomial,
    weighted_local,
)
from .localbases import (
    FreeModuleElement,
    ModuleOrder,
    PresentedModule,
    StandardBasis,
    is_standard_basis,
    membership,
    mora_normal_form,
    quotient_dimension,
    standard_basis,
    subquotient_dimension,
    syzygies,
)
from .germs import (
    GermError,
    GermVariety,
    NonIsolatedError,
    NotTangentError,
    VectorFieldGerm,
    is_isolated_hypersurface_singularity,
    is_tangent,
    milnor_number,
    poincare_hopf_index,
    weighted_euler_field,
)
from .kaehler import (
    build_kaehler_module,
    contraction,
    homological_index,
    kaehler_complex,
    module_homology,
)
from .indices import (
    IndexReport,
    conservation_check,
    full_report,
    gsv_index,
    schwartz_index,
    virtual_index,
)

__version__ = "0.1.0"

__all__ = [
    "DEGREVLEX",
    "NEGDEGREVLEX",
    "MonomialOrder",
    "Polynomial",
    "compare_monomials",
    "parse_polynomial",
    "weighted_local",
    "FreeModuleElement",
    "ModuleOrder",
    "PresentedModule",
    "StandardBasis",
    "is_standard_basis",
    "membership",
    "mora_normal_form",
    "quotient_dimension",
    "standard_basis",
    "subquotient_dimension",
    "syzygies",
    "GermError",
    "GermVariety",
    "NonIsolatedError",
    "NotTangentError",
    "VectorFieldGerm",
    "is_isolated_hypersurface_singularity",
    "is_tangent",
    "milnor_number",
    "poincare_hopf_index",
    "weighted_euler_field",
    "build_kaehler_module",
    "contraction",
    "homological_index",
    "kaehler_complex",
    "module_homology",
    "IndexReport",
    "conservation_check",
    "full_report",
    "gsv_index",
    "schwartz_index",
    "virtual_index",
]
