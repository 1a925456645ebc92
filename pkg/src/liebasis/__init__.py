"""liebasis: commuting operator sets for SU(n) tensor-product representations.

Builds su(n) generator bases and Casimir operators along the subgroup
chain, enumerates and materializes the labeling operator sets of the
product (uncoupled) and coupled bases, counts them in closed form, and
tests completeness by joint-eigenspace analysis.  The coupled basis falls
short of the product basis by (n-1)(n-2)/2 operators; on identical-factor
products the exchange operator restores completeness.
"""

from .algebra import (
    AlgebraSpec,
    GeneratorBasis,
    Representation,
    StructureConstants,
    adjoint_rep,
    build_generators,
    conjugate_rep,
    defining_rep,
    homomorphism_residual,
    structure_constants,
    weight_operators,
)
from .casimir import CasimirKey, casimir, casimir_eigenvalue_on_irrep
from .completeness import (
    CommutationReport,
    CompletenessReport,
    JointSpectrum,
    check_commuting,
    completeness_report,
    joint_eigenspaces,
    matrix_rank,
)
from .decomp import (
    IsotypicComponent,
    calibrate_su3,
    isotypic_decomposition,
    multiplicities,
    su3_identify,
)
from .labels import (
    OperatorLabel,
    OperatorSet,
    count_coupled,
    count_difference,
    count_product,
    count_single_ir,
    enumerate_labels,
    materialize,
)
from .tensor import (
    ProductSpace,
    couple,
    coupled_rep,
    exchange_operator,
    lift_first,
    lift_second,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "GeneratorBasis",
    "StructureConstants",
    "Representation",
    "build_generators",
    "structure_constants",
    "defining_rep",
    "conjugate_rep",
    "adjoint_rep",
    "weight_operators",
    "homomorphism_residual",
    "CasimirKey",
    "casimir",
    "casimir_eigenvalue_on_irrep",
    "ProductSpace",
    "lift_first",
    "lift_second",
    "couple",
    "coupled_rep",
    "exchange_operator",
    "OperatorLabel",
    "OperatorSet",
    "count_single_ir",
    "count_product",
    "count_coupled",
    "count_difference",
    "enumerate_labels",
    "materialize",
    "CommutationReport",
    "JointSpectrum",
    "CompletenessReport",
    "check_commuting",
    "matrix_rank",
    "joint_eigenspaces",
    "completeness_report",
    "IsotypicComponent",
    "calibrate_su3",
    "su3_identify",
    "isotypic_decomposition",
    "multiplicities",
]
