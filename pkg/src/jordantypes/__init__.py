"""Jordan types of Artinian algebras in exact arithmetic.

Construct finite-dimensional quotients from ideal generators or Macaulay
dual generators, compute Jordan types and strings, Hilbert-function bounds,
Lefschetz classifications, Clebsch-Gordan decompositions in any
characteristic, and generic commuting nilpotent types.
"""

from .algebra import (
    AlgebraElement,
    ArtinAlgebra,
    associated_graded,
    build_graded,
    build_local,
)
from .commutant import (
    BruteForceResult,
    CommutantModel,
    GenericCommutingType,
    brute_commuting_type,
    centralizer_model,
    compatibility_check,
    generic_commuting_type,
    nilpotent_slice_basis,
)
from .duality import (
    DualPresentation,
    algebra_from_dual,
    intermediate_hilberts,
    inverse_system_dim,
    jordan_type_via_dual,
)
from .errors import JordanTypesError
from .jordan import (
    BoundReport,
    GenericTypeResult,
    JordanStrings,
    bound_report,
    compare_with_associated_graded,
    distinct_forms_type,
    generic_jordan_degree_type,
    generic_jordan_type,
    jordan_degree_type,
    jordan_strings,
    jordan_type,
    poset_sample,
)
from .lefschetz import (
    LefschetzVerdict,
    SLSearchResult,
    check_rank_type_equivalence,
    classify,
    find_sl_element,
    power_map_ranks,
)
from .linalg import (
    ExactMatrix,
    FieldSpec,
    commutant_basis,
    kernel_basis,
    nilpotent_jordan_type,
    rank,
)
from .partitions import (
    Dominance,
    HilbertFunction,
    JordanDegreeType,
    Partition,
    almost_rectangular,
    ar_cover_number,
    bar_graph_partition,
    collapse_closure,
    conjugate,
    dominance_cmp,
    dominance_sum,
    dominates,
    hilbert_conjugate,
    hilbert_degree_type,
    is_stable,
    parse_partition,
    partitions_of,
    power_partition,
    render_partition,
)
from .polyring import DividedPowerPoly, Poly, RingSpec, contract, parse
from .sampling import LINEAR, MAXIMAL_IDEAL, SamplingPlan, Subspace
from .specdoc import AlgebraSpecDoc, load_spec
from .tensor import (
    DeviationVector,
    cg_block,
    cg_degree,
    cg_general,
    cg_kernel_dim,
    char_zero_deviation,
    congruence_screen,
    deviation,
    is_standard,
    modular_lambda,
    sl_shape,
    two_block_ci_hilbert,
)

__version__ = "0.1.0"
