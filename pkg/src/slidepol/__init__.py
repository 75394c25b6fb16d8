"""Exact multigraded monomial-ideal toolkit.

Sliding maps and their ideal-level slides, bottom and top polarization
with depolarization, Alexander duality, exact multigraded Betti tables,
depth and dimension, associated primes, standard pairs, Stanley depth
with constructive decomposition transfer, and sphere-type ideals with
necessary-condition certificates.  Everything runs in exact arithmetic.
"""

from .bier import (
    InflationIdentityReport,
    SphereCertificate,
    bier_murai_ideal,
    bm_complex,
    bm_inflation_identity,
    sphere_certificate,
)
from .core import (
    CapExceededError,
    GridShape,
    MonomialIdeal,
    NotDeterminedError,
    Ring,
    UnitIdealError,
    WHOLE_RING,
    ZeroIdealError,
    colon_monomial,
    contains,
    grid_ring,
    is_positively_determined,
    lcm_join,
    make_ring,
    minimalize,
    radical,
)
from .duality import PairingReport, alexander_dual, dual_slide_correspondence
from .functors import (
    SlideOp,
    apply_script,
    compress,
    contract_ideal,
    copolarize,
    depolarize,
    inflate,
    is_generalized_polarization,
    point_map,
    polarize,
    satisfies_consecutive_condition,
    slide_ideal,
    slot_reversal,
)
from .homalg import (
    BettiTable,
    DepthDim,
    ModuleDesc,
    RingProperties,
    StandardPair,
    StandardPairSummary,
    as_ideal_module,
    as_quotient_module,
    associated_primes,
    depth_dim,
    has_linear_quotients,
    is_cm_complex,
    is_sequentially_cm,
    multigraded_betti,
    ring_properties,
    standard_pairs,
    taylor_betti,
)
from .ideal_io import parse_ideal, render_ideal
from .simplicial import (
    SimplicialComplex,
    complex_from_faces,
    reduced_homology,
    stanley_reisner_facets,
)
from .stanley import (
    CharPoset,
    StanleyDecomposition,
    StanleySpace,
    char_poset,
    pull_decomposition,
    push_decomposition,
    sdepth_exact,
    validate_decomposition,
)

__version__ = "0.1.0"
