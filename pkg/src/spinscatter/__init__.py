"""spinscatter: identical-particle scattering statistics, cross-checked.

Closed-form differential cross-sections under the standard
(anti)symmetrization rule and under dynamical rotating-frame phase
prescriptions, validated against a brute-force two-particle Hilbert-space
oracle, plus the supporting pieces: exact spin algebra, the rotating-frame
cosmological metric chain, a rotation-built exchange operator, and the
orbital shift comparison.
"""

from .amplitudes import (
    AmplitudeModel,
    Constant,
    PartialWave,
    RutherfordLike,
    evaluate,
    exchange_angle,
    model_from_config,
    model_to_config,
)
from .cosmology import (
    GravitoVectorPotential,
    MetricAtPoint,
    extract_potential,
    interaction_energy,
    metric_by_transformation,
    numerical_curl,
    rotating_rw_metric,
)
from .exchange import (
    ExchangePlan,
    PostulateReport,
    apply_exchange,
    default_plan,
    exchange_postulate_check,
    fixed_axis_exchange_overlap,
)
from .oracle import build_lambda, build_s_operator, exchange_operator, oracle_w
from .orbit import OrbitParams, gm_shift, lorentz_gamma, ratio_report, thomas_shift
from .scattering import (
    CrossSectionCurve,
    Prescription,
    ScatterConfig,
    SweepReport,
    UndefinedObservable,
    agreement_sweep,
    c_ll,
    classify_pair,
    cross_section,
    default_phi_grid,
    gm_phase,
    overlap_factor,
    relative_exchange_factor,
    statistics_sign,
    w_dynamical,
    w_standard,
    w_working,
)
from .spin import (
    HalfInt,
    SpinOperatorTriple,
    SpinState,
    aligned_state,
    make_spin_operators,
    random_state,
    rotate,
    rotation_matrix,
    sz_eigenstate,
)

__version__ = "0.1.0"
