"""Exact single-photon OAM Mach-Zehnder simulator and analytics toolkit."""

from .analytics import (
    BudgetReport,
    DualityPoint,
    TIEState,
    correspondence,
    photon_budget,
    photon_formulas,
    standard_bound_comparator,
    tie_distinguishability,
    tie_p_plus,
    tie_sensitivity,
)
from .elements import (
    ElementParams,
    PrismGeometry,
    beamsplitter_combine,
    decompose_joint,
    dove_apply,
    fresnel_dove,
    hwp_rotated,
    joint_apply,
    mirror_apply,
    optimize_waveplate,
)
from .interferometer import (
    ArmStates,
    MZIConfig,
    OutcomeDistribution,
    likelihood,
    p_plus,
    p_plus_sweep,
    run,
    which_way_guess,
)
from .modes import BeamMode, FieldGrid, scalar_amplitude, symmetry_order, transverse_field
from .montecarlo import (
    DiscriminationSummary,
    ShotConfig,
    TrialSummary,
    phase_discrimination,
    sample_outcomes,
    which_way_experiment,
)
from .states import (
    Basis,
    PhotonState,
    PolVector,
    convert_basis,
    inner_product,
    total_norm,
)

__version__ = "0.1.0"
