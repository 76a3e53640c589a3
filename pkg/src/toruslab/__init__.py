"""toruslab: desk-scale experiments on the destruction of Lagrangian tori.

The package builds explicitly perturbed integrable Hamiltonians (a pendulum
coupled to a fast rotator through a tiny smooth bump), computes their
action-minimizing orbits, and certifies that no minimizer with the working
rotation vector passes through the marked phase point.  Supporting modules
handle simultaneous Diophantine approximation, exact integer frames with
their symplectic block transformations, pendulum energy-time-action
relations, and C^r norm measurements of the perturbations.
"""

from .diophantine import (
    Approximant,
    ResonanceReport,
    ResonantVectorError,
    RotationVector,
    classify_resonance,
    find_approximants,
    is_indivisible,
)
from .lattice import (
    FrameSearchError,
    LatticeFrame,
    SymplecticBlock,
    build_frame,
    build_symplectic,
    complete_frame,
    orthogonal_companion,
    push_rotation,
)
from .pendulum import (
    EnergyLevel,
    PendulumParams,
    action_shift_bound,
    energy_from_time,
    half_turn_action,
    half_turn_time,
    separatrix_law_fit,
    two_leg_action,
    two_leg_action_difference,
    two_leg_slope,
)
from .perturbation import (
    BumpField,
    PendulumRotatorLagrangian,
    PerturbationSpec,
    TransformedLagrangian,
    TransformedPotential,
    build_bump,
    cr_norm,
    full_lagrangian,
    norm_decay_report,
    transformed_lagrangian,
    transformed_potential,
)
from .minimizer import (
    ActionReport,
    DiscretePath,
    NonConvergenceError,
    SpeedCapError,
    discrete_action,
    minimize_fixed_endpoints,
    minimize_through_point,
    rotation_orbit,
    velocity_deviation,
)
from .destruction import (
    GapCertificate,
    avoidance_check,
    bump_crossing_cost,
    certify_gap,
    decay_laws_report,
    detour_candidates,
    time_shift_budget,
    torus_gap_scan,
    velocity_scaling_experiment,
    working_spec,
)
from .pipeline import ExperimentConfig, RunManifest, run_pipeline, report

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
