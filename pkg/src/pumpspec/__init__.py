"""Three-level optical-pumping simulator.

Master-equation population dynamics and steady states for a g-e-t level
scheme driven on g <-> e, plus the spontaneous-emission spectrum of the
e -> t line computed three independent ways: a closed-form doublet, the
quantum regression theorem, and deterministic conditional (one-photon)
trajectory dynamics, including ramped drive intensity and finite detuning.
"""

from .core import (AtomParams, ConstantDrive, ConvergenceError,
                   DegenerateSteadyStateError, DomainError, DriveProfile,
                   ExpRampDrive, FrequencyGrid, GridMismatchError,
                   IntegrationError, LevelIndex, PhysicalityCheck,
                   PumpspecError, SpectrumResult, TruncationError,
                   ValidationError, constant_drive, default_grid, dm_from_pure,
                   generalized_rabi, is_physical, ketbra, omega_eff, peak_pair,
                   peak_separation)
from .correlation import (CorrelationTrace, GammaTLimitReport,
                          analytic_spectrum, doublet_components,
                          gamma_t_limit_spectrum, lorentzian_halfwidth,
                          qrt_correlation, spectrum_from_correlation)
from .lindblad import (Liouvillian, PopulationTrace, build_generator,
                       default_dt, propagate, steady_state)
from .trajectory import (NoJumpTrajectory, PhotonTrajectorySet, analytic_f,
                         band_weight, photon_trajectories, propagate_no_jump,
                         single_photon_spectrum, transient_spectrum)

__version__ = "0.1.0"

__all__ = [
    "AtomParams", "ConstantDrive", "ExpRampDrive", "DriveProfile",
    "FrequencyGrid", "SpectrumResult", "LevelIndex", "PhysicalityCheck",
    "CorrelationTrace", "GammaTLimitReport", "Liouvillian", "PopulationTrace",
    "NoJumpTrajectory", "PhotonTrajectorySet",
    "omega_eff", "generalized_rabi", "dm_from_pure", "is_physical", "ketbra",
    "constant_drive", "default_grid", "default_dt", "peak_pair",
    "peak_separation", "build_generator", "propagate", "steady_state",
    "qrt_correlation", "spectrum_from_correlation", "analytic_spectrum",
    "doublet_components", "lorentzian_halfwidth", "gamma_t_limit_spectrum",
    "propagate_no_jump", "photon_trajectories", "single_photon_spectrum",
    "transient_spectrum", "analytic_f", "band_weight",
    "PumpspecError", "ValidationError", "DomainError", "IntegrationError",
    "ConvergenceError", "TruncationError", "GridMismatchError",
    "DegenerateSteadyStateError",
]
