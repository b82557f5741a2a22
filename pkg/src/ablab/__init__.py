"""Numerical laboratory for beam-pair phase accumulation around a solenoid
with time-varying magnetic flux."""

from .bessel import bessel, bessel_j0, bessel_j1, bessel_y0, bessel_y1
from .dynamics import (BeamPairRun, BeamState, ParticleConfig, RadialGuide,
                       Trajectory, circular_omega, circular_trajectory,
                       find_meeting_time, integrate_free_beam)
from .errors import (ConfigError, ExteriorDomainError, InsufficientPointsError,
                     MeetingNotFoundError, ModelMismatchError,
                     NonDifferentiablePointError, StepUnderflowError,
                     TrajectoryHitsSolenoidError)
from .fields import (ExactSinusoidalField, FieldSample, QuasistaticField,
                     SolenoidConfig, ValidityReport, make_field_model,
                     maxwell_residual, quasistatic_validity)
from .flux_profiles import (Constant, FluxProfile, LinearRamp, Sinusoidal,
                            TrapezoidalPulse)
from .phases import (Applicability, ClosedFormPrediction, PhaseLedger,
                     accumulate_ab_phase, accumulate_kinetic_phase,
                     ab_phase_from_angular_momentum, canonical_angular_momentum,
                     closed_form_prediction, enclosed_flux, phase_ledger)
from .scenarios import (BeamsConfig, Builtin, RunConfig, Scenario,
                        ScenarioResult, SweepResult, builtin_registry,
                        free_path_sweep, path_independence_sweep,
                        quasistatic_convergence_sweep, run_builtin,
                        run_scenario)

__version__ = "0.1.0"
