"""Phase accumulation along a beam pair and the circular-path closed forms.

The two wavefront phase pieces, as differences between beam 1 and beam 2
(hbar = 1, phases in radians):

    phi_ab  = e * integral of [A(r1,t) r1 |w1| + A(r2,t) r2 |w2|] dt
    phi_kin = (m/2) * integral of [(vr1^2 + r1^2 w1^2) - (vr2^2 + r2^2 w2^2)] dt

Swept-rate magnitudes |w| make the AB piece the closed-loop line integral of
A with beam 2 traversed backwards.  Quadrature is composite Simpson on the
run's uniform grid, matching the integrator's order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .dynamics import BeamPairRun, ParticleConfig
from .fields import FieldModel, QuasistaticField
from .flux_profiles import Constant, FluxProfile
from .quadrature import cumulative_simpson

_TWO_PI = 2.0 * math.pi


class Applicability(Enum):
    """Which closed-form prediction family covers a scenario."""

    STATIC_ANY_PATH = "static_any_path"
    CIRCULAR_QUASISTATIC = "circular_quasistatic"
    CIRCULAR_GENERAL_FIELD = "circular_general_field"
    NONE = "none"


@dataclass
class PhaseLedger:
    """Accumulated phases plus the running partial sums on the run grid."""

    phi_ab: float
    phi_kin: float
    phi_total: float
    ab_partial: np.ndarray
    kin_partial: np.ndarray


@dataclass(frozen=True)
class ClosedFormPrediction:
    applicability: Applicability
    predicted_ab: Optional[float] = None
    predicted_kin: Optional[float] = None
    predicted_total: Optional[float] = None


def _require_complete(run: BeamPairRun):
    if run.t.shape[0] < 3 or abs(float(run.t[-1]) - run.T) > 1e-12 * max(1.0, run.T):
        raise ValueError("run is incomplete: grid must end at the meeting time T")


def ab_phase_partials(run: BeamPairRun, field: FieldModel,
                      particle: ParticleConfig) -> np.ndarray:
    _require_complete(run)
    t = run.t
    b1, b2 = run.beam1, run.beam2
    integrand = particle.charge_e * (
        field.a_theta(b1.r, t) * b1.r * np.abs(b1.omega)
        + field.a_theta(b2.r, t) * b2.r * np.abs(b2.omega))
    return cumulative_simpson(integrand, run.grid_dt)


def kinetic_phase_partials(run: BeamPairRun, particle: ParticleConfig) -> np.ndarray:
    _require_complete(run)
    b1, b2 = run.beam1, run.beam2
    speed2_1 = b1.v_r ** 2 + (b1.r * b1.omega) ** 2
    speed2_2 = b2.v_r ** 2 + (b2.r * b2.omega) ** 2
    integrand = 0.5 * particle.mass_m * (speed2_1 - speed2_2)
    return cumulative_simpson(integrand, run.grid_dt)


def accumulate_ab_phase(run: BeamPairRun, field: FieldModel,
                        particle: ParticleConfig) -> float:
    """Simpson quadrature of the AB integrand over the completed run."""
    return float(ab_phase_partials(run, field, particle)[-1])


def accumulate_kinetic_phase(run: BeamPairRun, particle: ParticleConfig) -> float:
    """Simpson quadrature of the kinetic-energy difference over the run."""
    return float(kinetic_phase_partials(run, particle)[-1])


def phase_ledger(run: BeamPairRun, field: FieldModel,
                 particle: ParticleConfig) -> PhaseLedger:
    ab = ab_phase_partials(run, field, particle)
    kin = kinetic_phase_partials(run, particle)
    phi_ab = float(ab[-1])
    phi_kin = float(kin[-1])
    return PhaseLedger(phi_ab=phi_ab, phi_kin=phi_kin, phi_total=phi_ab + phi_kin,
                       ab_partial=ab, kin_partial=kin)


def ab_phase_from_angular_momentum(run: BeamPairRun, profile: FluxProfile,
                                   particle: ParticleConfig, L0: float) -> float:
    """Analytic cross-check of the AB phase for quasistatic free paths.

    Re-expresses the angular rates through the shared initial angular
    momentum and the flux swing,

        w1 = [L0 - (e/2pi)(Phi(t)-Phi(0))] / (m r1^2)
        w2 = [L0 + (e/2pi)(Phi(t)-Phi(0))] / (m r2^2)

    and integrates e/(2pi) * Phi * (w1 + w2) on the run grid.  Consumes only
    r1(t), r2(t); agreement with accumulate_ab_phase validates that the
    integrator preserved the angular-momentum first integral.
    """
    _require_complete(run)
    t = run.t
    phi_t = profile.value(t)
    swing = (particle.charge_e / _TWO_PI) * (phi_t - profile.value(0.0))
    m = particle.mass_m
    w1 = (L0 - swing) / (m * run.beam1.r ** 2)
    w2 = (L0 + swing) / (m * run.beam2.r ** 2)
    integrand = (particle.charge_e / _TWO_PI) * phi_t * (w1 + w2)
    return float(cumulative_simpson(integrand, run.grid_dt)[-1])


def enclosed_flux(field: FieldModel, radius: float, t) -> float:
    """Flux through the beam circle of given radius: 2 pi R A_theta(R, t)."""
    return _TWO_PI * radius * field.a_theta(radius, t)


def canonical_angular_momentum(particle: ParticleConfig, field: FieldModel,
                               traj) -> np.ndarray:
    """p_theta = m r^2 w + e r A_theta(r, t) along a trajectory.

    Conserved exactly for any axisymmetric field model; its drift measures
    integrator error.  Under the quasistatic model it equals
    m r^2 w + (e/2pi) Phi(t).
    """
    a = field.a_theta(traj.r, traj.t)
    return (particle.mass_m * traj.r ** 2 * traj.omega
            + particle.charge_e * traj.r * a)


def closed_form_prediction(profile: FluxProfile, field: FieldModel, path: str,
                           symmetric: bool, R: Optional[float], T: float,
                           charge_e: float) -> ClosedFormPrediction:
    """Analytic phase predictions where the geometry admits them.

    * Constant flux, symmetric starts, any enclosing path:
      (e Phi0, 0, e Phi0) -- path independence of the static phase.
    * Circular + quasistatic, symmetric:
      ab = e * time-average of Phi, total = e Phi(0).
    * Circular + general axisymmetric field, symmetric:
      ab = e * time-average of Phi_enc(R, .), total = e Phi_enc(R, 0).
    * Anything else (free paths under time-varying flux, asymmetric starts):
      no closed form.
    """
    if T <= 0:
        raise ValueError("T must be positive")
    if isinstance(profile, Constant) and symmetric:
        static = charge_e * profile.phi0
        return ClosedFormPrediction(Applicability.STATIC_ANY_PATH, static, 0.0, static)
    if path == "circular" and symmetric:
        if R is None:
            raise ValueError("circular prediction needs the path radius R")
        if isinstance(field, QuasistaticField):
            ab = charge_e * profile.time_average(T)
            total = charge_e * profile.value(0.0)
            return ClosedFormPrediction(Applicability.CIRCULAR_QUASISTATIC,
                                        ab, total - ab, total)
        avg_enc = _TWO_PI * R * field.a_theta_time_integral(R, T) / T
        ab = charge_e * avg_enc
        total = charge_e * enclosed_flux(field, R, 0.0)
        return ClosedFormPrediction(Applicability.CIRCULAR_GENERAL_FIELD,
                                    ab, total - ab, total)
    return ClosedFormPrediction(Applicability.NONE)
