"""Analytic solenoid flux profiles Phi(t) with exact derivatives and integrals.

Each profile is a closed-form family member: value, derivative, running
integral and window average are all analytic, so downstream quadrature can
always be checked against an exact answer.  Natural units (hbar = 1); flux
carries whatever unit the scenario assigns to phi0.

All evaluation methods accept a float or a numpy array of times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import NonDifferentiablePointError


class _ProfileBase:
    def time_average(self, T: float) -> float:
        """Closed-form (1/T) * integral of Phi over [0, T]."""
        if T <= 0:
            raise ValueError(f"averaging window must be positive, got T={T}")
        return self.integral(T) / T


@dataclass(frozen=True)
class Constant(_ProfileBase):
    """Phi(t) = phi0 for all t."""

    phi0: float

    def value(self, t):
        if isinstance(t, np.ndarray):
            return np.full(t.shape, self.phi0)
        return self.phi0

    def derivative(self, t):
        if isinstance(t, np.ndarray):
            return np.zeros(t.shape)
        return 0.0

    def integral(self, t):
        return self.phi0 * t


@dataclass(frozen=True)
class LinearRamp(_ProfileBase):
    """Phi(t) = phi0 + alpha * t (phi0 defaults to 0, the plain ramp)."""

    alpha: float
    phi0: float = 0.0

    def value(self, t):
        return self.phi0 + self.alpha * t

    def derivative(self, t):
        if isinstance(t, np.ndarray):
            return np.full(t.shape, self.alpha)
        return self.alpha

    def integral(self, t):
        return self.phi0 * t + 0.5 * self.alpha * t * t


@dataclass(frozen=True)
class Sinusoidal(_ProfileBase):
    """Phi(t) = phi0 * cos(omega_drive * t), so Phi(0) = phi0."""

    phi0: float
    omega_drive: float

    def __post_init__(self):
        if self.omega_drive <= 0:
            raise ValueError("omega_drive must be positive (use Constant for a static flux)")

    def value(self, t):
        if isinstance(t, np.ndarray):
            return self.phi0 * np.cos(self.omega_drive * t)
        return self.phi0 * math.cos(self.omega_drive * t)

    def derivative(self, t):
        if isinstance(t, np.ndarray):
            return -self.phi0 * self.omega_drive * np.sin(self.omega_drive * t)
        return -self.phi0 * self.omega_drive * math.sin(self.omega_drive * t)

    def integral(self, t):
        if isinstance(t, np.ndarray):
            return self.phi0 * np.sin(self.omega_drive * t) / self.omega_drive
        return self.phi0 * math.sin(self.omega_drive * t) / self.omega_drive


@dataclass(frozen=True)
class TrapezoidalPulse(_ProfileBase):
    """Pulse that ramps 0 -> phi0 over [t_on, t_on + ramp_width], holds phi0,
    and ramps back to 0 over [t_off - ramp_width, t_off].

    ramp_width = 0 is the ideal rectangular pulse.  Its value at the two jump
    instants is the midpoint phi0/2 (keeps node-aligned Simpson sums exact),
    and its derivative there is undefined: callers get
    NonDifferentiablePointError and must evaluate one-sided.  Jump incidence
    is detected to a relative 1e-12, not exact float equality, so grid nodes
    built by repeated-addition arithmetic still count as "at the jump".
    """

    _SNAP = 1e-12

    phi0: float
    t_on: float
    t_off: float
    ramp_width: float

    def __post_init__(self):
        if self.ramp_width < 0:
            raise ValueError("ramp_width must be nonnegative")
        if self.t_on < 0:
            raise ValueError("t_on must be nonnegative")
        if self.t_on + self.ramp_width > self.t_off - self.ramp_width:
            raise ValueError(
                "breakpoints out of order: need t_on + ramp_width <= t_off - ramp_width"
            )

    @property
    def breakpoints(self):
        w = self.ramp_width
        return (self.t_on, self.t_on + w, self.t_off - w, self.t_off)

    def _at_jump(self, t, b):
        return abs(t - b) <= self._SNAP * max(1.0, abs(b))

    def value(self, t):
        b0, b1, b2, b3 = self.breakpoints
        p, w = self.phi0, self.ramp_width
        if isinstance(t, np.ndarray):
            if w == 0.0:
                out = np.where((t > b0) & (t < b3), p, 0.0)
                on_jump = ((np.abs(t - b0) <= self._SNAP * max(1.0, abs(b0)))
                           | (np.abs(t - b3) <= self._SNAP * max(1.0, abs(b3))))
                return np.where(on_jump, 0.5 * p, out)
            up = p * (t - b0) / w
            down = p * (b3 - t) / w
            out = np.where(t < b1, up, np.where(t <= b2, p, down))
            return np.where((t <= b0) | (t >= b3), 0.0, out)
        if w == 0.0:
            if self._at_jump(t, b0) or self._at_jump(t, b3):
                return 0.5 * p
            return p if b0 < t < b3 else 0.0
        if t <= b0 or t >= b3:
            return 0.0
        if t < b1:
            return p * (t - b0) / w
        if t <= b2:
            return p
        return p * (b3 - t) / w

    def derivative(self, t):
        b0, b1, b2, b3 = self.breakpoints
        p, w = self.phi0, self.ramp_width
        if w == 0.0:
            if isinstance(t, np.ndarray):
                if np.any((t == b0) | (t == b3)):
                    raise NonDifferentiablePointError(
                        f"flux jump at t in {{{b0}, {b3}}}: derivative is one-sided"
                    )
                return np.zeros(t.shape)
            if t == b0 or t == b3:
                raise NonDifferentiablePointError(
                    f"flux jump at t={t}: derivative is one-sided"
                )
            return 0.0
        # kinks get the right-continuous convention
        if isinstance(t, np.ndarray):
            out = np.where((t >= b0) & (t < b1), p / w, 0.0)
            return np.where((t >= b2) & (t < b3), -p / w, out)
        if b0 <= t < b1:
            return p / w
        if b2 <= t < b3:
            return -p / w
        return 0.0

    def integral(self, t):
        b0, b1, b2, b3 = self.breakpoints
        p, w = self.phi0, self.ramp_width
        if isinstance(t, np.ndarray):
            return np.vectorize(self.integral, otypes=[float])(t)
        if t <= b0:
            return 0.0
        if w == 0.0:
            return p * (min(t, b3) - b0)
        if t <= b1:
            return p * (t - b0) ** 2 / (2.0 * w)
        area_up = 0.5 * p * w
        if t <= b2:
            return area_up + p * (t - b1)
        area_top = area_up + p * (b2 - b1)
        if t <= b3:
            s = t - b2
            return area_top + p * s - p * s * s / (2.0 * w)
        return area_top + 0.5 * p * w


FluxProfile = Union[Constant, LinearRamp, Sinusoidal, TrapezoidalPulse]

FLUX_KINDS = {
    "constant": Constant,
    "linear_ramp": LinearRamp,
    "sinusoidal": Sinusoidal,
    "trapezoidal_pulse": TrapezoidalPulse,
}


def kind_name(profile: FluxProfile) -> str:
    for name, cls in FLUX_KINDS.items():
        if isinstance(profile, cls):
            return name
    raise TypeError(f"unknown flux profile type {type(profile)!r}")
