"""Exterior electromagnetic field models of the flux-carrying solenoid.

Two models of (A_theta, E_theta, B_z) for r > a:

* QuasistaticField: A = Phi(t)/(2 pi r), E = -Phi'(t)/(2 pi r), B = 0.
  Valid for slow flux variation; exact for a linear ramp.
* ExactSinusoidalField: the closed-form Bessel solution for a sinusoidal
  surface current, carrying the radiative corrections the quasistatic
  gauge drops.

Both expose the same sampling surface plus the running time integral of
A_theta needed by the circular-path closed forms.  A0 = 0 throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .bessel import bessel_j0, bessel_j1, bessel_y0, bessel_y1
from .errors import ExteriorDomainError, ModelMismatchError
from .flux_profiles import FluxProfile, Sinusoidal

_TWO_PI = 2.0 * math.pi

FIELD_MODEL_KINDS = ("quasistatic", "exact_sinusoidal")


@dataclass(frozen=True)
class SolenoidConfig:
    """Ideal infinite solenoid of radius a; c kept explicit for the exact model.

    turns_density_n and current_amplitude_I0 are optional and only used to
    cross-check the flux amplitude of current-referenced runs.
    """

    radius_a: float
    light_speed_c: float
    turns_density_n: Optional[float] = None
    current_amplitude_I0: Optional[float] = None

    def __post_init__(self):
        if self.radius_a <= 0:
            raise ValueError("radius_a must be positive")
        if self.light_speed_c <= 0:
            raise ValueError("light_speed_c must be positive")

    def flux_amplitude_from_current(self) -> Optional[float]:
        """Phi(0) = 4 pi^2 n I0 a^2 / c when both current parameters are set."""
        if self.turns_density_n is None or self.current_amplitude_I0 is None:
            return None
        return (4.0 * math.pi ** 2 * self.turns_density_n * self.current_amplitude_I0
                * self.radius_a ** 2 / self.light_speed_c)


@dataclass(frozen=True)
class FieldSample:
    r: float
    t: float
    A_theta: float
    E_theta: float
    B_z: float


@dataclass(frozen=True)
class ValidityReport:
    ratio_solenoid: float  # Omega * a / c
    ratio_orbit: float     # Omega * r / c
    ok: bool


def _check_exterior(r, radius_a):
    bad = r <= radius_a
    if isinstance(bad, np.ndarray):
        bad = bool(bad.any())
    if bad:
        raise ExteriorDomainError(
            f"field and beams are defined outside the solenoid only (r > {radius_a}), got r={r!r}"
        )


class QuasistaticField:
    """Slow-variation gauge: A = Phi(t)/(2 pi r), E = -dPhi/dt/(2 pi r), B = 0."""

    kind = "quasistatic"
    has_axial_field = False

    def __init__(self, solenoid: SolenoidConfig, profile: FluxProfile):
        self.solenoid = solenoid
        self.profile = profile

    def a_theta(self, r, t):
        _check_exterior(r, self.solenoid.radius_a)
        return self.profile.value(t) / (_TWO_PI * r)

    def e_theta(self, r, t):
        _check_exterior(r, self.solenoid.radius_a)
        return -self.profile.derivative(t) / (_TWO_PI * r)

    def b_z(self, r, t):
        _check_exterior(r, self.solenoid.radius_a)
        if isinstance(r, np.ndarray) or isinstance(t, np.ndarray):
            return np.zeros(np.broadcast(r, t).shape)
        return 0.0

    def a_theta_time_integral(self, r, t):
        """Integral of A_theta(r, s) ds over [0, t], closed form."""
        _check_exterior(r, self.solenoid.radius_a)
        return self.profile.integral(t) / (_TWO_PI * r)

    def sample(self, r, t) -> FieldSample:
        return FieldSample(r, t, self.a_theta(r, t), self.e_theta(r, t), self.b_z(r, t))

    def scalar_field_functions(self):
        """Unchecked scalar (E_theta, B_z) callables for the integrator hot loop.

        The integrator enforces r > a itself; B_z is identically zero here so
        None is returned in its place.
        """
        deriv = self.profile.derivative
        inv_two_pi = 1.0 / _TWO_PI

        def e_fn(r, t):
            return -deriv(t) * inv_two_pi / r

        return e_fn, None


class ExactSinusoidalField:
    """Closed-form exterior solution for surface current I0 cos(Omega t).

    A_theta = (Phi(0)/2a) J1(ka) [J1(kr) sin(Omega t) - Y1(kr) cos(Omega t)]
    E_theta = -(Phi(0) Omega / 2a) J1(ka) [J1(kr) cos(Omega t) + Y1(kr) sin(Omega t)]
    B_z     = (Phi(0) Omega / 2ac) J1(ka) [J0(kr) sin(Omega t) - Y0(kr) cos(Omega t)]

    with k = Omega/c.  E_theta = -dA_theta/dt holds identically, and the pair
    satisfies the exterior source-free Maxwell equations.
    """

    kind = "exact_sinusoidal"
    has_axial_field = True

    def __init__(self, solenoid: SolenoidConfig, profile: FluxProfile):
        if not isinstance(profile, Sinusoidal):
            raise ModelMismatchError(
                "the exact field model requires a sinusoidal flux profile"
            )
        phi_from_current = solenoid.flux_amplitude_from_current()
        if phi_from_current is not None:
            scale = max(1.0, abs(phi_from_current))
            if abs(phi_from_current - profile.phi0) > 1e-9 * scale:
                raise ModelMismatchError(
                    "flux amplitude mismatch: phi0="
                    f"{profile.phi0!r} but Phi(0) = 4*pi^2*n*I0*a^2/c = {phi_from_current!r}"
                )
        self.solenoid = solenoid
        self.profile = profile
        self.omega = profile.omega_drive
        self.wavenumber = self.omega / solenoid.light_speed_c
        # shared prefactor (Phi(0)/2a) J1(ka)
        self._amp = (profile.phi0 / (2.0 * solenoid.radius_a)
                     * bessel_j1(self.wavenumber * solenoid.radius_a))

    def a_theta(self, r, t):
        _check_exterior(r, self.solenoid.radius_a)
        kr = self.wavenumber * r
        wt = self.omega * t
        if isinstance(r, np.ndarray) or isinstance(t, np.ndarray):
            return self._amp * (bessel_j1(np.asarray(kr, dtype=float)) * np.sin(wt)
                                - bessel_y1(np.asarray(kr, dtype=float)) * np.cos(wt))
        return self._amp * (bessel_j1(kr) * math.sin(wt) - bessel_y1(kr) * math.cos(wt))

    def e_theta(self, r, t):
        _check_exterior(r, self.solenoid.radius_a)
        kr = self.wavenumber * r
        wt = self.omega * t
        if isinstance(r, np.ndarray) or isinstance(t, np.ndarray):
            return -self._amp * self.omega * (
                bessel_j1(np.asarray(kr, dtype=float)) * np.cos(wt)
                + bessel_y1(np.asarray(kr, dtype=float)) * np.sin(wt))
        return -self._amp * self.omega * (bessel_j1(kr) * math.cos(wt)
                                          + bessel_y1(kr) * math.sin(wt))

    def b_z(self, r, t):
        _check_exterior(r, self.solenoid.radius_a)
        kr = self.wavenumber * r
        wt = self.omega * t
        scale = self._amp * self.omega / self.solenoid.light_speed_c
        if isinstance(r, np.ndarray) or isinstance(t, np.ndarray):
            return scale * (bessel_j0(np.asarray(kr, dtype=float)) * np.sin(wt)
                            - bessel_y0(np.asarray(kr, dtype=float)) * np.cos(wt))
        return scale * (bessel_j0(kr) * math.sin(wt) - bessel_y0(kr) * math.cos(wt))

    def a_theta_time_integral(self, r, t):
        _check_exterior(r, self.solenoid.radius_a)
        kr = self.wavenumber * r
        w = self.omega
        if isinstance(r, np.ndarray) or isinstance(t, np.ndarray):
            kr = np.asarray(kr, dtype=float)
            return self._amp * (bessel_j1(kr) * (1.0 - np.cos(w * t)) / w
                                - bessel_y1(kr) * np.sin(w * t) / w)
        return self._amp * (bessel_j1(kr) * (1.0 - math.cos(w * t)) / w
                            - bessel_y1(kr) * math.sin(w * t) / w)

    def sample(self, r, t) -> FieldSample:
        return FieldSample(r, t, self.a_theta(r, t), self.e_theta(r, t), self.b_z(r, t))

    def scalar_field_functions(self):
        """Unchecked scalar (E_theta, B_z) callables for the integrator hot loop."""
        amp, w, k = self._amp, self.omega, self.wavenumber
        b_scale = amp * w / self.solenoid.light_speed_c

        def e_fn(r, t):
            kr = k * r
            return -amp * w * (bessel_j1(kr) * math.cos(w * t)
                               + bessel_y1(kr) * math.sin(w * t))

        def b_fn(r, t):
            kr = k * r
            return b_scale * (bessel_j0(kr) * math.sin(w * t)
                              - bessel_y0(kr) * math.cos(w * t))

        return e_fn, b_fn


FieldModel = Union[QuasistaticField, ExactSinusoidalField]


def make_field_model(kind: str, solenoid: SolenoidConfig, profile: FluxProfile) -> FieldModel:
    if kind == "quasistatic":
        return QuasistaticField(solenoid, profile)
    if kind == "exact_sinusoidal":
        return ExactSinusoidalField(solenoid, profile)
    raise ModelMismatchError(f"unknown field model {kind!r}; expected one of {FIELD_MODEL_KINDS}")


def quasistatic_validity(solenoid: SolenoidConfig, omega: float, r: float,
                         threshold: float = 0.01) -> ValidityReport:
    """Dimensionless slowness ratios Omega*a/c and Omega*r/c, ok iff both < threshold."""
    if omega < 0:
        raise ValueError("omega must be nonnegative")
    if r <= 0:
        raise ValueError("r must be positive")
    ra = omega * solenoid.radius_a / solenoid.light_speed_c
    rr = omega * r / solenoid.light_speed_c
    return ValidityReport(ra, rr, ok=bool(ra < threshold and rr < threshold))


def maxwell_residual(field: FieldModel, r: float, t: float, h: float):
    """Central-difference residuals of the exterior source-free Maxwell pair.

    Returns (faraday, ampere):
      faraday = (1/r) d(r E_theta)/dr + dB_z/dt          (z component of curl E + dB/dt)
      ampere  = -dB_z/dr - (1/c^2) dE_theta/dt           (theta component of curl B - dE/dt/c^2)

    Both vanish at O(h^2) for a field satisfying Maxwell's equations.
    """
    if h <= 0:
        raise ValueError("h must be positive")
    a = field.solenoid.radius_a
    if r - h <= a:
        raise ExteriorDomainError(
            f"stencil [r-h, r+h] must stay outside the solenoid: r={r}, h={h}, a={a}"
        )
    c = field.solenoid.light_speed_c
    re_p = (r + h) * field.e_theta(r + h, t)
    re_m = (r - h) * field.e_theta(r - h, t)
    faraday = (re_p - re_m) / (2.0 * h * r) + (field.b_z(r, t + h) - field.b_z(r, t - h)) / (2.0 * h)
    ampere = (-(field.b_z(r + h, t) - field.b_z(r - h, t)) / (2.0 * h)
              - (field.e_theta(r, t + h) - field.e_theta(r, t - h)) / (2.0 * h * c * c))
    return faraday, ampere
