"""Beam kinematics around the solenoid.

Circular (constrained) paths evolve analytically through the azimuthal
first integral; free paths are integrated with a fixed-step classical
4th-order Runge-Kutta scheme in cylindrical coordinates:

    dr/dt     = v_r
    dv_r/dt   = r w^2 + (e/m) w r B_z  [+ guide acceleration]
    dtheta/dt = w
    dw/dt     = [(e/m)(E_theta - v_r B_z) - 2 v_r w] / r

Fixed stepping keeps reruns bitwise reproducible; the final step may be a
partial step so the grid lands exactly on t_max.  Angles are stored signed
and unwrapped (beam 2 circulates with negative omega); event and phase
logic consume swept-angle magnitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import (MeetingNotFoundError, StepUnderflowError,
                     TrajectoryHitsSolenoidError)
from .fields import FieldModel

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ParticleConfig:
    charge_e: float
    mass_m: float

    def __post_init__(self):
        if self.mass_m <= 0:
            raise ValueError("mass_m must be positive")
        if self.charge_e == 0:
            raise ValueError("charge_e must be nonzero")


@dataclass(frozen=True)
class BeamState:
    """Cylindrical kinematic state of one beam; path_sign = +1 (beam 1) or -1 (beam 2)."""

    r: float
    theta: float
    v_r: float
    omega: float
    t: float = 0.0
    path_sign: int = 1


@dataclass(frozen=True)
class RadialGuide:
    """Purely radial restoring acceleration -stiffness*(r - center).

    Exerts no torque, so it shapes the path (keeps a launched beam circulating
    around the solenoid) without touching the tangential dynamics or the
    canonical angular momentum.
    """

    stiffness: float
    center: float

    def __post_init__(self):
        if self.stiffness <= 0:
            raise ValueError("guide stiffness must be positive")

    @staticmethod
    def for_equilibrium_orbit(r0: float, omega0: float, stiffness: float) -> "RadialGuide":
        """Center placed so (r0, omega0, v_r=0) is an equilibrium circular orbit."""
        return RadialGuide(stiffness, r0 - r0 * omega0 * omega0 / stiffness)


@dataclass
class Trajectory:
    """One beam's fixed-grid history; theta is unwrapped and signed."""

    t: np.ndarray
    r: np.ndarray
    theta: np.ndarray
    v_r: np.ndarray
    omega: np.ndarray
    path_sign: int

    def state(self, i: int) -> BeamState:
        return BeamState(float(self.r[i]), float(self.theta[i]), float(self.v_r[i]),
                         float(self.omega[i]), float(self.t[i]), self.path_sign)

    def swept(self) -> np.ndarray:
        """|theta(t) - theta(0)| on the grid."""
        return np.abs(self.theta - self.theta[0])


@dataclass
class BeamPairRun:
    """Two beams on a shared uniform grid ending exactly at the meeting time T."""

    beam1: Trajectory
    beam2: Trajectory
    L0: float
    T: float
    grid_dt: float

    @property
    def t(self) -> np.ndarray:
        return self.beam1.t

    def meeting_residual(self) -> float:
        """g(T) = |dtheta1| + |dtheta2| - 2*pi at the final grid point."""
        return float(self.beam1.swept()[-1] + self.beam2.swept()[-1] - _TWO_PI)


def circular_omega(particle: ParticleConfig, R: float, omega0, a_theta_now,
                   a_theta_initial, path_sign: int):
    """Angular rate on a constrained circle: w(t) = w(0) - s*(e/mR)*(A(R,t)-A(R,0)).

    With the swept-rate (positive-omega) convention, path_sign s = +1 gives
    beam 1 and s = -1 beam 2.  Fed signed quantities (s = +1, signed omega0)
    it is the universal first integral of the azimuthal equation of motion.
    """
    if path_sign not in (1, -1):
        raise ValueError("path_sign must be +1 or -1")
    coeff = particle.charge_e / (particle.mass_m * R)
    return omega0 - path_sign * coeff * (a_theta_now - a_theta_initial)


def circular_trajectory(particle: ParticleConfig, field: FieldModel, R: float,
                        omega0_signed: float, t: np.ndarray) -> Trajectory:
    """Closed-form constrained-circle history on grid t (signed omega)."""
    a0 = field.a_theta(R, 0.0)
    at = field.a_theta(R, t)
    coeff = particle.charge_e / (particle.mass_m * R)
    omega = omega0_signed - coeff * (at - a0)
    ia = field.a_theta_time_integral(R, t)
    theta = omega0_signed * t - coeff * (ia - a0 * t)
    sign = 1 if omega0_signed >= 0 else -1
    return Trajectory(t=t, r=np.full_like(t, R), theta=theta,
                      v_r=np.zeros_like(t), omega=omega, path_sign=sign)


def _grid(dt: float, t_end: float) -> np.ndarray:
    """Uniform grid 0..n*dt plus a final partial point at t_end if needed."""
    n_full = int(math.floor(t_end / dt + 1e-9))
    rem = t_end - n_full * dt
    partial = rem > 1e-12 * max(t_end, dt)
    n_pts = n_full + 1 + (1 if partial else 0)
    t = np.empty(n_pts)
    t[: n_full + 1] = np.arange(n_full + 1) * dt
    if partial:
        t[-1] = t_end
    return t


def make_stepper(particle: ParticleConfig, field: FieldModel,
                 guide: Optional[RadialGuide] = None) -> Callable:
    """Bind one classical RK4 step (t0, h, r, theta, v_r, omega) -> new state tuple."""
    e_fn, b_fn = field.scalar_field_functions()
    e_over_m = particle.charge_e / particle.mass_m
    kappa = guide.stiffness if guide is not None else 0.0
    center = guide.center if guide is not None else 0.0

    if b_fn is None:
        def accel(tt, rr, vv, oo):
            dv = rr * oo * oo - kappa * (rr - center)
            do = (e_over_m * e_fn(rr, tt) - 2.0 * vv * oo) / rr
            return dv, do
    else:
        def accel(tt, rr, vv, oo):
            bz = b_fn(rr, tt)
            dv = rr * oo * oo + e_over_m * oo * rr * bz - kappa * (rr - center)
            do = (e_over_m * (e_fn(rr, tt) - vv * bz) - 2.0 * vv * oo) / rr
            return dv, do

    def step(t0, h, r, th, vr, om):
        a1v, a1o = accel(t0, r, vr, om)
        hh = 0.5 * h
        r2, v2, o2 = r + hh * vr, vr + hh * a1v, om + hh * a1o
        a2v, a2o = accel(t0 + hh, r2, v2, o2)
        r3, v3, o3 = r + hh * v2, vr + hh * a2v, om + hh * a2o
        a3v, a3o = accel(t0 + hh, r3, v3, o3)
        r4, v4, o4 = r + h * v3, vr + h * a3v, om + h * a3o
        a4v, a4o = accel(t0 + h, r4, v4, o4)
        sixth = h / 6.0
        return (r + sixth * (vr + 2.0 * v2 + 2.0 * v3 + v4),
                th + sixth * (om + 2.0 * o2 + 2.0 * o3 + o4),
                vr + sixth * (a1v + 2.0 * a2v + 2.0 * a3v + a4v),
                om + sixth * (a1o + 2.0 * a2o + 2.0 * a3o + a4o))

    return step


def integrate_free_beam(particle: ParticleConfig, field: FieldModel,
                        initial: BeamState, dt: float, t_max: float,
                        guide: Optional[RadialGuide] = None) -> Trajectory:
    """Fixed-step RK4 integration of one free beam until t_max.

    Raises TrajectoryHitsSolenoidError if the orbit reaches r <= a and
    StepUnderflowError if dt cannot advance the clock.
    """
    if dt <= 0:
        raise StepUnderflowError("dt must be positive")
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    if t_max + dt == t_max:
        raise StepUnderflowError(f"dt={dt} is below the time resolution at t_max={t_max}")
    a = field.solenoid.radius_a
    if initial.r <= a:
        raise TrajectoryHitsSolenoidError(f"initial radius {initial.r} is not outside a={a}")

    t_grid = _grid(dt, t_max)
    n_pts = t_grid.shape[0]
    out = np.empty((4, n_pts))
    out[:, 0] = (initial.r, initial.theta, initial.v_r, initial.omega)
    step = make_stepper(particle, field, guide)

    r, th, vr, om = initial.r, initial.theta, initial.v_r, initial.omega
    t_list = t_grid.tolist()
    for i in range(1, n_pts):
        t0 = t_list[i - 1]
        r, th, vr, om = step(t0, t_list[i] - t0, r, th, vr, om)
        if r <= a:
            raise TrajectoryHitsSolenoidError(
                f"beam reached r={r} <= a={a} at t={t_list[i]}"
            )
        out[0, i], out[1, i], out[2, i], out[3, i] = r, th, vr, om
    return Trajectory(t=t_grid, r=out[0], theta=out[1], v_r=out[2], omega=out[3],
                      path_sign=initial.path_sign)


def dense_theta_evaluator(particle: ParticleConfig, field: FieldModel,
                          guide: Optional[RadialGuide], traj: Trajectory) -> Callable:
    """theta(t) between grid nodes via one partial RK4 step from the node below."""
    step = make_stepper(particle, field, guide)
    t_grid = traj.t

    def theta_at(t: float) -> float:
        i = int(np.searchsorted(t_grid, t, side="right") - 1)
        i = max(0, min(i, t_grid.shape[0] - 1))
        t0 = float(t_grid[i])
        h = t - t0
        if h == 0.0:
            return float(traj.theta[i])
        state = step(t0, h, float(traj.r[i]), float(traj.theta[i]),
                     float(traj.v_r[i]), float(traj.omega[i]))
        return state[1]

    return theta_at


def find_meeting_time(traj1: Trajectory, traj2: Trajectory, event_tol: float,
                      dense1: Optional[Callable] = None,
                      dense2: Optional[Callable] = None) -> float:
    """Locate T where |dtheta1| + |dtheta2| = 2*pi by bisection on the grids.

    dense1/dense2 evaluate theta(t) between grid nodes (partial RK4 step);
    when omitted the grid is interpolated linearly, adequate only for
    oracle-style scans.  event_tol bounds |g(T)| in radians.
    """
    if traj1.t.shape != traj2.t.shape or not np.array_equal(traj1.t, traj2.t):
        raise ValueError("beams must share one time grid")
    g = traj1.swept() + traj2.swept() - _TWO_PI
    if g[-1] < 0.0:
        raise MeetingNotFoundError(
            f"beams swept only {g[-1] + _TWO_PI:.6f} rad of 2*pi within t_max={traj1.t[-1]}"
        )
    idx = int(np.argmax(g >= 0.0))
    if idx == 0:
        return float(traj1.t[0])
    th1_0 = float(traj1.theta[0])
    th2_0 = float(traj2.theta[0])

    def g_at(t):
        th1 = dense1(t) if dense1 is not None else np.interp(t, traj1.t, traj1.theta)
        th2 = dense2(t) if dense2 is not None else np.interp(t, traj2.t, traj2.theta)
        return abs(th1 - th1_0) + abs(th2 - th2_0) - _TWO_PI

    lo, hi = float(traj1.t[idx - 1]), float(traj1.t[idx])
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        gm = g_at(mid)
        if abs(gm) <= event_tol:
            return mid
        if gm < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
