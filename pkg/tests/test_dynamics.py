import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ablab.dynamics import (BeamState, ParticleConfig, RadialGuide,
                            circular_omega, circular_trajectory,
                            dense_theta_evaluator, find_meeting_time,
                            integrate_free_beam)
from ablab.errors import (MeetingNotFoundError, StepUnderflowError,
                          TrajectoryHitsSolenoidError)
from ablab.fields import ExactSinusoidalField, QuasistaticField, SolenoidConfig
from ablab.flux_profiles import Constant, LinearRamp, Sinusoidal
from ablab.phases import canonical_angular_momentum

SOL = SolenoidConfig(radius_a=1.0, light_speed_c=1000.0)
PART = ParticleConfig(charge_e=1.0, mass_m=1.0)
TWO_PI = 2.0 * math.pi


def test_circular_omega_constant_flux():
    # A(R,t) = A(R,0): both beams keep their launch rate
    for sign in (1, -1):
        assert circular_omega(PART, 2.0, math.pi, 0.3, 0.3, sign) == math.pi


def test_circular_omega_linear_ramp():
    # beam 1 under Phi = alpha t: w(t) = w0 - e*alpha*t/(2 pi m R^2)
    alpha, R, t = 2.0, 2.0, 0.7
    a_now = alpha * t / (TWO_PI * R)
    got = circular_omega(PART, R, math.pi, a_now, 0.0, +1)
    assert got == pytest.approx(math.pi - alpha * t / (TWO_PI * R ** 2), rel=1e-14)


@given(a_now=st.floats(min_value=-0.3, max_value=0.3),
       w0=st.floats(min_value=0.5, max_value=4.0))
def test_circular_omega_sum_telescopes(a_now, w0):
    # equal launch rates: w1(t) + w2(t) = 2 w0 whatever the flux did
    w1 = circular_omega(PART, 2.0, w0, a_now, 0.05, +1)
    w2 = circular_omega(PART, 2.0, w0, a_now, 0.05, -1)
    assert w1 + w2 == pytest.approx(2.0 * w0, rel=1e-14)


def test_free_motion_conserves_angular_momentum():
    # constant flux, quasistatic: no force at all, L = m r^2 w to 1e-10
    field = QuasistaticField(SOL, Constant(phi0=1.0))
    start = BeamState(r=2.0, theta=0.0, v_r=0.0, omega=math.pi)
    traj = integrate_free_beam(PART, field, start, dt=2e-5, t_max=2.0)
    L = PART.mass_m * traj.r ** 2 * traj.omega
    assert np.max(np.abs(L - L[0])) / abs(L[0]) < 1e-10


def test_canonical_invariant_on_quasistatic_sinusoid():
    # m r^2 w + (e/2pi) Phi(t) is the first integral of the torque equation
    prof = Sinusoidal(phi0=1.0, omega_drive=math.pi)
    field = QuasistaticField(SOL, prof)
    guide = RadialGuide.for_equilibrium_orbit(2.0, math.pi, 40.0)
    for g in (None, guide):
        start = BeamState(r=2.0, theta=0.0, v_r=0.2, omega=math.pi)
        traj = integrate_free_beam(PART, field, start, dt=5e-5, t_max=1.0, guide=g)
        p = canonical_angular_momentum(PART, field, traj)
        explicit = (PART.mass_m * traj.r ** 2 * traj.omega
                    + PART.charge_e / TWO_PI * prof.value(traj.t))
        assert np.max(np.abs(p - explicit)) < 1e-14
        assert np.max(np.abs(p - p[0])) / abs(p[0]) < 1e-10


def test_work_energy_identity_with_axial_field():
    # magnetic force does no work: d(mv^2/2)/dt = e E_theta v_theta pointwise
    field = ExactSinusoidalField(SOL, Sinusoidal(phi0=1.0, omega_drive=1.0))
    start = BeamState(r=2.0, theta=0.0, v_r=0.1, omega=math.pi)
    errs = []
    for dt in (2e-4, 1e-4):
        traj = integrate_free_beam(PART, field, start, dt=dt, t_max=0.5)
        e_kin = 0.5 * PART.mass_m * (traj.v_r ** 2 + (traj.r * traj.omega) ** 2)
        rate = (e_kin[2:] - e_kin[:-2]) / (2 * dt)
        power = (PART.charge_e * field.e_theta(traj.r, traj.t)
                 * traj.r * traj.omega)[1:-1]
        errs.append(np.max(np.abs(rate - power)) / np.max(np.abs(power)))
    assert errs[0] < 1e-6
    assert errs[0] / errs[1] == pytest.approx(4.0, abs=0.4)  # FD-limited check


def test_integrator_is_fourth_order():
    field = QuasistaticField(SOL, Sinusoidal(phi0=1.0, omega_drive=math.pi))
    guide = RadialGuide.for_equilibrium_orbit(2.0, math.pi, 40.0)
    start = BeamState(r=2.0, theta=0.0, v_r=0.3, omega=math.pi)

    def terminal(n):
        tr = integrate_free_beam(PART, field, start, dt=0.4 / n, t_max=0.4, guide=guide)
        return np.array([tr.r[-1], tr.theta[-1], tr.v_r[-1], tr.omega[-1]])

    ref = terminal(3200)  # Richardson-style fine reference
    e1 = np.max(np.abs(terminal(100) - ref))
    e2 = np.max(np.abs(terminal(200) - ref))
    assert e1 / e2 == pytest.approx(16.0, rel=0.25)


def test_trajectory_hits_solenoid():
    # aim at the bore: strong inward launch crashes
    field = QuasistaticField(SOL, Constant(phi0=1.0))
    start = BeamState(r=1.5, theta=0.0, v_r=-2.0, omega=0.5)
    with pytest.raises(TrajectoryHitsSolenoidError):
        integrate_free_beam(PART, field, start, dt=1e-3, t_max=2.0)
    with pytest.raises(TrajectoryHitsSolenoidError):
        integrate_free_beam(PART, field, BeamState(r=0.9, theta=0.0, v_r=0.0, omega=1.0),
                            dt=1e-3, t_max=1.0)


def test_step_underflow():
    field = QuasistaticField(SOL, Constant(phi0=1.0))
    start = BeamState(r=2.0, theta=0.0, v_r=0.0, omega=math.pi)
    with pytest.raises(StepUnderflowError):
        integrate_free_beam(PART, field, start, dt=0.0, t_max=1.0)
    with pytest.raises(StepUnderflowError):
        integrate_free_beam(PART, field, start, dt=1e-18, t_max=1.0)


def test_partial_final_step_lands_on_t_max():
    field = QuasistaticField(SOL, Constant(phi0=1.0))
    start = BeamState(r=2.0, theta=0.0, v_r=0.0, omega=math.pi)
    traj = integrate_free_beam(PART, field, start, dt=0.3, t_max=1.0)
    assert traj.t[-1] == 1.0
    assert traj.t.shape[0] == 5  # 0, .3, .6, .9, 1.0


def _circular_pair(field, omega0, n=4000, T=1.0):
    t = np.linspace(0.0, T, n + 1)
    b1 = circular_trajectory(PART, field, 2.0, omega0, t)
    b2 = circular_trajectory(PART, field, 2.0, -omega0, t)
    return b1, b2


def test_meeting_time_circular_constant():
    # each beam sweeps pi rad per unit time -> meet at T = 1
    field = QuasistaticField(SOL, Constant(phi0=1.0))
    b1, b2 = _circular_pair(field, math.pi, T=1.2)
    T = find_meeting_time(b1, b2, event_tol=TWO_PI * 1e-12)
    assert T == pytest.approx(1.0, abs=1e-9)


def test_meeting_time_is_flux_independent_for_circular_paths():
    # the +/- A swings cancel in the swept-angle sum
    for prof in (Constant(2.0), LinearRamp(alpha=1.3),
                 Sinusoidal(phi0=1.0, omega_drive=math.pi)):
        field = QuasistaticField(SOL, prof)
        b1, b2 = _circular_pair(field, math.pi, T=1.2)
        T = find_meeting_time(b1, b2, event_tol=TWO_PI * 1e-12)
        assert T == pytest.approx(1.0, abs=1e-9)


def test_meeting_time_matches_dense_grid_scan():
    # free guided beams, constant flux, slightly different launch radii
    field = QuasistaticField(SOL, Constant(phi0=1.0))
    guide1 = RadialGuide.for_equilibrium_orbit(2.0, math.pi, 40.0)
    guide2 = RadialGuide.for_equilibrium_orbit(2.05, math.pi, 40.0)
    s1 = BeamState(r=2.0, theta=0.0, v_r=0.1, omega=math.pi, path_sign=1)
    s2 = BeamState(r=2.05, theta=0.0, v_r=0.0, omega=-math.pi, path_sign=-1)
    t1 = integrate_free_beam(PART, field, s1, dt=1e-4, t_max=1.5, guide=guide1)
    t2 = integrate_free_beam(PART, field, s2, dt=1e-4, t_max=1.5, guide=guide2)
    T = find_meeting_time(t1, t2, event_tol=TWO_PI * 1e-12,
                          dense1=dense_theta_evaluator(PART, field, guide1, t1),
                          dense2=dense_theta_evaluator(PART, field, guide2, t2))
    # oracle: brute-force scan of g on a 50x denser shared grid
    d1 = integrate_free_beam(PART, field, s1, dt=2e-6, t_max=1.5, guide=guide1)
    d2 = integrate_free_beam(PART, field, s2, dt=2e-6, t_max=1.5, guide=guide2)
    g = d1.swept() + d2.swept() - TWO_PI
    i = int(np.argmax(g >= 0.0))
    # linear zero crossing inside the bracketing dense cell
    t_lo, t_hi = d1.t[i - 1], d1.t[i]
    T_scan = t_lo + (t_hi - t_lo) * (-g[i - 1]) / (g[i] - g[i - 1])
    assert T == pytest.approx(T_scan, abs=1e-9)


def test_meeting_requires_enough_sweep():
    field = QuasistaticField(SOL, Constant(phi0=1.0))
    b1, b2 = _circular_pair(field, math.pi, T=0.5)  # only half the needed angle
    with pytest.raises(MeetingNotFoundError):
        find_meeting_time(b1, b2, event_tol=TWO_PI * 1e-12)


def test_guide_keeps_equilibrium_orbit_circular():
    field = QuasistaticField(SOL, Constant(phi0=1.0))
    guide = RadialGuide.for_equilibrium_orbit(2.0, math.pi, 40.0)
    start = BeamState(r=2.0, theta=0.0, v_r=0.0, omega=math.pi)
    traj = integrate_free_beam(PART, field, start, dt=1e-4, t_max=1.0, guide=guide)
    assert np.max(np.abs(traj.r - 2.0)) < 1e-12
    assert np.max(np.abs(traj.omega - math.pi)) < 1e-12


def test_circular_trajectory_matches_free_integration():
    # constrained-circle closed form vs the ODE with a stiff guide standing in
    # for the constraint force
    prof = Sinusoidal(phi0=0.3, omega_drive=math.pi)
    field = QuasistaticField(SOL, prof)
    t = np.linspace(0.0, 1.0, 2001)
    ref = circular_trajectory(PART, field, 2.0, math.pi, t)
    guide = RadialGuide.for_equilibrium_orbit(2.0, math.pi, 4.0e4)
    start = BeamState(r=2.0, theta=0.0, v_r=0.0, omega=math.pi)
    ode = integrate_free_beam(PART, field, start, dt=5e-4, t_max=1.0, guide=guide)
    # stiff-guide orbit wobbles at O(flux perturbation / stiffness)
    assert np.max(np.abs(ode.r - 2.0)) < 1e-3
    assert abs(ode.theta[-1] - ref.theta[-1]) < 1e-3
