import dataclasses
import math

import numpy as np
import pytest

from ablab.errors import ConfigError, InsufficientPointsError
from ablab.fields import SolenoidConfig
from ablab.flux_profiles import Constant, Sinusoidal
from ablab.phases import Applicability
from ablab.scenarios import (BeamsConfig, RunConfig, Scenario, SweepResult,
                             builtin_registry, free_path_sweep,
                             path_independence_sweep,
                             quasistatic_convergence_sweep, run_builtin,
                             run_scenario)

SOL = SolenoidConfig(radius_a=1.0, light_speed_c=1000.0)

BUILTIN_NAMES = [
    "static-circular", "linear-ramp-circular", "sinusoid-circular-quasistatic",
    "sinusoid-circular-exactfield", "pulse-halfphase",
    "free-path-static-sweep", "free-path-dynamic-sweep",
]


def test_registry_has_the_fixed_names():
    assert list(builtin_registry()) == BUILTIN_NAMES


@pytest.fixture(scope="module")
def builtin_results():
    return {name: run_builtin(name) for name in BUILTIN_NAMES}


def test_every_builtin_meets_its_bounds(builtin_results):
    for name, result in builtin_results.items():
        assert result.passed, f"{name}: {[vars(b) for b in result.bounds if not b.passed]}"


def test_static_circular_residuals(builtin_results):
    res = builtin_results["static-circular"]
    assert res.residuals["ab"] < 1e-9
    assert res.residuals["total"] < 1e-9


def test_sinusoid_quasistatic_matches_time_average_law(builtin_results):
    res = builtin_results["sinusoid-circular-quasistatic"]
    # Omega T = pi: the averaged flux vanishes, the kinetic part carries all
    assert res.prediction.applicability is Applicability.CIRCULAR_QUASISTATIC
    assert abs(res.ledger.phi_ab) < 1e-8
    assert res.ledger.phi_total == pytest.approx(1.0, abs=1e-8)


def test_exactfield_total_is_initial_enclosed_flux(builtin_results):
    res = builtin_results["sinusoid-circular-exactfield"]
    assert res.prediction.applicability is Applicability.CIRCULAR_GENERAL_FIELD
    assert res.residuals["total"] < 1e-8
    # enclosed flux through the beam circle differs from the bore flux
    assert res.prediction.predicted_total != pytest.approx(1.0, abs=1e-6)


def test_pulse_halfphase_values(builtin_results):
    res = builtin_results["pulse-halfphase"]
    ratio = res.metrics["phi_ab_per_e_phi0"] / 0.5
    assert 0.98 * (1 - 1e-9) <= ratio <= 1.02
    assert res.metrics["abs_phi_total"] < 1e-8


def test_free_sweeps_report_members(builtin_results):
    static = builtin_results["free-path-static-sweep"]
    dynamic = builtin_results["free-path-dynamic-sweep"]
    assert isinstance(static, SweepResult) and len(static.members) == 5
    assert all(m.status == "ok" for m in static.members)
    assert static.spread_ab < 1e-6
    assert dynamic.spread_ab > 1e-3
    # dynamic beams separate radially: the overlap region genuinely moved
    assert all(m.radial_separation > 1e-3 for m in dynamic.members)
    assert all(m.radial_separation < 1e-9 for m in static.members)


def test_scenario_determinism(builtin_results):
    for name in ("sinusoid-circular-quasistatic", "free-path-dynamic-sweep"):
        again = run_builtin(name)
        assert again.summary() == builtin_results[name].summary()


def test_run_scenario_rejects_invalid():
    bad = Scenario(name="bad", flux=Constant(phi0=1.0),
                   beams=BeamsConfig(path="circular", R=0.5))
    with pytest.raises(ConfigError) as err:
        run_scenario(bad)
    assert any("inside solenoid" in e for e in err.value.errors)


def test_validate_collects_multiple_errors():
    bad = Scenario(name="bad", flux=Constant(phi0=1.0), field_model="exact_sinusoidal",
                   beams=BeamsConfig(path="circular", R=0.5, omega0_1=-1.0))
    errors = bad.validate()
    assert len(errors) >= 3


def test_failed_member_is_reported_not_dropped():
    # v_r0 so violently inward that the beam dives into the bore
    base = Scenario(
        name="crash", flux=Constant(phi0=1.0),
        beams=BeamsConfig(path="free", R=None, omega0_1=math.pi, omega0_2=math.pi,
                          r0=1.2, v_r0=0.0, guide_stiffness=1e-3),
        run=RunConfig(dt=1e-4))
    result = free_path_sweep(base, [0.0, -8.0])
    statuses = [m.status for m in result.members]
    assert statuses[0] == "ok"
    assert "TrajectoryHitsSolenoidError" in statuses[1]
    assert not result.passed


def test_path_independence_sweep_requires_constant_flux():
    base = Scenario(
        name="dyn", flux=Sinusoidal(phi0=1.0, omega_drive=math.pi),
        beams=BeamsConfig(path="free", R=None, r0=2.0, guide_stiffness=40.0))
    with pytest.raises(ValueError):
        path_independence_sweep(base, [0.0, 0.1])


def test_convergence_sweep_slopes():
    report = quasistatic_convergence_sweep(SOL, 5.0, [10.0, 3.0, 1.0])
    assert report.applicable
    assert report.slope_radiative == pytest.approx(2.0, abs=0.1)
    # the max-deviation metric carries the log-corrected near field
    assert 1.7 < report.slope_total < 2.0
    assert report.deviation_total[0] > report.deviation_total[-1]


def test_convergence_sweep_flags_fast_drives():
    report = quasistatic_convergence_sweep(SolenoidConfig(1.0, 1000.0), 50.0,
                                           [10.0, 5.0, 2.5])
    assert not report.applicable  # Omega r / c reaches 0.5


def test_convergence_sweep_needs_three_points():
    with pytest.raises(InsufficientPointsError):
        quasistatic_convergence_sweep(SOL, 5.0, [1.0, 2.0])
    with pytest.raises(ValueError):
        quasistatic_convergence_sweep(SOL, 5.0, [0.0, 1.0, 2.0])


def test_criterion_metrics_expose_drift(builtin_results):
    res = builtin_results["free-path-static-sweep"]
    assert res.metrics["drift_max"] < 1e-8


def test_asymmetric_circular_run_has_no_prediction():
    scen = Scenario(name="asym", flux=Sinusoidal(phi0=1.0, omega_drive=math.pi),
                    beams=BeamsConfig(omega0_1=math.pi, omega0_2=1.2 * math.pi),
                    run=RunConfig(dt=1e-4))
    result = run_scenario(scen)
    assert result.prediction.applicability is Applicability.NONE
    assert result.residuals == {}
    # swept-angle sum still closes the loop
    assert abs(result.run.meeting_residual()) < 1e-10


def test_dt_override_changes_grid():
    entry = builtin_registry()["static-circular"]
    scenario = entry.make()
    coarse = dataclasses.replace(scenario,
                                 run=dataclasses.replace(scenario.run, dt=1e-3))
    result = run_scenario(coarse)
    assert result.diagnostics["n_steps"] == 1000
