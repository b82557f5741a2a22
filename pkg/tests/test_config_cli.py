import json
import math

import numpy as np
import pytest

from ablab.cli import main
from ablab.config import parse_config, render_config
from ablab.errors import ConfigError
from ablab.flux_profiles import Sinusoidal, TrapezoidalPulse
from ablab.outputs import (TIMESERIES_HEADER, RunManifest, dumps_json,
                           emit_outputs)
from ablab.scenarios import run_builtin, run_scenario

MINIMAL = """
[flux]
kind = constant
phi0 = 1.0
"""

FULL = """
[scenario]
name = demo-sinusoid

[solenoid]
radius_a = 1.0
light_speed_c = 1000.0

[particle]
charge_e = 1.0
mass_m = 1.0

[flux]
kind = sinusoidal
phi0 = 1.0
omega_drive = 3.141592653589793

[field]
model = quasistatic

[beams]
path = circular
R = 2.0
omega0_1 = 3.141592653589793
omega0_2 = 3.141592653589793

[run]
dt = 1e-4
"""


def test_minimal_config_fills_defaults():
    scenario = parse_config(MINIMAL, name="minimal")
    assert scenario.name == "minimal"
    assert scenario.solenoid.radius_a == 1.0
    assert scenario.beams.path == "circular"
    assert scenario.beams.R == 2.0
    assert scenario.field_model == "quasistatic"
    assert scenario.flux.phi0 == 1.0


def test_full_config_parses():
    scenario = parse_config(FULL)
    assert scenario.name == "demo-sinusoid"
    assert isinstance(scenario.flux, Sinusoidal)
    assert scenario.run.dt == 1e-4


def test_all_errors_collected_not_just_first():
    text = """
[flux]
kind = sinusoidal
phi0 = 1.0

[beams]
path = circular
R = 0.5

[mystery]
key = 1

[run]
dt = fast
"""
    with pytest.raises(ConfigError) as err:
        parse_config(text)
    messages = "\n".join(err.value.errors)
    assert len(err.value.errors) >= 4
    assert "omega_drive" in messages          # missing required flux key
    assert "unknown section [mystery]" in messages
    assert "run.dt must be a number" in messages


def test_circular_radius_inside_solenoid_is_cross_field_error():
    text = MINIMAL + "\n[beams]\npath = circular\nR = 0.5\n"
    with pytest.raises(ConfigError) as err:
        parse_config(text)
    assert any("inside solenoid" in e for e in err.value.errors)


def test_unknown_key_rejected():
    with pytest.raises(ConfigError) as err:
        parse_config(MINIMAL + "\n[solenoid]\nradius_b = 2\n")
    assert any("unknown key solenoid.radius_b" in e for e in err.value.errors)


def test_flux_kind_specific_keys_enforced():
    with pytest.raises(ConfigError) as err:
        parse_config("[flux]\nkind = constant\nphi0 = 1\nomega_drive = 2\n")
    assert any("does not apply" in e for e in err.value.errors)


def test_current_parameterization_mismatch_cites_formula():
    n, i0, a, c = 2.0, 1.5, 1.0, 1000.0
    good_phi0 = 4 * math.pi ** 2 * n * i0 * a * a / c
    base = f"""
[solenoid]
radius_a = {a}
light_speed_c = {c}
turns_density_n = {n}
current_amplitude_I0 = {i0}

[flux]
kind = sinusoidal
phi0 = {{phi0}}
omega_drive = 1.0
"""
    parse_config(base.format(phi0=repr(good_phi0)))  # consistent parses fine
    with pytest.raises(ConfigError) as err:
        parse_config(base.format(phi0=repr(good_phi0 * 1.05)))
    assert any("4*pi^2*n*I0*a^2/c" in e for e in err.value.errors)


def test_config_round_trip():
    for text in (MINIMAL, FULL):
        scenario = parse_config(text, name="roundtrip")
        again = parse_config(render_config(scenario), name="ignored")
        assert again == scenario


def test_round_trip_preserves_pulse_breakpoints():
    text = """
[flux]
kind = trapezoidal_pulse
phi0 = 0.125
t_on = 0.2500000000000001
t_off = 0.75
ramp_width = 0.01
"""
    scenario = parse_config(text, name="pulse")
    again = parse_config(render_config(scenario), name="pulse")
    assert isinstance(again.flux, TrapezoidalPulse)
    assert again.flux == scenario.flux


# ---------------------------------------------------------------------------
# outputs


@pytest.fixture(scope="module")
def static_result():
    scenario = parse_config(MINIMAL + "\n[run]\ndt = 1e-3\n", name="static-out")
    return run_scenario(scenario)


def test_timeseries_layout(tmp_path, static_result):
    manifest = RunManifest(out_dir=tmp_path)
    paths = emit_outputs(static_result, manifest)
    csv = next(p for p in paths if p.suffix == ".csv")
    lines = csv.read_text().splitlines()
    assert lines[0] == TIMESERIES_HEADER
    assert len(lines[0].split(",")) == 17
    # rows = grid points + 1 header line
    assert len(lines) == static_result.run.t.shape[0] + 1


def test_partial_phase_column_final_row_equals_summary(tmp_path, static_result):
    manifest = RunManifest(out_dir=tmp_path)
    paths = emit_outputs(static_result, manifest)
    csv = next(p for p in paths if p.suffix == ".csv")
    last = csv.read_text().splitlines()[-1].split(",")
    summary = json.loads(next(p for p in paths if p.suffix == ".json").read_text())
    assert float(last[15]) == summary["phases"]["phi_ab"]
    assert float(last[16]) == summary["phases"]["phi_kin"]
    # same accumulator object: bitwise equality, not approximation
    assert float(last[15]) == static_result.ledger.phi_ab


def test_summary_json_is_valid_and_17_digit(tmp_path, static_result):
    manifest = RunManifest(out_dir=tmp_path, emit_timeseries=False)
    paths = emit_outputs(static_result, manifest)
    text = paths[0].read_text()
    parsed = json.loads(text)
    assert parsed["scenario"] == "static-out"
    assert parsed["passed"] is True
    # a float with all 17 significant digits survives the round trip
    pi_like = 1.0000000000000007
    assert dumps_json({"x": pi_like}) == '{\n  "x": 1.0000000000000007\n}'


def test_dumps_json_rejects_non_finite():
    with pytest.raises(ValueError):
        dumps_json({"x": float("nan")})


def test_sweep_emits_summary_only(tmp_path):
    result = run_builtin("free-path-static-sweep")
    files = emit_outputs(result, RunManifest(out_dir=tmp_path))
    assert [p.suffix for p in files] == [".json"]
    parsed = json.loads(files[0].read_text())
    assert len(parsed["members"]) == 5


# ---------------------------------------------------------------------------
# CLI


def test_cli_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "static-circular" in out and "free-path-dynamic-sweep" in out


def test_cli_validate_good_and_bad(tmp_path, capsys):
    good = tmp_path / "good.ini"
    good.write_text(MINIMAL)
    assert main(["validate", str(good)]) == 0
    bad = tmp_path / "bad.ini"
    bad.write_text(MINIMAL + "\n[beams]\nR = 0.1\n")
    assert main(["validate", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "inside solenoid" in err


def test_cli_run_builtin_and_config(tmp_path, capsys):
    out = tmp_path / "run-out"
    assert main(["run", "static-circular", "--out", str(out), "--dt", "1e-3"]) == 0
    assert (out / "static-circular.summary.json").exists()
    assert (out / "static-circular.timeseries.csv").exists()

    cfg = tmp_path / "scen.ini"
    cfg.write_text(FULL)
    assert main(["run", str(cfg), "--out", str(out), "--no-timeseries"]) == 0
    assert (out / "demo-sinusoid.summary.json").exists()
    assert not (out / "demo-sinusoid.timeseries.csv").exists()


def test_cli_unknown_source_is_config_error(tmp_path, capsys):
    assert main(["run", "no-such-thing", "--out", str(tmp_path)]) == 2


def test_cli_runtime_domain_error_exit_code(tmp_path):
    cfg = tmp_path / "crash.ini"
    cfg.write_text("""
[flux]
kind = constant
phi0 = 1.0

[beams]
path = free
r0 = 1.05
v_r0 = -8.0
omega0_1 = 3.141592653589793
omega0_2 = 3.141592653589793

[run]
dt = 1e-4
""")
    assert main(["run", str(cfg), "--out", str(tmp_path)]) == 3


def test_cli_suite_is_deterministic(tmp_path, capsys):
    out1, out2 = tmp_path / "s1", tmp_path / "s2"
    assert main(["suite", "--out", str(out1), "--no-timeseries"]) == 0
    assert main(["suite", "--out", str(out2), "--no-timeseries"]) == 0
    names = sorted(p.name for p in out1.glob("*.json"))
    assert names == sorted(p.name for p in out2.glob("*.json"))
    assert len(names) == 8  # 7 builtins + suite aggregate
    for name in names:
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()
