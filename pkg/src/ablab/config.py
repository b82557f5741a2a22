"""Flat sectioned key-value scenario configs (INI dialect).

Sections and keys:

    [scenario] name
    [solenoid] radius_a, light_speed_c, turns_density_n, current_amplitude_I0
    [particle] charge_e, mass_m
    [flux]     kind, phi0, alpha, omega_drive, t_on, t_off, ramp_width
    [field]    model
    [beams]    path, R, omega0_1, omega0_2, r0, v_r0, guide_stiffness
    [run]      dt, t_max, event_tol

Only [flux] kind is mandatory; everything else has the documented default.
Parsing collects every validation error before failing (ConfigError.errors),
and parse_config(render_config(s)) reproduces an equivalent Scenario.
"""

from __future__ import annotations

import configparser
import dataclasses
import io
from pathlib import Path

from .errors import ConfigError
from .fields import SolenoidConfig
from .dynamics import ParticleConfig
from .flux_profiles import FLUX_KINDS, kind_name
from .scenarios import BeamsConfig, RunConfig, Scenario, geometry_errors

_FLUX_KEYS = {
    "constant": {"phi0"},
    "linear_ramp": {"alpha", "phi0"},
    "sinusoidal": {"phi0", "omega_drive"},
    "trapezoidal_pulse": {"phi0", "t_on", "t_off", "ramp_width"},
}
_REQUIRED_FLUX_KEYS = {
    "constant": {"phi0"},
    "linear_ramp": {"alpha"},
    "sinusoidal": {"phi0", "omega_drive"},
    "trapezoidal_pulse": {"phi0", "t_on", "t_off", "ramp_width"},
}
_SECTION_KEYS = {
    "scenario": {"name"},
    "solenoid": {"radius_a", "light_speed_c", "turns_density_n", "current_amplitude_I0"},
    "particle": {"charge_e", "mass_m"},
    "flux": {"kind"} | set().union(*_FLUX_KEYS.values()),
    "field": {"model"},
    "beams": {"path", "R", "omega0_1", "omega0_2", "r0", "v_r0", "guide_stiffness"},
    "run": {"dt", "t_max", "event_tol"},
}


def _read_sections(text: str, errors: list) -> dict:
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keys are case-sensitive (beams.R)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        errors.append(f"config syntax: {exc}")
        return {}
    sections = {}
    for section in parser.sections():
        if section not in _SECTION_KEYS:
            errors.append(f"unknown section [{section}]")
            continue
        known = _SECTION_KEYS[section]
        body = {}
        for key, value in parser.items(section):
            if key not in known:
                errors.append(f"unknown key {section}.{key}")
            else:
                body[key] = value
        sections[section] = body
    return sections


def _take_float(section: dict, section_name: str, key: str, errors: list,
                default=None):
    if key not in section:
        return default
    raw = section.pop(key)
    try:
        return float(raw)
    except ValueError:
        errors.append(f"{section_name}.{key} must be a number, got {raw!r}")
        return default


def _build_flux(body: dict, errors: list):
    kind = body.pop("kind", None)
    if kind is None:
        errors.append("missing required key flux.kind")
        return None
    if kind not in FLUX_KINDS:
        errors.append(f"flux.kind must be one of {sorted(FLUX_KINDS)}, got {kind!r}")
        return None
    allowed = _FLUX_KEYS[kind]
    values = {}
    for key in list(body):
        if key not in allowed:
            errors.append(f"flux.{key} does not apply to kind {kind!r}")
            body.pop(key)
        else:
            values[key] = _take_float(body, "flux", key, errors)
    missing = _REQUIRED_FLUX_KEYS[kind] - set(values)
    if missing:
        errors.append(f"flux.kind {kind!r} missing required key(s): "
                      + ", ".join(sorted(f"flux.{k}" for k in missing)))
        return None
    if any(v is None for v in values.values()):
        return None
    try:
        return FLUX_KINDS[kind](**values)
    except ValueError as exc:
        errors.append(f"flux: {exc}")
        return None


def parse_config(text: str, name: str = "scenario") -> Scenario:
    """Parse and fully validate a scenario config; raises ConfigError with
    every problem found, not just the first."""
    errors: list = []
    sections = _read_sections(text, errors)
    scenario_body = sections.get("scenario", {})
    name = scenario_body.get("name", name)

    sol_body = dict(sections.get("solenoid", {}))
    radius_a = _take_float(sol_body, "solenoid", "radius_a", errors, 1.0)
    light_speed_c = _take_float(sol_body, "solenoid", "light_speed_c", errors, 1000.0)
    turns_n = _take_float(sol_body, "solenoid", "turns_density_n", errors)
    current_i0 = _take_float(sol_body, "solenoid", "current_amplitude_I0", errors)
    solenoid = None
    try:
        solenoid = SolenoidConfig(radius_a, light_speed_c, turns_n, current_i0)
    except (TypeError, ValueError) as exc:
        errors.append(f"solenoid: {exc}")

    par_body = dict(sections.get("particle", {}))
    charge_e = _take_float(par_body, "particle", "charge_e", errors, 1.0)
    mass_m = _take_float(par_body, "particle", "mass_m", errors, 1.0)
    particle = None
    try:
        particle = ParticleConfig(charge_e, mass_m)
    except (TypeError, ValueError) as exc:
        errors.append(f"particle: {exc}")

    flux = _build_flux(dict(sections.get("flux", {"kind": None})), errors) \
        if "flux" in sections else None
    if "flux" not in sections:
        errors.append("missing required section [flux]")

    field_model = sections.get("field", {}).get("model", "quasistatic")

    beams_body = dict(sections.get("beams", {}))
    path = beams_body.pop("path", "circular")
    R = _take_float(beams_body, "beams", "R", errors,
                    2.0 if path == "circular" else None)
    omega0_1 = _take_float(beams_body, "beams", "omega0_1", errors, 3.141592653589793)
    omega0_2 = _take_float(beams_body, "beams", "omega0_2", errors, 3.141592653589793)
    r0 = _take_float(beams_body, "beams", "r0", errors)
    v_r0 = _take_float(beams_body, "beams", "v_r0", errors, 0.0)
    guide = _take_float(beams_body, "beams", "guide_stiffness", errors)
    beams = BeamsConfig(path=path, R=R, omega0_1=omega0_1, omega0_2=omega0_2,
                        r0=r0, v_r0=v_r0, guide_stiffness=guide)

    run_body = dict(sections.get("run", {}))
    run = RunConfig(
        dt=_take_float(run_body, "run", "dt", errors, 0.0),
        t_max=_take_float(run_body, "run", "t_max", errors, 0.0),
        event_tol=_take_float(run_body, "run", "event_tol", errors,
                              RunConfig().event_tol))

    if errors or flux is None or solenoid is None or particle is None:
        if flux is None and "flux" in sections and not errors:
            errors.append("invalid [flux] section")
        # still surface launch-geometry problems alongside the others
        if solenoid is not None:
            errors.extend(geometry_errors(beams, solenoid))
        raise ConfigError(errors)

    scenario = Scenario(name=name, flux=flux, solenoid=solenoid, particle=particle,
                        field_model=field_model, beams=beams, run=run)
    cross = scenario.validate()
    if cross:
        raise ConfigError(cross)
    return scenario


def parse_config_file(path, name: str = None) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_config(text, name=name or Path(path).stem)


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render_config(scenario: Scenario) -> str:
    """Canonical config text for a Scenario (round-trips through parse_config)."""
    out = io.StringIO()

    def section(title, pairs):
        rows = [(k, v) for k, v in pairs if v is not None]
        if not rows:
            return
        out.write(f"[{title}]\n")
        for k, v in rows:
            out.write(f"{k} = {_fmt(v)}\n")
        out.write("\n")

    section("scenario", [("name", scenario.name)])
    sol = scenario.solenoid
    section("solenoid", [("radius_a", sol.radius_a), ("light_speed_c", sol.light_speed_c),
                         ("turns_density_n", sol.turns_density_n),
                         ("current_amplitude_I0", sol.current_amplitude_I0)])
    par = scenario.particle
    section("particle", [("charge_e", par.charge_e), ("mass_m", par.mass_m)])
    flux = scenario.flux
    flux_pairs = [("kind", kind_name(flux))]
    flux_pairs += [(f.name, getattr(flux, f.name)) for f in dataclasses.fields(flux)]
    section("flux", flux_pairs)
    section("field", [("model", scenario.field_model)])
    b = scenario.beams
    section("beams", [("path", b.path), ("R", b.R), ("omega0_1", b.omega0_1),
                      ("omega0_2", b.omega0_2), ("r0", b.r0), ("v_r0", b.v_r0),
                      ("guide_stiffness", b.guide_stiffness)])
    r = scenario.run
    section("run", [("dt", r.dt), ("t_max", r.t_max), ("event_tol", r.event_tol)])
    return out.getvalue()
