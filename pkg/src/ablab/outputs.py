"""Result emission: timeseries CSV and summary JSON.

Floats are serialized with 17 significant digits everywhere so that a rerun
of the same scenario produces byte-identical files.  The JSON writer is a
small local serializer rather than the json module because the stdlib does
not let callers pin the float format.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .scenarios import ScenarioResult, SweepResult

TIMESERIES_HEADER = ("t,r1,theta1,omega1,vr1,r2,theta2,omega2,vr2,"
                     "A_theta_1,E_theta_1,B_z_1,A_theta_2,E_theta_2,B_z_2,"
                     "phi_ab_partial,phi_kin_partial")


@dataclass(frozen=True)
class RunManifest:
    """Where and what to emit for one scenario run.

    Runs are seed-free and fixed-step, so a manifest fully determines the
    output bytes.
    """

    out_dir: Path
    emit_timeseries: bool = True
    emit_summary: bool = True

    def __post_init__(self):
        object.__setattr__(self, "out_dir", Path(self.out_dir))


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def dumps_json(obj, indent: int = 0) -> str:
    """Minimal deterministic JSON with 17-significant-digit floats."""
    pad = " " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = [f'{pad}  "{k}": {dumps_json(v, indent + 2).lstrip()}'
                for k, v in obj.items()]
        return "{\n" + ",\n".join(rows) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not len(obj):
            return "[]"
        rows = [f"{pad}  {dumps_json(v, indent + 2).lstrip()}" for v in obj]
        return "[\n" + ",\n".join(rows) + f"\n{pad}]"
    if isinstance(obj, bool) or obj is None:
        return {True: "true", False: "false", None: "null"}[obj]
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if v != v or v in (float("inf"), float("-inf")):
            raise ValueError(f"non-finite value {v!r} has no JSON form")
        return _fmt(v)
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    raise TypeError(f"cannot serialize {type(obj)!r}")


def timeseries_table(result: ScenarioResult) -> np.ndarray:
    """(n_points, 17) array matching TIMESERIES_HEADER column for column."""
    run = result.run
    t = run.t
    b1, b2 = run.beam1, run.beam2
    f = result.field
    cols = [t,
            b1.r, b1.theta, b1.omega, b1.v_r,
            b2.r, b2.theta, b2.omega, b2.v_r,
            f.a_theta(b1.r, t), f.e_theta(b1.r, t), f.b_z(b1.r, t),
            f.a_theta(b2.r, t), f.e_theta(b2.r, t), f.b_z(b2.r, t),
            result.ledger.ab_partial, result.ledger.kin_partial]
    return np.column_stack(cols)


def write_timeseries(result: ScenarioResult, path: Path) -> Path:
    table = timeseries_table(result)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(TIMESERIES_HEADER + "\n")
        for row in table:
            fh.write(",".join(_fmt(v) for v in row) + "\n")
    return path


def write_summary(summary: dict, path: Path) -> Path:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_json(summary) + "\n")
    return path


def emit_outputs(result, manifest: RunManifest) -> list:
    """Write the requested files for a ScenarioResult or SweepResult.

    Sweeps have no single beam-pair timeline, so they emit the summary only.
    Returns the written paths; I/O errors carry the offending path.
    """
    out = manifest.out_dir
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {out}: {exc}") from exc
    name = (result.scenario.name if isinstance(result, ScenarioResult)
            else result.name)
    written = []
    try:
        if manifest.emit_timeseries and isinstance(result, ScenarioResult):
            written.append(write_timeseries(result, out / f"{name}.timeseries.csv"))
        if manifest.emit_summary:
            written.append(write_summary(result.summary(), out / f"{name}.summary.json"))
    except OSError as exc:
        raise OSError(f"failed writing outputs under {out}: {exc}") from exc
    return written


def sweep_is_result(result) -> bool:
    return isinstance(result, SweepResult)
