"""Command-line front end.

Verbs:
    run <config-path | builtin-name>   run one scenario, emit CSV + JSON
    suite                              run every builtin, emit summaries
    list                               show the builtin registry
    validate <config-path>             parse + validate, report every error

Exit codes: 0 success, 1 residual bound exceeded, 2 config error,
3 runtime domain error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from .config import parse_config_file
from .errors import (ConfigError, ExteriorDomainError, MeetingNotFoundError,
                     ModelMismatchError, StepUnderflowError,
                     TrajectoryHitsSolenoidError)
from .outputs import RunManifest, emit_outputs, write_summary
from .scenarios import builtin_registry, run_builtin, run_scenario

_RUNTIME_ERRORS = (TrajectoryHitsSolenoidError, MeetingNotFoundError,
                   ModelMismatchError, ExteriorDomainError, StepUnderflowError,
                   ValueError)


def _with_dt(scenario, dt):
    if dt is None:
        return scenario
    return dataclasses.replace(scenario, run=dataclasses.replace(scenario.run, dt=dt))


def _load_scenario(source: str, dt):
    registry = builtin_registry()
    if source in registry:
        entry = registry[source]
        if entry.kind == "sweep":
            if dt is not None:
                raise ConfigError(["--dt does not apply to sweep builtins"])
            return None, entry
        return _with_dt(entry.make(), dt), entry
    path = Path(source)
    if not path.exists():
        raise ConfigError([f"{source!r} is neither a builtin name nor a config file"])
    return _with_dt(parse_config_file(path), dt), None


def _cmd_run(args) -> int:
    scenario, entry = _load_scenario(args.source, args.dt)
    if entry is not None and entry.kind == "sweep":
        result = run_builtin(entry.name)
    elif entry is not None:
        result = run_scenario(scenario, bounds=entry.bounds)
    else:
        result = run_scenario(scenario)
    manifest = RunManifest(out_dir=Path(args.out),
                           emit_timeseries=not args.no_timeseries)
    written = emit_outputs(result, manifest)
    for path in written:
        print(path)
    _print_verdict(result)
    return 0 if result.passed else 1


def _print_verdict(result):
    for check in result.bounds:
        state = "ok " if check.passed else "FAIL"
        print(f"  [{state}] {check.metric} = {check.value:.6e} {check.op} {check.limit:g}")
    print(f"{'PASS' if result.passed else 'FAIL'}: "
          f"{getattr(result, 'name', None) or result.scenario.name}")


def _cmd_suite(args) -> int:
    out = Path(args.out)
    manifest = RunManifest(out_dir=out, emit_timeseries=not args.no_timeseries)
    overall = []
    for name in builtin_registry():
        result = run_builtin(name)
        emit_outputs(result, manifest)
        overall.append({"scenario": name, "passed": result.passed,
                        "bounds": [vars(b) for b in result.bounds]})
        _print_verdict(result)
    all_passed = all(row["passed"] for row in overall)
    write_summary({"suite": overall, "passed": all_passed}, out / "suite.summary.json")
    print(f"suite: {'PASS' if all_passed else 'FAIL'} "
          f"({sum(r['passed'] for r in overall)}/{len(overall)})")
    return 0 if all_passed else 1


def _cmd_list(_args) -> int:
    for name, entry in builtin_registry().items():
        print(f"{name:32s} {entry.description}")
    return 0


def _cmd_validate(args) -> int:
    parse_config_file(Path(args.config))
    print("OK")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ablab",
        description="beam-pair phase accumulation around a time-varying solenoid flux")
    sub = parser.add_subparsers(dest="verb", required=True)

    run_p = sub.add_parser("run", help="run one scenario (config path or builtin name)")
    run_p.add_argument("source")
    run_p.add_argument("--out", default="out", help="output directory (default: ./out)")
    run_p.add_argument("--dt", type=float, default=None, help="override run.dt")
    run_p.add_argument("--no-timeseries", action="store_true")
    run_p.set_defaults(func=_cmd_run)

    suite_p = sub.add_parser("suite", help="run every builtin scenario")
    suite_p.add_argument("--out", default="out")
    suite_p.add_argument("--no-timeseries", action="store_true")
    suite_p.set_defaults(func=_cmd_suite)

    list_p = sub.add_parser("list", help="list builtin scenarios")
    list_p.set_defaults(func=_cmd_list)

    val_p = sub.add_parser("validate", help="validate a config file")
    val_p.add_argument("config")
    val_p.set_defaults(func=_cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        for err in exc.errors:
            print(f"config error: {err}", file=sys.stderr)
        return 2
    except _RUNTIME_ERRORS as exc:
        print(f"runtime error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
