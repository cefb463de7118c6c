"""Run reports: JSON-ready sections, schema validation, deterministic dumps.

Every command-line invocation assembles one report dict, validated against
the schema shipped as ``report_schema.json`` (bump ``SCHEMA_VERSION`` on
any field change). Reports are deterministic for fixed inputs and seed:
keys are sorted, floats keep full precision, and ``timing`` is always null
so repeated runs are byte-identical.
"""
from __future__ import annotations

import json
from importlib import resources

import numpy as np

from .errors import InvariantViolationError
from .spectra import BoundReport, Spectrum, partial_sums
from .search import SearchResult
from .verdicts import ConjectureVerdict, matrix_payload

SCHEMA_VERSION = 1
TOOL_VERSION = "0.1.0"

_schema_cache: dict | None = None


def load_schema() -> dict:
    global _schema_cache
    if _schema_cache is None:
        text = resources.files("commspectra").joinpath("report_schema.json").read_text()
        _schema_cache = json.loads(text)
    return _schema_cache


def jsonable(obj):
    """Recursively convert numpy scalars/arrays into plain JSON values.

    Complex arrays and scalars become ``{re, im}`` payloads; real arrays
    become nested float lists.
    """
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return matrix_payload(obj)
        return obj.tolist()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__} into a report")


def spectrum_section(X: np.ndarray, spec: Spectrum) -> dict:
    n = spec.order
    trace_target = 2.0 * n - 2.0 * abs(np.trace(X)) ** 2 / spec.norm_scale
    return {
        "order": n,
        "values": spec.values.tolist(),
        "clusters": [[float(v), int(m)] for v, m in spec.clusters],
        "pairing_ok": bool(spec.pairing_ok),
        "norm_scale": float(spec.norm_scale),
        "trace_residual": float(abs(spec.values.sum() - trace_target)),
        "partial_sums": partial_sums(spec).tolist(),
    }


def bounds_section(report: BoundReport) -> dict:
    return {
        "lambda1": float(report.lambda1),
        "norm_scale": float(report.norm_scale),
        "bounds": jsonable(report.bounds),
        "slacks": jsonable(report.slacks),
        "all_proven_hold": bool(report.all_proven_hold),
    }


def verdict_section(verdict: ConjectureVerdict) -> dict:
    return {
        "conjecture_id": verdict.conjecture_id,
        "hypotheses_residual": float(verdict.hypotheses_residual),
        "lhs": float(verdict.lhs),
        "rhs": float(verdict.rhs),
        "satisfied": bool(verdict.satisfied),
        "witness": jsonable(verdict.witness),
    }


def search_section(result: SearchResult) -> dict:
    return {
        "objective": result.objective,
        "order": int(result.order),
        "k": int(result.k),
        "best_objective": float(result.best_objective),
        "best_matrix": matrix_payload(result.best_matrix),
        "conjectured_bound": float(result.conjectured_bound),
        "proven_bound": float(result.proven_bound),
        "gap_to_conjecture": float(result.gap_to_conjecture),
        "monotone_ok": bool(result.monotone_ok),
        "restarts": [
            {
                "index": t.index,
                "first_objective": float(t.first_objective),
                "last_objective": float(t.last_objective),
                "iterations": t.iterations,
            }
            for t in result.restarts
        ],
        "violation": jsonable(result.violation),
    }


def build_report(
    command: str,
    inputs: list[dict],
    seed: int | None,
    tol: float,
    exit_code: int,
    sections: dict,
) -> dict:
    """Assemble and validate one run report.

    ``sections`` holds the per-command payloads (spectrum, bounds, verdicts,
    closed_form, search, sweep, reference_check, kind, bundle_path).
    """
    report = {
        "schema_version": SCHEMA_VERSION,
        "version": TOOL_VERSION,
        "command": command,
        "inputs": inputs,
        "seed": None if seed is None else int(seed),
        "tol": float(tol),
        "timing": None,
        "exit_code": int(exit_code),
    }
    report.update(jsonable(sections))
    validate_report(report)
    return report


def validate_report(report: dict) -> None:
    """Schema-check a report; a failure here is a library bug."""
    import jsonschema

    try:
        jsonschema.validate(instance=report, schema=load_schema())
    except jsonschema.ValidationError as exc:
        raise InvariantViolationError(f"report failed schema validation: {exc.message}")


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def fmt(x: float) -> str:
    """Render a float at the report precision (10 significant digits)."""
    return f"{float(x):.10g}"
