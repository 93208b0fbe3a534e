"""Canonical JSON serialization: sorted keys, floats as 17 significant digits."""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .qcore import ExactScalar

SCHEMA_VERSION = "1"


def format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        # JSON has no literal for these; keep them as strings
        return json.dumps(repr(x))
    if x == 0:
        x = 0.0  # fold -0.0
    return format(x, ".16e")


def to_jsonable(obj):
    """Map package values (complex, Fraction, ExactScalar, enums) onto JSON types."""
    if isinstance(obj, ExactScalar):
        return {"re": str(obj.re), "im": str(obj.im)}
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "value") and isinstance(getattr(obj, "value"), str) and not isinstance(obj, str):
        return obj.value
    return obj


def canonical_json(obj) -> str:
    obj = to_jsonable(obj)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=True)
    if isinstance(obj, list):
        return "[" + ",".join(canonical_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ",".join(json.dumps(k) + ":" + canonical_json(v) for k, v in items) + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def envelope(command: str, params: dict, results, errors=()) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "results": results,
        "errors": list(errors),
    }


def verdict_record(v) -> dict:
    return {
        "identity_id": v.identity_id,
        "variant_id": v.variant_id,
        "params": v.params,
        "point": v.point,
        "lhs": v.lhs,
        "rhs": v.rhs,
        "abs_diff": float(v.abs_diff) if v.abs_diff is not None else None,
        "abs_diff_exact": str(v.abs_diff) if isinstance(v.abs_diff, Fraction) else None,
        "passed": v.passed,
        "mode": v.mode,
        "error": v.error,
    }


def audit_record(report, include_verdicts: bool = True) -> dict:
    out = {
        "grid_id": report.grid_id,
        "closed_form_adjudication": report.closed_adjudication.to_record(),
        "summary": report.summary(),
        "passing_variants": report.passing_variants(),
        "all_identities_pass": report.all_identities_pass(),
    }
    if include_verdicts:
        out["verdicts"] = [verdict_record(v) for v in report.verdicts]
    return out
