"""JSON input schemas and a deterministic dumper.

Files name a space as {"kind": "euclidean_gram", "dim": n} or
{"kind": "white_polynomial", "degree": n, "points": [...]}.  A problem file
adds targets, g_basis, b, and an optional solver block; a sequence file adds
elements, probes, and optionally a limit with probe directions.

``dumps`` emits floats with 17 significant digits so identical runs produce
byte-identical output.
"""

from __future__ import annotations

import json
import math
from dataclasses import replace
from typing import Any, Optional

import numpy as np

from .approx import SimultaneousProblem, SolverConfig, SubspaceBasis
from .sequences import SequencePrefix
from .spaces import EuclideanGram, SpaceSpec, WhitePolynomial

__all__ = [
    "ValidationError",
    "dumps",
    "load_json",
    "space_from_dict",
    "space_to_dict",
    "solver_from_dict",
    "problem_from_dict",
    "sequence_from_dict",
]


class ValidationError(ValueError):
    """Input failed schema validation; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str) -> None:
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    return format(x, ".17g")


def _emit(obj: Any, out: list[str], indent: int) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, val) in enumerate(obj.items()):
            out.append(f"{pad}  {json.dumps(str(key))}: ")
            _emit(val, out, indent + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if len(obj) == 0:
            out.append("[]")
            return
        out.append("[")
        for i, val in enumerate(obj):
            _emit(val, out, indent + 1)
            if i < len(obj) - 1:
                out.append(", ")
        out.append("]")
    elif isinstance(obj, bool) or isinstance(obj, np.bool_):
        out.append("true" if obj else "false")
    elif obj is None:
        out.append("null")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_fmt_float(float(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, np.ndarray):
        _emit(obj.tolist(), out, indent)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    out: list[str] = []
    _emit(obj, out, 0)
    return "".join(out)


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(path, f"cannot read file ({exc.strerror})") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(
            path, f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _require(obj: dict, key: str, field: str) -> Any:
    if not isinstance(obj, dict):
        raise ValidationError(field, f"expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise ValidationError(f"{field}.{key}", "missing required key")
    return obj[key]


def _as_int(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(field, f"expected an integer, got {value!r}")
    return value


def _as_number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(field, f"expected a number, got {value!r}")
    return float(value)


def _as_vector(value: Any, field: str) -> list[float]:
    if not isinstance(value, list) or not value:
        raise ValidationError(field, "expected a nonempty list of numbers")
    return [_as_number(v, f"{field}[{i}]") for i, v in enumerate(value)]


def _as_vector_list(value: Any, field: str, allow_empty: bool = False) -> list[list[float]]:
    if not isinstance(value, list):
        raise ValidationError(field, "expected a list of coordinate lists")
    if not value and not allow_empty:
        raise ValidationError(field, "expected a nonempty list of coordinate lists")
    return [_as_vector(v, f"{field}[{i}]") for i, v in enumerate(value)]


def space_from_dict(obj: Any, field: str = "space") -> SpaceSpec:
    kind = _require(obj, "kind", field)
    try:
        if kind == "euclidean_gram":
            return EuclideanGram(dim=_as_int(_require(obj, "dim", field), f"{field}.dim"))
        if kind == "white_polynomial":
            degree = _as_int(_require(obj, "degree", field), f"{field}.degree")
            points = _require(obj, "points", field)
            if not isinstance(points, list):
                raise ValidationError(f"{field}.points", "expected a list of numbers")
            return WhitePolynomial(
                degree=degree,
                points=tuple(
                    _as_number(p, f"{field}.points[{i}]") for i, p in enumerate(points)
                ),
            )
    except ValidationError:
        raise
    except ValueError as exc:
        raise ValidationError(field, str(exc)) from exc
    raise ValidationError(
        f"{field}.kind",
        f"unknown kind {kind!r}; use 'euclidean_gram' or 'white_polynomial'",
    )


def space_to_dict(space: SpaceSpec) -> dict:
    if isinstance(space, EuclideanGram):
        return {"kind": "euclidean_gram", "dim": space.dim}
    return {
        "kind": "white_polynomial",
        "degree": space.degree,
        "points": list(space.points),
    }


_SOLVER_KEYS = {"max_iters", "tol", "restarts", "seed", "step0"}


def solver_from_dict(obj: Any, field: str = "solver") -> SolverConfig:
    if obj is None:
        return SolverConfig()
    if not isinstance(obj, dict):
        raise ValidationError(field, f"expected an object, got {type(obj).__name__}")
    for key in obj:
        if key not in _SOLVER_KEYS:
            raise ValidationError(f"{field}.{key}", "unknown solver option")
    kwargs: dict[str, Any] = {}
    for key in ("max_iters", "restarts", "seed"):
        if key in obj:
            kwargs[key] = _as_int(obj[key], f"{field}.{key}")
    for key in ("tol", "step0"):
        if key in obj:
            kwargs[key] = _as_number(obj[key], f"{field}.{key}")
    try:
        return SolverConfig(**kwargs)
    except ValueError as exc:
        raise ValidationError(field, str(exc)) from exc


def solver_to_dict(cfg: SolverConfig) -> dict:
    return {
        "max_iters": cfg.max_iters,
        "tol": cfg.tol,
        "restarts": cfg.restarts,
        "seed": cfg.seed,
        "step0": cfg.step0,
    }


def problem_from_dict(obj: Any, field: str = "") -> tuple[SimultaneousProblem, Optional[dict]]:
    """Build a problem from a parsed file; returns (problem, blend section or None)."""
    prefix = f"{field}." if field else ""
    space = space_from_dict(_require(obj, "space", field or "problem"), f"{prefix}space")
    targets = _as_vector_list(_require(obj, "targets", field or "problem"), f"{prefix}targets")
    basis_raw = _as_vector_list(
        _require(obj, "g_basis", field or "problem"), f"{prefix}g_basis", allow_empty=True
    )
    b = _as_vector(_require(obj, "b", field or "problem"), f"{prefix}b")
    solver = solver_from_dict(obj.get("solver"), f"{prefix}solver")
    try:
        basis = SubspaceBasis(space, basis_raw)
        problem = SimultaneousProblem(space, targets, basis, b, solver)
    except ValueError as exc:
        raise ValidationError(field or "problem", str(exc)) from exc

    blend = obj.get("blend")
    if blend is not None:
        if not isinstance(blend, dict):
            raise ValidationError(f"{prefix}blend", "expected an object")
        blend_parsed: dict[str, Any] = {
            "g1": _as_vector(_require(blend, "g1", f"{prefix}blend"), f"{prefix}blend.g1"),
            "g2": _as_vector(_require(blend, "g2", f"{prefix}blend"), f"{prefix}blend.g2"),
        }
        if "lambdas" in blend:
            lams = blend["lambdas"]
            if not isinstance(lams, list) or not lams:
                raise ValidationError(f"{prefix}blend.lambdas", "expected a nonempty list")
            blend_parsed["lambdas"] = [
                _as_number(v, f"{prefix}blend.lambdas[{i}]") for i, v in enumerate(lams)
            ]
        blend = blend_parsed
    return problem, blend


def sequence_from_dict(
    obj: Any, field: str = ""
) -> tuple[SpaceSpec, SequencePrefix, Optional[list[float]], Optional[list[list[float]]]]:
    """Build a sequence prefix; returns (space, prefix, limit or None, probe_dirs or None)."""
    prefix = f"{field}." if field else ""
    space = space_from_dict(_require(obj, "space", field or "sequence"), f"{prefix}space")
    elements = _as_vector_list(
        _require(obj, "elements", field or "sequence"), f"{prefix}elements"
    )
    probes = obj.get("probes")
    probe_y = probe_z = None
    if probes is not None:
        if not isinstance(probes, dict):
            raise ValidationError(f"{prefix}probes", "expected an object with y and z")
        if "y" in probes:
            probe_y = _as_vector(probes["y"], f"{prefix}probes.y")
        if "z" in probes:
            probe_z = _as_vector(probes["z"], f"{prefix}probes.z")
    limit = None
    if "limit" in obj:
        limit = _as_vector(obj["limit"], f"{prefix}limit")
    probe_dirs = None
    if "probe_dirs" in obj:
        probe_dirs = _as_vector_list(obj["probe_dirs"], f"{prefix}probe_dirs")
    try:
        seq = SequencePrefix(space, elements, probe_y=probe_y, probe_z=probe_z)
    except ValueError as exc:
        raise ValidationError(field or "sequence", str(exc)) from exc
    return space, seq, limit, probe_dirs


def apply_solver_overrides(cfg: SolverConfig, **overrides: Any) -> SolverConfig:
    """Replace solver options with explicitly provided flag values."""
    provided = {k: v for k, v in overrides.items() if v is not None}
    return replace(cfg, **provided) if provided else cfg
