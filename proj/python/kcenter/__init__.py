"""k-center problems under Minkowski gauges.

Instances are dicts in the same layout as the JSON instance files::

    {"dimension": 2, "points": [[0, 0], [1, 0]], "gauge": {"kind": "euclidean"}}

A path to such a file works too. Results come back as dicts with the same
fields as the CLI reports (1-based indices).
"""

from __future__ import annotations

import json
import os
from typing import Any, Sequence

from . import _kcenter

__version__ = _kcenter.__version__

__all__ = [
    "KCenterError",
    "bound2",
    "certify",
    "compactness",
    "instance",
    "objective",
    "one_center",
    "probe",
    "solve",
    "validate",
]


class KCenterError(ValueError):
    """Raised for invalid input or solver failures; `code` names the cause."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _kcenter.KCenterError as exc:
        text = str(exc)
        code, _, detail = text.partition(": ")
        raise KCenterError(code, detail or text) from None


def _instance_text(inst: Any) -> str:
    if isinstance(inst, (str, os.PathLike)) and os.path.exists(inst):
        with open(inst, encoding="utf-8") as fh:
            return fh.read()
    if isinstance(inst, str):
        return inst
    return json.dumps(inst)


def _centers_text(centers: Sequence[Sequence[float]]) -> str:
    return json.dumps([[float(c) for c in row] for row in centers])


def instance(points: Sequence[Sequence[float]], gauge: dict | None = None) -> dict:
    """Build an instance dict; the gauge defaults to the Euclidean norm."""
    pts = [[float(c) for c in p] for p in points]
    return {"dimension": len(pts[0]) if pts else 0, "points": pts, "gauge": gauge or {"kind": "euclidean"}}


def validate(inst) -> dict:
    return json.loads(_call(_kcenter.validate, _instance_text(inst)))


def objective(inst, centers) -> float:
    return _call(_kcenter.objective, _instance_text(inst), _centers_text(centers))


def solve(inst, k: int, method: str = "exact", restarts: int = 20, seed: int = 0, tol: float = 1e-9,
          eps: float = 1e-6, force: bool = False, workers: int = 1) -> dict:
    return json.loads(_call(_kcenter.solve, _instance_text(inst), k, method, restarts, seed, tol, eps, force,
                            workers))


def one_center(inst, eps: float = 1e-6) -> dict:
    return json.loads(_call(_kcenter.one_center, _instance_text(inst), eps))


def certify(inst, centers, tol: float = 1e-6) -> dict:
    return json.loads(_call(_kcenter.certify, _instance_text(inst), _centers_text(centers), tol))


def compactness(inst, k: int, eps: float = 1e-6, force: bool = False) -> dict:
    return json.loads(_call(_kcenter.compactness, _instance_text(inst), k, eps, force))


def probe(inst, centers, radius: float = 1e-3, samples: int = 10000, seed: int = 0) -> dict:
    return json.loads(_call(_kcenter.probe, _instance_text(inst), _centers_text(centers), radius, samples, seed))


def bound2(inst, eps: float = 1e-6, seed: int = 0) -> dict:
    return json.loads(_call(_kcenter.bound2, _instance_text(inst), eps, seed))
