"""Problem-file and report serialization.

Problem files are JSON with keys dimension, rho, hamiltonian; matrices
are row-major nested arrays and every complex number is a two-element
[re, im] array. Reports serialize to JSON (undefined phases as null) or
CSV sweep tables (undefined phases as the literal nan).
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import GeometricPhaseError
from .phases import PhaseReport
from .states import Problem, validate_density


class ProblemFileError(GeometricPhaseError):
    """Problem file does not match the expected schema."""


def _matrix_from_pairs(obj, n: int, name: str) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != n:
        raise ProblemFileError(
            f"{name}: expected {n} rows to match dimension {n}, "
            f"got {len(obj) if isinstance(obj, list) else type(obj).__name__}"
        )
    out = np.zeros((n, n), dtype=complex)
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != n:
            raise ProblemFileError(
                f"{name}: row {i} must have {n} entries, "
                f"got {len(row) if isinstance(row, list) else type(row).__name__}"
            )
        for j, entry in enumerate(row):
            if (not isinstance(entry, (list, tuple)) or len(entry) != 2
                    or not all(isinstance(x, (int, float)) for x in entry)):
                raise ProblemFileError(
                    f"{name}[{i}][{j}]: complex entries must be [re, im] pairs"
                )
            out[i, j] = complex(entry[0], entry[1])
    if not np.isfinite(out).all():
        raise ProblemFileError(f"{name}: non-finite entries")
    return out


def _matrix_to_pairs(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m, complex)]


def problem_from_dict(data: dict) -> Problem:
    """Parse and validate a problem-file dictionary. Shape errors raise
    ProblemFileError; density-matrix invariant violations propagate from
    validation with the violated invariant named."""
    if not isinstance(data, dict):
        raise ProblemFileError("problem file must be a JSON object")
    for key in ("dimension", "rho", "hamiltonian"):
        if key not in data:
            raise ProblemFileError(f"missing required key: {key}")
    n = data["dimension"]
    if not isinstance(n, int) or n < 1:
        raise ProblemFileError(f"dimension must be a positive integer, got {n!r}")
    rho = _matrix_from_pairs(data["rho"], n, "rho")
    ham = _matrix_from_pairs(data["hamiltonian"], n, "hamiltonian")
    return Problem(validate_density(rho), ham)


def problem_to_dict(problem: Problem) -> dict:
    return {
        "dimension": problem.dim,
        "rho": _matrix_to_pairs(problem.rho0.mat),
        "hamiltonian": _matrix_to_pairs(problem.hamiltonian_lab),
    }


def load_problem(path) -> Problem:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ProblemFileError(f"invalid JSON: {exc}") from exc
    return problem_from_dict(data)


def save_problem(problem: Problem, path) -> None:
    """Canonical serializer; floats round-trip bitwise through JSON."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(problem_to_dict(problem), fh, indent=2)
        fh.write("\n")


def _nullable(x: float):
    return None if math.isnan(x) else float(x)


def report_warnings(report: PhaseReport) -> list[str]:
    warnings = []
    if report.degenerate_spectrum_warning:
        warnings.append(
            "spectrum is (near-)degenerate: eigenbasis-dependent quantities "
            "are not unique within degenerate blocks"
        )
    for name in ("gamma_total", "uhlmann", "sjoqvist"):
        if math.isnan(getattr(report, name)):
            warnings.append(
                f"{name} undefined at a nodal point "
                f"(overlap magnitude {report.overlap_magnitude:.3e})"
            )
    return warnings


def report_to_dict(report: PhaseReport) -> dict:
    return {
        "t": float(report.t),
        "gamma_total": _nullable(report.gamma_total),
        "uhlmann": _nullable(report.uhlmann),
        "sjoqvist": _nullable(report.sjoqvist),
        "overlap_magnitude": float(report.overlap_magnitude),
        "components": [
            {
                "j": c.j,
                "q": c.q,
                "visibility": c.visibility,
                "gamma": c.gamma,
                "dyn_phase": c.dyn_phase,
                "total_phase": c.total_phase,
            }
            for c in report.components
        ],
        "warnings": report_warnings(report),
    }


def sweep_header(dim: int) -> str:
    cols = ["t", "gamma_total", "uhlmann", "sjoqvist", "overlap_magnitude"]
    for j in range(dim):
        cols += [f"q_{j}", f"nu_{j}", f"gamma_{j}"]
    return ",".join(cols)


def sweep_row(report: PhaseReport) -> str:
    vals = [report.t, report.gamma_total, report.uhlmann, report.sjoqvist,
            report.overlap_magnitude]
    for c in report.components:
        vals += [c.q, c.visibility, c.gamma]
    return ",".join(str(float(v)) for v in vals)


def sweep_to_csv(reports) -> str:
    lines = [sweep_header(len(reports[0].components))]
    lines += [sweep_row(r) for r in reports]
    return "\n".join(lines) + "\n"


def sweep_to_json(reports) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n"
