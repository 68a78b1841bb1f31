"""Command-line interface.

Subcommands: compute (one time point), sweep (time grid to CSV/JSON),
verify (randomized invariant batches), compare (phase definitions
against the brute-force holonomy). Exit codes: 0 success, 1
verification failure, 2 input error, 3 undefined phase.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .angles import circular_distance
from .errors import GeometricPhaseError, VanishingOverlap
from .linalg import frobenius
from .oracles import PathSampling, RandomInstanceSpec, discrete_uhlmann_holonomy, \
    parallel_residual, random_instance
from .phases import PreparedProblem, evolution_operator, phase_report, \
    prepare_from_spectrum, prepare_problem, total_geometric_phase, uhlmann_trace_phase
from .serialize import load_problem, report_to_dict, sweep_to_csv, sweep_to_json
from .states import Problem, Spectrum
from .tolerances import DEFAULT_TOL
from .transport import ancilla_equation_residual

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_UNDEFINED_PHASE = 3

VERIFY_TIMES = (0.3, 1.7, 5.0)


def _fail_input(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT_ERROR


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> Problem | None:
    try:
        return load_problem(path)
    except (GeometricPhaseError, ValueError, OSError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return None


def cmd_compute(args) -> int:
    if not math.isfinite(args.time):
        return _fail_input(f"--time must be finite, got {args.time}")
    problem = _load(args.input)
    if problem is None:
        return EXIT_INPUT_ERROR
    report = phase_report(prepare_problem(problem), args.time)
    _emit(json.dumps(report_to_dict(report), indent=2) + "\n", args.output)
    undefined = any(math.isnan(x)
                    for x in (report.gamma_total, report.uhlmann, report.sjoqvist))
    return EXIT_UNDEFINED_PHASE if undefined else EXIT_OK


def cmd_sweep(args) -> int:
    if args.steps < 2:
        return _fail_input(f"--steps must be at least 2, got {args.steps}")
    if not (math.isfinite(args.t_start) and math.isfinite(args.t_end)):
        return _fail_input("--t-start and --t-end must be finite")
    if not args.t_start < args.t_end:
        return _fail_input(
            f"--t-start must be below --t-end, got {args.t_start} >= {args.t_end}"
        )
    problem = _load(args.input)
    if problem is None:
        return EXIT_INPUT_ERROR
    prep = prepare_problem(problem)
    grid = np.linspace(args.t_start, args.t_end, args.steps)
    reports = [phase_report(prep, float(t)) for t in grid]
    text = sweep_to_csv(reports) if args.format == "csv" else sweep_to_json(reports)
    _emit(text, args.output)
    return EXIT_OK


def _verify_instance(prep: PreparedProblem, tol: float) -> str | None:
    """Run the invariant checks on one prepared instance; return the
    violated invariant's description or None."""
    amps = prep.spectrum.amps
    resid = ancilla_equation_residual(amps, prep.h_prime, prep.frame.k)
    bound = tol * max(1.0, frobenius(prep.h_prime))
    if resid > bound:
        return f"ancilla-equation residual {resid:.3e} > {bound:.3e}"
    for t in VERIFY_TIMES:
        u_t = evolution_operator(prep, t)
        gamma = total_geometric_phase(t, prep.frame, u_t, amps)
        trace_phase = uhlmann_trace_phase(t, u_t, amps, prep.frame.k)
        dist = circular_distance(gamma, trace_phase)
        if dist > tol:
            return (f"total phase vs purification trace phase differ by "
                    f"{dist:.3e} > {tol:.3e} at t={t}")
    for j in range(prep.dim):
        if prep.weights[j] <= DEFAULT_TOL.weight:
            continue
        resid = parallel_residual(j, VERIFY_TIMES[0], 1e-6, prep.frame, amps,
                                  prep.h_prime)
        if resid > 1e-6:
            return f"parallel-transport residual {resid:.3e} > 1e-6 for component {j}"
    return None


def _verify_gauge(problem: Problem, prep: PreparedProblem, rng, tol: float,
                  t: float, gamma_ref: float) -> str | None:
    theta = rng.uniform(0.0, 2.0 * np.pi, size=prep.dim)
    spectrum = prep.spectrum
    rephased = Spectrum(spectrum.lambdas, spectrum.basis_e * np.exp(1j * theta),
                        spectrum.amps, spectrum.degenerate)
    prep2 = prepare_from_spectrum(problem, rephased)
    gamma2 = total_geometric_phase(t, prep2.frame, evolution_operator(prep2, t),
                                   prep2.spectrum.amps)
    dist = circular_distance(gamma_ref, gamma2)
    if dist > tol:
        return f"gauge rephasing moved the total phase by {dist:.3e} > {tol:.3e}"
    return None


def cmd_verify(args) -> int:
    if args.trials < 1:
        return _fail_input(f"--trials must be at least 1, got {args.trials}")
    if args.dim < 1:
        return _fail_input(f"--dim must be at least 1, got {args.dim}")
    rng = np.random.default_rng(args.seed)
    t_gauge = VERIFY_TIMES[1]
    for _ in range(args.trials):
        inst_seed = int(rng.integers(0, 2**62))
        problem = random_instance(RandomInstanceSpec(args.dim, args.dim, inst_seed))
        prep = prepare_problem(problem)
        try:
            failure = _verify_instance(prep, args.tol)
            if failure is None:
                gamma_ref = total_geometric_phase(
                    t_gauge, prep.frame, evolution_operator(prep, t_gauge),
                    prep.spectrum.amps)
                failure = _verify_gauge(problem, prep, rng, args.tol, t_gauge,
                                        gamma_ref)
        except GeometricPhaseError as exc:
            failure = str(exc)
        if failure is not None:
            print(f"verification failed for instance seed {inst_seed}: {failure}")
            print(f"passed 0 of {args.trials} batches before first failure")
            return EXIT_VERIFY_FAILED
    print(f"verified {args.trials}/{args.trials} random instances (dim {args.dim}): "
          f"ancilla equation, phase identity, parallel transport, gauge invariance "
          f"all within tolerance {args.tol:.1e}")
    return EXIT_OK


def cmd_compare(args) -> int:
    if args.holonomy_steps < 256:
        return _fail_input(
            f"--holonomy-steps must be at least 256, got {args.holonomy_steps}"
        )
    if not (math.isfinite(args.time) and args.time > 0):
        return _fail_input(f"--time must be finite and positive, got {args.time}")
    problem = _load(args.input)
    if problem is None:
        return EXIT_INPUT_ERROR
    report = phase_report(prepare_problem(problem), args.time)
    try:
        holonomy = discrete_uhlmann_holonomy(
            problem, PathSampling(args.time, args.holonomy_steps))
    except VanishingOverlap:
        holonomy = math.nan
    values = {
        "gamma_total": report.gamma_total,
        "uhlmann": report.uhlmann,
        "sjoqvist": report.sjoqvist,
        "holonomy": holonomy,
    }
    names = list(values)
    distances = {}
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            key = f"{a}_vs_{b}"
            if math.isnan(values[a]) or math.isnan(values[b]):
                distances[key] = None
            else:
                distances[key] = circular_distance(values[a], values[b])
    out = {
        "t": args.time,
        **{k: (None if math.isnan(v) else v) for k, v in values.items()},
        "holonomy_steps": args.holonomy_steps,
        "overlap_magnitude": report.overlap_magnitude,
        "pairwise_distances": distances,
    }
    _emit(json.dumps(out, indent=2) + "\n", args.output)
    undefined = any(math.isnan(v) for v in values.values())
    return EXIT_UNDEFINED_PHASE if undefined else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedphase",
        description="Geometric phases of mixed states under unitary evolution",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="all phases of a problem file at one time")
    p.add_argument("--input", required=True, help="problem file (JSON)")
    p.add_argument("--time", "-t", type=float, required=True, help="evolution time")
    p.add_argument("--output", help="output path (default: stdout)")
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("sweep", help="phases over a uniform time grid")
    p.add_argument("--input", required=True)
    p.add_argument("--t-start", type=float, required=True)
    p.add_argument("--t-end", type=float, required=True)
    p.add_argument("--steps", type=int, required=True, help="grid points (>= 2)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", help="output path (default: stdout)")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("verify", help="randomized invariant verification batches")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("compare",
                       help="phase definitions vs the brute-force holonomy")
    p.add_argument("--input", required=True)
    p.add_argument("--time", "-t", type=float, required=True)
    p.add_argument("--holonomy-steps", type=int, default=4096,
                   help="discretization steps (>= 256)")
    p.add_argument("--output", help="output path (default: stdout)")
    p.set_defaults(handler=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
