"""Phase engine.

Per-component geometric, dynamical, and total phases with visibilities;
their weighted sum, the total geometric phase of the evolving ensemble;
the purification trace phase (Uhlmann's phase, computed by an
independent route through exp(-iKt)); and the interferometric
eigenbasis phase (Sjoqvist's phase). The first two are equal for every
instance, which the test suite exploits as a two-path cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange, VanishingVisibility
from .linalg import unitary_from_hamiltonian
from .states import Problem, Spectrum, hamiltonian_in_eigenbasis, spectral_decompose
from .tolerances import DEFAULT_TOL
from .transport import AncillaFrame, component_weights, diagonalizing_frame, \
    solve_ancilla_hamiltonian


@dataclass(frozen=True)
class ComponentReport:
    """Phases of one pure component of the ensemble.

    gamma and total_phase are reduced to (-pi, pi]; dyn_phase = kappa_j*t
    is reported unwrapped. Components with weight below the weight
    tolerance carry the sentinel convention visibility = gamma =
    total_phase = 0.
    """

    j: int
    q: float
    visibility: float
    gamma: float
    dyn_phase: float
    total_phase: float


@dataclass(frozen=True)
class PhaseReport:
    """All phases of one instance at one time.

    Undefined phases (overlap magnitude at a nodal point) are stored as
    nan with overlap_magnitude still recorded.
    """

    t: float
    gamma_total: float
    uhlmann: float
    sjoqvist: float
    overlap_magnitude: float
    components: tuple[ComponentReport, ...]
    degenerate_spectrum_warning: bool


@dataclass(frozen=True)
class PreparedProblem:
    """A problem with its eigenbasis data and ancilla frame solved,
    ready for phase evaluation at any time."""

    problem: Problem
    spectrum: Spectrum
    h_prime: np.ndarray
    frame: AncillaFrame
    weights: np.ndarray

    @property
    def dim(self) -> int:
        return self.problem.dim


def prepare_from_spectrum(problem: Problem, spectrum: Spectrum) -> PreparedProblem:
    """Build the ancilla frame and weights for a given spectral
    decomposition (callers can rephase or permute the eigenbasis)."""
    h_prime = hamiltonian_in_eigenbasis(problem, spectrum)
    k = solve_ancilla_hamiltonian(spectrum.amps, h_prime)
    frame = diagonalizing_frame(k)
    weights = component_weights(spectrum.amps, frame.z)
    return PreparedProblem(problem, spectrum, h_prime, frame, weights)


def prepare_problem(problem: Problem) -> PreparedProblem:
    return prepare_from_spectrum(problem, spectral_decompose(problem.rho0))


def evolution_operator(prep: PreparedProblem, t: float) -> np.ndarray:
    """exp(-i h' t) in the state eigenbasis."""
    return unitary_from_hamiltonian(prep.h_prime, t)


def overlap_kernel(j: int, u_t, amps, z) -> complex:
    """m_j(t) = <e_j| z* C u_t C z^T |e_j>, the unnormalized overlap of
    component j between times 0 and t. m_j(0) = q_j and |m_j| <= q_j."""
    amps = np.asarray(amps, dtype=float)
    if not 0 <= j < amps.size:
        raise IndexOutOfRange(f"component {j} outside 0..{amps.size - 1}")
    w = amps * np.asarray(z)[j, :]
    return complex(np.vdot(w, np.asarray(u_t) @ w))


def _all_overlaps(u_t, amps, z) -> np.ndarray:
    w = np.asarray(z) * np.asarray(amps, dtype=float)  # row j: component j at t=0
    return np.einsum("jk,kl,jl->j", w.conj(), np.asarray(u_t), w)


def total_overlap(t: float, frame: AncillaFrame, u_t, amps) -> complex:
    """sum_j m_j(t) e^{-i kappa_j t} = q_j nu_j e^{i gamma_j} summed:
    the complex number whose argument is the total geometric phase."""
    m = _all_overlaps(u_t, amps, frame.z)
    return complex((m * np.exp(-1j * frame.kappas * t)).sum())


def component_report(j: int, t: float, frame: AncillaFrame, weights, u_t, amps,
                     weight_tol: float = DEFAULT_TOL.weight) -> ComponentReport:
    """Weight, visibility, and geometric/dynamical/total phase of one
    component. gamma == total_phase - dyn_phase modulo 2*pi."""
    q_j = float(np.asarray(weights)[j])
    dyn = float(frame.kappas[j]) * t
    if q_j <= weight_tol:
        return ComponentReport(j, q_j, 0.0, 0.0, dyn, 0.0)
    m = overlap_kernel(j, u_t, amps, frame.z)
    gamma = float(np.angle(m * np.exp(-1j * dyn)))
    return ComponentReport(j, q_j, abs(m) / q_j, gamma, dyn, float(np.angle(m)))


def total_geometric_phase(t: float, frame: AncillaFrame, u_t, amps,
                          overlap_tol: float = DEFAULT_TOL.overlap) -> float:
    """Total geometric phase arg sum_j q_j nu_j e^{i gamma_j}, evaluated
    as arg sum_j m_j(t) e^{-i kappa_j t} (identical, numerically
    stabler). Raises VanishingVisibility at nodal points."""
    total = total_overlap(t, frame, u_t, amps)
    if abs(total) <= overlap_tol:
        raise VanishingVisibility(abs(total))
    return float(np.angle(total))


def uhlmann_trace_phase(t: float, u_t, amps, ancilla_h,
                        overlap_tol: float = DEFAULT_TOL.overlap) -> float:
    """arg Tr[C u_t C v_t^T] with v_t = exp(-i k t): the holonomy phase
    of the parallel purification path. Equals total_geometric_phase but
    is computed without the diagonalizing frame."""
    v_t = unitary_from_hamiltonian(ancilla_h, t)
    c = np.diag(np.asarray(amps, dtype=float))
    tr = complex(np.trace(c @ np.asarray(u_t) @ c @ v_t.T))
    if abs(tr) <= overlap_tol:
        raise VanishingVisibility(abs(tr))
    return float(np.angle(tr))


def sjoqvist_phase(t: float, spectrum: Spectrum, u_t, h_prime,
                   overlap_tol: float = DEFAULT_TOL.overlap) -> float:
    """Interferometric phase arg sum_j lambda_j <e_j|u_t|e_j> e^{i h'_jj t}:
    the ancilla keeps the original eigenbasis and only cancels the
    diagonal dynamical phases. Agrees with the total geometric phase for
    pure states only."""
    u_t = np.asarray(u_t)
    phases = np.exp(1j * np.diag(np.asarray(h_prime)).real * t)
    total = complex((spectrum.lambdas * np.diag(u_t) * phases).sum())
    if abs(total) <= overlap_tol:
        raise VanishingVisibility(abs(total))
    return float(np.angle(total))


def phase_report(prep: PreparedProblem, t: float) -> PhaseReport:
    """Evaluate every phase and per-component report at time t.

    Nodal (undefined) phases come back as nan rather than the argument
    of numerical noise; overlap_magnitude is always recorded.
    """
    u_t = evolution_operator(prep, t)
    amps = prep.spectrum.amps
    components = tuple(
        component_report(j, t, prep.frame, prep.weights, u_t, amps)
        for j in range(prep.dim)
    )
    total = total_overlap(t, prep.frame, u_t, amps)
    magnitude = abs(total)
    gamma_total = float(np.angle(total)) if magnitude > DEFAULT_TOL.overlap else math.nan
    try:
        uhlmann = uhlmann_trace_phase(t, u_t, amps, prep.frame.k)
    except VanishingVisibility:
        uhlmann = math.nan
    try:
        sjoqvist = sjoqvist_phase(t, prep.spectrum, u_t, prep.h_prime)
    except VanishingVisibility:
        sjoqvist = math.nan
    return PhaseReport(
        t=t,
        gamma_total=gamma_total,
        uhlmann=uhlmann,
        sjoqvist=sjoqvist,
        overlap_magnitude=magnitude,
        components=components,
        degenerate_spectrum_warning=prep.spectrum.degenerate,
    )
