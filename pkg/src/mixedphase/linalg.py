"""Dense complex-matrix kernel.

Hermitian eigendecompositions, unitary evolution operators, polar
factors, and PSD square roots, shared by every other module. All
functions are pure and never mutate their inputs; sizes are small
(n up to a few dozen), so everything is done densely via LAPACK.
"""

from __future__ import annotations

import numpy as np

from .errors import NotHermitian, NotPSD
from .tolerances import DEFAULT_TOL


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def frobenius(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, "fro"))


def hermitian_defect(a: np.ndarray) -> float:
    """||a - a^dag||_F, zero iff a is exactly Hermitian."""
    return frobenius(a - dagger(a))


def as_square(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrix contains non-finite entries")
    return a


def require_hermitian(a, tol: float = DEFAULT_TOL.hermiticity) -> np.ndarray:
    """Return a as a complex array, raising NotHermitian if it is not
    symmetric within tol (relative to max(1, ||a||_F))."""
    a = as_square(a)
    defect = hermitian_defect(a)
    if defect > tol * max(1.0, frobenius(a)):
        raise NotHermitian(defect, tol)
    return a


def hermitian_eig(a, tol: float = DEFAULT_TOL.hermiticity):
    """Eigendecomposition of a Hermitian matrix.

    Returns (w, q): eigenvalues w ascending, eigenvector columns q
    orthonormal, with a @ q = q @ diag(w) up to roundoff. The input is
    symmetrized before the solve so tiny anti-Hermitian noise cannot
    leak into complex eigenvalues.
    """
    a = require_hermitian(a, tol)
    w, q = np.linalg.eigh((a + dagger(a)) / 2.0)
    return w, q


def unitary_from_hamiltonian(h, t: float, tol: float = DEFAULT_TOL.hermiticity) -> np.ndarray:
    """Evolution operator exp(-i h t) for Hermitian h (hbar = 1).

    Built from the eigendecomposition, so the result is unitary to
    roundoff for any t; no scaling-and-squaring is involved.
    """
    if not np.isfinite(t):
        raise ValueError(f"time must be finite, got {t}")
    w, q = hermitian_eig(h, tol)
    return (q * np.exp(-1j * w * t)) @ dagger(q)


def polar_unitary(a) -> np.ndarray:
    """Unitary factor u of the left polar form a = p @ u with p PSD.

    Computed as x @ yh from the SVD a = x @ diag(s) @ yh. For singular a
    the SVD convention fixes the result deterministically.
    """
    a = as_square(a)
    x, _, yh = np.linalg.svd(a)
    return x @ yh


def psd_sqrt(a, tol: float = DEFAULT_TOL.hermiticity,
             psd_tol: float = DEFAULT_TOL.psd) -> np.ndarray:
    """Hermitian PSD square root of a PSD matrix.

    Eigenvalues in [-psd_tol, 0) are clamped to zero; anything below
    -psd_tol raises NotPSD.
    """
    w, q = hermitian_eig(a, tol)
    if w.size and w[0] < -psd_tol:
        raise NotPSD(float(w[0]), psd_tol)
    w = np.clip(w, 0.0, None)
    return (q * np.sqrt(w)) @ dagger(q)
