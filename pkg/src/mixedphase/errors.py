"""Exception types raised across the package."""


class GeometricPhaseError(Exception):
    """Base class for every error this package raises deliberately."""


class NotHermitian(GeometricPhaseError):
    """Matrix failed the Hermitian symmetry check."""

    def __init__(self, residual: float, tol: float):
        self.residual = residual
        super().__init__(
            f"not Hermitian: ||a - a^dag||_F = {residual:.3e} exceeds {tol:.1e}"
        )


class NotPSD(GeometricPhaseError):
    """Matrix has an eigenvalue below the positive-semidefinite floor."""

    def __init__(self, min_eigenvalue: float, tol: float):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(
            f"not positive semidefinite: smallest eigenvalue {min_eigenvalue:.3e} "
            f"is below -{tol:.1e}"
        )


class NotUnitTrace(GeometricPhaseError):
    """Density matrix trace deviates from one."""

    def __init__(self, trace: complex, tol: float):
        self.trace = trace
        super().__init__(
            f"trace is not one: |Tr - 1| = {abs(trace - 1.0):.3e} exceeds {tol:.1e}"
        )


class DimensionMismatch(GeometricPhaseError):
    """Operands do not share the required dimension."""


class IndexOutOfRange(GeometricPhaseError):
    """Component index outside 0..n-1."""


class VanishingVisibility(GeometricPhaseError):
    """Total overlap magnitude too small for the phase to be defined."""

    def __init__(self, magnitude: float):
        self.magnitude = magnitude
        super().__init__(
            f"phase undefined: overlap magnitude {magnitude:.3e} is at a nodal point"
        )


class VanishingOverlap(GeometricPhaseError):
    """Endpoint overlap too small for a phase to be extracted."""

    def __init__(self, magnitude: float):
        self.magnitude = magnitude
        super().__init__(
            f"overlap magnitude {magnitude:.3e} too small; endpoints nearly orthogonal"
        )
