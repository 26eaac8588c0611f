"""Exception types shared across the package."""


class QRGError(Exception):
    """Base class for all library errors."""


class DomainError(QRGError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class RangeError(QRGError, OverflowError):
    """A result does not fit the representable range (e.g. 64-bit sizes)."""


class FlowDivergenceError(QRGError, ArithmeticError):
    """The coupling flow left the floating-point range.

    ``iteration`` is the 1-based RG step at which the iterate became
    non-finite.
    """

    def __init__(self, iteration: int, g_start: float):
        self.iteration = iteration
        self.g_start = g_start
        super().__init__(
            f"coupling flow diverged to a non-finite value at iteration "
            f"{iteration} (started from g={g_start!r})"
        )


class StructuralError(QRGError, RuntimeError):
    """A structural assumption failed (broken map, non-repulsive fixed point)."""


class NumericalConsistencyError(QRGError, ArithmeticError):
    """A quantity violated a numerical invariant beyond roundoff tolerance."""


class BoundaryExtremumError(QRGError, RuntimeError):
    """The requested extremum sits on the sweep boundary; widen the sweep."""
