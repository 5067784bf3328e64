"""Exceptions raised by circlespace.

Every domain failure derives from ``CircleSpaceError`` so the console can map
it onto exit code 1.
"""


class CircleSpaceError(ValueError):
    """Base class for all domain errors."""


class ConfigError(CircleSpaceError):
    """Invalid run configuration."""


class NonUnitRotor(CircleSpaceError):
    """A rotor whose norm form differs from one."""


class NonpositiveRadiusParameter(CircleSpaceError):
    """A circle radius R0 or R1 that is zero or negative."""


class LightConePoint(CircleSpaceError):
    """A point on (or outside) the light cone of the temporal plane."""


class NonpositiveMass(CircleSpaceError):
    """A rest mass that is zero or negative."""


class DispersionViolation(CircleSpaceError):
    """Plane-wave parameters off the mass shell."""

    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"Dispersion relation violated, residual {residual:.3e}")


class SuperluminalSpeed(CircleSpaceError):
    """A speed with |v| >= 1."""


class ZeroArcElement(CircleSpaceError):
    """An arc element that must be nonzero is zero."""


class SpeedDomain(CircleSpaceError):
    """alpha >= n_theta, so the orbital speed would reach c."""


class InvalidQuantumNumber(CircleSpaceError):
    """A quantum number outside its admitted range."""


class ZeroCharge(CircleSpaceError):
    """A vanishing charge where a division by e is required."""


class OutOfRange(CircleSpaceError):
    """An angle or potential too large to evaluate in floating point."""
