"""Reflector matrices and the versatile Dirac equation (D - ieA~)Φ = ΦM~.

A reflector is the 2x2 block matrix [[0, top], [bottom, 0]] of biquaternions.
The product of two reflectors is block diagonal (``DiagPair``); a diagonal pair
times a reflector is again a reflector.

Operator ordering in the Dirac equation is fixed by the block layout: the
potential multiplies the components of Φ on the left, the mass term on the
right. Equating blocks gives the two component equations

    (D  - ieA~ ) φ2 = -φ1 M~‡
    (D‡ - ieA~‡) φ1 =  φ2 M~
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .biquaternion import DEFAULT_ATOL, UNITS, ZERO, Biquaternion, conj, norm_form
from .errors import NonUnitRotor

Field = Callable[[NDArray[np.float64]], Biquaternion]
Derivative = Callable[[Field, NDArray[np.float64], int], Biquaternion]

# The temporal term of D differentiates with respect to x0/i.
TEMPORAL_FACTOR = 1j


@dataclass(frozen=True)
class DiagPair:
    """The block-diagonal matrix [[upper, 0], [0, lower]]."""

    upper: Biquaternion
    lower: Biquaternion

    def __add__(self, other: DiagPair) -> DiagPair:
        return DiagPair(self.upper + other.upper, self.lower + other.lower)

    def __sub__(self, other: DiagPair) -> DiagPair:
        return DiagPair(self.upper - other.upper, self.lower - other.lower)

    def __mul__(self, other: DiagPair | Reflector | complex) -> DiagPair | Reflector:
        if isinstance(other, Reflector):
            return Reflector(self.upper * other.top, self.lower * other.bottom)
        if isinstance(other, DiagPair):
            return DiagPair(self.upper * other.upper, self.lower * other.lower)
        if isinstance(other, (int, float, complex)):
            return DiagPair(self.upper * other, self.lower * other)
        return NotImplemented

    def max_abs(self) -> float:
        return float(max(np.max(np.abs(self.upper.c)), np.max(np.abs(self.lower.c))))

    def is_identity(self, atol: float = DEFAULT_ATOL) -> bool:
        return self.upper.allclose(UNITS[0], atol) and self.lower.allclose(UNITS[0], atol)

    def as_matrix(self) -> NDArray[np.complex128]:
        z = np.zeros((2, 2), dtype=np.complex128)
        return np.block([[self.upper.as_matrix(), z], [z, self.lower.as_matrix()]])


@dataclass(frozen=True)
class Reflector:
    """The off-diagonal block matrix [[0, top], [bottom, 0]]."""

    top: Biquaternion
    bottom: Biquaternion

    @classmethod
    def of(cls, q: Biquaternion) -> Reflector:
        """The reflector q(q, q‡) used for basis units, D, A~ and rotors."""
        return cls(q, conj(q))

    def __add__(self, other: Reflector) -> Reflector:
        return Reflector(self.top + other.top, self.bottom + other.bottom)

    def __sub__(self, other: Reflector) -> Reflector:
        return Reflector(self.top - other.top, self.bottom - other.bottom)

    def __mul__(self, other: Reflector | DiagPair | complex) -> DiagPair | Reflector:
        if isinstance(other, Reflector):
            return reflector_mul(self, other)
        if isinstance(other, DiagPair):
            return Reflector(self.top * other.lower, self.bottom * other.upper)
        if isinstance(other, (int, float, complex)):
            return Reflector(self.top * other, self.bottom * other)
        return NotImplemented

    def __rmul__(self, other: complex) -> Reflector:
        if isinstance(other, (int, float, complex)):
            return Reflector(other * self.top, other * self.bottom)
        return NotImplemented

    def max_abs_diff(self, other: Reflector) -> float:
        return max(self.top.max_abs_diff(other.top), self.bottom.max_abs_diff(other.bottom))

    def as_matrix(self) -> NDArray[np.complex128]:
        z = np.zeros((2, 2), dtype=np.complex128)
        return np.block([[z, self.top.as_matrix()], [self.bottom.as_matrix(), z]])


@dataclass(frozen=True)
class WaveFunction:
    """
    Φ(φ1, φ2) as two biquaternion-valued fields of the chart coordinates.

    ``derivative`` is an optional analytic derivative operator valid for both
    components; residual checks use it alongside finite differences.
    """

    phi1: Field
    phi2: Field
    derivative: Derivative | None = None

    def at(self, point: NDArray[np.float64]) -> Reflector:
        p = np.asarray(point, dtype=np.float64)
        return Reflector(self.phi1(p), self.phi2(p))

    def scaled(self, factor: complex) -> WaveFunction:
        phi1, phi2 = self.phi1, self.phi2
        return WaveFunction(lambda p: factor * phi1(p), lambda p: factor * phi2(p), self.derivative)


def reflector_mul(a: Reflector, b: Reflector) -> DiagPair:
    """Block product of two reflectors: DiagPair(a.top b.bottom, a.bottom b.top)."""
    return DiagPair(a.top * b.bottom, a.bottom * b.top)


def check_unit(r: Biquaternion, atol: float = DEFAULT_ATOL) -> None:
    """Raise NonUnitRotor unless r r‡ = 1."""
    deviation = abs(norm_form(r) - 1.0)
    if deviation > atol:
        raise NonUnitRotor(f"Rotor norm form deviates from 1 by {deviation:.3e}")


def sandwich(r: Biquaternion, x: Biquaternion | Reflector, atol: float = DEFAULT_ATOL) -> Biquaternion | Reflector:
    """
    Apply the rotor r as r x r, or blockwise as Reflector(r top r, r‡ bottom r‡).

    Serves both the tachyonic transformation and finite Lorentz transformations.
    """
    check_unit(r, atol)
    if isinstance(x, Reflector):
        rc = conj(r)
        return Reflector(r * x.top * r, rc * x.bottom * rc)
    return r * x * r


def central_difference(h: float = 1e-5) -> Derivative:
    """Second-order central difference along one chart axis."""
    if not h > 0:
        raise ValueError(f"Step must be positive, got {h}")

    def derivative(field: Field, point: NDArray[np.float64], axis: int) -> Biquaternion:
        step = np.zeros(4)
        step[axis] = h
        return (field(point + step) - field(point - step)) / (2.0 * h)

    return derivative


def apply_d(
    derivative: Derivative, field: Field, point: NDArray[np.float64], *, conjugate: bool = False
) -> Biquaternion:
    """D f = i i_0 ∂0 f + Σ i_r ∂r f, or D‡ f with the spatial signs flipped."""
    total = TEMPORAL_FACTOR * (UNITS[0] * derivative(field, point, 0))
    sign = -1.0 if conjugate else 1.0
    for axis in (1, 2, 3):
        total = total + sign * (UNITS[axis] * derivative(field, point, axis))
    return total


def _potential_at(A: Biquaternion | Field | None, point: NDArray[np.float64]) -> Biquaternion:
    if A is None:
        return ZERO
    if isinstance(A, Biquaternion):
        return A
    return A(point)


def dirac_lhs(
    derivative: Derivative,
    A: Biquaternion | Field | None,
    e: float,
    phi: WaveFunction,
    point: NDArray[np.float64],
) -> DiagPair:
    """DiagPair((D - ieA~)φ2, (D‡ - ieA~‡)φ1) at a chart point."""
    p = np.asarray(point, dtype=np.float64)
    a = _potential_at(A, p)
    upper = apply_d(derivative, phi.phi2, p) - (1j * e) * (a * phi.phi2(p))
    lower = apply_d(derivative, phi.phi1, p, conjugate=True) - (1j * e) * (conj(a) * phi.phi1(p))
    return DiagPair(upper, lower)


def dirac_rhs(phi: WaveFunction, M: Biquaternion, point: NDArray[np.float64]) -> DiagPair:
    """Φ M~ with M~ = M~(M~, -M~‡): DiagPair(-φ1 M~‡, φ2 M~)."""
    return phi.at(point) * Reflector(M, -conj(M))
