"""Plane-wave solutions of the versatile Dirac equation and residual checks.

Phases are written in real form: with every tilde quantity stored as its real
value, the phase of φ1 is exp(-i ν x0 + i μ x1) on the mapped chart
coordinates. The companion component is

    φ2 = (ν - eA - i μ i_1) φ1 M~^-1,

and both component equations hold exactly when (ν - eA)^2 = m^2 + μ^2.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .biquaternion import I0, I1, Biquaternion, FourVector, embed, norm_form
from .errors import DispersionViolation, NonpositiveMass, SuperluminalSpeed
from .logger import logger
from .reflector import TEMPORAL_FACTOR, Derivative, Field, WaveFunction, central_difference, dirac_lhs, dirac_rhs

DEFAULT_STEP = 1e-5
DISPERSION_TOL = 1e-10


def _check_mass(mass: float) -> None:
    if not mass > 0:
        raise NonpositiveMass(f"Mass must be positive, got {mass}")


@dataclass(frozen=True)
class PlaneWave:
    """Frequency ν, wave number μ, rest mass, potential energy eA and charge sign."""

    nu: float
    mu: float
    mass: float
    eA: float = 0.0
    charge_sign: int = 1

    def __post_init__(self):
        if self.charge_sign not in (1, -1):
            raise ValueError(f"charge_sign must be +1 or -1, got {self.charge_sign}")

    @classmethod
    def on_shell(cls, mass: float, mu: float = 0.0, eA: float = 0.0, charge_sign: int = 1) -> PlaneWave:
        """Positive-frequency wave with ν = eA + sqrt(m^2 + μ^2)."""
        _check_mass(mass)
        return cls(eA + math.hypot(mass, mu), mu, mass, eA, charge_sign)

    @property
    def dispersion_residual(self) -> float:
        return (self.nu - self.eA) ** 2 - self.mass**2 - self.mu**2

    @property
    def wavevector(self) -> NDArray[np.float64]:
        return np.array([-self.nu, self.mu, 0.0, 0.0])

    def potential(self) -> tuple[Biquaternion, float]:
        """Constant potential A~ and charge e with e A0 = eA."""
        e = float(self.charge_sign)
        return embed(FourVector(self.eA * e, 0.0, 0.0, 0.0)), e

    def mass_term(self) -> Biquaternion:
        """The scalar representative M~ = -i m."""
        return -1j * self.mass * I0

    def operator_symbol(self) -> Biquaternion:
        """K with D f = K f for any field carrying this wave's phase."""
        k = self.wavevector
        return (TEMPORAL_FACTOR * 1j * k[0]) * I0 + (1j * k[1]) * I1


@dataclass(frozen=True)
class CircleWave:
    """A standing wave on the temporal circle carrying energy n_r / R0^l."""

    n_r: int
    R0l: float

    def __post_init__(self):
        if self.n_r < 1:
            raise ValueError(f"A circle wave needs n_r >= 1, got {self.n_r}")
        if not self.R0l > 0:
            raise ValueError(f"Circle radius must be positive, got {self.R0l}")

    @property
    def eta_l(self) -> float:
        return self.n_r / self.R0l


@dataclass(frozen=True)
class ResidualReport:
    """Max-norm Dirac residuals from finite differences and, when available, analytically."""

    fd: float
    analytic: float | None = None


def _analytic_derivative(k: NDArray[np.float64]) -> Derivative:
    def derivative(field: Field, point: NDArray[np.float64], axis: int) -> Biquaternion:
        return (1j * k[axis]) * field(point)

    return derivative


def plane_wave_function(pw: PlaneWave, M: Biquaternion | None = None) -> WaveFunction:
    """Build Φ for the given parameters without checking the dispersion relation."""
    M = pw.mass_term() if M is None else M
    k = pw.wavevector
    companion = ((pw.nu - pw.eA) * I0 - (1j * pw.mu) * I1) * M.inverse()

    def phase(p: NDArray[np.float64]) -> complex:
        return complex(np.exp(1j * np.dot(k, p)))

    def phi1(p: NDArray[np.float64]) -> Biquaternion:
        return Biquaternion(phase(p))

    def phi2(p: NDArray[np.float64]) -> Biquaternion:
        return phase(p) * companion

    return WaveFunction(phi1, phi2, _analytic_derivative(k))


def bound_solution(pw: PlaneWave, M: Biquaternion | None = None, tol: float = DISPERSION_TOL) -> WaveFunction:
    """
    Plane-wave solution with a constant potential.

    Raises:
        NonpositiveMass: when pw.mass <= 0.
        DispersionViolation: when (ν - eA)^2 - m^2 - μ^2 exceeds tol (relative to max(1, m^2)).
        ValueError: when M~ M~‡ differs from -m^2.
    """
    _check_mass(pw.mass)
    if abs(pw.dispersion_residual) > tol * max(1.0, pw.mass**2):
        raise DispersionViolation(pw.dispersion_residual)
    if M is not None and abs(norm_form(M) + pw.mass**2) > tol * max(1.0, pw.mass**2):
        raise ValueError(f"Mass term has M M‡ = {norm_form(M)}, expected {-pw.mass**2}")
    return plane_wave_function(pw, M)


def free_solution(mass: float, M: Biquaternion | None = None) -> WaveFunction:
    """Free wave at rest: φ1 = exp(-i m x0), φ2 = m φ1 M~^-1."""
    _check_mass(mass)
    return bound_solution(PlaneWave(mass, 0.0, mass), M)


def residual(
    phi: WaveFunction,
    A: Biquaternion | Field | None,
    e: float,
    M: Biquaternion,
    points: Sequence[Sequence[float]],
    h: float = DEFAULT_STEP,
) -> ResidualReport:
    """Largest |(D - ieA~)Φ - ΦM~| over the points, by central differences and analytically."""
    fd_operator = central_difference(h)
    fd_worst, analytic_worst = 0.0, 0.0
    for point in points:
        p = np.asarray(point, dtype=np.float64)
        rhs = dirac_rhs(phi, M, p)
        fd_worst = max(fd_worst, (dirac_lhs(fd_operator, A, e, phi, p) - rhs).max_abs())
        if phi.derivative is not None:
            analytic_worst = max(analytic_worst, (dirac_lhs(phi.derivative, A, e, phi, p) - rhs).max_abs())
    report = ResidualReport(fd_worst, analytic_worst if phi.derivative is not None else None)
    logger.debug("Dirac residual over %d points: fd=%.3e analytic=%s", len(points), report.fd, report.analytic)
    return report


def convergence_order(
    phi: WaveFunction,
    A: Biquaternion | Field | None,
    e: float,
    M: Biquaternion,
    points: Sequence[Sequence[float]],
    h: float,
) -> tuple[float, float]:
    """Observed order p and constant C of the finite-difference residual C h^p, from one halving."""
    coarse = residual(phi, A, e, M, points, h).fd
    fine = residual(phi, A, e, M, points, h / 2).fd
    order = math.log2(coarse / fine)
    return order, coarse / h**order


def de_broglie(mass: float, v: float) -> tuple[float, float]:
    """Energy and momentum (η, μ) = (m γ, m v γ) of a particle moving at speed v."""
    _check_mass(mass)
    if abs(v) >= 1:
        raise SuperluminalSpeed(f"Speed must satisfy |v| < 1, got {v}")
    gamma = 1.0 / math.sqrt(1.0 - v * v)
    return mass * gamma, mass * v * gamma


def phase_at_circle(mass: float, R0l: float) -> complex:
    """φ1 of the free wave after one turn of the temporal circle, s0 = 2π R0^l."""
    return complex(np.exp(-1j * mass * 2.0 * math.pi * R0l))
