"""Per-point coupling: the coefficients d and d', and the charge-density equation.

At a point with local potential magnitude A the charge density ρ satisfies

    ρ^2 / (d e^2) - A^3 ρ - m^2 d A^4 = 0,

with d' in place of d once circle waves are present. The radial quantum number
enters through the replacement sqrt(n_θ^2 - α^2) -> sqrt(n_θ^2 - α^2) + n_r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidQuantumNumber, NonpositiveMass, OutOfRange, SpeedDomain, ZeroCharge
from .logger import logger
from .planewave import bound_solution
from .reflector import WaveFunction
from .spectrum import CoupledState, QuantumNumbers, coupled_solve

# Planck's constant in units with hbar = 1.
H = 2.0 * math.pi


def _check_alpha(alpha: float, n_theta: int) -> None:
    if not 0 <= alpha < n_theta:
        raise SpeedDomain(f"alpha must satisfy 0 <= alpha < n_theta = {n_theta}, got {alpha}")


def _coefficient(bracket: float) -> float:
    return 3.0 * math.pi / (bracket * H**2)


def coefficient_d(n: int) -> float:
    """d = 3π / (n^2 h^2)."""
    if not isinstance(n, int) or n < 1:
        raise InvalidQuantumNumber(f"n must be an integer >= 1, got {n!r}")
    return _coefficient(float(n * n))


def replacement_map(n_theta: int, alpha: float) -> float:
    """sqrt(n_theta^2 - alpha^2); callers add n_r to obtain the mapped radicand root."""
    _check_alpha(alpha, n_theta)
    return math.sqrt((n_theta - alpha) * (n_theta + alpha))


def d_prime_bracket(qn: QuantumNumbers, alpha: float) -> float:
    """n_θ^2 + n_r^2 + 2 n_r sqrt(n_θ^2 - α^2), which equals (sqrt(n_θ^2 - α^2) + n_r)^2 + α^2."""
    root = replacement_map(qn.n_theta, alpha)
    return float(qn.n_theta**2 + qn.n_r**2) + 2.0 * qn.n_r * root


def coefficient_d_prime(qn: QuantumNumbers, alpha: float) -> float:
    """
    d' = 3π / (h^2 (n_θ^2 + n_r^2 + 2 n_r sqrt(n_θ^2 - α^2))).

    Positive on the whole domain and equal to d(n_theta) when n_r = 0.

    Raises:
        SpeedDomain: when alpha >= n_theta.
    """
    return _coefficient(d_prime_bracket(qn, alpha))


@dataclass(frozen=True)
class CouplingCoefficients:
    d: float
    d_prime: float
    alpha: float
    qn: QuantumNumbers
    h: float = H

    @classmethod
    def evaluate(cls, qn: QuantumNumbers, alpha: float) -> CouplingCoefficients:
        return cls(coefficient_d(qn.n), coefficient_d_prime(qn, alpha), alpha, qn)


def equation_terms(rho: float, A: float, mass: float, e: float, d: float) -> tuple[float, float, float]:
    """The three terms ρ^2/(d e^2), -A^3 ρ and -m^2 d A^4."""
    return rho * rho / (d * e * e), -(A**3) * rho, -(mass**2) * d * A**4


def equation_residual(rho: float, A: float, mass: float, e: float, d: float) -> float:
    """Left-hand side of the charge-density equation relative to its largest term (0 when all vanish)."""
    terms = equation_terms(rho, A, mass, e, d)
    scale = max(abs(t) for t in terms)
    if scale == 0:
        return 0.0
    return abs(math.fsum(terms)) / scale


@dataclass(frozen=True)
class ChargeDensitySolution:
    A: float
    mass: float
    e: float
    d_prime: float
    rho_plus: float
    rho_minus: float
    residual_plus: float
    residual_minus: float

    @property
    def residuals(self) -> tuple[float, float]:
        return self.residual_plus, self.residual_minus

    def to_record(self) -> dict:
        return {
            "A": self.A,
            "mass": self.mass,
            "e": self.e,
            "d_prime": self.d_prime,
            "rho_plus": self.rho_plus,
            "rho_minus": self.rho_minus,
            "residual_plus": self.residual_plus,
            "residual_minus": self.residual_minus,
        }


def _quadratic_roots(a: float, b: float, c: float) -> tuple[float, float]:
    """Real roots of a x^2 + b x + c with a > 0 and b^2 - 4ac >= 0, free of cancellation."""
    disc = b * b - 4.0 * a * c
    q = -0.5 * (b + math.copysign(math.sqrt(max(disc, 0.0)), b))
    if q == 0:
        return 0.0, 0.0
    return q / a, c / q


def solve_rho(A: float, mass: float, e: float, d_prime: float) -> ChargeDensitySolution:
    """
    Both roots ρ = (A^2 e^2 d'/2)(A ± sqrt(A^2 + 4 m^2/e^2)).

    Raises:
        ZeroCharge: when e = 0.
        ValueError: when d_prime <= 0 or mass < 0.
        OutOfRange: when A is so large that the roots overflow.
    """
    if e == 0:
        raise ZeroCharge("The charge e must be nonzero")
    if not d_prime > 0:
        raise ValueError(f"d_prime must be positive, got {d_prime}")
    if mass < 0:
        raise NonpositiveMass(f"Mass must not be negative, got {mass}")

    try:
        x1, x2 = _quadratic_roots(1.0 / (d_prime * e * e), -(A**3), -(mass**2) * d_prime * A**4)
        if not (math.isfinite(x1) and math.isfinite(x2)):
            raise OverflowError(x1, x2)
        rho_plus, rho_minus = max(x1, x2), min(x1, x2)
        residuals = equation_residual(rho_plus, A, mass, e, d_prime), equation_residual(rho_minus, A, mass, e, d_prime)
    except OverflowError as exc:
        raise OutOfRange(f"Potential A = {A} puts the charge density beyond the floating-point range") from exc
    solution = ChargeDensitySolution(
        A=A,
        mass=mass,
        e=e,
        d_prime=d_prime,
        rho_plus=rho_plus,
        rho_minus=rho_minus,
        residual_plus=residuals[0],
        residual_minus=residuals[1],
    )
    logger.debug("Charge density roots at A=%.6g: %.17g, %.17g", A, rho_plus, rho_minus)
    return solution


def is_physical(rho: float, charge_sign: int) -> bool:
    """A finite density whose sign matches the charge of the source."""
    return math.isfinite(rho) and rho * charge_sign >= 0


@dataclass(frozen=True)
class PointSolution:
    """The coupling electron at one point of its orbit, with the coupling coefficients."""

    state: CoupledState
    wave: WaveFunction
    radius: float
    coefficients: CouplingCoefficients

    @property
    def charge(self) -> float:
        """Magnitude of e, with e^2 = alpha."""
        return math.sqrt(self.state.alpha)

    @property
    def potential(self) -> float:
        """Local potential magnitude |eA| / e of the coupling electron."""
        if self.charge == 0:
            raise ZeroCharge("The free limit alpha = 0 carries no potential")
        return (self.state.eta_m - self.state.nu_m) / self.charge

    def charge_density(self) -> ChargeDensitySolution:
        return solve_rho(self.potential, self.state.mass, self.charge, self.coefficients.d_prime)


def point_solution(alpha: float, qn: QuantumNumbers, mass: float) -> PointSolution:
    """
    Assemble the coupling-electron plane wave, its orbit radius and d'.

    The radius follows from α / R = m v_m^2 / sqrt(1 - v_m^2), infinite in the free limit.
    """
    state = coupled_solve(alpha, qn, mass)
    wave = bound_solution(state.plane_wave())
    v = state.v_m
    radius = alpha * math.sqrt((1.0 - v) * (1.0 + v)) / (mass * v * v) if v > 0 else math.inf
    return PointSolution(state, wave, radius, CouplingCoefficients.evaluate(qn, alpha))
