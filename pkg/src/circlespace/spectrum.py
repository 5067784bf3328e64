"""Bound states: temporal-circle quantization, the Bohr and coupled interactions.

Natural units throughout (hbar = c = 1, e^2 = alpha). All tilde quantities are
stored as their real physical values. The coupled energy is computed by two
routes: from the geometric relation between the coupling and Bohr speeds, and
from the closed formula

    ν_m = m {1 + α^2 / (sqrt(n_θ^2 - α^2) + n_r)^2}^(-1/2).

Electron-volt conversion happens only in ``SpectrumLine``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidQuantumNumber, NonpositiveMass, SpeedDomain
from .logger import logger
from .planewave import CircleWave, PlaneWave

ROUTE_TOL = 1e-12
ELECTRON_CHARGE = -1


@dataclass(frozen=True)
class QuantumNumbers:
    """n_theta >= 1 turns of the spatial circle, n_r >= 0 circle-wave quanta."""

    n_theta: int
    n_r: int = 0

    def __post_init__(self):
        if not isinstance(self.n_theta, int) or self.n_theta < 1:
            raise InvalidQuantumNumber(f"n_theta must be an integer >= 1, got {self.n_theta!r}")
        if not isinstance(self.n_r, int) or self.n_r < 0:
            raise InvalidQuantumNumber(f"n_r must be an integer >= 0, got {self.n_r!r}")

    @property
    def n(self) -> int:
        """Principal quantum number."""
        return self.n_theta + self.n_r


def _check_mass(mass: float) -> None:
    if not mass > 0:
        raise NonpositiveMass(f"Mass must be positive, got {mass}")


def _check_alpha(alpha: float, n_theta: int) -> None:
    if not 0 <= alpha < n_theta:
        raise SpeedDomain(f"alpha must satisfy 0 <= alpha < n_theta = {n_theta}, got {alpha}")


def circle_quantize(mass: float, n_theta: int) -> float:
    """Rest-frame temporal circle radius R0^l = n_theta / m."""
    _check_mass(mass)
    QuantumNumbers(n_theta)
    return n_theta / mass


def circle_wave_energy(mass: float, qn: QuantumNumbers) -> float:
    """η^l = n_r m / n_theta, the energy of the circle wave on the rest-frame temporal circle."""
    R0_l = circle_quantize(mass, qn.n_theta)
    if qn.n_r == 0:
        return 0.0
    return CircleWave(qn.n_r, R0_l).eta_l


@dataclass(frozen=True)
class BohrState:
    """
    The Bohr interaction on the spatial circle.

    Radii are infinite and the speed zero in the free limit alpha = 0.
    """

    alpha: float
    n_theta: int
    mass: float
    v_b: float
    eta_b: float
    mu_b: float
    nu_b: float
    eA_b: float
    R1_b: float
    R0_b: float
    R1_hat: float
    R0_l: float
    L: float

    def quantization_residuals(self) -> dict[str, float]:
        """Deviations of the quantization conditions, each of which should vanish."""
        n = self.n_theta
        return {
            "rest_circle": self.mass * self.R0_l - n,
            "angular_momentum": self.L - n,
            "total_energy": self.nu_b * self.R0_b - n,
            "invariant_form": self.eta_b * self.R0_b - self.mu_b * self.R1_hat - n,
        }

    def plane_wave(self) -> PlaneWave:
        """The Bohr electron as a plane wave in the doubly circular chart."""
        return PlaneWave(self.nu_b, self.mu_b, self.mass, self.eA_b, ELECTRON_CHARGE)


def bohr_solve(alpha: float, n_theta: int, mass: float) -> BohrState:
    """
    Solve the Bohr interaction for one spatial-circle quantum number.

    Raises:
        SpeedDomain: when alpha >= n_theta or alpha < 0.
        NonpositiveMass: when mass <= 0.
    """
    _check_mass(mass)
    QuantumNumbers(n_theta)
    _check_alpha(alpha, n_theta)

    v = alpha / n_theta
    root = math.sqrt((1.0 - v) * (1.0 + v))
    eta = mass / root
    mu = mass * v / root
    nu = eta - mu * v
    R0_l = circle_quantize(mass, n_theta)
    if v > 0:
        R1 = n_theta * root / (mass * v)
        L = mu * R1
    else:
        R1, L = math.inf, float(n_theta)

    state = BohrState(
        alpha=alpha,
        n_theta=n_theta,
        mass=mass,
        v_b=v,
        eta_b=eta,
        mu_b=mu,
        nu_b=nu,
        eA_b=nu - eta,
        R1_b=R1,
        R0_b=R0_l / root,
        R1_hat=v * R0_l / root,
        R0_l=R0_l,
        L=L,
    )
    logger.debug("Bohr state n_theta=%d: v=%.17g nu=%.17g R1=%.17g", n_theta, v, nu, R1)
    return state


def bohr_first_equation_residual(state: BohrState, alpha: float) -> float:
    """α / R1 - m v^2 / sqrt(1 - v^2): Coulomb attraction against the centripetal term."""
    v = state.v_b
    return alpha / state.R1_b - state.mass * v * v / math.sqrt(1.0 - v * v)


@dataclass(frozen=True)
class CoupledState:
    """The Bohr interaction coupled to a circle wave, with its heavy-electron decomposition."""

    qn: QuantumNumbers
    alpha: float
    mass: float
    bohr: BohrState
    eta_l: float
    v_m: float
    nu_m: float
    nu_m_closed: float
    mu_m: float
    vprime_m: float
    nu_h: float
    eta_h: float
    mu_h: float
    m_h: float

    @property
    def route_gap(self) -> float:
        return abs(self.nu_m - self.nu_m_closed)

    @property
    def eta_m(self) -> float:
        return math.hypot(self.mass, self.mu_m)

    def plane_wave(self) -> PlaneWave:
        """The coupling electron as a plane wave on the spatial circle."""
        return PlaneWave(self.nu_m, self.mu_m, self.mass, self.nu_m - self.eta_m, ELECTRON_CHARGE)


def _closed_form_energy(alpha: float, qn: QuantumNumbers, mass: float) -> float:
    radial = math.sqrt((qn.n_theta - alpha) * (qn.n_theta + alpha)) + qn.n_r
    return mass / math.sqrt(1.0 + (alpha / radial) ** 2)


def coupled_solve(alpha: float, qn: QuantumNumbers, mass: float) -> CoupledState:
    """
    Solve the coupled interaction.

    The coupling speed follows from sqrt(1 - v_m^2)/v_m = sqrt(1 - v_b^2)/v_b + n_r/(n_theta v_b),
    inverted in closed form, and ν_m = m sqrt(1 - v_m^2). The closed formula gives
    the same energy independently.

    Raises:
        SpeedDomain: when alpha >= n_theta or alpha < 0.
    """
    bohr = bohr_solve(alpha, qn.n_theta, mass)
    eta_l = circle_wave_energy(mass, qn)
    v_b = bohr.v_b

    # w = v_m / sqrt(1 - v_m^2), the reciprocal of the geometric ratio; zero in the free limit.
    w = v_b / (math.sqrt((1.0 - v_b) * (1.0 + v_b)) + qn.n_r / qn.n_theta)
    v_m = w / math.sqrt(1.0 + w * w)
    nu_m = mass * math.sqrt((1.0 - v_m) * (1.0 + v_m))
    nu_closed = _closed_form_energy(alpha, qn, mass)
    mu_m = mass * w

    if v_b > 0:
        vprime = mass * mass / bohr.mu_b + eta_l / v_b
    else:
        vprime = math.inf

    nu_h = bohr.nu_b + eta_l
    one_minus_v2 = (1.0 - v_b) * (1.0 + v_b)
    state = CoupledState(
        qn=qn,
        alpha=alpha,
        mass=mass,
        bohr=bohr,
        eta_l=eta_l,
        v_m=v_m,
        nu_m=nu_m,
        nu_m_closed=nu_closed,
        mu_m=mu_m,
        vprime_m=vprime,
        nu_h=nu_h,
        eta_h=nu_h / one_minus_v2,
        mu_h=nu_h * v_b / one_minus_v2,
        m_h=nu_h / math.sqrt(one_minus_v2),
    )
    if state.route_gap > ROUTE_TOL * mass:
        logger.warning(
            "Coupled energy routes disagree for n_theta=%d n_r=%d: gap %.3e", qn.n_theta, qn.n_r, state.route_gap
        )
    logger.debug("Coupled state %s: v_m=%.17g nu_m=%.17g", qn, v_m, nu_m)
    return state


def sommerfeld_energy(alpha: float, n_theta: int, n_r: int, mass: float = 1.0) -> float:
    """
    Sommerfeld fine-structure energy E = m [1 + (α / (n - k + sqrt(k^2 - α^2)))^2]^(-1/2).

    Labelled by the principal number n = n_theta + n_r and k = n_theta.
    """
    n, k = n_theta + n_r, n_theta
    if not 0 <= alpha < k:
        raise SpeedDomain(f"alpha must satisfy 0 <= alpha < k = {k}, got {alpha}")
    denominator = (n - k) + math.sqrt(k * k - alpha * alpha)
    return mass * (1.0 + (alpha / denominator) ** 2) ** -0.5


def sommerfeld_expansion(alpha: float, n_theta: int, n_r: int) -> float:
    """Fourth-order series 1 - α^2/(2n^2) - (α^4/(2n^4))(n/k - 3/4) of E/m."""
    n, k = n_theta + n_r, n_theta
    return 1.0 - alpha**2 / (2 * n**2) - (alpha**4 / (2 * n**4)) * (n / k - 0.75)


@dataclass(frozen=True)
class SpectrumLine:
    """One (n_theta, n_r) level with its electron-volt values and reference comparison."""

    qn: QuantumNumbers
    energy_natural: float
    energy_ev: float
    binding_ev: float
    reference_ev: float
    abs_diff: float

    @property
    def n(self) -> int:
        return self.qn.n

    def to_record(self) -> dict:
        return {
            "n_theta": self.qn.n_theta,
            "n_r": self.qn.n_r,
            "n": self.qn.n,
            "energy_natural": self.energy_natural,
            "energy_ev": self.energy_ev,
            "binding_ev": self.binding_ev,
            "reference_ev": self.reference_ev,
            "abs_diff": self.abs_diff,
        }


SPECTRUM_COLUMNS = ("n_theta", "n_r", "n", "energy_natural", "energy_ev", "binding_ev", "reference_ev", "abs_diff")


def spectrum_line(alpha: float, qn: QuantumNumbers, mass_ev: float) -> SpectrumLine:
    """Solve one level in natural units and convert at the boundary."""
    _check_mass(mass_ev)
    state = coupled_solve(alpha, qn, 1.0)
    energy_ev = state.nu_m * mass_ev
    reference_ev = sommerfeld_energy(alpha, qn.n_theta, qn.n_r) * mass_ev
    # E/m - 1 = (1 + w^2)^(-1/2) - 1, evaluated without cancellation.
    w2 = (state.mu_m / state.mass) ** 2
    binding_ev = mass_ev * float(np.expm1(-0.5 * np.log1p(w2)))
    return SpectrumLine(
        qn=qn,
        energy_natural=state.nu_m,
        energy_ev=energy_ev,
        binding_ev=binding_ev,
        reference_ev=reference_ev,
        abs_diff=abs(energy_ev - reference_ev),
    )


def spectrum_table(alpha: float, mass_ev: float, max_n_theta: int, max_n_r: int) -> list[SpectrumLine]:
    """
    All levels with 1 <= n_theta <= max_n_theta and 0 <= n_r <= max_n_r.

    Lines are ordered by (n, n_theta).
    """
    if max_n_theta < 1:
        raise InvalidQuantumNumber(f"max_n_theta must be >= 1, got {max_n_theta}")
    if max_n_r < 0:
        raise InvalidQuantumNumber(f"max_n_r must be >= 0, got {max_n_r}")
    lines = [
        spectrum_line(alpha, QuantumNumbers(n_theta, n_r), mass_ev)
        for n_theta in range(1, max_n_theta + 1)
        for n_r in range(0, max_n_r + 1)
    ]
    lines.sort(key=lambda line: (line.n, line.qn.n_theta))
    logger.info("Computed %d spectrum lines at alpha=%.17g", len(lines), alpha)
    return lines
