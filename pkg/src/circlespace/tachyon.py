"""The tachyonic transformation and the dashed-frame relations.

The transformation is the rotor sandwich X~' = R_T X~ R_T with R_T = (1 + i_1)/√2,
acting blockwise on reflectors as R_T|X~|R_T‡. Componentwise it swaps the roles of
the temporal and first spatial coefficients:

    X-type   (rotor R_T on both sides):   (c0, c1, c2, c3) -> (-c1,  c0, c2, c3)
    Y‡-type  (rotor R_T‡ on both sides):  (c0, c1, c2, c3) -> ( c1, -c0, c2, c3)

Finite boosts use the same sandwich with an imaginary rotation angle, see
``boost_rotor``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .biquaternion import DEFAULT_ATOL, I0, I1, Biquaternion, FourVector, conj, embed, unembed
from .errors import SuperluminalSpeed, ZeroArcElement
from .logger import logger
from .planewave import PlaneWave, plane_wave_function
from .reflector import DiagPair, Reflector, check_unit, sandwich

_SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True)
class TachyonRotor:
    """
    A rotor r with r r‡ = 1 used as r X r.

    The default is R_T = (1 + i_1)/√2, whose square is i_1. Any real quaternion of
    unit modulus is accepted as well.
    """

    r: Biquaternion = field(default_factory=lambda: _SQRT_HALF * (I0 + I1))
    atol: float = DEFAULT_ATOL

    def __post_init__(self):
        check_unit(self.r, self.atol)

    @classmethod
    def standard(cls) -> TachyonRotor:
        return cls()

    @classmethod
    def identity(cls) -> TachyonRotor:
        return cls(I0)

    def conj(self) -> TachyonRotor:
        """The rotor used for the Y‡-type quantities."""
        return TachyonRotor(conj(self.r), self.atol)


def componentwise_map(x: Biquaternion, conjugate: bool = False) -> Biquaternion:
    """Explicit coefficient form of the standard rotor sandwich."""
    c0, c1, c2, c3 = x.c
    if conjugate:
        return Biquaternion(c1, -c0, c2, c3)
    return Biquaternion(-c1, c0, c2, c3)


def tachyon_quaternion(x: Biquaternion, rotor: TachyonRotor | None = None, conjugate: bool = False) -> Biquaternion:
    """
    r x r, or r‡ x r‡ for the Y‡-type.

    Raises:
        NonUnitRotor: when the rotor is not of unit norm form.
    """
    rotor = TachyonRotor() if rotor is None else rotor
    r = rotor.conj().r if conjugate else rotor.r
    return sandwich(r, x, rotor.atol)


def tachyon_reflector(X: Reflector, rotor: TachyonRotor | None = None) -> Reflector:
    """Top block sandwiched with r, bottom block with r‡."""
    rotor = TachyonRotor() if rotor is None else rotor
    return sandwich(rotor.r, X, rotor.atol)


def tachyon_fourvector(X: FourVector) -> FourVector:
    """
    Tachyonic transformation of a four-vector in stored-real form.

    An undashed (X0, X1, X2, X3) becomes the dashed (X1, X0, X2, X3), whose
    embedding is R_T X~ R_T. A dashed vector returns to the undashed frame as
    (-V1, -V0, V2, V3), so two applications give (-X0, -X1, X2, X3).
    """
    if X.dashed:
        return FourVector(-X.x1, -X.x0, X.x2, X.x3)
    return FourVector(X.x1, X.x0, X.x2, X.x3, dashed=True)


def dirac_form_residual(pw: PlaneWave, point, rotor: TachyonRotor | None = None) -> float:
    """
    Analytic Dirac residual of a plane wave after transforming every reflector.

    The operator, potential, wave function and mass term are each passed through
    ``tachyon_reflector``; the transformed equation (D' - ieA~')Φ' - Φ'M~' is
    evaluated at the point and its largest coefficient returned.
    """
    rotor = TachyonRotor() if rotor is None else rotor
    A, e = pw.potential()
    M = pw.mass_term()
    phi = plane_wave_function(pw, M).at(np.asarray(point, dtype=np.float64))

    D_t = tachyon_reflector(Reflector.of(pw.operator_symbol()), rotor)
    A_t = tachyon_reflector(Reflector.of(A), rotor)
    phi_t = tachyon_reflector(phi, rotor)
    M_t = tachyon_reflector(Reflector(M, -conj(M)), rotor)

    lhs: DiagPair = (D_t - (1j * e) * A_t) * phi_t
    res = (lhs - phi_t * M_t).max_abs()
    logger.debug("Transformed Dirac residual %.3e for %s", res, pw)
    return res


@dataclass(frozen=True)
class DashedKinematics:
    """
    Arc elements and energy/momentum of the dashed frame in stored-real form.

    The dashed frame exchanges the temporal and first spatial roles:
    s0' = s1, s1' = s0, η' = μ, μ' = η.
    """

    s0d: float
    s1d: float
    etad: float
    mud: float

    @classmethod
    def from_frame(cls, s0: float, s1: float, eta: float, mu: float) -> DashedKinematics:
        return cls(s0d=s1, s1d=s0, etad=mu, mud=eta)

    def dot(self) -> float:
        """η' s0' + μ' s1', equal to η s0 + μ s1 of the undashed frame."""
        return self.etad * self.s0d + self.mud * self.s1d


def frame_energy(eta: float, mu: float, ds0: float, ds1: float) -> float:
    """Total energy v = (η δs0 + μ δs1)/δs0 of the undashed frame."""
    if ds0 == 0:
        raise ZeroArcElement("The temporal arc element δs0 must be nonzero")
    return (eta * ds0 + mu * ds1) / ds0


def dashed_energy(v: float | None, ds0: float, ds1: float, eta: float, mu: float) -> float:
    """
    Dashed total energy v' from v' δs1 = v δs0 = η δs0 + μ δs1.

    ``v`` is the undashed total energy; when given, a mismatch with η and μ is
    reported at debug level.

    Raises:
        ZeroArcElement: when δs1 = 0.
    """
    if ds1 == 0:
        raise ZeroArcElement("The spatial arc element δs1 must be nonzero")
    vprime = (eta * ds0 + mu * ds1) / ds1
    if v is not None and not math.isclose(v * ds0 / ds1, vprime, rel_tol=1e-12, abs_tol=1e-12):
        logger.debug("Dashed energy %.17g differs from v δs0/δs1 = %.17g", vprime, v * ds0 / ds1)
    return vprime


def boost_rotor(v: float) -> Biquaternion:
    """
    Rotor of a Lorentz boost along x1 with velocity v.

    R = cosh(φ/2) - i sinh(φ/2) i_1 with φ = -atanh(v); R X~ R maps X0 to
    γ(X0 + v X1) and X1 to γ(X1 + v X0).
    """
    if abs(v) >= 1:
        raise SuperluminalSpeed(f"Boost velocity must satisfy |v| < 1, got {v}")
    half = -0.5 * math.atanh(v)
    return math.cosh(half) * I0 - (1j * math.sinh(half)) * I1


def lorentz_fourvector(X: FourVector, v: float) -> FourVector:
    """Reference boost formula."""
    if abs(v) >= 1:
        raise SuperluminalSpeed(f"Boost velocity must satisfy |v| < 1, got {v}")
    gamma = 1.0 / math.sqrt(1.0 - v * v)
    return FourVector(gamma * (X.x0 + v * X.x1), gamma * (X.x1 + v * X.x0), X.x2, X.x3)


def boost_fourvector(X: FourVector, v: float) -> FourVector:
    """Boost through the rotor sandwich."""
    return unembed(sandwich(boost_rotor(v), embed(X)))
