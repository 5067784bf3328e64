"""The Circular transformation and the charts L, M, T and S.

Chart coordinates, in the order the renaming map sends them to (x0, x1, x2, x3):

    L: (x0, x1, x2, x3)
    T: (s0, x1, x2, r0)      temporal circle of radius R0
    M: (x0, s1, r1, x3)      spatial circle of radius R1
    S: (s0, s1, r1, r0)      both

Hyperbolic angles stay real; the imaginary angle -iθ0 appears only inside
``rotate_temporal_basis`` through cos(-iθ) = cosh θ and sin(-iθ) = -i sinh θ.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str.__str__(self)

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()

import numpy as np
from numpy.typing import NDArray

from .biquaternion import I0, I1, I2, I3, Biquaternion
from .errors import LightConePoint, NonpositiveRadiusParameter, OutOfRange, ZeroArcElement
from .logger import logger
from .reflector import DiagPair, Reflector


class ChartKind(StrEnum):
    L = "L"
    M = "M"
    T = "T"
    S = "S"


_NEEDS_R0 = {ChartKind.T, ChartKind.S}
_NEEDS_R1 = {ChartKind.M, ChartKind.S}


def _check_radius(name: str, value: float) -> None:
    if not value > 0:
        raise NonpositiveRadiusParameter(f"{name} must be positive, got {value}")


def _cosh_sinh(theta0: float) -> tuple[float, float]:
    try:
        return math.cosh(theta0), math.sinh(theta0)
    except OverflowError as exc:
        raise OutOfRange(f"Hyperbolic angle theta0 = {theta0} is too large to evaluate") from exc


@dataclass(frozen=True)
class SpaceChart:
    """A chart label with the circle radii it requires."""

    kind: ChartKind
    R0: float | None = None
    R1: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ChartKind(self.kind))
        if self.kind in _NEEDS_R0:
            if self.R0 is None:
                raise NonpositiveRadiusParameter(f"Chart {self.kind} requires R0")
            _check_radius("R0", self.R0)
        if self.kind in _NEEDS_R1:
            if self.R1 is None:
                raise NonpositiveRadiusParameter(f"Chart {self.kind} requires R1")
            _check_radius("R1", self.R1)

    @property
    def has_temporal_circle(self) -> bool:
        return self.kind in _NEEDS_R0

    @property
    def has_spatial_circle(self) -> bool:
        return self.kind in _NEEDS_R1


@dataclass(frozen=True)
class ChartPoint:
    """Coordinates of a point in a named chart."""

    chart: SpaceChart
    coords: tuple[float, float, float, float]

    def to_record(self) -> dict:
        record = {"chart": str(self.chart.kind), "coords": [float(c) for c in self.coords]}
        if self.chart.has_temporal_circle:
            record["R0"] = self.chart.R0
        if self.chart.has_spatial_circle:
            record["R1"] = self.chart.R1
        return record

    @classmethod
    def from_record(cls, record: dict) -> ChartPoint:
        chart = SpaceChart(ChartKind(record["chart"]), record.get("R0"), record.get("R1"))
        coords = tuple(float(c) for c in record["coords"])
        if len(coords) != 4:
            raise ValueError(f"Expected 4 coordinates, got {len(coords)}")
        return cls(chart, coords)


@dataclass(frozen=True)
class TemporalPolar:
    """x0 = r0 sinh θ0, x3 = r0 cosh θ0."""

    r0: float
    theta0: float

    def to_cartesian(self) -> tuple[float, float]:
        ch, sh = _cosh_sinh(self.theta0)
        x0, x3 = self.r0 * sh, self.r0 * ch
        if not (math.isfinite(x0) and math.isfinite(x3)):
            raise OutOfRange(f"Point at r0 = {self.r0}, theta0 = {self.theta0} lies beyond the floating-point range")
        return x0, x3

    @classmethod
    def from_cartesian(cls, x0: float, x3: float) -> TemporalPolar:
        interval = (x3 - x0) * (x3 + x0)
        if interval <= 0:
            raise LightConePoint(
                f"Point (x0={x0}, x3={x3}) lies on or beyond the light cone of the temporal plane; "
                "the hyperbolic polar map excludes it"
            )
        return cls(math.copysign(math.sqrt(interval), x3), math.atanh(x0 / x3))


@dataclass(frozen=True)
class SpatialPolar:
    """x1 = r1 sin θ1, x2 = r1 cos θ1."""

    r1: float
    theta1: float

    def to_cartesian(self) -> tuple[float, float]:
        return self.r1 * math.sin(self.theta1), self.r1 * math.cos(self.theta1)

    @classmethod
    def from_cartesian(cls, x1: float, x2: float) -> SpatialPolar:
        return cls(math.hypot(x1, x2), math.atan2(x1, x2))


@dataclass(frozen=True)
class RotatedBasis:
    """
    Four units whose reflectors obey i_μ^2 = 1 and i_μ i_ν = -i_ν i_μ.

    For the temporal rotation the units are (i_s0, i_1, i_2, i_r0); for the
    spatial rotation (i_0, i_s1, i_r1, i_3).
    """

    e0: Biquaternion
    e1: Biquaternion
    e2: Biquaternion
    e3: Biquaternion

    def units(self) -> tuple[Biquaternion, Biquaternion, Biquaternion, Biquaternion]:
        return self.e0, self.e1, self.e2, self.e3

    def reflectors(self) -> tuple[Reflector, ...]:
        return tuple(Reflector.of(u) for u in self.units())

    def max_relation_error(self) -> float:
        """Largest deviation from unit squares and pairwise anti-commutation."""
        refl = self.reflectors()
        worst = 0.0
        for a in range(4):
            sq = square(refl[a])
            worst = max(worst, sq.upper.max_abs_diff(I0), sq.lower.max_abs_diff(I0))
            for b in range(a + 1, 4):
                worst = max(worst, anticommutator(refl[a], refl[b]).max_abs())
        return worst


def square(a: Reflector) -> DiagPair:
    return a * a


def anticommutator(a: Reflector, b: Reflector) -> DiagPair:
    return a * b + b * a


def arc_map(r: float, s: float, R: float) -> float:
    """L arc from chart arc: s~ = r s / R. Total, including r = 0."""
    _check_radius("R", R)
    return r * s / R


def arc_unmap(r: float, s_tilde: float, R: float) -> float:
    """Chart arc from L arc: s = s~ R / r."""
    _check_radius("R", R)
    if r == 0:
        raise ZeroArcElement("Cannot invert the arc map at r = 0")
    return s_tilde * R / r


def rotate_temporal_basis(theta0: float) -> RotatedBasis:
    """(i_s0, i_1, i_2, i_r0) from i_0 = i_r0 sin θ^ + i_s0 cos θ^, i_3 = i_r0 cos θ^ - i_s0 sin θ^, θ^ = -iθ0."""
    ch, sh = _cosh_sinh(theta0)
    cos_hat, sin_hat = ch, -1j * sh
    i_s0 = cos_hat * I0 - sin_hat * I3
    i_r0 = sin_hat * I0 + cos_hat * I3
    return RotatedBasis(i_s0, I1, I2, i_r0)


def rotate_spatial_basis(theta1: float) -> RotatedBasis:
    """(i_0, i_s1, i_r1, i_3) from i_1 = i_r1 sin θ1 + i_s1 cos θ1, i_2 = i_r1 cos θ1 - i_s1 sin θ1."""
    c, s = math.cos(theta1), math.sin(theta1)
    i_s1 = c * I1 - s * I2
    i_r1 = s * I1 + c * I2
    return RotatedBasis(I0, i_s1, i_r1, I3)


def temporal_derivative_matrix(theta0: float) -> NDArray[np.float64]:
    """Maps ((1/r0) ∂/∂θ0, ∂/∂r0) to (∂/∂x0, ∂/∂x3)."""
    ch, sh = _cosh_sinh(theta0)
    return np.array([[ch, -sh], [-sh, ch]])


def spatial_derivative_matrix(theta1: float) -> NDArray[np.float64]:
    """Maps ((1/r1) ∂/∂θ1, ∂/∂r1) to (∂/∂x1, ∂/∂x2)."""
    c, s = math.cos(theta1), math.sin(theta1)
    return np.array([[c, s], [-s, c]])


def scale_potential(A: Biquaternion, r1: float, R1: float) -> Biquaternion:
    """A^B~ = (r1 / R1) A~, the volume-element scaling of the potential on M."""
    _check_radius("R1", R1)
    return (r1 / R1) * A


def _to_lorentz(coords: Sequence[float], chart: SpaceChart) -> tuple[float, float, float, float]:
    c0, c1, c2, c3 = (float(c) for c in coords)
    x0, x1, x2, x3 = c0, c1, c2, c3
    if chart.has_temporal_circle:
        x0, x3 = TemporalPolar(r0=c3, theta0=c0 / chart.R0).to_cartesian()
    if chart.has_spatial_circle:
        x1, x2 = SpatialPolar(r1=c2, theta1=c1 / chart.R1).to_cartesian()
    return x0, x1, x2, x3


def _from_lorentz(x: Sequence[float], chart: SpaceChart) -> tuple[float, float, float, float]:
    x0, x1, x2, x3 = (float(c) for c in x)
    c0, c1, c2, c3 = x0, x1, x2, x3
    if chart.has_temporal_circle:
        polar = TemporalPolar.from_cartesian(x0, x3)
        c0 = arc_unmap(polar.r0, polar.r0 * polar.theta0, chart.R0)
        c3 = polar.r0
    if chart.has_spatial_circle:
        polar = SpatialPolar.from_cartesian(x1, x2)
        c1 = chart.R1 * polar.theta1
        c2 = polar.r1
    return c0, c1, c2, c3


def chart_map(point: Sequence[float], source: SpaceChart, target: SpaceChart) -> tuple[float, float, float, float]:
    """
    Map coordinates between charts through L.

    Raises:
        LightConePoint: when a temporal circle chart is reached from an on-cone L point.
    """
    if len(point) != 4:
        raise ValueError(f"Expected 4 coordinates, got {len(point)}")
    x = _to_lorentz(point, source)
    mapped = _from_lorentz(x, target)
    logger.debug("Mapped %s point %s to %s point %s", source.kind, tuple(point), target.kind, mapped)
    return mapped
