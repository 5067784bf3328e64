"""Quaternions with complex coefficients.

The units follow i_r^2 = -1 and i_1 i_2 = i_3 with cyclic variations; the complex
unit ``1j`` is an ordinary scalar and commutes with everything. ‡-conjugation
negates the coefficients of i_1, i_2, i_3 and leaves complex scalars alone.

Quantities written with a tilde in the physics (x~ = x/i) are stored as their
real physical values; ``embed`` inserts the factor 1/i exactly once.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

DEFAULT_ATOL = 1e-12

# 2x2 complex matrices of the units; the complex scalar maps to 1j * identity.
_MATRIX_UNITS = (
    np.eye(2, dtype=np.complex128),
    np.array([[1j, 0], [0, -1j]], dtype=np.complex128),
    np.array([[0, 1], [-1, 0]], dtype=np.complex128),
    np.array([[0, 1j], [1j, 0]], dtype=np.complex128),
)


class Biquaternion:
    """
    A quaternion c0 i_0 + c1 i_1 + c2 i_2 + c3 i_3 with complex coefficients.

    Instances are immutable values; arithmetic returns new objects.

    Examples:
        >>> I1 * I2 == I3
        True
        >>> (I0 + I1) * (I0 + I1) / 2 == I1
        True
    """

    __slots__ = ("_c",)
    __hash__ = None
    # numpy scalars on the left defer to __rmul__ / __radd__.
    __array_ufunc__ = None

    def __init__(self, c0: complex = 0, c1: complex = 0, c2: complex = 0, c3: complex = 0):
        c = np.array([c0, c1, c2, c3], dtype=np.complex128)
        c.setflags(write=False)
        self._c = c

    @classmethod
    def from_array(cls, components: Sequence[complex] | NDArray) -> Biquaternion:
        """Create from any length-4 sequence of coefficients."""
        arr = np.asarray(components, dtype=np.complex128)
        if arr.shape != (4,):
            raise ValueError(f"Expected 4 coefficients, got shape {arr.shape}")
        return cls(*arr)

    @classmethod
    def unit(cls, index: int) -> Biquaternion:
        """Return the unit i_index."""
        if not 0 <= index <= 3:
            raise ValueError(f"Unit index {index} out of range [0, 3]")
        c = [0, 0, 0, 0]
        c[index] = 1
        return cls(*c)

    @classmethod
    def scalar(cls, value: complex) -> Biquaternion:
        return cls(value)

    @property
    def c(self) -> NDArray[np.complex128]:
        """Read-only coefficient array (c0, c1, c2, c3)."""
        return self._c

    @property
    def c0(self) -> complex:
        return complex(self._c[0])

    @property
    def vector(self) -> NDArray[np.complex128]:
        return self._c[1:]

    def is_scalar(self, atol: float = DEFAULT_ATOL) -> bool:
        """True when the i_1..i_3 coefficients vanish."""
        return bool(np.all(np.abs(self._c[1:]) <= atol))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def __add__(self, other: Biquaternion | complex) -> Biquaternion:
        if isinstance(other, Biquaternion):
            return Biquaternion.from_array(self._c + other._c)
        if isinstance(other, (int, float, complex, np.number)):
            return Biquaternion.from_array(self._c + np.array([other, 0, 0, 0]))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Biquaternion | complex) -> Biquaternion:
        return self + (-other)

    def __rsub__(self, other: complex) -> Biquaternion:
        return (-self) + other

    def __neg__(self) -> Biquaternion:
        return Biquaternion.from_array(-self._c)

    def __mul__(self, other: Biquaternion | complex) -> Biquaternion:
        if isinstance(other, Biquaternion):
            return mul(self, other)
        if isinstance(other, (int, float, complex, np.number)):
            return Biquaternion.from_array(self._c * other)
        return NotImplemented

    def __rmul__(self, other: complex) -> Biquaternion:
        # Scalars commute with every unit.
        if isinstance(other, (int, float, complex, np.number)):
            return Biquaternion.from_array(other * self._c)
        return NotImplemented

    def __truediv__(self, other: complex) -> Biquaternion:
        if isinstance(other, (int, float, complex, np.number)):
            return Biquaternion.from_array(self._c / other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Biquaternion):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    def __repr__(self) -> str:
        parts = ", ".join(f"{complex(v):.6g}" for v in self._c)
        return f"Biquaternion({parts})"

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------
    def conj(self) -> Biquaternion:
        return conj(self)

    def norm_form(self) -> complex:
        return norm_form(self)

    def inverse(self) -> Biquaternion:
        """Two-sided inverse a‡ / (a a‡); null biquaternions have none."""
        n = norm_form(self)
        if n == 0:
            raise ZeroDivisionError("Biquaternion with zero norm form has no inverse")
        return conj(self) / n

    def as_matrix(self) -> NDArray[np.complex128]:
        """Faithful 2x2 complex matrix representation."""
        return sum(c * u for c, u in zip(self._c, _MATRIX_UNITS))

    def max_abs_diff(self, other: Biquaternion) -> float:
        return float(np.max(np.abs(self._c - other._c)))

    def allclose(self, other: Biquaternion, atol: float = DEFAULT_ATOL) -> bool:
        """Componentwise absolute comparison."""
        return self.max_abs_diff(other) <= atol


I0 = Biquaternion.unit(0)
I1 = Biquaternion.unit(1)
I2 = Biquaternion.unit(2)
I3 = Biquaternion.unit(3)
UNITS = (I0, I1, I2, I3)
ZERO = Biquaternion()


@dataclass(frozen=True)
class FourVector:
    """
    A real four-vector (x0, x1, x2, x3) in natural units.

    ``dashed`` marks components expressed in the tachyonic (dashed) frame,
    where the roles of the temporal and first spatial components are exchanged.
    """

    x0: float
    x1: float
    x2: float
    x3: float
    dashed: bool = False

    @classmethod
    def from_sequence(cls, values: Sequence[float], *, dashed: bool = False) -> FourVector:
        if len(values) != 4:
            raise ValueError(f"Expected 4 components, got {len(values)}")
        return cls(*(float(v) for v in values), dashed=dashed)

    def as_array(self) -> NDArray[np.float64]:
        return np.array([self.x0, self.x1, self.x2, self.x3], dtype=np.float64)

    def minkowski(self) -> float:
        """-X0^2 + X1^2 + X2^2 + X3^2."""
        return -self.x0**2 + self.x1**2 + self.x2**2 + self.x3**2


def mul(a: Biquaternion, b: Biquaternion) -> Biquaternion:
    """Product ab: (a0 b0 - a.b, a0 b + b0 a + a x b), complex scalars commuting."""
    a0, av = a.c[0], a.c[1:]
    b0, bv = b.c[0], b.c[1:]
    scalar = a0 * b0 - np.dot(av, bv)
    vector = a0 * bv + b0 * av + np.cross(av, bv)
    return Biquaternion(scalar, *vector)


def conj(a: Biquaternion) -> Biquaternion:
    """‡-conjugate: i_0‡ = i_0, i_r‡ = -i_r."""
    return Biquaternion(a.c[0], *(-a.c[1:]))


def norm_form(a: Biquaternion) -> complex:
    """The i_0 coefficient of a a‡, which is c0^2 + c1^2 + c2^2 + c3^2."""
    return complex(np.sum(a.c * a.c))


def embed(x: FourVector) -> Biquaternion:
    """
    Embed a four-vector as X~ = X0/i + i_1 X1 + i_2 X2 + i_3 X3.

    A dashed four-vector embeds as -V0 i_0 - i V1 i_1 + V2 i_2 + V3 i_3, which is
    where the tachyonic rotor carries an undashed embedding.
    """
    if x.dashed:
        return Biquaternion(-x.x0, -1j * x.x1, x.x2, x.x3)
    return Biquaternion(-1j * x.x0, x.x1, x.x2, x.x3)


def unembed(q: Biquaternion, atol: float = DEFAULT_ATOL) -> FourVector:
    """Inverse of the undashed ``embed``; rejects coefficients that are not of that form."""
    x = np.array([1j * q.c[0], q.c[1], q.c[2], q.c[3]])
    if np.max(np.abs(x.imag)) > atol * max(1.0, float(np.max(np.abs(x)))):
        raise ValueError(f"{q!r} is not the embedding of a real four-vector")
    return FourVector.from_sequence(x.real)


def random_biquaternion(rng: np.random.Generator, scale: float = 1.0) -> Biquaternion:
    """Biquaternion with independent standard-normal real and imaginary parts."""
    return Biquaternion.from_array(scale * (rng.standard_normal(4) + 1j * rng.standard_normal(4)))


def random_real_unit(rng: np.random.Generator) -> Biquaternion:
    """A real quaternion of unit modulus, uniformly distributed on the 3-sphere."""
    v = rng.standard_normal(4)
    return Biquaternion.from_array(v / np.linalg.norm(v))
