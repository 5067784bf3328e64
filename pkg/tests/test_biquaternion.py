import numpy as np
import pytest
from hypothesis import given

from circlespace.biquaternion import (
    I0,
    I1,
    I2,
    I3,
    Biquaternion,
    FourVector,
    conj,
    embed,
    norm_form,
    random_biquaternion,
    random_real_unit,
    unembed,
)
from tests.strategies import biquaternions, fourvectors, scale


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (I1, I2, I3),
        (I2, I3, I1),
        (I3, I1, I2),
        (I2, I1, -I3),
        (I1, I1, -I0),
        (I2, I2, -I0),
        (I3, I3, -I0),
    ],
)
def test_unit_table(a, b, expected):
    assert a * b == expected


def test_complex_scalar_commutes_with_units():
    assert (1j * I1) * I2 == I1 * (1j * I2) == 1j * I3


def test_numpy_scalars_multiply_from_the_left():
    assert np.float64(2.0) * I1 == Biquaternion(0, 2)
    assert np.complex128(1j) * I0 == Biquaternion(1j)


def test_rotor_square():
    assert (I0 + I1) * (I0 + I1) / 2 == I1


def test_conj_negates_vector_part_only():
    q = Biquaternion(1 + 2j, 3, 4j, -5)
    assert conj(q) == Biquaternion(1 + 2j, -3, -4j, 5)
    assert conj(conj(q)) == q


@given(biquaternions, biquaternions)
def test_conj_reverses_products(a, b):
    assert conj(a * b).allclose(conj(b) * conj(a), 1e-14 * scale(a) * scale(b))


@given(biquaternions, biquaternions, biquaternions)
def test_associativity(a, b, c):
    assert ((a * b) * c).allclose(a * (b * c), 1e-13 * scale(a) * scale(b) * scale(c))


@given(biquaternions)
def test_norm_form_is_the_scalar_part_of_q_conj_q(q):
    product = q * conj(q)
    tol = 1e-14 * scale(q) ** 2
    assert abs(product.c0 - norm_form(q)) <= tol
    assert product.is_scalar(tol)


@given(biquaternions, biquaternions)
def test_matrix_representation_is_multiplicative(a, b):
    np.testing.assert_allclose(
        (a * b).as_matrix(), a.as_matrix() @ b.as_matrix(), atol=1e-13 * scale(a) * scale(b)
    )


def test_inverse():
    rng = np.random.default_rng(7)
    for _ in range(50):
        q = random_biquaternion(rng)
        assert (q * q.inverse()).allclose(I0, 1e-12)
        assert (q.inverse() * q).allclose(I0, 1e-12)


def test_null_biquaternion_has_no_inverse():
    null = I0 + 1j * I1
    assert norm_form(null) == 0
    with pytest.raises(ZeroDivisionError):
        null.inverse()


def test_coefficients_are_read_only():
    q = Biquaternion(1, 2, 3, 4)
    with pytest.raises(ValueError):
        q.c[0] = 5


def test_constructors_validate():
    with pytest.raises(ValueError):
        Biquaternion.from_array([1, 2, 3])
    with pytest.raises(ValueError):
        Biquaternion.unit(4)
    assert Biquaternion.unit(2) == I2
    assert Biquaternion.scalar(3j) == Biquaternion(3j)


def test_embed_undashed_and_dashed():
    assert embed(FourVector(1, 2, 3, 4)) == Biquaternion(-1j, 2, 3, 4)
    assert embed(FourVector(1, 2, 3, 4, dashed=True)) == Biquaternion(-1, -2j, 3, 4)


@given(fourvectors)
def test_unembed_inverts_embed(x):
    back = unembed(embed(x))
    np.testing.assert_allclose(back.as_array(), x.as_array(), atol=1e-15)


def test_unembed_rejects_non_embeddings():
    with pytest.raises(ValueError):
        unembed(Biquaternion(1, 0, 0, 0))


def test_embedded_norm_form_is_the_minkowski_square():
    x = FourVector(2.0, 1.0, 0.5, -0.5)
    assert norm_form(embed(x)) == pytest.approx(x.minkowski())


def test_four_vector_from_sequence():
    assert FourVector.from_sequence([1, 2, 3, 4], dashed=True) == FourVector(1.0, 2.0, 3.0, 4.0, dashed=True)
    with pytest.raises(ValueError):
        FourVector.from_sequence([1, 2])


def test_random_real_unit_has_unit_norm_form():
    rng = np.random.default_rng(3)
    for _ in range(20):
        r = random_real_unit(rng)
        assert norm_form(r) == pytest.approx(1.0, abs=1e-15)
        assert np.all(r.c.imag == 0)
