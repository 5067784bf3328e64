import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from circlespace.biquaternion import I0, I1, I2, I3, Biquaternion, FourVector, conj, embed, norm_form
from circlespace.errors import NonUnitRotor, SuperluminalSpeed, ZeroArcElement
from circlespace.planewave import PlaneWave
from circlespace.reflector import Reflector
from circlespace.tachyon import (
    DashedKinematics,
    TachyonRotor,
    boost_fourvector,
    boost_rotor,
    componentwise_map,
    dashed_energy,
    dirac_form_residual,
    frame_energy,
    lorentz_fourvector,
    tachyon_fourvector,
    tachyon_quaternion,
    tachyon_reflector,
)
from tests.strategies import biquaternions, fourvectors, real_unit_quaternions, reals, scale


def test_standard_rotor_squares_to_i1():
    r = TachyonRotor().r
    assert (r * r).allclose(I1, 1e-15)
    assert TachyonRotor.standard() == TachyonRotor()


def test_rotor_must_be_unit():
    with pytest.raises(NonUnitRotor):
        TachyonRotor(2 * I0)
    with pytest.raises(NonUnitRotor):
        TachyonRotor(I0 + I1)


@given(biquaternions)
def test_rotor_matches_componentwise_map(x):
    tol = 1e-14 * scale(x)
    assert tachyon_quaternion(x).allclose(componentwise_map(x), tol)
    assert tachyon_quaternion(x, conjugate=True).allclose(componentwise_map(x, conjugate=True), tol)


def test_rotor_matches_componentwise_map_on_seeded_samples():
    rng = np.random.default_rng(42)
    worst = 0.0
    for _ in range(1000):
        x = Biquaternion.from_array(rng.standard_normal(4) + 1j * rng.standard_normal(4))
        worst = max(worst, tachyon_quaternion(x).max_abs_diff(componentwise_map(x)))
    assert worst <= 1e-14


def test_embedded_four_vector():
    x0, x1 = 2.0, -3.0
    mapped = tachyon_quaternion(embed(FourVector(x0, x1, 0.0, 0.0)))
    # (-X1, X0~) with X0~ = X0 / i
    assert mapped.allclose(Biquaternion(-x1, -1j * x0, 0, 0), 1e-15)


def test_transverse_units_are_fixed():
    assert tachyon_quaternion(I2).allclose(I2, 1e-15)
    assert tachyon_quaternion(I3).allclose(I3, 1e-15)


def test_identity_rotor_changes_nothing():
    x = Biquaternion(1 + 1j, 2, -3j, 4)
    assert tachyon_quaternion(x, TachyonRotor.identity()) == x
    X = Reflector(x, conj(x) * 2)
    assert tachyon_reflector(X, TachyonRotor.identity()) == X


def test_four_vector_swap():
    assert tachyon_fourvector(FourVector(1.0, 2.0, 3.0, 4.0)) == FourVector(2.0, 1.0, 3.0, 4.0, dashed=True)
    assert tachyon_fourvector(FourVector(0.0, 0.0, 3.0, 4.0)).as_array().tolist() == [0.0, 0.0, 3.0, 4.0]


@given(fourvectors)
def test_double_application_rotates_by_pi(x):
    twice = tachyon_fourvector(tachyon_fourvector(x))
    assert not twice.dashed
    assert twice.as_array().tolist() == [-x.x0, -x.x1, x.x2, x.x3]


@given(biquaternions)
def test_double_componentwise_map_is_exact(x):
    assert componentwise_map(componentwise_map(x)) == Biquaternion(-x.c[0], -x.c[1], x.c[2], x.c[3])


@given(fourvectors)
def test_embedding_commutes_with_the_transformation(x):
    once = tachyon_fourvector(x)
    tol = 1e-14 * max(1.0, *map(abs, x.as_array()))
    assert embed(once).allclose(tachyon_quaternion(embed(x)), tol)
    assert embed(tachyon_fourvector(once)).allclose(tachyon_quaternion(embed(once)), tol)


@given(biquaternions, biquaternions)
def test_reflector_blocks_follow_the_componentwise_map(x, y):
    mapped = tachyon_reflector(Reflector(x, conj(y)))
    tol = 1e-14 * scale(x, y)
    assert mapped.top.allclose(componentwise_map(x), tol)
    assert mapped.bottom.allclose(componentwise_map(conj(y), conjugate=True), tol)


@given(real_unit_quaternions(), biquaternions)
def test_general_rotors_preserve_norm_form(r, x):
    rotor = TachyonRotor(r)
    assert abs(norm_form(tachyon_quaternion(x, rotor)) - norm_form(x)) <= 1e-13 * scale(x) ** 2


@pytest.mark.parametrize(
    "pw",
    [
        PlaneWave(1.0, 0.0, 1.0),
        PlaneWave.on_shell(1.0, mu=0.6, eA=-0.3),
        PlaneWave.on_shell(2.0, mu=-1.1, eA=0.4, charge_sign=-1),
    ],
)
def test_transformed_dirac_equation_keeps_exact_solutions(pw):
    for point in np.random.default_rng(1).uniform(-1, 1, size=(5, 4)):
        assert dirac_form_residual(pw, point) <= 1e-12
        assert dirac_form_residual(pw, point, TachyonRotor(boost_rotor(0.5))) <= 1e-12


def test_dashed_energy_examples():
    assert dashed_energy(0.8, 1.0, 1.0, 0.5, 0.3) == pytest.approx(0.8)
    eta, mu = 1.25, 0.75
    assert dashed_energy(None, 1.0, 0.6, eta, mu) == pytest.approx((eta + mu * 0.6) / 0.6)
    assert dashed_energy(None, 2.0, 0.5, 3.0, 0.0) == pytest.approx(12.0)
    with pytest.raises(ZeroArcElement):
        dashed_energy(1.0, 1.0, 0.0, 1.0, 1.0)
    with pytest.raises(ZeroArcElement):
        frame_energy(1.0, 1.0, 0.0, 1.0)


@given(reals, reals, st.floats(0.1, 5.0), st.floats(0.1, 5.0))
def test_dashed_frame_preserves_the_dot_product(eta, mu, ds0, ds1):
    dashed = DashedKinematics.from_frame(ds0, ds1, eta, mu)
    assert (dashed.s0d, dashed.s1d, dashed.etad, dashed.mud) == (ds1, ds0, mu, eta)
    assert dashed.dot() == pytest.approx(eta * ds0 + mu * ds1, abs=1e-13 * max(1.0, abs(eta) * ds0 + abs(mu) * ds1))
    v = frame_energy(eta, mu, ds0, ds1)
    assert dashed_energy(v, ds0, ds1, eta, mu) * ds1 == pytest.approx(v * ds0, rel=1e-13, abs=1e-12)


@given(fourvectors, st.floats(-0.95, 0.95))
def test_boost_rotor_matches_the_lorentz_formula(x, v):
    expected = lorentz_fourvector(x, v).as_array()
    np.testing.assert_allclose(boost_fourvector(x, v).as_array(), expected, atol=1e-12 * max(1.0, *map(abs, expected)))


def test_boost_preserves_the_interval():
    x = FourVector(1.0, 0.5, -0.2, 2.0)
    assert lorentz_fourvector(x, 0.8).minkowski() == pytest.approx(x.minkowski())
    assert norm_form(boost_rotor(0.8)) == pytest.approx(1.0)


def test_superluminal_boost():
    with pytest.raises(SuperluminalSpeed):
        boost_rotor(1.0)
    with pytest.raises(SuperluminalSpeed):
        lorentz_fourvector(FourVector(0, 0, 0, 0), -1.5)
    assert math.isclose(lorentz_fourvector(FourVector(1.0, 0.0, 0.0, 0.0), 0.6).x0, 1.25)
