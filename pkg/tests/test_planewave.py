import math

import numpy as np
import pytest

from circlespace.biquaternion import I0, I1, random_real_unit
from circlespace.errors import DispersionViolation, NonpositiveMass, SuperluminalSpeed
from circlespace.planewave import (
    CircleWave,
    PlaneWave,
    bound_solution,
    convergence_order,
    de_broglie,
    free_solution,
    phase_at_circle,
    plane_wave_function,
    residual,
)
from circlespace.reflector import apply_d

POINTS = np.random.default_rng(11).uniform(-1.0, 1.0, size=(6, 4))


@pytest.mark.parametrize("mass", [0.5, 1.0, 3.0])
def test_free_wave_solves_the_equation(mass):
    report = residual(free_solution(mass), None, 1.0, -1j * mass * I0, POINTS)
    assert report.analytic <= 1e-12
    assert report.fd <= 1e-8


def test_free_wave_companion_is_i_times_phi1():
    phi = free_solution(2.0)
    for p in POINTS:
        assert phi.phi2(p).allclose(1j * phi.phi1(p), 1e-15)
    assert phi.phi1(np.array([0.25, 0.0, 0.0, 0.0])).allclose(np.exp(-0.5j) * I0, 1e-15)


@pytest.mark.parametrize("mu, eA, charge", [(0.7, 0.2, 1), (-1.2, -0.4, -1), (0.0, 0.3, 1)])
def test_bound_wave_solves_the_equation(mu, eA, charge):
    pw = PlaneWave.on_shell(1.5, mu=mu, eA=eA, charge_sign=charge)
    A, e = pw.potential()
    report = residual(bound_solution(pw), A, e, pw.mass_term(), POINTS)
    assert report.analytic <= 1e-12
    assert report.fd <= 1e-8


def test_general_mass_term():
    rng = np.random.default_rng(5)
    pw = PlaneWave.on_shell(1.0, mu=0.4, eA=-0.1)
    A, e = pw.potential()
    for _ in range(5):
        M = -1j * random_real_unit(rng)
        assert residual(bound_solution(pw, M), A, e, M, POINTS).analytic <= 1e-12


def test_off_shell_parameters_are_rejected():
    with pytest.raises(DispersionViolation) as info:
        bound_solution(PlaneWave(2.0, 0.0, 1.0))
    assert info.value.residual == pytest.approx(3.0)


def test_off_shell_wave_does_not_solve_the_equation():
    pw = PlaneWave(2.0, 0.0, 1.0)
    A, e = pw.potential()
    assert residual(plane_wave_function(pw), A, e, pw.mass_term(), POINTS).analytic > 0.1


def test_residual_is_linear_in_the_wave():
    pw = PlaneWave(1.1, 0.0, 1.0)
    A, e = pw.potential()
    phi = plane_wave_function(pw)
    single = residual(phi, A, e, pw.mass_term(), POINTS)
    double = residual(phi.scaled(2.0), A, e, pw.mass_term(), POINTS)
    assert single.analytic > 0
    assert double.analytic == pytest.approx(2.0 * single.analytic, rel=1e-12)
    assert double.fd == pytest.approx(2.0 * single.fd, rel=1e-6)


@pytest.mark.parametrize("eA", [0.0, 0.2, -0.4])
def test_wrong_frequency_leaves_a_residual(eA):
    pw = PlaneWave(PlaneWave.on_shell(1.0, eA=eA).nu + 0.1, 0.0, 1.0, eA)
    A, e = pw.potential()
    report = residual(plane_wave_function(pw), A, e, pw.mass_term(), POINTS)
    assert report.analytic >= 0.01
    assert report.analytic == pytest.approx(abs(pw.dispersion_residual), rel=1e-12)


def test_small_dispersion_violation_shows_in_the_residual():
    pw = PlaneWave(math.sqrt(1.001), 0.0, 1.0)
    assert pw.dispersion_residual == pytest.approx(1e-3)
    A, e = pw.potential()
    assert residual(plane_wave_function(pw), A, e, pw.mass_term(), POINTS).analytic >= 1e-4
    with pytest.raises(DispersionViolation):
        bound_solution(pw)


def test_mass_term_must_match_the_mass():
    with pytest.raises(ValueError):
        bound_solution(PlaneWave.on_shell(1.0), M=-2j * I0)


def test_nonpositive_mass():
    with pytest.raises(NonpositiveMass):
        free_solution(0.0)
    with pytest.raises(NonpositiveMass):
        PlaneWave.on_shell(-1.0)


def test_charge_sign_must_be_a_sign():
    with pytest.raises(ValueError):
        PlaneWave(1.0, 0.0, 1.0, charge_sign=2)


def test_second_order_convergence():
    pw = PlaneWave.on_shell(1.0, mu=0.7, eA=0.2)
    A, e = pw.potential()
    order, constant = convergence_order(bound_solution(pw), A, e, pw.mass_term(), POINTS, h=1e-2)
    assert order == pytest.approx(2.0, abs=0.1)
    assert constant > 0


def test_operator_symbol_is_the_action_of_d():
    pw = PlaneWave.on_shell(1.2, mu=0.3, eA=0.1)
    phi = plane_wave_function(pw)
    for p in POINTS:
        assert apply_d(phi.derivative, phi.phi1, p).allclose(pw.operator_symbol() * phi.phi1(p), 1e-14)


def test_on_shell_dispersion():
    pw = PlaneWave.on_shell(1.0, mu=0.75, eA=-0.25)
    assert pw.nu == pytest.approx(1.0)
    assert pw.dispersion_residual == pytest.approx(0.0, abs=1e-15)
    assert pw.potential()[0].allclose(-1j * -0.25 * I0)
    assert pw.mass_term() == -1j * I0
    assert list(pw.wavevector) == [-1.0, 0.75, 0.0, 0.0]
    assert pw.operator_symbol().allclose(1.0 * I0 + 0.75j * I1)


def test_de_broglie():
    assert de_broglie(1.0, 0.6) == pytest.approx((1.25, 0.75))
    assert de_broglie(2.0, 0.0) == (2.0, 0.0)
    with pytest.raises(SuperluminalSpeed):
        de_broglie(1.0, 1.0)


@pytest.mark.parametrize("n_theta", [1, 2, 5])
def test_free_wave_is_single_valued_on_the_quantized_circle(n_theta):
    mass = 0.8
    assert phase_at_circle(mass, n_theta / mass) == pytest.approx(1.0, abs=1e-12)
    assert abs(phase_at_circle(mass, (n_theta + 0.5) / mass) + 1.0) <= 1e-12


def test_circle_wave():
    assert CircleWave(2, 4.0).eta_l == 0.5
    with pytest.raises(ValueError):
        CircleWave(0, 1.0)
    with pytest.raises(ValueError):
        CircleWave(1, 0.0)
    assert math.isclose(CircleWave(3, 1.5).eta_l, 2.0)
