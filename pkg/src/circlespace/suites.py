"""Seeded invariant suites behind ``circlespace verify``.

Each suite is a function ``(rng, config, fault) -> list of (id, max_error, tolerance)``.
Suites draw all randomness from the generator they are given, so a report is a
pure function of the seed.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np

from .biquaternion import (
    I0,
    I1,
    I2,
    I3,
    UNITS,
    Biquaternion,
    FourVector,
    conj,
    embed,
    norm_form,
    random_biquaternion,
    random_real_unit,
)
from .circle_spaces import (
    ChartKind,
    SpaceChart,
    anticommutator,
    chart_map,
    rotate_spatial_basis,
    rotate_temporal_basis,
    scale_potential,
    spatial_derivative_matrix,
    square,
    temporal_derivative_matrix,
)
from .config import RunConfig
from .errors import ConfigError, DispersionViolation, LightConePoint
from .logger import logger
from .planewave import PlaneWave, bound_solution, convergence_order, free_solution, residual
from .qed_decomposition import (
    coefficient_d,
    coefficient_d_prime,
    d_prime_bracket,
    point_solution,
    replacement_map,
    solve_rho,
)
from .reflector import DiagPair, Reflector, reflector_mul
from .reporter import VerificationReport, generate_report, merge_reports
from .spectrum import (
    QuantumNumbers,
    bohr_first_equation_residual,
    bohr_solve,
    coupled_solve,
    sommerfeld_energy,
    sommerfeld_expansion,
    spectrum_line,
)
from .tachyon import (
    DashedKinematics,
    TachyonRotor,
    boost_fourvector,
    componentwise_map,
    dashed_energy,
    dirac_form_residual,
    frame_energy,
    lorentz_fourvector,
    tachyon_fourvector,
    tachyon_quaternion,
    tachyon_reflector,
)

Case = tuple[str, float, float]
Suite = Callable[[np.random.Generator, RunConfig, str | None], list[Case]]

FAULTS = ("tachyon-sign",)
ALPHAS = (1.0 / 137.0, 0.3, 0.6)
RANDOM_SAMPLES = 1000


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(b))


# ----------------------------------------------------------------------
# algebra
# ----------------------------------------------------------------------
def algebra_suite(rng: np.random.Generator, config: RunConfig, fault: str | None = None) -> list[Case]:
    tol = config.tol
    table = max(
        (I1 * I1 + I0).max_abs_diff(Biquaternion()),
        (I2 * I2 + I0).max_abs_diff(Biquaternion()),
        (I3 * I3 + I0).max_abs_diff(Biquaternion()),
        (I1 * I2).max_abs_diff(I3),
        (I2 * I3).max_abs_diff(I1),
        (I3 * I1).max_abs_diff(I2),
    )

    assoc, conj_err, norm_err, matrix_err, refl_err = 0.0, 0.0, 0.0, 0.0, 0.0
    for _ in range(200):
        a, b, c = (random_biquaternion(rng) for _ in range(3))
        assoc = max(assoc, ((a * b) * c).max_abs_diff(a * (b * c)))
        conj_err = max(conj_err, conj(a * b).max_abs_diff(conj(b) * conj(a)))
        norm_err = max(norm_err, abs(norm_form(a * b) - norm_form(a) * norm_form(b)) / max(1.0, abs(norm_form(a * b))))
        matrix_err = max(matrix_err, float(np.max(np.abs((a * b).as_matrix() - a.as_matrix() @ b.as_matrix()))))
        ra, rb = Reflector(a, b), Reflector(c, a)
        refl_err = max(
            refl_err,
            float(np.max(np.abs(reflector_mul(ra, rb).as_matrix() - ra.as_matrix() @ rb.as_matrix()))),
            float(np.max(np.abs((DiagPair(b, c) * ra).as_matrix() - DiagPair(b, c).as_matrix() @ ra.as_matrix()))),
        )

    unit_refl = [Reflector.of(u) for u in UNITS]
    anti = 0.0
    for i, a in enumerate(unit_refl):
        anti = max(anti, (square(a) - DiagPair(I0, I0)).max_abs())
        for b in unit_refl[i + 1 :]:
            anti = max(anti, anticommutator(a, b).max_abs())

    return [
        ("unit_table", table, 0.0),
        ("associativity", assoc, tol),
        ("conj_antihomomorphism", conj_err, tol),
        ("norm_multiplicative", norm_err, tol),
        ("matrix_representation", matrix_err, tol),
        ("reflector_block_products", refl_err, tol),
        ("unit_reflector_anticommutation", anti, 0.0),
    ]


# ----------------------------------------------------------------------
# charts
# ----------------------------------------------------------------------
def _off_cone_point(rng: np.random.Generator) -> list[float]:
    x0 = rng.uniform(-3.0, 3.0)
    x3 = rng.choice((-1.0, 1.0)) * (abs(x0) + rng.uniform(0.1, 3.0))
    return [x0, rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0), x3]


def charts_suite(rng: np.random.Generator, config: RunConfig, fault: str | None = None) -> list[Case]:
    tol = config.tol
    lorentz = SpaceChart(ChartKind.L)
    cases = []
    for kind in (ChartKind.T, ChartKind.M, ChartKind.S):
        worst = 0.0
        for _ in range(RANDOM_SAMPLES):
            chart = SpaceChart(kind, R0=rng.uniform(0.5, 2.0), R1=rng.uniform(0.5, 2.0))
            x = _off_cone_point(rng)
            back = chart_map(chart_map(x, lorentz, chart), chart, lorentz)
            worst = max(worst, max(abs(a - b) for a, b in zip(back, x)) / max(1.0, max(abs(v) for v in x)))
        cases.append((f"round_trip_L_{kind}", worst, tol))

    temporal, spatial, det = 0.0, 0.0, 0.0
    for _ in range(100):
        theta0, theta1 = rng.uniform(-2.0, 2.0), rng.uniform(-math.pi, math.pi)
        temporal = max(temporal, rotate_temporal_basis(theta0).max_relation_error())
        spatial = max(spatial, rotate_spatial_basis(theta1).max_relation_error())
        det = max(
            det,
            abs(np.linalg.det(temporal_derivative_matrix(theta0)) - 1.0),
            abs(np.linalg.det(spatial_derivative_matrix(theta1)) - 1.0),
        )
    cases += [
        ("rotated_temporal_basis", temporal, 1e-13),
        ("rotated_spatial_basis", spatial, 1e-13),
        ("derivative_determinants", det, tol),
    ]

    # A0 = e/r1 seen on the spatial circle is the constant e/R1 for every r1.
    inverse_distance = 0.0
    for _ in range(RANDOM_SAMPLES):
        e, R1 = rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0)
        target = embed(FourVector(e / R1, 0.0, 0.0, 0.0))
        for r1 in rng.uniform(0.1, 10.0, size=3).tolist():
            scaled = scale_potential(embed(FourVector(e / r1, 0.0, 0.0, 0.0)), r1, R1)
            inverse_distance = max(inverse_distance, scaled.max_abs_diff(target) / max(1.0, abs(e / R1)))
    cases.append(("inverse_distance_potential", inverse_distance, tol))

    excluded = 0.0
    for x0 in (1.0, -2.0, 0.0):
        try:
            chart_map([x0, 0.0, 0.0, abs(x0)], lorentz, SpaceChart(ChartKind.T, R0=1.0))
            excluded = 1.0
        except LightConePoint:
            pass
    cases.append(("light_cone_excluded", excluded, 0.0))
    return cases


# ----------------------------------------------------------------------
# dirac
# ----------------------------------------------------------------------
def _random_plane_wave(rng: np.random.Generator) -> PlaneWave:
    return PlaneWave.on_shell(
        mass=rng.uniform(0.5, 2.0),
        mu=rng.uniform(-1.5, 1.5),
        eA=rng.uniform(-0.5, 0.5),
        charge_sign=int(rng.choice((-1, 1))),
    )


def dirac_suite(rng: np.random.Generator, config: RunConfig, fault: str | None = None) -> list[Case]:
    tol = config.tol
    points = rng.uniform(-1.0, 1.0, size=(8, 4))
    free_fd, free_an, bound_fd, bound_an, general_an, order_err = 0.0, 0.0, 0.0, 0.0, 0.0, 0.0

    for mass in (0.5, 1.0, 2.0):
        report = residual(free_solution(mass), None, 1.0, -1j * mass * I0, points)
        free_fd, free_an = max(free_fd, report.fd), max(free_an, report.analytic)

    for _ in range(20):
        pw = _random_plane_wave(rng)
        A, e = pw.potential()
        report = residual(bound_solution(pw), A, e, pw.mass_term(), points)
        bound_fd, bound_an = max(bound_fd, report.fd), max(bound_an, report.analytic)

        # Any mass term with M M‡ = -m^2 admits the same wave.
        M = (-1j * pw.mass) * random_real_unit(rng)
        general = residual(bound_solution(pw, M), A, e, M, points)
        general_an = max(general_an, general.analytic)

    pw = PlaneWave.on_shell(1.0, mu=0.7, eA=0.2)
    A, e = pw.potential()
    order, _ = convergence_order(bound_solution(pw), A, e, pw.mass_term(), points, h=1e-2)
    order_err = abs(order - 2.0)

    state_an = 0.0
    for alpha in ALPHAS:
        for qn in (QuantumNumbers(1, 0), QuantumNumbers(2, 1), QuantumNumbers(3, 2)):
            for wave in (bohr_solve(alpha, qn.n_theta, 1.0).plane_wave(), coupled_solve(alpha, qn, 1.0).plane_wave()):
                A, e = wave.potential()
                state_an = max(state_an, residual(bound_solution(wave), A, e, wave.mass_term(), points).analytic)

    off_shell = 1.0
    try:
        bound_solution(PlaneWave(2.0, 0.0, 1.0))
    except DispersionViolation:
        off_shell = 0.0

    return [
        ("free_wave_analytic", free_an, tol),
        ("free_wave_finite_difference", free_fd, 1e-8),
        ("bound_wave_analytic", bound_an, tol),
        ("bound_wave_finite_difference", bound_fd, 1e-8),
        ("general_mass_term_analytic", general_an, tol),
        ("bound_state_waves_analytic", state_an, tol),
        ("convergence_order", order_err, 0.1),
        ("off_shell_rejected", off_shell, 0.0),
    ]


# ----------------------------------------------------------------------
# tachyon
# ----------------------------------------------------------------------
def _reference_map(fault: str | None) -> Callable[[Biquaternion, bool], Biquaternion]:
    if fault == "tachyon-sign":

        def faulty(x: Biquaternion, conjugate: bool = False) -> Biquaternion:
            mapped = componentwise_map(x, conjugate)
            return Biquaternion(-mapped.c[0], *mapped.c[1:])

        return faulty
    return componentwise_map


def tachyon_suite(rng: np.random.Generator, config: RunConfig, fault: str | None = None) -> list[Case]:
    tol = config.tol
    reference = _reference_map(fault)
    rotor_err, conj_err, refl_err = 0.0, 0.0, 0.0
    for _ in range(RANDOM_SAMPLES):
        x = random_biquaternion(rng)
        rotor_err = max(rotor_err, tachyon_quaternion(x).max_abs_diff(reference(x, False)))
        conj_err = max(conj_err, tachyon_quaternion(x, conjugate=True).max_abs_diff(reference(x, True)))
    for _ in range(100):
        X, Y = random_biquaternion(rng), random_biquaternion(rng)
        mapped = tachyon_reflector(Reflector(X, conj(Y)))
        refl_err = max(
            refl_err,
            mapped.top.max_abs_diff(reference(X, False)),
            mapped.bottom.max_abs_diff(reference(conj(Y), True)),
        )

    double, embed_err, identity_err = 0.0, 0.0, 0.0
    for _ in range(RANDOM_SAMPLES):
        X = FourVector.from_sequence(rng.uniform(-3.0, 3.0, 4))
        twice = tachyon_fourvector(tachyon_fourvector(X))
        double = max(double, float(np.max(np.abs(twice.as_array() - X.as_array() * np.array([-1, -1, 1, 1])))))
        x = random_biquaternion(rng)
        rotated = Biquaternion(-x.c[0], -x.c[1], x.c[2], x.c[3])
        double = max(double, componentwise_map(componentwise_map(x)).max_abs_diff(rotated))
        once = tachyon_fourvector(X)
        embed_err = max(
            embed_err,
            embed(once).max_abs_diff(tachyon_quaternion(embed(X))),
            embed(tachyon_fourvector(once)).max_abs_diff(tachyon_quaternion(embed(once))),
        )
        identity_err = max(identity_err, tachyon_quaternion(x, TachyonRotor.identity()).max_abs_diff(x))

    dot_err, dashed_err, norm_err = 0.0, 0.0, 0.0
    for _ in range(RANDOM_SAMPLES):
        eta, mu = rng.uniform(0.1, 3.0), rng.uniform(-3.0, 3.0)
        ds0, ds1 = rng.uniform(0.1, 2.0), rng.choice((-1.0, 1.0)) * rng.uniform(0.1, 2.0)
        dashed = DashedKinematics.from_frame(ds0, ds1, eta, mu)
        dot_err = max(dot_err, _rel(dashed.dot(), eta * ds0 + mu * ds1))
        v = frame_energy(eta, mu, ds0, ds1)
        dashed_err = max(dashed_err, _rel(dashed_energy(v, ds0, ds1, eta, mu) * ds1, v * ds0))
        rotor = TachyonRotor(random_real_unit(rng))
        x = random_biquaternion(rng)
        drift = abs(norm_form(tachyon_quaternion(x, rotor)) - norm_form(x))
        norm_err = max(norm_err, drift / max(1.0, abs(norm_form(x))))

    invariance, boost_err = 0.0, 0.0
    for _ in range(50):
        invariance = max(invariance, dirac_form_residual(_random_plane_wave(rng), rng.uniform(-1.0, 1.0, 4)))
        X = FourVector.from_sequence(rng.uniform(-3.0, 3.0, 4))
        v = rng.uniform(-0.9, 0.9)
        boosted, reference_boost = boost_fourvector(X, v), lorentz_fourvector(X, v)
        boost_err = max(boost_err, float(np.max(np.abs(boosted.as_array() - reference_boost.as_array()))))

    return [
        ("rotor_matches_componentwise", rotor_err, 1e-14),
        ("conjugate_rotor_matches_componentwise", conj_err, 1e-14),
        ("reflector_blocks_componentwise", refl_err, 1e-14),
        ("double_application", double, 0.0),
        ("embedding_commutes", embed_err, 1e-14),
        ("identity_rotor", identity_err, 0.0),
        ("dot_product_invariance", dot_err, 1e-13),
        ("dashed_energy_relation", dashed_err, 1e-13),
        ("general_rotor_norm_form", norm_err, 1e-13),
        ("dirac_form_invariance", invariance, tol),
        ("boost_rotor_matches_lorentz", boost_err, tol),
    ]


# ----------------------------------------------------------------------
# spectrum
# ----------------------------------------------------------------------
def spectrum_suite(rng: np.random.Generator, config: RunConfig, fault: str | None = None) -> list[Case]:
    tol = config.tol
    route, reference, dashed, heavy = 0.0, 0.0, 0.0, 0.0
    for alpha in ALPHAS:
        for n_theta in range(1, 9):
            for n_r in range(0, 9):
                state = coupled_solve(alpha, QuantumNumbers(n_theta, n_r), 1.0)
                route = max(route, state.route_gap)
                reference = max(reference, abs(state.nu_m - sommerfeld_energy(alpha, n_theta, n_r)))
                dashed = max(dashed, abs(state.vprime_m - 1.0 / state.mu_m) / state.vprime_m)
                heavy = max(
                    heavy,
                    abs(state.m_h**2 - (state.eta_h**2 - state.mu_h**2)) / state.m_h**2,
                    abs(state.mu_h / state.eta_h - state.bohr.v_b),
                    abs(state.eta_h - state.mu_h * state.bohr.v_b - state.nu_h) / state.nu_h,
                )

    reduction, web, first = 0.0, 0.0, 0.0
    for n_theta in range(1, 9):
        for alpha in (1.0 / 137.0, 0.3, 0.9 * n_theta):
            bohr = bohr_solve(alpha, n_theta, 1.0)
            reduction = max(reduction, _rel(coupled_solve(alpha, QuantumNumbers(n_theta, 0), 1.0).nu_m, bohr.nu_b))
            web = max(web, max(abs(r) for r in bohr.quantization_residuals().values()))
            first = max(first, abs(bohr_first_equation_residual(bohr, alpha)) / (alpha / bohr.R1_b))

    violations = 0
    for alpha in ALPHAS:
        for n_theta in range(1, 6):
            energies = [coupled_solve(alpha, QuantumNumbers(n_theta, n_r), 1.0).nu_m for n_r in range(6)]
            violations += sum(1 for a, b in zip(energies, energies[1:]) if not b > a)
        for n_r in range(6):
            energies = [coupled_solve(alpha, QuantumNumbers(n_theta, n_r), 1.0).nu_m for n_theta in range(1, 6)]
            violations += sum(1 for a, b in zip(energies, energies[1:]) if not b > a)

    alpha = 1.0 / 137.0
    expansion = max(
        abs(coupled_solve(alpha, QuantumNumbers(k, n_r), 1.0).nu_m - sommerfeld_expansion(alpha, k, n_r))
        for k in range(1, 6)
        for n_r in range(6)
    )
    split = coupled_solve(alpha, QuantumNumbers(2, 0), 1.0).nu_m - coupled_solve(alpha, QuantumNumbers(1, 1), 1.0).nu_m
    splitting_err = abs(split / (alpha**4 / 32.0) - 1.0)

    line = spectrum_line(config.alpha, QuantumNumbers(1, 0), config.mass_ev)
    ground = abs(line.binding_ev - config.mass_ev * math.expm1(0.5 * math.log1p(-(config.alpha**2))))

    return [
        ("route_agreement", route, tol),
        ("sommerfeld_reference", reference, tol),
        ("dashed_energy_consistency", dashed, tol),
        ("heavy_electron_closure", heavy, 1e-13),
        ("n_r_zero_reduction", reduction, 1e-13),
        ("quantization_web", web, 1e-13),
        ("first_bohr_equation", first, 1e-13),
        ("monotonicity_violations", float(violations), 0.0),
        ("fourth_order_expansion", expansion, tol),
        ("fine_structure_splitting", splitting_err, 0.01),
        ("ground_state_binding_ev", ground, 1e-6),
    ]


# ----------------------------------------------------------------------
# qed
# ----------------------------------------------------------------------
def qed_suite(rng: np.random.Generator, config: RunConfig, fault: str | None = None) -> list[Case]:
    tol = config.tol
    d_err = max(abs(coefficient_d(1) - 3.0 / (4.0 * math.pi)), abs(coefficient_d(2) - 3.0 / (16.0 * math.pi)))

    reduction, nonpositive, bracket = 0.0, 0, 0.0
    for n_theta in range(1, 11):
        for n_r in range(0, 11):
            qn = QuantumNumbers(n_theta, n_r)
            for alpha in (0.0, 1.0 / 137.0, 0.5):
                d_prime = coefficient_d_prime(qn, alpha)
                nonpositive += int(not d_prime > 0)
                if n_r == 0:
                    reduction = max(reduction, abs(d_prime - coefficient_d(n_theta)))
                exact = d_prime_bracket(qn, alpha)
                bracket = max(bracket, abs((replacement_map(n_theta, alpha) + n_r) ** 2 + alpha**2 - exact) / exact)

    closure, misordered = 0.0, 0
    for _ in range(RANDOM_SAMPLES):
        A = rng.uniform(-3.0, 3.0)
        mass = rng.uniform(0.0, 2.0)
        e = rng.choice((-1.0, 1.0)) * rng.uniform(0.05, 1.0)
        d_prime = coefficient_d_prime(QuantumNumbers(int(rng.integers(1, 6)), int(rng.integers(0, 6))), 1.0 / 137.0)
        solution = solve_rho(A, mass, e, d_prime)
        closure = max(closure, *solution.residuals)
        misordered += int(solution.rho_plus < solution.rho_minus)

    zero = solve_rho(0.0, 1.0, 0.3, coefficient_d(1))
    zero_err = max(abs(zero.rho_plus), abs(zero.rho_minus))

    orbit = 0.0
    for alpha in ALPHAS:
        point = point_solution(alpha, QuantumNumbers(2, 1), 1.0)
        v = point.state.v_m
        orbit = max(orbit, _rel(alpha / point.radius, v * v / math.sqrt(1.0 - v * v)))
        orbit = max(orbit, *point.charge_density().residuals)

    return [
        ("d_values", d_err, 1e-15),
        ("d_prime_reduces_to_d", reduction, 0.0),
        ("d_prime_nonpositive_count", float(nonpositive), 0.0),
        ("bracket_identity", bracket, 1e-14),
        ("root_closure", closure, tol),
        ("branch_order_violations", float(misordered), 0.0),
        ("zero_potential", zero_err, 0.0),
        ("orbit_point_solution", orbit, tol),
    ]


SUITES: dict[str, Suite] = {
    "algebra": algebra_suite,
    "charts": charts_suite,
    "dirac": dirac_suite,
    "tachyon": tachyon_suite,
    "spectrum": spectrum_suite,
    "qed": qed_suite,
}
SUITE_NAMES = (*SUITES, "all")


def run_suite(name: str, config: RunConfig, fault: str | None = None) -> VerificationReport:
    """
    Run one suite, or every suite for ``all``, with a generator seeded from ``config.seed``.

    Raises:
        ConfigError: for an unknown suite or fault name.
    """
    if fault is not None and fault not in FAULTS:
        raise ConfigError(f"Unknown fault {fault!r}; expected one of {', '.join(FAULTS)}")
    if name == "all":
        return merge_reports("all", [run_suite(n, config, fault) for n in SUITES])
    if name not in SUITES:
        raise ConfigError(f"Unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}")

    rng = np.random.default_rng(config.seed)
    report = generate_report(name, SUITES[name](rng, config, fault))
    for case in report.failures:
        logger.warning("Suite %s: %s failed with error %.3e > %.3e", name, case.id, case.max_error, case.tolerance)
    logger.info("Suite %s: %d/%d cases passed", name, len(report.cases) - len(report.failures), len(report.cases))
    return report
