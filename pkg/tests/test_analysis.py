import math

import numpy as np
import pytest
from scipy import integrate as sp_integrate

from focklab.analysis import (
    DistanceParams,
    FockParams,
    classify_growth,
    classify_membership,
    coord_energy,
    distance,
    distance_p,
    distance_slope_origin,
    dual_distance_bounds,
    energy,
    incomplete_gamma,
    kernel_abs_integral,
    norm_inf,
    norm_p,
    project,
    second_moment_direct,
    second_moment_identity,
    sup_unbounded,
    truncated_p_integrals,
)
from focklab.calculus import partial
from focklab.core import EntireFn, Term, abs2
from focklab.integrate import MCIntegrator

from conftest import random_points

SQRT_PI_OVER_2 = 0.8862269254527579  # (1/2) sqrt(pi), the |u| moment at alpha = 1
# int |e^{z conj(u)} - 1|^2 dlam_1(u) at |z| = 1 equals e - 1 (verified by
# brute-force plane quadrature before freezing; expansion gives e^{b^2|z|^2/a} - 1)
P2_DISTANCE_AT_ONE = 1.3108324944320862  # sqrt(e - 1)


def monomial_norm_oracle(m: int, p: float, alpha: float) -> float:
    """||z^m||_{p,alpha} by radial quadrature (independent of the package)."""
    val, _ = sp_integrate.quad(
        lambda r: (p * alpha / (2 * math.pi))
        * r ** (p * m)
        * math.exp(-p * alpha * r * r / 2.0)
        * 2.0 * math.pi * r,
        0,
        np.inf,
    )
    return val ** (1.0 / p)


# ---------------------------------------------------------------------------
# p-norms
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p", [0.5, 1.0, 2.0, 4.0])
@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
def test_norm_of_one(p, alpha, quad):
    est = norm_p(EntireFn.constant(1.0, 1), FockParams(alpha, p, 1), quad)
    assert est.value == pytest.approx(1.0, rel=1e-10)


def test_norm_of_one_two_variables(quad):
    est = norm_p(EntireFn.constant(1.0, 2), FockParams(1.0, 2.0, 2), quad)
    assert est.value == pytest.approx(1.0, rel=1e-10)


@pytest.mark.parametrize("p", [0.5, 1.0, 2.0, 4.0])
def test_normalized_kernel_norm_is_one(p, quad, rng):
    alpha = 1.0
    for w in random_points(rng, 3, 1, scale=1.5):
        kw = EntireFn.normalized_kernel(alpha, w)
        est = norm_p(kw, FockParams(alpha, p, 1), quad)
        assert est.value == pytest.approx(1.0, rel=1e-6)


def test_monomial_norms_vs_oracle(quad):
    # ||z^m||_{2,alpha}^2 = m!/alpha^m; p = 2 exactly, p = 0.5 via the oracle
    est = norm_p(EntireFn.monomial((3,)), FockParams(1.0, 2.0, 1), quad)
    assert est.value == pytest.approx(math.sqrt(6.0), rel=1e-10)
    oracle = monomial_norm_oracle(3, 2.0, 1.0)
    assert est.value == pytest.approx(oracle, rel=1e-10)
    est2 = norm_p(EntireFn.monomial((1,)), FockParams(2.0, 2.0, 1), quad)
    assert est2.value == pytest.approx(math.sqrt(0.5), rel=1e-10)


def test_norm_homogeneity(quad):
    f = EntireFn.kernel(1.0, [0.5]) + EntireFn.monomial((2,), 1j)
    base = norm_p(f, FockParams(1.0, 2.0, 1), quad).value
    scaled = norm_p((3.0 - 4.0j) * f, FockParams(1.0, 2.0, 1), quad).value
    assert scaled == pytest.approx(5.0 * base, rel=1e-10)


def test_norm_mc_agrees(mc, quad):
    f = EntireFn.normalized_kernel(1.0, [1.0])
    q = norm_p(f, FockParams(1.0, 1.0, 1), quad)
    m = norm_p(f, FockParams(1.0, 1.0, 1), mc)
    assert abs(q.value - m.value) <= max(4.0 * m.stderr, 1e-4)


def test_divergent_norm_is_flagged_not_raised(quad):
    witness = EntireFn.exp_quadratic(0.5)  # critical growth at alpha = 1
    est = norm_p(witness, FockParams(1.0, 2.0, 1), quad)
    assert math.isinf(est.value)
    assert est.method == "divergent"


# ---------------------------------------------------------------------------
# sup norms
# ---------------------------------------------------------------------------

def test_sup_norm_examples():
    assert norm_inf(EntireFn.constant(1.0, 1), 1.0).value == pytest.approx(1.0, rel=1e-12)
    res = norm_inf(EntireFn.monomial((1,)), 1.0)
    assert res.value == pytest.approx(math.exp(-0.5), rel=1e-9)
    assert abs(abs(res.argmax[0]) - 1.0) < 1e-4


def test_sup_norm_kernel_peak(rng):
    for w in random_points(rng, 3, 1, scale=1.5):
        res = norm_inf(EntireFn.normalized_kernel(1.0, w), 1.0)
        assert res.value == pytest.approx(1.0, rel=1e-8)
        assert abs(res.argmax[0] - w[0]) < 1e-3


def test_sup_norm_two_variables():
    res = norm_inf(EntireFn.normalized_kernel(1.0, [0.8, -0.5j]), 1.0)
    assert res.value == pytest.approx(1.0, rel=1e-7)


def test_sup_norm_witness_critical_ridge():
    # |e^{(a/2) z^2}| e^{-a|z|^2/2} = e^{-a y^2}: sup 1, attained on the real axis
    res = norm_inf(EntireFn.exp_quadratic(0.5), 1.0)
    assert not res.divergent
    assert res.value == pytest.approx(1.0, rel=1e-10)


def test_sup_norm_detects_unbounded_growth():
    res = norm_inf(EntireFn.exp_quadratic(0.75), 1.0)
    assert res.divergent and math.isinf(res.value)
    assert sup_unbounded(EntireFn.exp_quadratic(0.5 + 1e-6), 1.0)
    assert not sup_unbounded(EntireFn.kernel(1.0, [3.0]), 1.0)


def test_sup_unbounded_critical_linear_part():
    # e^{(a/2) z^2 + z} grows along one of the two critical rays
    f = EntireFn(1, (Term({(0,): 1.0 + 0j}, (1.0 + 0j,), 0.5 + 0j),))
    assert sup_unbounded(f, 1.0)


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

def test_distance_zero_at_equal_points(quad, mc):
    dp = DistanceParams.canonical(1.0)
    for integ in (quad, mc):
        est = distance(dp, [1 + 1j], [1 + 1j], integ)
        assert est.value == 0.0
        assert est.stderr == 0.0


def test_distance_sandwich_at_two(quad):
    # e^{b^2|z|^2/4a} -+ 1 brackets d(z, 0); at a = b = 1, |z| = 2 that is e -+ 1
    est = distance(DistanceParams(1.0, 1.0), [2.0], [0.0], quad)
    assert math.e - 1.0 <= est.value <= math.e + 1.0


def test_kernel_abs_integral_closed_form():
    assert kernel_abs_integral(1.0, 1.0, [1.0]) == pytest.approx(math.exp(0.25), rel=1e-14)
    assert kernel_abs_integral(0.5, 1.0, [3.0]) == pytest.approx(math.exp(4.5), rel=1e-14)


def test_distance_slope_matches_moment_constant(quad):
    # d_alpha(z,0)/|z| -> beta * (1/2) sqrt(pi/alpha_meas) as |z| -> 0
    dp = DistanceParams.canonical(1.0)  # alpha_meas 0.5, beta 1
    est = distance_slope_origin(dp, 1e-3, quad)
    expected = 1.0 * 0.5 * math.sqrt(math.pi / 0.5)
    assert est.value == pytest.approx(expected, rel=1e-3)


def test_distance_p2_verified_closed_form(quad, mc):
    # brute-force-verified: the squared distance is e^{b^2|z|^2/a} - 1
    dp = DistanceParams(1.0, 1.0, 2.0)
    est = distance_p(dp, [1.0], [0.0], quad)
    assert est.value == pytest.approx(P2_DISTANCE_AT_ONE, rel=1e-9)
    est_mc = distance_p(dp, [1.0], [0.0], mc)
    assert abs(est_mc.value - P2_DISTANCE_AT_ONE) <= 4.0 * est_mc.stderr


def test_distance_symmetry_exact(quad):
    dp = DistanceParams.canonical(1.0)
    a = distance(dp, [1.0], [0.5j], quad).value
    b = distance(dp, [0.5j], [1.0], quad).value
    assert a == b


def test_distance_unitary_invariance_two_vars(quad, rng):
    dp = DistanceParams.canonical(1.0)
    z = np.array([1.0, 0.5 - 0.5j])
    w = np.array([-0.3j, 0.8])
    base = distance(dp, z, w, quad).value
    for _ in range(5):
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        u, _ = np.linalg.qr(m)
        rotated = distance(dp, u @ z, u @ w, quad).value
        assert rotated == pytest.approx(base, rel=2e-3)


def test_distance_triangle_quick(mc):
    dp = DistanceParams.canonical(1.0)
    z, u, w = [0.5], [1.0 - 0.5j], [-0.3 + 0.2j]
    dzw = distance(dp, z, w, mc)
    dzu = distance(dp, z, u, MCIntegrator(100_000, 778))
    duw = distance(dp, u, w, MCIntegrator(100_000, 779))
    slack = dzu.value + duw.value - dzw.value
    sigma = math.sqrt(dzw.stderr ** 2 + dzu.stderr ** 2 + duw.stderr ** 2)
    assert slack >= -3.0 * sigma


# ---------------------------------------------------------------------------
# growth integrals
# ---------------------------------------------------------------------------

def test_energy_at_origin(quad):
    est = energy(2.0, [0.0], quad)  # measure parameter 1
    assert est.value == pytest.approx(SQRT_PI_OVER_2, rel=1e-10)


def test_energy_proof_bounds(quad):
    est = energy(1.0, [2.0], quad)
    assert est.value >= 2.0 * math.exp(2.0)  # |z| e^{a|z|^2/2}
    assert est.value <= math.sqrt(6.0) * math.exp(2.0)  # sqrt(2n/a + |z|^2) e^{a|z|^2/2}


def test_energy_mc_cross(quad, mc):
    eq = energy(1.0, [1.5], quad)
    em = energy(1.0, [1.5], mc)
    assert abs(eq.value - em.value) <= max(4.0 * em.stderr, 1e-4 * eq.value)


def test_coord_energy_examples(quad, mc):
    est = coord_energy(2.0, [0.0], 1, quad)
    assert est.value == pytest.approx(SQRT_PI_OVER_2, rel=1e-10)
    # tilted coordinate carries more mass
    c1 = coord_energy(1.0, [3.0, 0.0], 1, quad)
    c2 = coord_energy(1.0, [3.0, 0.0], 2, quad)
    assert c1.value > c2.value
    # symmetric points give symmetric coordinate energies
    s1 = coord_energy(1.0, [1.0, 1.0], 1, mc)
    s2 = coord_energy(1.0, [1.0, 1.0], 2, MCIntegrator(100_000, 1234))
    assert abs(s1.value - s2.value) <= 4.0 * math.hypot(s1.stderr, s2.stderr)
    with pytest.raises(ValueError):
        coord_energy(1.0, [1.0], 2, quad)


def test_second_moment_identity_values():
    assert second_moment_identity(2.0, [0.0]) == pytest.approx(1.0, rel=1e-14)
    assert second_moment_identity(2.0, [0.0, 0.0]) == pytest.approx(2.0, rel=1e-14)
    assert second_moment_identity(1.0, [math.sqrt(2.0)]) == pytest.approx(
        4.0 * math.e, rel=1e-14
    )


def test_second_moment_direct_matches(quad, rng):
    for n in (1, 2):
        for z in random_points(rng, 3, n, scale=1.0):
            closed = second_moment_identity(1.0, z)
            direct = second_moment_direct(1.0, z, quad)
            assert direct.value == pytest.approx(closed, rel=1e-6)


def test_difference_quotient_cap(quad, rng):
    # d_alpha(z, w)/|z - w| <= alpha E(z) (1 + 1%) at |z - w| = 1e-3
    alpha = 1.0
    dp = DistanceParams.canonical(alpha)
    for z in random_points(rng, 4, 1, scale=1.2):
        w = z + 1e-3 * np.exp(1j * rng.uniform(0, 2 * np.pi))
        d = distance(dp, z, w, quad).value
        cap = alpha * energy(alpha, z, quad).value
        assert d / 1e-3 <= cap * 1.01


# ---------------------------------------------------------------------------
# projection
# ---------------------------------------------------------------------------

def test_projection_reproduces_square(quad):
    g = EntireFn.monomial((2,))
    for zv in (0.5, 1 + 0.5j, -1.2):
        est = project(g, 1.0, [zv], quad)
        assert est.value == pytest.approx(zv ** 2, rel=1e-10, abs=1e-12)


def test_projection_kills_antiholomorphic(quad):
    est = project(lambda U: np.conj(U[:, 0]), 1.0, [0.7 - 0.1j], quad)
    assert abs(est.value) <= 1e-12


def test_projection_of_modulus_squared(quad):
    for alpha in (1.0, 2.0):
        est = project(lambda U: np.abs(U[:, 0]) ** 2, alpha, [0.4 + 0.2j], quad)
        assert est.value == pytest.approx(1.0 / alpha, rel=1e-10)


def test_projection_mc_route(mc):
    g = EntireFn.monomial((1,))
    est = project(g, 1.0, [0.8], mc)
    assert abs(est.value - 0.8) <= max(6.0 * est.stderr, 1e-3)


# ---------------------------------------------------------------------------
# incomplete gamma
# ---------------------------------------------------------------------------

def test_incomplete_gamma_examples():
    assert incomplete_gamma(1, 1.0) == pytest.approx(math.exp(-1.0), rel=1e-14)
    assert incomplete_gamma(2, 1.0) == pytest.approx(2.0 * math.exp(-1.0), rel=1e-14)
    ratio = incomplete_gamma(3, 50.0) / (2500.0 * math.exp(-50.0))
    assert ratio == pytest.approx(1.0408, abs=1e-12)


def test_incomplete_gamma_vs_direct_integral():
    for n in range(1, 7):
        for x in (1.0, 5.0, 20.0):
            oracle, _ = sp_integrate.quad(
                lambda s: s ** (n - 1) * math.exp(-s), x, np.inf
            )
            assert incomplete_gamma(n, x) == pytest.approx(oracle, rel=1e-8)


def test_incomplete_gamma_asymptote():
    # G(n, x) ~ x^{n-1} e^{-x}
    for n in (2, 4, 6):
        x = 200.0
        ratio = incomplete_gamma(n, x) / (x ** (n - 1) * math.exp(-x))
        assert ratio == pytest.approx(1.0, rel=0.05)


def test_incomplete_gamma_domain():
    with pytest.raises(ValueError):
        incomplete_gamma(0, 1.0)
    with pytest.raises(ValueError):
        incomplete_gamma(2, -1.0)


# ---------------------------------------------------------------------------
# dual distance
# ---------------------------------------------------------------------------

def test_dual_distance_sandwich(quad):
    bounds = dual_distance_bounds(1.0, [1.0], [0.0], 8, quad)
    assert bounds.lower <= bounds.upper.value * (1 + 1e-9)
    assert bounds.lower > 0
    # the extremal integral reproduces 2^n d_alpha within integration error
    assert bounds.extremal.value == pytest.approx(bounds.upper.value, rel=2e-3)


def test_dual_distance_zero_separation(quad):
    bounds = dual_distance_bounds(1.0, [0.5j], [0.5j], 4, quad)
    assert bounds.lower == 0.0
    assert bounds.upper.value == 0.0


# ---------------------------------------------------------------------------
# membership classification
# ---------------------------------------------------------------------------

def test_classify_growth_rules():
    assert classify_growth([1.0, 1.1, 1.10001]) == "finite"
    assert classify_growth([1.0, 2.0, 4.0]) == "divergent"
    assert classify_growth([1.0, 1.5, 1.9]) == "inconclusive"
    with pytest.raises(ValueError):
        classify_growth([1.0, 2.0])


def test_witness_truncated_integrals_grow_linearly():
    witness = EntireFn.exp_quadratic(0.5)
    vals = truncated_p_integrals(witness.log_abs_many, 2.0, 1.0, 1, (2.0, 6.0, 12.0, 24.0))
    # T(R) ~ c R for the critical function: doubling the radius doubles it
    assert vals[-1] / vals[-2] == pytest.approx(2.0, rel=0.1)


@pytest.mark.parametrize("p", [0.5, 1.0, 2.0])
def test_classify_family_finite(p):
    assert classify_membership(EntireFn.constant(1.0, 1), p, 1.0) == "finite"
    assert classify_membership(EntireFn.kernel(0.5, [2.0]), p, 0.5) == "finite"
    assert classify_membership(EntireFn.monomial((6,)), p, 0.5) == "finite"


@pytest.mark.parametrize("p", [0.5, 1.0, 2.0])
def test_classify_witness_divergent(p):
    witness = EntireFn.exp_quadratic(0.5)
    assert classify_membership(witness, p, 1.0) == "divergent"


def test_classify_witness_sup_finite():
    witness = EntireFn.exp_quadratic(0.5)
    assert classify_membership(witness, math.inf, 1.0) == "finite"
    assert classify_membership(EntireFn.exp_quadratic(0.75), math.inf, 1.0) == "divergent"


def test_classify_derivative_side_of_witness():
    # |f'|/(1+|z|) for the witness: still divergent for finite p, finite at sup
    witness = EntireFn.exp_quadratic(0.5)
    dw = partial(witness, 1)
    assert classify_membership(dw, 2.0, 1.0, lin_div=1) == "divergent"
    assert classify_membership(dw, math.inf, 1.0, lin_div=1) == "finite"
