import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from focklab.core import (
    EntireFn,
    LogComplex,
    abs2,
    as_point,
    eval_fn,
    eval_weighted,
    logcomplex_sum,
    mi_degree,
    mi_factorial,
    mi_log_factorial,
)

from conftest import random_points

finite_complex = st.complex_numbers(
    min_magnitude=0.0, max_magnitude=5.0, allow_nan=False, allow_infinity=False
)


# ---------------------------------------------------------------------------
# points and multi-indices
# ---------------------------------------------------------------------------

def test_point_dimension_checks():
    z = as_point([1 + 2j, 3.0], 2)
    assert z.shape == (2,)
    with pytest.raises(ValueError):
        as_point([1.0], 2)
    assert abs2([3 + 4j]) == pytest.approx(25.0)


def test_multi_index_factorials():
    assert mi_degree((2, 3, 0)) == 5
    assert mi_factorial((3, 2)) == 12
    # log-domain factorial is finite and accurate far past |m| = 64
    m = (40, 24)
    assert mi_log_factorial(m) == pytest.approx(
        math.lgamma(41) + math.lgamma(25), rel=1e-14
    )
    assert math.isfinite(mi_log_factorial((64,)))


# ---------------------------------------------------------------------------
# LogComplex
# ---------------------------------------------------------------------------

def test_logcomplex_zero_and_conversion():
    zero = LogComplex.from_complex(0.0)
    assert zero.logmag == -math.inf
    assert zero.to_complex() == 0.0
    lc = LogComplex.from_complex(2.0 - 1.0j)
    assert lc.to_complex() == pytest.approx(2.0 - 1.0j, rel=1e-15)
    with pytest.raises(OverflowError):
        LogComplex(800.0, 0.0).to_complex()


@given(finite_complex, finite_complex)
@settings(max_examples=60, deadline=None)
def test_logcomplex_multiplication(a, b):
    la, lb = LogComplex.from_complex(a), LogComplex.from_complex(b)
    prod = (la * lb).to_complex()
    assert prod == pytest.approx(a * b, abs=1e-12, rel=1e-12)
    # phases stay wrapped into (-pi, pi]
    assert -math.pi < (la * lb).phase <= math.pi


def test_logcomplex_sum_stability():
    # opposite phases at a huge common magnitude: cancellation down to rounding
    parts = [LogComplex(500.0, 0.0), LogComplex(500.0, math.pi)]
    assert logcomplex_sum(parts).logmag - 500.0 < math.log(1e-15)
    parts = [LogComplex(500.0, 0.0), LogComplex(499.0, 0.0)]
    out = logcomplex_sum(parts)
    assert out.logmag == pytest.approx(500.0 + math.log1p(math.exp(-1.0)), rel=1e-14)


# ---------------------------------------------------------------------------
# evaluation examples
# ---------------------------------------------------------------------------

def test_eval_square_at_complex_point():
    f = EntireFn.monomial((2,))
    assert eval_fn(f, [1 + 1j]) == pytest.approx(2j, rel=1e-15)


def test_kernel_at_origin_parameter_is_one():
    f = EntireFn.kernel(1.0, [0.0])
    for z in ([0.3 + 4j], [-2.0], [1j]):
        assert eval_fn(f, z) == pytest.approx(1.0, rel=1e-15)


def test_normalized_kernel_value():
    # k_w(z) = exp(alpha z conj(w) - alpha|w|^2/2) at alpha=1, w=1, z=1
    f = EntireFn.normalized_kernel(1.0, [1.0])
    assert eval_fn(f, [1.0]) == pytest.approx(math.exp(0.5), rel=1e-14)


def test_eval_weighted_examples():
    one = EntireFn.constant(1.0, 1)
    lc = eval_weighted(one, [1 + 1j], 1.0)  # |z|^2 = 2
    assert lc.logmag == pytest.approx(-1.0, abs=1e-14)
    assert lc.phase == 0.0

    # |k_w(z)| e^{-a|z|^2/2} = e^{-a|z-w|^2/2}: exactly 1 at z = w
    kw = EntireFn.normalized_kernel(1.0, [1.0 - 0.7j])
    assert eval_weighted(kw, [1.0 - 0.7j], 1.0).logmag == pytest.approx(0.0, abs=1e-12)

    # |K_w(w)| e^{-|w|^2/2} = e^{a|w|^2/2}
    Kw = EntireFn.kernel(1.0, [2.0])
    assert eval_weighted(Kw, [2.0], 1.0).logmag == pytest.approx(2.0, abs=1e-12)


def test_eval_weighted_no_overflow_far_out():
    # |z|^2 = 900 with a kernel exponent |a| = 20: plain eval would overflow
    f = EntireFn.kernel(1.0, [20.0])
    lc = eval_weighted(f, [30.0], 1.0)
    assert lc.logmag == pytest.approx(20 * 30 - 450.0, rel=1e-12)


def test_weighted_matches_plain_eval_where_both_work(rng):
    f = (
        EntireFn.polynomial({(2,): 1.5 - 0.5j, (0,): 0.3}, 1)
        * EntireFn.kernel(1.0, [0.7 + 0.2j])
        + EntireFn.monomial((1,), -2.0)
    )
    pts = random_points(rng, 30, 1, scale=1.5)
    for z in pts:
        direct = abs(eval_fn(f, z)) * math.exp(-0.5 * abs2(z))
        lc = eval_weighted(f, z, 1.0)
        assert math.exp(lc.logmag) == pytest.approx(direct, rel=1e-10)


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def test_monomial_times_kernel_structure():
    z = EntireFn.monomial((1,))
    Kw = EntireFn.kernel(2.0, [1 + 1j])
    prod = z * Kw
    assert len(prod.terms) == 1
    term = prod.terms[0]
    assert term.coeffs == {(1,): 1.0 + 0j}
    assert term.expvec == (2.0 * (1 - 1j),)


def test_add_negation_gives_zero():
    f = EntireFn.kernel(1.0, [1.0]) + EntireFn.monomial((3,), 2.0)
    assert (f + (-1.0) * f).is_zero()


def test_difference_of_squares():
    z = EntireFn.monomial((1,))
    prod = (1 + z) * (1 - z)
    for x in (0.5, -2.0, 1 + 1j):
        assert eval_fn(prod, [x]) == pytest.approx(1 - x ** 2, rel=1e-14)


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        EntireFn.monomial((1,)) + EntireFn.monomial((1, 0))
    with pytest.raises(ValueError):
        eval_fn(EntireFn.monomial((1, 0)), [1.0])


def test_quadratic_product_restriction():
    g = EntireFn.exp_quadratic(0.5)
    with pytest.raises(ValueError):
        g * g
    # one quadratic factor is fine and differentiable
    h = EntireFn.monomial((1,)) * g
    assert eval_fn(h, [2.0]) == pytest.approx(2.0 * cmath.exp(2.0), rel=1e-14)


@given(st.lists(finite_complex, min_size=2, max_size=2), finite_complex)
@settings(max_examples=40, deadline=None)
def test_eval_additivity(coeffs, zval):
    f = EntireFn.polynomial({(2,): coeffs[0]}, 1) + EntireFn.kernel(1.0, [0.5])
    g = EntireFn.polynomial({(1,): coeffs[1]}, 1)
    lhs = eval_fn(f + g, [zval])
    rhs = eval_fn(f, [zval]) + eval_fn(g, [zval])
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


def test_eval_multiplicativity(rng):
    f = EntireFn.polynomial({(1,): 1.0, (0,): 0.5j}, 1) * EntireFn.kernel(1.0, [0.3])
    g = EntireFn.polynomial({(2,): -0.25}, 1) + 1.0
    for z in random_points(rng, 20, 1, scale=1.2):
        assert eval_fn(f * g, z) == pytest.approx(
            eval_fn(f, z) * eval_fn(g, z), rel=1e-12, abs=1e-12
        )


def test_evaluate_many_matches_scalar(rng):
    f = EntireFn.kernel(1.0, [1 + 0.5j]) + EntireFn.monomial((2,), 1j)
    pts = random_points(rng, 50, 1, scale=2.0)
    batch = f.evaluate_many(pts)
    for i in range(pts.shape[0]):
        assert batch[i] == pytest.approx(f.evaluate(pts[i]), rel=1e-13)
