"""Exact differential operators on the closed entire-function class.

Partial derivatives, the holomorphic gradient, the radial operator
R = z_1 d/dz_1 + ... + z_n d/dz_n and its powers, iterated multi-index
derivatives, and deflation (division by a monomial after checking that the
low-order Taylor data vanishes).  Everything is symbolic: the outputs are
again members of the class, so downstream integrals see no differentiation
noise.
"""

from __future__ import annotations

import math

from .core import EntireFn, Monomial, Term, as_point, mi_degree

__all__ = [
    "partial",
    "gradient",
    "radial",
    "radial_power",
    "partial_multi",
    "gradient_norm_at",
    "taylor_coefficients",
    "deflate",
    "deflation_error_bound",
    "DeflationError",
]

MAX_DERIVATIVE_ORDER = 8


class DeflationError(ValueError):
    """A low-order Taylor coefficient that must vanish does not."""

    def __init__(self, index: Monomial, value: complex):
        super().__init__(
            f"cannot divide: Taylor coefficient at {index} is {value:.3e}, not zero"
        )
        self.index = index
        self.value = value


def _shift(mono: Monomial, k: int, by: int) -> Monomial:
    out = list(mono)
    out[k] += by
    return tuple(out)


def partial(f: EntireFn, k: int) -> EntireFn:
    """d/dz_k, with k a 1-based coordinate index."""
    if not 1 <= k <= f.n:
        raise ValueError(f"coordinate index {k} out of range 1..{f.n}")
    j = k - 1
    out = []
    for term in f.terms:
        coeffs: dict = {}

        def _acc(mono, value):
            if value != 0:
                coeffs[mono] = coeffs.get(mono, 0j) + value

        for mono, c in term.coeffs.items():
            if mono[j] > 0:
                _acc(_shift(mono, j, -1), mono[j] * c)
            if term.expvec[j] != 0:
                _acc(mono, term.expvec[j] * c)
            if term.gamma != 0:
                _acc(_shift(mono, j, +1), 2.0 * term.gamma * c)
        if coeffs:
            out.append(Term(coeffs, term.expvec, term.gamma))
    return EntireFn(f.n, tuple(out)) if out else EntireFn.zero(f.n)


def gradient(f: EntireFn) -> tuple[EntireFn, ...]:
    """All first partials (the holomorphic gradient, componentwise)."""
    return tuple(partial(f, k) for k in range(1, f.n + 1))


def radial(f: EntireFn) -> EntireFn:
    """Rf = z_1 d_1 f + ... + z_n d_n f."""
    out = EntireFn.zero(f.n)
    for k in range(1, f.n + 1):
        zk = EntireFn.monomial(tuple(1 if i == k - 1 else 0 for i in range(f.n)))
        out = out + zk * partial(f, k)
    return out


def radial_power(f: EntireFn, order: int) -> EntireFn:
    """R applied ``order`` times."""
    if not 1 <= order <= MAX_DERIVATIVE_ORDER:
        raise ValueError(f"radial power must be in 1..{MAX_DERIVATIVE_ORDER}")
    out = f
    for _ in range(order):
        out = radial(out)
    return out


def partial_multi(f: EntireFn, m: Monomial) -> EntireFn:
    """Iterated partials d^{|m|} / dz_1^{m_1} ... dz_n^{m_n}."""
    m = tuple(int(x) for x in m)
    if len(m) != f.n:
        raise ValueError(f"multi-index {m} does not match dimension {f.n}")
    if mi_degree(m) > MAX_DERIVATIVE_ORDER:
        raise ValueError(f"total order {mi_degree(m)} exceeds {MAX_DERIVATIVE_ORDER}")
    out = f
    for k, mk in enumerate(m, start=1):
        for _ in range(mk):
            out = partial(out, k)
    return out


def gradient_norm_at(f: EntireFn, z) -> float:
    """|grad f(z)| = sqrt(sum_k |d_k f(z)|^2)."""
    z = as_point(z, f.n)
    return float(math.sqrt(sum(abs(g.evaluate(z)) ** 2 for g in gradient(f))))


# ---------------------------------------------------------------------------
# Taylor data and monomial division
# ---------------------------------------------------------------------------

def _series_multiply(base: dict, series: list, coord: int, degree: int, n: int) -> dict:
    """Multiply a truncated coefficient dict by a 1-D power series in z_coord."""
    out: dict = {}
    for mono, c in base.items():
        room = degree - mi_degree(mono)
        for j, sj in enumerate(series[: room + 1]):
            if sj == 0:
                continue
            key = _shift(mono, coord, j)
            out[key] = out.get(key, 0j) + c * sj
    return out


def taylor_coefficients(f: EntireFn, degree: int) -> dict:
    """All Taylor coefficients of f at 0 up to total degree ``degree``."""
    total: dict = {}
    for term in f.terms:
        coeffs = {(0,) * f.n: 1.0 + 0j}
        for k, a in enumerate(term.expvec):
            if a == 0:
                continue
            series = [a ** j / math.factorial(j) for j in range(degree + 1)]
            coeffs = _series_multiply(coeffs, series, k, degree, f.n)
        if term.gamma != 0:
            series = [0j] * (degree + 1)
            for j in range(degree // 2 + 1):
                series[2 * j] = term.gamma ** j / math.factorial(j)
            coeffs = _series_multiply(coeffs, series, 0, degree, f.n)
        for mono, c in term.coeffs.items():
            room = degree - mi_degree(mono)
            if room < 0:
                continue
            for base_mono, b in coeffs.items():
                if mi_degree(base_mono) > room:
                    continue
                key = tuple(x + y for x, y in zip(mono, base_mono))
                total[key] = total.get(key, 0j) + c * b
    return total


def _dominates(mono: Monomial, m: Monomial) -> bool:
    return all(a >= b for a, b in zip(mono, m))


def deflate(f: EntireFn, m: Monomial, taylor_degree: int = 32) -> EntireFn:
    """Divide f by z^m, assuming the Taylor coefficients below m vanish.

    Terms whose polynomial factors are individually divisible are divided
    exactly (exponential factors kept).  Otherwise the function is replaced by
    its Taylor polynomial of total degree ``taylor_degree`` before dividing;
    see :func:`deflation_error_bound` for the truncation error.
    """
    m = tuple(int(x) for x in m)
    if len(m) != f.n or any(x < 0 for x in m):
        raise ValueError(f"bad divisor index {m} for dimension {f.n}")
    if mi_degree(m) == 0:
        return f
    if f.is_zero():
        return f

    exact_ok = all(
        all(_dominates(mono, m) for mono in term.coeffs) for term in f.terms
    )
    if exact_ok:
        out = [
            Term(
                {tuple(a - b for a, b in zip(mono, m)): c for mono, c in term.coeffs.items()},
                term.expvec,
                term.gamma,
            )
            for term in f.terms
        ]
        return EntireFn(f.n, tuple(out))

    pure_poly = all(
        term.gamma == 0 and all(x == 0 for x in term.expvec) for term in f.terms
    )
    if pure_poly:
        coeffs: dict = {}
        for term in f.terms:
            for mono, c in term.coeffs.items():
                coeffs[mono] = coeffs.get(mono, 0j) + c
        degree = None
    else:
        coeffs = taylor_coefficients(f, taylor_degree)
        degree = taylor_degree

    scale = max((abs(c) for c in coeffs.values()), default=0.0)
    tol = 1e-12 * max(1.0, scale)
    quotient: dict = {}
    for mono, c in sorted(coeffs.items(), key=lambda kv: (mi_degree(kv[0]), kv[0])):
        if _dominates(mono, m):
            quotient[tuple(a - b for a, b in zip(mono, m))] = c
        elif abs(c) > tol:
            raise DeflationError(mono, c)
    if degree is not None:
        quotient = {k: v for k, v in quotient.items() if mi_degree(k) <= degree - mi_degree(m)}
    return EntireFn.polynomial(quotient, f.n) if quotient else EntireFn.zero(f.n)


def deflation_error_bound(f: EntireFn, taylor_degree: int, radius: float) -> float:
    """Crude tail bound (|a| R)^{D+1} / (D+1)! for the truncated expansion."""
    a = max(f.max_exp_norm(), 1e-12)
    d = taylor_degree
    return float(math.exp((d + 1) * math.log(a * radius) - math.lgamma(d + 2))) if radius > 0 else 0.0
