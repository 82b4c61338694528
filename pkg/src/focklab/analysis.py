"""Computable functionals on entire functions and Gaussian measures.

Weighted p-norms and the sup norm, the Gaussian-kernel-induced distances

    d_{alpha,beta}(z, w) = int |exp(beta z.conj(u)) - exp(beta w.conj(u))| dlam_alpha(u)

(with d_alpha denoting the (alpha/2, alpha) case and generalized p-power
variants), the growth integral E(z) = int |u| |exp(alpha z.conj(u))| dlam_{alpha/2},
its coordinate variants, an exact second-moment identity, the kernel
projection operator, the upper incomplete gamma function, and membership
classification of a function in the weighted p-spaces via truncated-ball
integrals (finite p) or asymptotic growth analysis (p = infinity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .core import EntireFn, abs2, as_point
from .integrate import (
    Estimate,
    GaussianMeasure,
    MCIntegrator,
    QuadIntegrator,
    importance_center,
)

__all__ = [
    "FockParams",
    "DistanceParams",
    "SupSearch",
    "SupResult",
    "norm_p",
    "norm_inf",
    "distance",
    "distance_p",
    "distance_slope_origin",
    "energy",
    "coord_energy",
    "second_moment_identity",
    "second_moment_direct",
    "project",
    "incomplete_gamma",
    "kernel_abs_integral",
    "mc_centers_for",
    "dual_distance_bounds",
    "DualDistanceBounds",
    "truncated_p_integrals",
    "classify_growth",
    "sup_unbounded",
    "classify_membership",
    "DEFAULT_RADII",
]

DEFAULT_RADII = (2.0, 6.0, 12.0, 24.0)
_GROWTH_FACTOR = 1.5
_FINITE_INCREMENT = 1e-3


@dataclass(frozen=True)
class FockParams:
    """Exponent p, weight parameter alpha, and dimension of a weighted p-space."""

    alpha: float
    p: float
    n: int = 1

    def __post_init__(self):
        if self.alpha <= 0 or self.p <= 0:
            raise ValueError("alpha and p must be positive")


@dataclass(frozen=True)
class DistanceParams:
    """Measure parameter, kernel exponent, and p-power of a distance integral."""

    alpha_meas: float
    beta: float
    p_exponent: float = 1.0

    def __post_init__(self):
        if self.alpha_meas <= 0 or self.beta <= 0 or self.p_exponent <= 0:
            raise ValueError("all distance parameters must be positive")

    @classmethod
    def canonical(cls, alpha: float) -> "DistanceParams":
        """The convention d_alpha: measure parameter alpha/2, exponent alpha."""
        return cls(alpha / 2.0, alpha, 1.0)


def kernel_abs_integral(alpha: float, beta: float, z) -> float:
    """Closed form int |exp(beta z.conj(u))| dlam_alpha(u) = exp(beta^2 |z|^2 / 4 alpha)."""
    return math.exp(beta ** 2 * abs2(z) / (4.0 * alpha))


def mc_centers_for(f: EntireFn, alpha: float) -> tuple:
    """Proposal centers for sampling |f|^p against a Gaussian of parameter ~alpha.

    Each exponential term exp(a.z) tilts the Gaussian mass towards conj(a)/alpha;
    the origin is always included.
    """
    centers = [tuple([0j] * f.n)]
    for term in f.terms:
        c = tuple(complex(x).conjugate() / alpha for x in term.expvec)
        if any(abs(x) > 1e-12 for x in c) and c not in centers:
            centers.append(c)
    return tuple(centers)


# ---------------------------------------------------------------------------
# norms
# ---------------------------------------------------------------------------

def norm_p(f: EntireFn, params: FockParams, integrator=None, *, check_divergence: bool = True) -> Estimate:
    """The weighted p-norm (p finite): the 1/p power of the prefactored integral.

    Divergent integrals are a reported state: the estimate comes back with
    value ``inf`` and method ``"divergent"`` rather than raising.  Only
    quadratic-exponent functions can diverge in this class, so the truncated
    -ball probe runs just for those.
    """
    if not math.isfinite(params.p):
        raise ValueError("norm_p handles finite p; use norm_inf for the sup norm")
    if f.n != params.n:
        raise ValueError("function and parameters disagree on dimension")
    if f.is_zero():
        return Estimate(0.0, 0.0, "exact", 0)
    integrator = integrator or QuadIntegrator()
    p, alpha = params.p, params.alpha
    if check_divergence and f.has_quadratic():
        verdict = classify_membership(f, p, alpha)
        if verdict != "finite":
            return Estimate(math.inf, 0.0, "divergent", 0, {"classification": verdict})
    meas = GaussianMeasure(p * alpha / 2.0, params.n)
    log_g = lambda U: p * f.log_abs_many(U)
    est = integrator.integrate_log(log_g, meas, centers=mc_centers_for(f, alpha))
    value = est.value ** (1.0 / p) if est.value > 0 else 0.0
    stderr = 0.0
    if est.stderr and est.value > 0:
        stderr = value / (p * est.value) * est.stderr
    return Estimate(value, stderr, est.method, est.samples_or_order, est.extra)


@dataclass(frozen=True)
class SupSearch:
    """Grid resolution and refinement settings for the sup-norm search."""

    rays: int = 192
    radial: int = 160
    r_max: float | None = None
    refine_rounds: int = 3
    top: int = 6


@dataclass
class SupResult:
    """A certified lower bound for a weighted sup, with search metadata."""

    value: float
    argmax: np.ndarray | None
    divergent: bool
    resolution: dict = field(default_factory=dict)


def sup_unbounded(f: EntireFn, alpha: float, lin_div: int = 0, quad_div: int = 0) -> bool:
    """Whether sup_z |f(z)| / ((1+|z|)^lin (1+|z|^2)^quad exp(alpha|z|^2/2)) is infinite.

    Exact for this function class: the Gaussian weight dominates every
    exp(a.z) factor, so growth can only come from a quadratic exponent term
    (one variable).  At the critical rate |gamma| = alpha/2 the linear
    exponent and the net polynomial degree along the two critical rays decide.
    """
    tol = 1e-12
    for term in f.terms:
        g = abs(term.gamma)
        excess = g - alpha / 2.0
        if excess > tol:
            return True
        if abs(excess) <= tol and g > 0:
            phi = math.atan2(term.gamma.imag, term.gamma.real)
            direction = complex(math.cos(-phi / 2.0), math.sin(-phi / 2.0))
            lin = abs((term.expvec[0] * direction).real)
            if lin > tol:
                return True
            if term.degree() - lin_div - 2 * quad_div > 0:
                return True
    return False


def _direction_grid(n: int, rays: int) -> np.ndarray:
    if n == 1:
        theta = np.arange(rays) * (2.0 * math.pi / rays)
        return np.exp(1j * theta).reshape(-1, 1)
    m = max(6, int(round(rays ** (1.0 / 3.0))))
    s = (np.arange(m) + 0.5) * (math.pi / 2.0 / m)
    phi = np.arange(2 * m) * (2.0 * math.pi / (2 * m))
    S, P1, P2 = np.meshgrid(s, phi, phi, indexing="ij")
    z1 = np.cos(S) * np.exp(1j * P1)
    z2 = np.sin(S) * np.exp(1j * P2)
    return np.stack([z1.ravel(), z2.ravel()], axis=1)


def _golden_max(fun, lo: float, hi: float, iters: int = 60):
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iters):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fun(d)
    x = (a + b) / 2.0
    return x, fun(x)


def _dir_from_params(params, n: int) -> np.ndarray:
    if n == 1:
        return np.array([complex(math.cos(params[0]), math.sin(params[0]))])
    s, p1, p2 = params
    return np.array(
        [math.cos(s) * complex(math.cos(p1), math.sin(p1)),
         math.sin(s) * complex(math.cos(p2), math.sin(p2))]
    )


def _params_from_dir(zeta: np.ndarray) -> list:
    if zeta.shape[0] == 1:
        return [math.atan2(zeta[0].imag, zeta[0].real)]
    return [
        math.atan2(abs(zeta[1]), abs(zeta[0])),
        math.atan2(zeta[0].imag, zeta[0].real),
        math.atan2(zeta[1].imag, zeta[1].real),
    ]


def norm_inf(f: EntireFn, alpha: float, cfg: SupSearch = SupSearch()) -> SupResult:
    """Sup of |f(z)| exp(-alpha|z|^2/2) via a radial-angular grid plus refinement.

    The returned value is a certified lower bound for the sup; unbounded
    growth is detected analytically from the representation and reported as
    ``divergent`` with value ``inf``.
    """
    if f.is_zero():
        return SupResult(0.0, None, False, {"trivial": True})
    if sup_unbounded(f, alpha):
        return SupResult(math.inf, None, True, {"growth": "unbounded"})
    r_max = cfg.r_max
    if r_max is None:
        r_max = f.max_exp_norm() / alpha + 10.0 / math.sqrt(alpha) + 2.0
    dirs = _direction_grid(f.n, cfg.rays)
    radii = np.linspace(0.0, r_max, cfg.radial)
    pts = (radii[None, :, None] * dirs[:, None, :]).reshape(-1, f.n)
    vals = f.weighted_log_abs_many(pts, alpha).reshape(dirs.shape[0], radii.size)

    def at(r: float, params) -> float:
        pt = (r * _dir_from_params(params, f.n)).reshape(1, f.n)
        return float(f.weighted_log_abs_many(pt, alpha)[0])

    flat = np.argsort(vals, axis=None)[::-1][: cfg.top]
    best_val, best_pt = -math.inf, None
    dr = radii[1] - radii[0]
    windows0 = [2.0 * math.pi / cfg.rays] if f.n == 1 else [0.3, 0.6, 0.6]
    for idx in flat:
        di, ri = divmod(int(idx), radii.size)
        params = _params_from_dir(dirs[di])
        r_star = radii[ri]
        v_star = vals[di, ri]
        windows = list(windows0)
        w_r = dr
        for _ in range(cfg.refine_rounds):
            for j in range(len(params)):
                pj, _v = _golden_max(
                    lambda t, j=j: at(r_star, params[:j] + [t] + params[j + 1:]),
                    params[j] - windows[j], params[j] + windows[j], iters=40,
                )
                params[j] = pj
            r_star, v_star = _golden_max(
                lambda r: at(r, params),
                max(0.0, r_star - w_r), min(r_max, r_star + w_r), iters=40,
            )
            windows = [w / 6.0 for w in windows]
            w_r /= 6.0
        if v_star > best_val:
            best_val = v_star
            best_pt = r_star * _dir_from_params(params, f.n)
    value = math.exp(best_val) if best_val > -math.inf else 0.0
    return SupResult(
        value,
        best_pt,
        False,
        {"rays": cfg.rays, "radial": cfg.radial, "r_max": r_max, "refined": True},
    )


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

def _kernel_dot(z: np.ndarray, U: np.ndarray) -> np.ndarray:
    """z.conj(u) = sum_k z_k conj(u_k) for each row u of U."""
    return np.conj(U) @ z


def _distance_log_integrand(beta: float, z: np.ndarray, w: np.ndarray, p: float):
    def log_g(U):
        A = beta * _kernel_dot(z, U)
        B = beta * _kernel_dot(w, U)
        m = np.maximum(A.real, B.real)
        diff = np.abs(np.exp(A - m) - np.exp(B - m))
        with np.errstate(divide="ignore"):
            lg = np.where(diff > 0, m + np.log(np.where(diff > 0, diff, 1.0)), -np.inf)
        return p * lg if p != 1.0 else lg

    return log_g


def distance(dp: DistanceParams, z, w, integrator=None) -> Estimate:
    """The induced distance between z and w (p-power variants included).

    For p_exponent > 1 the 1/p root is applied; for p <= 1 the raw integral
    is the distance.  Monte Carlo runs use an equal-weight two-Gaussian
    proposal centered at the tilted modes for z and for w.
    """
    z = as_point(z)
    w = as_point(w, z.shape[0])
    integrator = integrator or QuadIntegrator()
    n = z.shape[0]
    meas = GaussianMeasure(dp.alpha_meas, n)
    p = dp.p_exponent
    log_g = _distance_log_integrand(dp.beta, z, w, p)
    centers = [importance_center(p * dp.beta, dp.alpha_meas, z)]
    cw = importance_center(p * dp.beta, dp.alpha_meas, w)
    if not np.allclose(centers[0], cw):
        centers.append(cw)
    est = integrator.integrate_log(log_g, meas, centers=tuple(tuple(c) for c in centers))
    if p > 1.0:
        root = est.value ** (1.0 / p) if est.value > 0 else 0.0
        stderr = root / (p * est.value) * est.stderr if est.value > 0 else 0.0
        return Estimate(root, stderr, est.method, est.samples_or_order, est.extra)
    return est


def distance_p(dp: DistanceParams, z, w, integrator=None) -> Estimate:
    """Explicit-name alias for the p-power distance variants."""
    return distance(dp, z, w, integrator)


def distance_slope_origin(dp: DistanceParams, r: float = 1e-3, integrator=None) -> Estimate:
    """d(z, 0)/|z| at |z| = r along the first coordinate axis.

    Uses the polar rule: near the origin the integrand behaves like
    beta |z| |u_1| whose only kink sits at u = 0, where polar coordinates are
    smooth.  The small-|z| limit of this quantity is beta * int |u_1| dlam.
    """
    integrator = integrator or QuadIntegrator()
    # slope integrals are one-coordinate objects; higher dimensions factor out
    z = np.array([r + 0j])
    w = np.array([0j])
    meas = GaussianMeasure(dp.alpha_meas, 1)
    log_g = _distance_log_integrand(dp.beta, z, w, 1.0)
    r_max = dp.beta * r / (2 * dp.alpha_meas) + 14.0 / math.sqrt(dp.alpha_meas)
    est = integrator.integrate_log(
        log_g, meas,
        centers=((0j,),),
        polar=True, r_max=r_max,
    )
    return Estimate(est.value / r, est.stderr / r, est.method, est.samples_or_order, est.extra)


# ---------------------------------------------------------------------------
# growth integrals and the exact second moment
# ---------------------------------------------------------------------------

def _tilt_log(alpha: float, z: np.ndarray):
    def tilt(U):
        return (alpha * _kernel_dot(z, U)).real

    return tilt


def energy(alpha: float, z, integrator=None) -> Estimate:
    """E(z) = int |u| |exp(alpha z.conj(u))| dlam_{alpha/2}(u)."""
    z = as_point(z)
    integrator = integrator or QuadIntegrator()
    n = z.shape[0]
    meas = GaussianMeasure(alpha / 2.0, n)
    tilt = _tilt_log(alpha, z)

    def log_g(U):
        r = np.sqrt(np.sum(U.real ** 2 + U.imag ** 2, axis=1))
        with np.errstate(divide="ignore"):
            return np.where(r > 0, np.log(np.where(r > 0, r, 1.0)), -np.inf) + tilt(U)

    r_norm = math.sqrt(abs2(z))
    kwargs = {}
    if n == 1:
        kwargs = {"polar": True, "r_max": r_norm + 14.0 / math.sqrt(alpha / 2.0)}
    est = integrator.integrate_log(log_g, meas, centers=(tuple(z),), **kwargs)
    return est


def coord_energy(alpha: float, z, k: int, integrator=None) -> Estimate:
    """int |u_k| |exp(alpha z.conj(u))| dlam_{alpha/2}(u), k a 1-based index."""
    z = as_point(z)
    n = z.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"coordinate index {k} out of range 1..{n}")
    integrator = integrator or QuadIntegrator()
    meas = GaussianMeasure(alpha / 2.0, n)
    tilt = _tilt_log(alpha, z)
    j = k - 1

    def log_g(U):
        r = np.abs(U[:, j])
        with np.errstate(divide="ignore"):
            return np.where(r > 0, np.log(np.where(r > 0, r, 1.0)), -np.inf) + tilt(U)

    kwargs = {}
    if n == 1:
        kwargs = {"polar": True, "r_max": math.sqrt(abs2(z)) + 14.0 / math.sqrt(alpha / 2.0)}
    return integrator.integrate_log(log_g, meas, centers=(tuple(z),), **kwargs)


def second_moment_identity(alpha: float, z) -> float:
    """Closed form of int |u|^2 |exp(alpha z.conj(u))| dlam_{alpha/2}(u).

    Equals (2/alpha)(n + (alpha/2)|z|^2) exp(alpha |z|^2 / 2); derived by
    differentiating the kernel reproducing identity and summing coordinates.
    """
    z = as_point(z)
    n = z.shape[0]
    sq = abs2(z)
    return (2.0 / alpha) * (n + 0.5 * alpha * sq) * math.exp(0.5 * alpha * sq)


def second_moment_direct(alpha: float, z, integrator=None) -> Estimate:
    """The same integral evaluated numerically (for verification suites)."""
    z = as_point(z)
    integrator = integrator or QuadIntegrator()
    n = z.shape[0]
    meas = GaussianMeasure(alpha / 2.0, n)
    tilt = _tilt_log(alpha, z)

    def log_g(U):
        sq = np.sum(U.real ** 2 + U.imag ** 2, axis=1)
        with np.errstate(divide="ignore"):
            return np.where(sq > 0, np.log(np.where(sq > 0, sq, 1.0)), -np.inf) + tilt(U)

    kwargs = {}
    if n == 1:
        kwargs = {"polar": True, "r_max": math.sqrt(abs2(z)) + 14.0 / math.sqrt(alpha / 2.0)}
    return integrator.integrate_log(log_g, meas, centers=(tuple(z),), **kwargs)


# ---------------------------------------------------------------------------
# projection
# ---------------------------------------------------------------------------

def project(g, alpha: float, z, integrator=None, n: int | None = None) -> Estimate:
    """The kernel projection (P g)(z) = int exp(alpha z.conj(u)) g(u) dlam_alpha(u).

    ``g`` may be an :class:`EntireFn` or any callable mapping an (N, n) array
    of points to values.  Reproduces entire functions of suitable growth.
    """
    z = as_point(z)
    nn = z.shape[0] if n is None else n
    integrator = integrator or QuadIntegrator()
    meas = GaussianMeasure(alpha, nn)
    gv = g.evaluate_many if isinstance(g, EntireFn) else g

    def vals(U):
        return gv(U) * np.exp(alpha * _kernel_dot(z, U))

    center = importance_center(alpha, alpha, z)
    return integrator.integrate_values(vals, meas, centers=(tuple(center),))


# ---------------------------------------------------------------------------
# incomplete gamma
# ---------------------------------------------------------------------------

def incomplete_gamma(n: int, x: float) -> float:
    """Upper incomplete gamma for integer order via the finite recurrence.

    G(1, x) = exp(-x) and G(n, x) = (n-1) G(n-1, x) + x^{n-1} exp(-x); for
    large x this matches the asymptote x^{n-1} exp(-x).
    """
    if n < 1 or int(n) != n:
        raise ValueError("order must be a positive integer")
    if x <= 0:
        raise ValueError("x must be positive")
    value = math.exp(-x)
    for k in range(2, int(n) + 1):
        value = (k - 1) * value + x ** (k - 1) * math.exp(-x)
    return value


# ---------------------------------------------------------------------------
# the dual (sup-over-unit-ball) distance
# ---------------------------------------------------------------------------

@dataclass
class DualDistanceBounds:
    """Sandwich for sup{|f(z)-f(w)| : weighted sup norm of f <= 1}."""

    lower: float
    best_probe: str
    upper: Estimate  # 2^n * d_alpha(z, w)
    extremal: Estimate  # the extremal-symbol integral, should equal the upper value


def _unit_sup_probes(alpha: float, z: np.ndarray, w: np.ndarray, family_size: int):
    """Functions of unit weighted sup norm: normalized kernels and monomials."""
    n = z.shape[0]
    probes = []
    mids = np.linspace(0.0, 1.0, max(2, family_size))
    for i, t in enumerate(mids):
        v = (1 - t) * z + t * w
        probes.append((f"kernel@{i}", EntireFn.normalized_kernel(alpha, v)))
    for d in range(1, min(5, family_size) + 1):
        m = tuple([d] + [0] * (n - 1))
        scale = (alpha * math.e / d) ** (d / 2.0)
        probes.append((f"monomial^{d}", EntireFn.monomial(m, scale)))
    return probes


def dual_distance_bounds(alpha: float, z, w, family_size: int = 8, integrator=None) -> DualDistanceBounds:
    """Lower/upper bounds for the distance induced by the weighted sup-unit ball.

    The lower bound maximizes |f(z) - f(w)| over explicit unit-norm functions;
    the upper bound is 2^n d_alpha(z, w).  The extremal integral
    int |exp(alpha z.conj(u)) - exp(alpha w.conj(u))| exp(alpha|u|^2/2) dlam_alpha
    is evaluated directly; it should reproduce the upper bound.
    """
    if family_size < 1:
        raise ValueError("family_size must be at least 1")
    z = as_point(z)
    w = as_point(w, z.shape[0])
    n = z.shape[0]
    integrator = integrator or QuadIntegrator()

    lower, best = 0.0, "none"
    for name, probe in _unit_sup_probes(alpha, z, w, family_size):
        gap = abs(probe.evaluate(z) - probe.evaluate(w))
        if gap > lower:
            lower, best = gap, name
    d_est = distance(DistanceParams.canonical(alpha), z, w, integrator)
    upper = Estimate(
        (2 ** n) * d_est.value, (2 ** n) * d_est.stderr, d_est.method,
        d_est.samples_or_order, d_est.extra,
    )

    meas = GaussianMeasure(alpha, n)
    base = _distance_log_integrand(alpha, z, w, 1.0)

    def log_g(U):
        sq = np.sum(U.real ** 2 + U.imag ** 2, axis=1)
        return base(U) + 0.5 * alpha * sq

    r_norm = max(math.sqrt(abs2(z)), math.sqrt(abs2(w)))
    kwargs = {"polar": True, "r_max": 2.0 * r_norm + 14.0 / math.sqrt(alpha / 2.0)} if n == 1 else {}
    extremal = integrator.integrate_log(
        log_g, meas, centers=(tuple(z), tuple(w)), **kwargs
    )
    return DualDistanceBounds(lower, best, upper, extremal)


# ---------------------------------------------------------------------------
# membership classification
# ---------------------------------------------------------------------------

@lru_cache(maxsize=32)
def _ball_nodes(n: int, r_order: int, ang: int) -> tuple:
    x, glw = np.polynomial.legendre.leggauss(r_order)
    r01 = 0.5 * (x + 1.0)
    w01 = 0.5 * glw
    if n == 1:
        theta = np.arange(ang) * (2.0 * math.pi / ang)
        R, T = np.meshgrid(r01, theta, indexing="ij")
        dirs = np.exp(1j * T).reshape(-1, 1)
        rr = R.ravel()
        ww = (w01[:, None] * np.ones(ang)[None, :] * (2.0 * math.pi / ang)).ravel()
        return rr, dirs, ww
    s_order = max(12, ang // 2)
    xs, gls = np.polynomial.legendre.leggauss(s_order)
    s = 0.25 * math.pi * (xs + 1.0)
    ws = 0.25 * math.pi * gls * np.cos(s) * np.sin(s)
    phi = np.arange(ang) * (2.0 * math.pi / ang)
    R, S, P1, P2 = np.meshgrid(r01, s, phi, phi, indexing="ij")
    dirs = np.stack(
        [(np.cos(S) * np.exp(1j * P1)).ravel(), (np.sin(S) * np.exp(1j * P2)).ravel()],
        axis=1,
    )
    rr = R.ravel()
    ww = (
        w01[:, None, None, None]
        * ws[None, :, None, None]
        * np.ones((1, 1, ang, ang))
        * (2.0 * math.pi / ang) ** 2
    ).ravel()
    return rr, dirs, ww


def truncated_p_integrals(
    log_abs, p: float, alpha: float, n: int, radii=DEFAULT_RADII,
    r_order: int = 96, ang: int = 128,
) -> list[float]:
    """Weighted p-integrals over balls |z| <= R for each R in ``radii``.

    ``log_abs`` maps an (N, n) array to log of the (non-negative) integrand
    before the Gaussian weight; the returned values carry the full norm
    prefactor, so they increase to the p-th power of the weighted norm.
    """
    if n == 2:
        r_order, ang = min(r_order, 48), min(ang, 20)
    rr, dirs, ww = _ball_nodes(n, r_order, ang)
    out = []
    prefactor = (p * alpha / (2.0 * math.pi)) ** n
    for R in radii:
        pts = (R * rr)[:, None] * dirs
        lg = np.asarray(log_abs(pts), dtype=np.float64)
        sq = (R * rr) ** 2
        expo = p * (lg - 0.5 * alpha * sq)
        vol = (R * rr) ** (2 * n - 1) * ww * R
        with np.errstate(over="ignore"):
            vals = np.exp(expo) * vol
        out.append(prefactor * float(np.sum(vals)))
    return out


def classify_growth(values, growth_factor: float = _GROWTH_FACTOR,
                    finite_increment: float = _FINITE_INCREMENT) -> str:
    """Divergent / finite / inconclusive from a truncated-ball value sequence.

    Divergent when the last step still grows by more than ``growth_factor``;
    finite when the last relative increment is below ``finite_increment``.
    """
    if len(values) < 3:
        raise ValueError("need at least three radii")
    last, prev = values[-1], values[-2]
    if last <= 0:
        return "finite"
    if not math.isfinite(last):
        return "divergent"
    if prev > 0 and last / prev > growth_factor:
        return "divergent"
    if (last - prev) / last < finite_increment:
        return "finite"
    return "inconclusive"


def _divided_log_abs(f: EntireFn, lin_div: int = 0, quad_div: int = 0):
    def log_abs(U):
        out = f.log_abs_many(U)
        if lin_div or quad_div:
            r = np.sqrt(np.sum(U.real ** 2 + U.imag ** 2, axis=1))
            if lin_div:
                out = out - lin_div * np.log1p(r)
            if quad_div:
                out = out - quad_div * np.log1p(r * r)
        return out

    return log_abs


def classify_membership(
    f: EntireFn, p: float, alpha: float, *,
    lin_div: int = 0, quad_div: int = 0, radii=DEFAULT_RADII,
) -> str:
    """Whether |f| / ((1+|z|)^lin (1+|z|^2)^quad) lies in the weighted p-space.

    Finite p uses the truncated-ball growth probe; p = infinity uses the
    exact asymptotic classification of the representation.
    """
    if f.is_zero():
        return "finite"
    if not math.isfinite(p):
        return "divergent" if sup_unbounded(f, alpha, lin_div, quad_div) else "finite"
    values = truncated_p_integrals(_divided_log_abs(f, lin_div, quad_div), p, alpha, f.n, radii)
    return classify_growth(values)
