"""Integration against Gaussian measures on C^n.

Two routes are provided for integrals against

    dlam_alpha(u) = (alpha/pi)^n exp(-alpha |u|^2) dv(u):

* tensor Gauss-Hermite quadrature (deterministic, spectrally accurate for
  smooth integrands), and
* importance-sampled Monte Carlo with shifted Gaussian mixture proposals and
  standard-error reporting.

Monte Carlo runs are reproducible: samples are drawn in fixed 2^16-sample
chunks, each chunk from its own counter-based Philox stream spawned from the
run seed, and chunk results are merged by a fixed-order pairwise tree, so the
result is bitwise identical for a given (seed, samples) no matter how the
chunks were scheduled.

Integrands are callables mapping an (N, n) complex array of points to an
(N,) array; the ``log`` variants take and return log-values, which is how
factors like exp(c |u|^2) stay finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .core import as_point

__all__ = [
    "GaussianMeasure",
    "QuadratureRule",
    "MCConfig",
    "Estimate",
    "gauss_hermite_rule",
    "polar_rule",
    "quad_integrate",
    "mc_integrate",
    "importance_center",
    "pairwise_sum",
    "QuadIntegrator",
    "MCIntegrator",
    "DEFAULT_ORDERS",
    "DEFAULT_SEED",
    "DEFAULT_SAMPLES",
]

DEFAULT_ORDERS = {1: 64, 2: 24}
DEFAULT_SEED = 12345
DEFAULT_SAMPLES = 100_000
CHUNK = 1 << 16
_MAX_NODES = 6_000_000


@dataclass(frozen=True)
class GaussianMeasure:
    """The probability measure (alpha/pi)^n exp(-alpha|u|^2) dv on C^n."""

    alpha: float
    n: int

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.n < 1:
            raise ValueError("dimension must be at least 1")

    @property
    def axis_sigma(self) -> float:
        """Standard deviation of each real coordinate."""
        return math.sqrt(0.5 / self.alpha)

    def log_density_ratio(self, pts: np.ndarray, centers: np.ndarray, weights: np.ndarray) -> np.ndarray:
        """log( dlam_alpha / proposal ) for a shifted-mixture Gaussian proposal."""
        sq = np.sum(pts.real ** 2 + pts.imag ** 2, axis=1)
        comps = np.empty((centers.shape[0], pts.shape[0]))
        for j, c in enumerate(centers):
            diff = pts - c[None, :]
            comps[j] = math.log(weights[j]) - self.alpha * np.sum(
                diff.real ** 2 + diff.imag ** 2, axis=1
            )
        m = np.max(comps, axis=0)
        lse = m + np.log(np.sum(np.exp(comps - m[None, :]), axis=0))
        return -self.alpha * sq - lse


@dataclass(frozen=True)
class QuadratureRule:
    """Quadrature nodes/weights for one Gaussian measure."""

    points: np.ndarray  # (N, n) complex
    weights: np.ndarray  # (N,) positive, summing to 1
    order: int  # nodes per real axis (tensor) or radial order (polar)
    measure: GaussianMeasure
    kind: str = "hermite"
    r_max: float = 0.0


@dataclass(frozen=True)
class MCConfig:
    """Sample count, seed, and optional shifted-mixture proposal centers."""

    samples: int
    seed: int = DEFAULT_SEED
    centers: tuple = ()  # tuple of points; empty = sample the measure itself
    center_weights: tuple = ()

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.centers and self.center_weights:
            if len(self.centers) != len(self.center_weights):
                raise ValueError("centers and center_weights must match")
            if abs(sum(self.center_weights) - 1.0) > 1e-9:
                raise ValueError("mixture weights must sum to 1")


@dataclass
class Estimate:
    """A numeric result with its uncertainty and provenance."""

    value: complex | float
    stderr: float
    method: str
    samples_or_order: int
    extra: dict = field(default_factory=dict)

    def within(self, target: float, sigmas: float = 4.0, rel: float = 1e-9) -> bool:
        tol = max(sigmas * self.stderr, rel * max(abs(target), 1.0))
        return abs(self.value - target) <= tol


@lru_cache(maxsize=64)
def _hermite_axis(order: int) -> tuple:
    x, w = np.polynomial.hermite.hermgauss(order)
    return x, w / math.sqrt(math.pi)


@lru_cache(maxsize=8)
def _tensor_rule(alpha: float, n: int, order: int) -> tuple:
    x, w = _hermite_axis(order)
    x = x / math.sqrt(alpha)
    axes = np.meshgrid(*([x] * (2 * n)), indexing="ij")
    waxes = np.meshgrid(*([w] * (2 * n)), indexing="ij")
    pts = np.empty((x.size ** (2 * n), n), dtype=np.complex128)
    for k in range(n):
        pts[:, k] = axes[2 * k].ravel() + 1j * axes[2 * k + 1].ravel()
    weights = np.ones(pts.shape[0])
    for wa in waxes:
        weights *= wa.ravel()
    return pts, weights


def gauss_hermite_rule(measure: GaussianMeasure, order: int | None = None) -> QuadratureRule:
    """Tensor product rule; exact for polynomial integrands of per-axis degree < 2*order."""
    if order is None:
        order = DEFAULT_ORDERS.get(measure.n, 16)
    if not 4 <= order <= 128:
        raise ValueError("order must lie in [4, 128]")
    if measure.n > 2:
        raise ValueError("tensor rules are limited to n <= 2")
    if order ** (2 * measure.n) > _MAX_NODES:
        raise ValueError(
            f"node count {order ** (2 * measure.n)} exceeds the {_MAX_NODES} guard"
        )
    pts, weights = _tensor_rule(float(measure.alpha), measure.n, int(order))
    return QuadratureRule(pts, weights, int(order), measure)


@lru_cache(maxsize=16)
def _polar_nodes(alpha: float, n: int, r_max: float, r_order: int, ang: int) -> tuple:
    x, glw = np.polynomial.legendre.leggauss(r_order)
    r = 0.5 * r_max * (x + 1.0)
    wr = 0.5 * r_max * glw
    if n == 1:
        theta = np.arange(ang) * (2.0 * math.pi / ang)
        R, T = np.meshgrid(r, theta, indexing="ij")
        pts = (R * np.exp(1j * T)).reshape(-1, 1)
        dens = (alpha / math.pi) * np.exp(-alpha * R ** 2) * R
        weights = (dens * wr[:, None] * (2.0 * math.pi / ang)).ravel()
    else:
        s_order = max(12, ang // 2)
        xs, gls = np.polynomial.legendre.leggauss(s_order)
        s = 0.25 * math.pi * (xs + 1.0)
        ws = 0.25 * math.pi * gls * np.cos(s) * np.sin(s)
        phi = np.arange(ang) * (2.0 * math.pi / ang)
        R, S, P1, P2 = np.meshgrid(r, s, phi, phi, indexing="ij")
        z1 = R * np.cos(S) * np.exp(1j * P1)
        z2 = R * np.sin(S) * np.exp(1j * P2)
        pts = np.stack([z1.ravel(), z2.ravel()], axis=1)
        dens = (alpha / math.pi) ** 2 * np.exp(-alpha * R ** 2) * R ** 3
        weights = (
            dens
            * wr[:, None, None, None]
            * ws[None, :, None, None]
            * (2.0 * math.pi / ang) ** 2
        ).ravel()
    return pts, weights


def polar_rule(
    measure: GaussianMeasure,
    r_max: float,
    r_order: int = 128,
    ang: int = 128,
) -> QuadratureRule:
    """Polar-coordinate rule on a ball of radius ``r_max`` for the Gaussian measure.

    Radial kinks like |u| become smooth in polar form, which the tensor
    Hermite rule cannot exploit.  The radius must cover the integrand's mass;
    the lost tail is exp(-alpha r_max^2) relative.  For n = 2 the sphere is
    sampled with a Gauss-Legendre polar angle and trapezoidal phases.
    """
    if measure.n > 2:
        raise ValueError("polar rules are limited to n <= 2")
    if measure.n == 2 and r_order > 64:
        r_order = 64
    if measure.n == 2 and ang > 32:
        ang = 32
    r_q = math.ceil(2.0 * r_max) / 2.0  # quantized for cache reuse
    pts, weights = _polar_nodes(float(measure.alpha), measure.n, r_q, r_order, ang)
    return QuadratureRule(pts, weights, r_order, measure, "polar", r_q)


def pairwise_sum(values) -> float | complex:
    """Fixed-order pairwise tree reduction (deterministic regardless of scheduling)."""
    vals = list(values)
    if not vals:
        return 0.0
    while len(vals) > 1:
        nxt = [vals[i] + vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


def _quad_value(g, rule: QuadratureRule, log: bool):
    if log:
        lg = np.asarray(g(rule.points), dtype=np.float64)
        if np.any(np.isnan(lg)):
            bad = int(np.argmax(np.isnan(lg)))
            raise ValueError(f"integrand is NaN at node {rule.points[bad]}")
        expo = lg + np.log(rule.weights)
        m = float(np.max(expo))
        if m == -math.inf:
            return 0.0
        return float(np.exp(m) * np.sum(np.exp(expo - m))) if m < 700 else math.inf
    vals = np.asarray(g(rule.points))
    if not np.all(np.isfinite(vals)):
        bad = int(np.argmax(~np.isfinite(vals)))
        raise ValueError(f"integrand is not finite at node {rule.points[bad]}")
    return complex(np.sum(vals * rule.weights)) if np.iscomplexobj(vals) else float(
        np.sum(vals * rule.weights)
    )


def quad_integrate(g, rule: QuadratureRule, *, log: bool = False, error_proxy: bool = True) -> Estimate:
    """Deterministic quadrature of ``g`` against the rule's Gaussian measure.

    With ``log=True`` the integrand returns log-values of a non-negative
    function.  The metadata carries |value(order) - value(order/2)| as a
    convergence proxy.
    """
    value = _quad_value(g, rule, log)
    extra = {}
    if error_proxy and rule.order // 2 >= 4:
        if rule.kind == "polar":
            half = polar_rule(rule.measure, rule.r_max, rule.order // 2, 64)
        else:
            half = gauss_hermite_rule(rule.measure, rule.order // 2)
        extra["error_proxy"] = abs(value - _quad_value(g, half, log))
    return Estimate(value, 0.0, "quad", rule.order, extra)


def importance_center(beta: float, alpha_meas: float, z) -> np.ndarray:
    """Mode (beta / 2 alpha) z of exp(beta Re(z.conj(u))) exp(-alpha |u|^2)."""
    if alpha_meas <= 0:
        raise ValueError("alpha_meas must be positive")
    return (beta / (2.0 * alpha_meas)) * as_point(z)


def _mc_chunks(measure: GaussianMeasure, cfg: MCConfig):
    """Yield (points, log_weight) per deterministic chunk."""
    n = measure.n
    sigma = measure.axis_sigma
    if cfg.centers:
        centers = np.asarray([as_point(c, n) for c in cfg.centers], dtype=np.complex128)
        cweights = (
            np.asarray(cfg.center_weights, dtype=np.float64)
            if cfg.center_weights
            else np.full(len(cfg.centers), 1.0 / len(cfg.centers))
        )
        # canonical center order: estimates symmetric in the caller's argument order
        key = np.lexsort(
            tuple(centers[:, k].imag for k in reversed(range(n)))
            + tuple(centers[:, k].real for k in reversed(range(n)))
        )
        centers = centers[key]
        cweights = cweights[key]
    else:
        centers = np.zeros((1, n), dtype=np.complex128)
        cweights = np.ones(1)

    nchunks = (cfg.samples + CHUNK - 1) // CHUNK
    children = np.random.SeedSequence(cfg.seed).spawn(nchunks)
    done = 0
    for child in children:
        size = min(CHUNK, cfg.samples - done)
        done += size
        rng = np.random.Generator(np.random.Philox(child))
        idx = rng.choice(len(centers), size=size, p=cweights)
        offs = sigma * (
            rng.standard_normal((size, n)) + 1j * rng.standard_normal((size, n))
        )
        pts = centers[idx] + offs
        if len(centers) == 1 and np.all(centers == 0):
            logw = np.zeros(size)
        else:
            logw = measure.log_density_ratio(pts, centers, cweights)
        yield pts, logw


def mc_integrate(g, measure: GaussianMeasure, cfg: MCConfig, *, log: bool = False) -> Estimate:
    """Unbiased importance-sampled estimate of the integral of ``g`` dlam.

    ``log=True`` means ``g`` returns log-values of a non-negative integrand.
    Non-finite importance weights reject the configuration.
    """
    sums, sqs, count, is_complex = [], [], 0, False
    for pts, logw in _mc_chunks(measure, cfg):
        if not np.all(np.isfinite(logw)):
            raise ValueError("degenerate proposal: non-finite importance weight")
        if log:
            lg = np.asarray(g(pts), dtype=np.float64)
            vals = np.exp(lg + logw)
        else:
            vals = np.asarray(g(pts)) * np.exp(logw)
        if not np.all(np.isfinite(vals)):
            raise ValueError("integrand produced a non-finite sample value")
        is_complex = is_complex or np.iscomplexobj(vals)
        sums.append(complex(np.sum(vals)))
        sqs.append(float(np.sum(np.abs(vals) ** 2)))
        count += vals.size
    total = pairwise_sum(sums)
    total_sq = pairwise_sum(sqs)
    mean = total / count
    if count > 1:
        var = max(total_sq / count - abs(mean) ** 2, 0.0) * count / (count - 1)
        stderr = math.sqrt(var / count)
    else:
        stderr = 0.0
    value = mean if is_complex else mean.real
    return Estimate(value, stderr, "mc", count, {"seed": cfg.seed})


# ---------------------------------------------------------------------------
# integrator facades used by the analysis layer
# ---------------------------------------------------------------------------

class QuadIntegrator:
    """Gauss-Hermite strategy: ``integrate_log`` / ``integrate_values``.

    ``polar=True`` (with an explicit ball radius) switches to the polar rule,
    which is the accurate choice for integrands carrying radial kinks such
    as |u|.  ``centers`` is accepted for interface parity and ignored.
    """

    method = "quad"

    def __init__(self, order: int | None = None):
        self.order = order

    def _rule(self, measure: GaussianMeasure, polar: bool, r_max: float | None) -> QuadratureRule:
        if polar:
            if r_max is None:
                r_max = 12.0 / math.sqrt(measure.alpha)
            return polar_rule(measure, r_max)
        return gauss_hermite_rule(measure, self.order)

    def integrate_log(
        self, log_g, measure: GaussianMeasure, centers=None, *, polar: bool = False,
        r_max: float | None = None,
    ) -> Estimate:
        return quad_integrate(log_g, self._rule(measure, polar, r_max), log=True)

    def integrate_values(
        self, g, measure: GaussianMeasure, centers=None, *, polar: bool = False,
        r_max: float | None = None,
    ) -> Estimate:
        return quad_integrate(g, self._rule(measure, polar, r_max), log=False)


class MCIntegrator:
    """Monte Carlo strategy; ``centers`` select the shifted-mixture proposal."""

    method = "mc"

    def __init__(self, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED):
        self.samples = samples
        self.seed = seed

    def _cfg(self, centers) -> MCConfig:
        centers = tuple(tuple(as_point(c)) for c in centers) if centers is not None else ()
        return MCConfig(self.samples, self.seed, centers)

    def integrate_log(self, log_g, measure: GaussianMeasure, centers=None, **_ignored) -> Estimate:
        return mc_integrate(log_g, measure, self._cfg(centers), log=True)

    def integrate_values(self, g, measure: GaussianMeasure, centers=None, **_ignored) -> Estimate:
        return mc_integrate(g, measure, self._cfg(centers), log=False)
