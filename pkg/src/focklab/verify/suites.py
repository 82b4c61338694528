"""Verification suites: one per identity, bound, characterization, or conjecture.

Suite ids follow the statements they check:

========  ==================================================================
lemma1    metric axioms of the induced distances (all three p-power forms)
prop2     growth sandwich for d(z, 0) and the small-|z| slope constant
lemma3    dual (sup-over-unit-ball) distance sandwiched by 2^n d_alpha
lemma4    exact second-moment identity against direct integration
lemma5    two-sided growth bounds for E(z), plus the difference-quotient cap
thm6      the Lipschitz bound |f(z)-f(w)| <= 2^n sup-norm(f) d_alpha(z, w)
thm7      gradient / radial-derivative seminorm equivalences on a grid
thm9      first-order derivative membership equivalence (one variable)
thm11     higher-order derivative membership equivalence (one variable)
cor10     deflated derivative combinations preserve membership
cor12     integrated radial-derivative domination (p = 1 route)
conj13    evidence tables for the radial-derivative membership conjecture
conj14    evidence tables for the paired-Lipschitz membership conjecture
========  ==================================================================

Hard suites emit pass/fail records at the declared tolerances; the two
conjecture explorers are evidence-only by construction and never fail.
Every suite is deterministic given (parameters, seed).
"""

from __future__ import annotations

import math

import numpy as np

from ..analysis import (
    DistanceParams,
    FockParams,
    classify_growth,
    classify_membership,
    distance,
    distance_slope_origin,
    dual_distance_bounds,
    energy,
    kernel_abs_integral,
    norm_inf,
    norm_p,
    second_moment_direct,
    second_moment_identity,
    sup_unbounded,
    truncated_p_integrals,
    DEFAULT_RADII,
)
from ..calculus import DeflationError, deflate, gradient, partial, partial_multi, radial, radial_power
from ..core import EntireFn, abs2
from ..integrate import DEFAULT_SAMPLES, DEFAULT_SEED, MCIntegrator, QuadIntegrator
from .family import FamilyMember, build_family, member_in
from .reports import SuiteReport, combined_tolerance, envelope

__all__ = [
    "check_metric_axioms",
    "check_prop2",
    "check_lemma3",
    "check_lemma4",
    "check_lemma5",
    "check_thm6",
    "check_thm7",
    "check_hl_first",
    "check_hl_higher",
    "check_cor10",
    "check_cor12",
    "explore_conjecture13",
    "explore_conjecture14",
    "divergence_probe",
    "SUITES",
    "run_suite",
]

_INF = math.inf


class _SeedStream:
    """Deterministic per-integral seeds so Monte Carlo errors stay independent."""

    def __init__(self, seed: int):
        self.base = int(seed)
        self.count = 0

    def next(self) -> int:
        self.count += 1
        return (self.base * 1_000_003 + self.count) % (1 << 63)


def _points(rng, count: int, n: int, scale: float = 1.2) -> np.ndarray:
    return scale * (rng.normal(size=(count, n)) + 1j * rng.normal(size=(count, n))) / math.sqrt(2)


def _pairs(rng, count: int, n: int) -> list:
    """Half the pairs nearly coincident, half separated by |z-w| in [1, 4]."""
    zs = _points(rng, count, n)
    out = []
    for i, z in enumerate(zs):
        direction = rng.normal(size=n) + 1j * rng.normal(size=n)
        direction /= np.sqrt(np.sum(np.abs(direction) ** 2))
        gap = rng.uniform(0.005, 0.1) if i < count // 2 else rng.uniform(1.0, 4.0)
        out.append((z, z + gap * direction))
    return out


def _mc(samples, seeds: _SeedStream) -> MCIntegrator:
    return MCIntegrator(samples, seeds.next())


# ---------------------------------------------------------------------------
# distances: metric axioms and growth
# ---------------------------------------------------------------------------

def check_metric_axioms(
    alpha: float = 1.0,
    n: int = 1,
    p_exponent: float = 1.0,
    alpha_meas: float | None = None,
    beta: float | None = None,
    triples: int = 100,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Nonnegativity, identity, symmetry, and the triangle inequality.

    Defaults check the canonical d_alpha; explicit alpha_meas/beta/p_exponent
    select any of the distance variants.  Monte Carlo is the primary
    integrator (its stderr feeds the 3-sigma slack); quadrature cross-checks
    the first few triples.
    """
    if alpha_meas is None or beta is None:
        dp = DistanceParams.canonical(alpha)
        dp = DistanceParams(dp.alpha_meas, dp.beta, p_exponent)
    else:
        dp = DistanceParams(alpha_meas, beta, p_exponent)
    rep = SuiteReport(
        "lemma1",
        {"alpha_meas": dp.alpha_meas, "beta": dp.beta, "p_exponent": dp.p_exponent,
         "n": n, "triples": triples, "samples": samples},
        seed=seed,
    )
    rng = np.random.default_rng(seed)
    seeds = _SeedStream(seed)
    quad = QuadIntegrator()

    zs = _points(rng, triples, n)
    us = _points(rng, triples, n)
    ws = _points(rng, triples, n)

    # identity d(z, z) = 0: the integrand vanishes identically
    ident = [distance(dp, z, z, _mc(samples, seeds)).value for z in zs[:10]]
    rep.add_close("identity d(z,z)=0", max(ident), 0.0, 0.0)

    # symmetry is exact: same samples, same |difference| integrand
    sym = 0.0
    for z, w in zip(zs[:10], ws[:10]):
        s = seeds.next()
        dzw = distance(dp, z, w, MCIntegrator(samples, s)).value
        dwz = distance(dp, w, z, MCIntegrator(samples, s)).value
        sym = max(sym, abs(dzw - dwz))
    rep.add_close("symmetry d(z,w)=d(w,z)", sym, 0.0, 0.0)

    # triangle inequality with 3-sigma Monte Carlo slack
    min_margin = _INF
    min_sigma = 0.0
    violations = 0
    positivity = _INF
    for z, u, w in zip(zs, us, ws):
        dzw = distance(dp, z, w, _mc(samples, seeds))
        dzu = distance(dp, z, u, _mc(samples, seeds))
        duw = distance(dp, u, w, _mc(samples, seeds))
        sigma = math.sqrt(dzw.stderr ** 2 + dzu.stderr ** 2 + duw.stderr ** 2)
        margin = dzu.value + duw.value - dzw.value
        if margin < -3.0 * sigma:
            violations += 1
        if margin < min_margin:
            min_margin, min_sigma = margin, sigma
        positivity = min(positivity, dzw.value - 3.0 * dzw.stderr)
    rep.add("triangle min margin", -min_margin, 3.0 * min_sigma, min_sigma,
            min_margin + 3.0 * min_sigma, violations == 0)
    rep.add("triangle violations beyond 3-sigma", violations, 0.0, 0.0,
            -float(violations), violations == 0)
    rep.add("positivity of d(z,w), z != w", positivity, 0.0, 0.0,
            positivity, positivity > 0)

    # quadrature cross-check on a few pairs
    for i, (z, w) in enumerate(zip(zs[:3], ws[:3])):
        eq = distance(dp, z, w, quad)
        em = distance(dp, z, w, _mc(samples, seeds))
        tol = combined_tolerance(eq, em)
        rep.add_close(f"quad/mc cross-check {i}", eq.value, em.value, tol, em.stderr)
    return rep.finalize()


def check_prop2(
    alpha_meas: float = 1.0,
    beta: float = 1.0,
    n: int = 1,
    radii=(0.5, 1.0, 2.0, 3.0),
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Growth of d(z, 0): proof sandwich, limit ratio, and the small-z slope."""
    dp = DistanceParams(alpha_meas, beta)
    rep = SuiteReport(
        "prop2",
        {"alpha_meas": alpha_meas, "beta": beta, "n": n, "radii": list(radii),
         "samples": samples},
        seed=seed,
    )
    seeds = _SeedStream(seed)
    quad = QuadIntegrator()
    ratios = []
    for r in radii:
        z = np.zeros(n, dtype=complex)
        z[0] = r
        dq = distance(dp, z, np.zeros(n), quad)
        dm = distance(dp, z, np.zeros(n), _mc(samples, seeds))
        core = kernel_abs_integral(alpha_meas, beta, z)
        tol = combined_tolerance(dq, dm)
        rep.add_leq(f"lower sandwich r={r}", core - 1.0, dq.value, tol)
        rep.add_leq(f"upper sandwich r={r}", dq.value, core + 1.0, tol)
        rep.add_close(f"quad/mc cross-check r={r}", dq.value, dm.value, tol, dm.stderr)
        ratios.append(dq.value / math.sqrt(math.exp(beta ** 2 * r ** 2 / (2 * alpha_meas)) - 1.0))
        if r == max(radii):
            rel = dq.value / core
            rep.add_leq(f"limit ratio lower r={r}", 1.0 - 1.0 / core, rel, tol / core)
            rep.add_leq(f"limit ratio upper r={r}", rel, 1.0 + 1.0 / core, tol / core)
    rep.envelopes["d(z,0)/sqrt(exp(b^2 r^2/2a)-1)"] = envelope(ratios)

    slope = distance_slope_origin(dp, 1e-3, quad)
    expected = beta * 0.5 * math.sqrt(math.pi / alpha_meas)
    rep.add_close("small-z slope", slope.value, expected, 1e-3 * expected)
    return rep.finalize()


def check_lemma3(
    alpha: float = 1.0,
    n: int = 1,
    pairs: int = 4,
    family_size: int = 8,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """The sup-over-unit-ball distance: probe lower bounds vs 2^n d_alpha.

    The extremal integrand carries the weight exp(alpha|u|^2/2) (the modulus
    bound for unit-sup-norm functions); evaluating it directly must reproduce
    2^n d_alpha within integration error.
    """
    rep = SuiteReport(
        "lemma3", {"alpha": alpha, "n": n, "pairs": pairs, "family_size": family_size},
        seed=seed,
    )
    rng = np.random.default_rng(seed)
    quad = QuadIntegrator()
    zs = _points(rng, pairs, n)
    ws = _points(rng, pairs, n)
    for i, (z, w) in enumerate(zip(zs, ws)):
        bounds = dual_distance_bounds(alpha, z, w, family_size, quad)
        tol = combined_tolerance(bounds.upper, bounds.extremal)
        rep.add_leq(f"probe lower <= upper, pair {i}", bounds.lower, bounds.upper.value, tol)
        rep.add_close(
            f"extremal integral = 2^n d_alpha, pair {i}",
            bounds.extremal.value, bounds.upper.value, tol,
        )
    rep.notes.append(
        "extremal weight exp(alpha|u|^2/2) (pointwise bound for unit-sup-norm "
        "functions); with it the sup-ball distance equals 2^n d_alpha exactly"
    )
    return rep.finalize()


def check_lemma4(
    alpha: float = 1.0,
    n: int = 1,
    points: int = 12,
    seed: int = DEFAULT_SEED,
    rtol: float = 1e-6,
) -> SuiteReport:
    """Exact second-moment identity vs direct quadrature on a z-grid."""
    rep = SuiteReport("lemma4", {"alpha": alpha, "n": n, "points": points, "rtol": rtol},
                      seed=seed)
    rng = np.random.default_rng(seed)
    quad = QuadIntegrator(32 if n == 2 else None)
    grid = [np.zeros(n, dtype=complex)] + list(_points(rng, points - 1, n, scale=0.9))
    for i, z in enumerate(grid):
        closed = second_moment_identity(alpha, z)
        direct = second_moment_direct(alpha, z, quad)
        rep.add_close(f"identity at point {i} (|z|^2={abs2(z):.3f})",
                      direct.value, closed, rtol * closed)
    # closed-form scaling consistency: doubling |z|^2 rescales by a known factor
    z0 = grid[1]
    z2 = math.sqrt(2.0) * z0
    lhs = second_moment_identity(alpha, z2)
    s = abs2(z0)
    factor = ((n + alpha * s) / (n + alpha * s / 2.0)) * math.exp(alpha * s / 2.0)
    rep.add_close("scaling consistency", lhs, factor * second_moment_identity(alpha, z0),
                  1e-12 * lhs)
    return rep.finalize()


def check_lemma5(
    alpha: float = 1.0,
    n: int = 1,
    radii=(0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0),
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Proof bounds |z| e^{a|z|^2/2} <= E(z) and E(z)^2 <= (2n/a + |z|^2) e^{a|z|^2}.

    Also checks the difference-quotient cap d_alpha(z, w)/|z-w| <= alpha E(z)
    at |z-w| = 1e-3 (1% slack), and reports the E(z)/((1+|z|) e^{a|z|^2/2})
    ratio envelope.
    """
    rep = SuiteReport(
        "lemma5", {"alpha": alpha, "n": n, "radii": list(radii), "samples": samples},
        seed=seed,
    )
    rng = np.random.default_rng(seed)
    seeds = _SeedStream(seed)
    quad = QuadIntegrator(32 if n == 2 else None)
    ratios = []
    for r in radii:
        z = np.zeros(n, dtype=complex)
        z[0] = r
        eq = energy(alpha, z, quad)
        em = energy(alpha, z, _mc(samples, seeds))
        tol = combined_tolerance(eq, em)
        rep.add_leq(f"lower bound r={r}", r * math.exp(alpha * r * r / 2.0), eq.value, tol)
        upper = math.sqrt((2.0 * n / alpha + r * r)) * math.exp(alpha * r * r / 2.0)
        rep.add_leq(f"upper bound r={r}", eq.value, upper, tol)
        rep.add_close(f"quad/mc cross-check r={r}", eq.value, em.value, tol, em.stderr)
        ratios.append(eq.value / ((1.0 + r) * math.exp(alpha * r * r / 2.0)))
    rep.envelopes["E(z)/((1+|z|) exp(a|z|^2/2))"] = envelope(ratios)

    dp = DistanceParams.canonical(alpha)
    for i in range(3):
        z = _points(rng, 1, n, scale=1.0)[0]
        direction = rng.normal(size=n) + 1j * rng.normal(size=n)
        direction /= np.sqrt(np.sum(np.abs(direction) ** 2))
        w = z + 1e-3 * direction
        d = distance(dp, z, w, quad)
        gap = math.sqrt(abs2(z - w))
        cap = alpha * energy(alpha, z, quad).value
        rep.add_leq(f"difference quotient cap, point {i}", d.value / gap, cap * 1.01,
                    combined_tolerance(d, scale=cap) / gap)
    return rep.finalize()


# ---------------------------------------------------------------------------
# sup-norm characterizations
# ---------------------------------------------------------------------------

def _family_sup(member: FamilyMember, alpha: float) -> float:
    if member.sup_norm is not None:
        return member.sup_norm
    return norm_inf(member.fn, alpha).value


def check_thm6(
    alpha: float = 1.0,
    n: int = 1,
    pairs: int = 200,
    samples: int = 20_000,
    seed: int = DEFAULT_SEED,
    members: list | None = None,
) -> SuiteReport:
    """Forward Lipschitz bound |f(z)-f(w)| <= 2^n sup-norm(f) d_alpha(z, w).

    Distances are shared across members (computed once per pair, quadrature
    with Monte Carlo cross-checks); the converse-direction evidence is the
    bounded envelope of |f(z)-f(0)| / sqrt(exp(alpha|z|^2) - 1).
    """
    rep = SuiteReport("thm6", {"alpha": alpha, "n": n, "pairs": pairs, "samples": samples},
                      seed=seed)
    rng = np.random.default_rng(seed)
    seeds = _SeedStream(seed)
    quad = QuadIntegrator()
    dp = DistanceParams.canonical(alpha)
    members = members or [m for m in build_family(alpha, n, seed) if m.sup_norm is not None]

    pair_list = _pairs(rng, pairs, n)
    dists = [distance(dp, z, w, quad) for z, w in pair_list]
    for i in (0, len(pair_list) // 2, len(pair_list) - 1):
        em = distance(dp, *pair_list[i], _mc(samples, seeds))
        rep.add_close(f"quad/mc cross-check pair {i}", dists[i].value, em.value,
                      combined_tolerance(dists[i], em), em.stderr)

    scale = 2.0 ** n
    for member in members:
        sup = _family_sup(member, alpha)
        worst = _INF
        worst_rec = None
        violations = 0
        for (z, w), d in zip(pair_list, dists):
            lhs = abs(member.fn.evaluate(z) - member.fn.evaluate(w))
            rhs = scale * sup * d.value
            tol = combined_tolerance(d, scale=rhs)
            margin = rhs - lhs
            if margin < -tol:
                violations += 1
            if margin < worst:
                worst = margin
                worst_rec = (lhs, rhs, tol)
        lhs, rhs, tol = worst_rec
        rep.add_leq(f"{member.name}: worst pair", lhs, rhs, tol)
        rep.add(f"{member.name}: violations", violations, 0.0, 0.0,
                -float(violations), violations == 0)

        ratios = []
        for r in (0.5, 1.0, 1.5, 2.0, 2.5, 3.0):
            z = np.zeros(n, dtype=complex)
            z[0] = r
            gap = abs(member.fn.evaluate(z) - member.fn.evaluate(np.zeros(n)))
            ratios.append(gap / math.sqrt(math.exp(alpha * r * r) - 1.0))
        rep.envelopes[f"{member.name}: |f(z)-f(0)|/sqrt(e^(a|z|^2)-1)"] = envelope(ratios)
    return rep.finalize()


def _sup_divided_profile(f: EntireFn, alpha: float, lin_div: int, quad_div: int,
                         r_max: float, rays: int = 64, radial_pts: int = 120):
    """Grid sup of |f| / ((1+r)^lin (1+r^2)^quad) weighted; also the outer trend."""
    from ..analysis import _direction_grid  # shared direction sampling

    dirs = _direction_grid(f.n, rays)
    radii = np.linspace(0.0, r_max, radial_pts)
    pts = (radii[None, :, None] * dirs[:, None, :]).reshape(-1, f.n)
    logs = f.weighted_log_abs_many(pts, alpha)
    r = np.repeat(radii[None, :], dirs.shape[0], axis=0).ravel()
    logs = logs - lin_div * np.log1p(r) - quad_div * np.log1p(r * r)
    return float(np.exp(np.max(logs)))


def check_thm7(
    alpha: float = 1.0,
    n: int = 1,
    rays: int = 64,
    radial_pts: int = 120,
    seed: int = DEFAULT_SEED,
    members: list | None = None,
    include_noncritical_control: bool = True,
) -> SuiteReport:
    """Equivalent sup seminorms: function, partials, gradient, radial derivative.

    Quantities on a radial-angular grid:
      (a) sup |f| w,   (b) sup max_k |d_k f| w / (1+|z|),
      (c) sup |grad f| w / (1+|z|),   (d) sup |Rf| w / (1+|z|^2),
    with w = exp(-alpha|z|^2/2).  Hard pointwise check: the (d) integrand is
    at most twice the (c) integrand.  Finiteness of all four must match the
    member's sup-space membership.  Both radial-derivative weights (1+|z|)
    and (1+|z|^2) are reported for every member; any observed separation
    between them is flagged as a note.
    """
    rep = SuiteReport("thm7", {"alpha": alpha, "n": n, "rays": rays, "radial_pts": radial_pts},
                      seed=seed)
    members = list(members or build_family(alpha, n, seed))
    if include_noncritical_control and n == 1:
        members.append(FamilyMember(
            "supercritical-control", EntireFn.exp_quadratic(0.75 * alpha), "none", None))

    from ..analysis import _direction_grid

    dirs = _direction_grid(n, rays)
    for member in members:
        f = member.fn
        r_max = f.max_exp_norm() / alpha + 8.0 / math.sqrt(alpha) + 2.0
        radii = np.linspace(0.0, r_max, radial_pts)
        pts = (radii[None, :, None] * dirs[:, None, :]).reshape(-1, n)
        r = np.repeat(radii[None, :], dirs.shape[0], axis=0).ravel()

        grads = gradient(f)
        glogs = np.stack([g.weighted_log_abs_many(pts, alpha) for g in grads])
        rf = radial(f)
        rlogs = rf.weighted_log_abs_many(pts, alpha)

        in_sup_space = member.membership in ("all", "inf-only")
        a_div = sup_unbounded(f, alpha)
        b_div = any(sup_unbounded(g, alpha, lin_div=1) for g in grads)
        d_div = sup_unbounded(rf, alpha, quad_div=1)
        d_lin_div = sup_unbounded(rf, alpha, lin_div=1)

        a_val = _INF if a_div else norm_inf(f, alpha).value
        with np.errstate(invalid="ignore"):
            b_val = _INF if b_div else float(np.exp(np.max(glogs - np.log1p(r)[None, :])))
            c_val = _INF if b_div else float(
                np.max(np.sqrt(np.sum(np.exp(2.0 * (glogs - np.log1p(r)[None, :])), axis=0)))
            )
            d_val = _INF if d_div else float(np.exp(np.max(rlogs - np.log1p(r * r))))
            d_lin_val = _INF if d_lin_div else float(np.exp(np.max(rlogs - np.log1p(r))))
        rep.envelopes[f"{member.name}: quantities"] = {
            "sup|f|w": a_val, "sup|df|w/(1+r)": b_val, "sup|grad f|w/(1+r)": c_val,
            "sup|Rf|w/(1+r^2)": d_val, "sup|Rf|w/(1+r)": d_lin_val,
        }

        # pointwise (d)-integrand <= 2 (c)-integrand
        with np.errstate(invalid="ignore", divide="ignore"):
            d_int = rlogs - np.log1p(r * r)
            c_int = 0.5 * np.log(np.sum(np.exp(2.0 * glogs), axis=0)) - np.log1p(r)
        finite = np.isfinite(d_int) & np.isfinite(c_int)
        gap = (math.log(2.0) + c_int[finite]) - d_int[finite]
        rep.add_leq(f"{member.name}: pointwise |Rf|/(1+r^2) <= 2|grad f|/(1+r)",
                    float(np.exp(-np.min(gap))) if gap.size else 0.0, 1.0, 1e-9)

        agree = (not (a_div or b_div or d_div)) == in_sup_space
        rep.add(f"{member.name}: finiteness pattern matches membership",
                float(not (a_div or b_div or d_div)), float(in_sup_space), 0.0,
                0.0 if agree else -1.0, agree)
        if d_div != d_lin_div:
            rep.notes.append(
                f"{member.name}: (1+|z|) and (1+|z|^2) radial weights separate "
                f"(linear {'divergent' if d_lin_div else 'finite'}, "
                f"quadratic {'divergent' if d_div else 'finite'})"
            )
    return rep.finalize()


# ---------------------------------------------------------------------------
# derivative membership equivalences (one variable) and their corollaries
# ---------------------------------------------------------------------------

def _side_value(log_abs, p: float, alpha: float, n: int, radii) -> float:
    return truncated_p_integrals(log_abs, p, alpha, n, radii)[-1]


def _divided_log(f: EntireFn, lin_div: int):
    def log_abs(U):
        out = f.log_abs_many(U)
        if lin_div:
            r = np.sqrt(np.sum(U.real ** 2 + U.imag ** 2, axis=1))
            out = out - lin_div * np.log1p(r)
        return out

    return log_abs


def _classify_weighted(f: EntireFn, p: float, alpha: float, lin_div: int,
                       radii=DEFAULT_RADII) -> tuple[str, float]:
    """(classification, last truncated value or sup) for |f|/(1+|z|)^lin."""
    if f.is_zero():
        return "finite", 0.0
    if not math.isfinite(p):
        if sup_unbounded(f, alpha, lin_div=lin_div):
            return "divergent", _INF
        value = _sup_divided_profile(f, alpha, lin_div, 0,
                                     f.max_exp_norm() / alpha + 8.0 / math.sqrt(alpha) + 2.0)
        return "finite", value
    vals = truncated_p_integrals(_divided_log(f, lin_div), p, alpha, f.n, radii)
    return classify_growth(vals), vals[-1]


def check_hl_first(
    p: float = 2.0,
    alpha: float = 1.0,
    radii=DEFAULT_RADII,
    seed: int = DEFAULT_SEED,
    members: list | None = None,
) -> SuiteReport:
    """Membership of f vs of f'/(1+|z|), one variable, for the whole family."""
    rep = SuiteReport("thm9", {"p": "inf" if not math.isfinite(p) else p, "alpha": alpha,
                               "radii": list(radii)}, seed=seed)
    members = members or build_family(alpha, 1, seed)
    for member in members:
        f = member.fn
        va, xa = _classify_weighted(f, p, alpha, 0, radii)
        vb, xb = _classify_weighted(partial(f, 1), p, alpha, 1, radii)
        expected = member_in(member, p)
        ok = (va == vb) and ((va == "finite") == expected)
        rep.add(f"{member.name}: f {va}, f'/(1+|z|) {vb} (expected "
                f"{'finite' if expected else 'divergent'})",
                xa, xb, 0.0, 0.0 if ok else -1.0, ok)
    return rep.finalize()


def check_hl_higher(
    p: float = 2.0,
    alpha: float = 1.0,
    nderiv: int = 2,
    n: int = 1,
    radii=DEFAULT_RADII,
    seed: int = DEFAULT_SEED,
    members: list | None = None,
) -> SuiteReport:
    """Membership of f vs all order-N derivatives over (1+|z|)^N.

    One variable: full equivalence against known membership.  Two variables:
    the forward direction only (membership forces every derivative side
    finite), matching what is provable without new tools.
    """
    if nderiv > 4:
        raise ValueError("derivative order is limited to 4 in the suites")
    rep = SuiteReport("thm11", {"p": "inf" if not math.isfinite(p) else p, "alpha": alpha,
                                "nderiv": nderiv, "n": n, "radii": list(radii)}, seed=seed)
    members = members or build_family(alpha, n, seed)
    for member in members:
        f = member.fn
        va, xa = _classify_weighted(f, p, alpha, 0, radii)
        if n == 1:
            sides = [partial_multi(f, (nderiv,))]
        else:
            sides = [partial_multi(f, (k, nderiv - k)) for k in range(nderiv + 1)]
        verdicts = []
        worst = 0.0
        for g in sides:
            vb, xb = _classify_weighted(g, p, alpha, nderiv, radii)
            verdicts.append(vb)
            worst = max(worst, xb) if math.isfinite(xb) else _INF
        expected = member_in(member, p)
        if n == 1:
            ok = all(v == va for v in verdicts) and ((va == "finite") == expected)
            label = f"{member.name}: f {va}, d^{nderiv}f/(1+|z|)^{nderiv} {verdicts[0]}"
        else:
            ok = (va != "finite") or all(v == "finite" for v in verdicts)
            label = (f"{member.name}: f {va} implies all |m|={nderiv} sides finite "
                     f"({'/'.join(verdicts)})")
        rep.add(label, xa, worst, 0.0, 0.0 if ok else -1.0, ok)
    return rep.finalize()


def check_cor10(
    p: float = 2.0,
    alpha: float = 1.0,
    constants=(0.0, 1.0, -2.0, 3.0),
    taylor_degree: int = 32,
    radii=DEFAULT_RADII,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Membership of f vs of f'/z + c f/z^2 after removing the degree-1 jet.

    Kernel-type members deflate through a degree-``taylor_degree`` expansion
    (tail below 1e-17 at these radii); the quadratic-exponent witness joins
    for c = 0 where the division is exact termwise.
    """
    rep = SuiteReport("cor10", {"p": "inf" if not math.isfinite(p) else p, "alpha": alpha,
                                "constants": list(constants),
                                "taylor_degree": taylor_degree}, seed=seed)
    members = build_family(alpha, 1, seed)
    zmono = EntireFn.monomial((1,))
    for member in members:
        f = member.fn
        jet = f.value_at_zero() + partial(f, 1).value_at_zero() * zmono
        f0 = f - jet
        if f0.is_zero():
            continue
        va, xa = _classify_weighted(f0, p, alpha, 0, radii)
        expected = member_in(member, p)
        for c in constants:
            if member.membership == "inf-only" and c != 0.0:
                continue  # the f/z^2 route needs a truncation that erases growth
            try:
                g = deflate(partial(f0, 1), (1,), taylor_degree)
                if c != 0.0:
                    g = g + c * deflate(f0, (2,), taylor_degree)
            except DeflationError as err:
                rep.add(f"{member.name}, c={c}: deflation precondition", 0.0, 0.0, 0.0,
                        -1.0, False)
                rep.notes.append(f"{member.name}, c={c}: {err}")
                continue
            vb, xb = _classify_weighted(g, p, alpha, 0, radii)
            ok = (va == vb) and ((va == "finite") == expected)
            rep.add(f"{member.name}, c={c}: f {va}, f'/z + c f/z^2 {vb}",
                    xa, xb, 0.0, 0.0 if ok else -1.0, ok)
    return rep.finalize()


def check_cor12(
    alpha: float = 1.0,
    n: int = 1,
    radii=DEFAULT_RADII,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Integrated domination of |f - f(0)| by |Rf|/(1+|z|^2), p = 1 weights.

    Both sides carry the weight exp(-alpha|z|^2/2) under plain volume
    measure.  No constant is asserted: the suite checks that the left side is
    finite whenever the right side is, and records the observed ratios.
    """
    rep = SuiteReport("cor12", {"alpha": alpha, "n": n, "radii": list(radii)}, seed=seed)
    members = build_family(alpha, n, seed)
    ratios = []
    vol_factor = (2.0 * math.pi / alpha) ** n
    for member in members:
        f = member.fn
        h = f - f.value_at_zero()
        if h.is_zero():
            continue
        rf = radial(f)
        v_left = classify_membership(h, 1.0, alpha)
        v_right = classify_membership(rf, 1.0, alpha, quad_div=1)
        ok = not (v_right == "finite" and v_left != "finite")
        if v_left == "finite" and v_right == "finite":
            left = vol_factor * _side_value(h.log_abs_many, 1.0, alpha, n, radii)

            def log_right(U, rf=rf):
                r2 = np.sum(U.real ** 2 + U.imag ** 2, axis=1)
                return rf.log_abs_many(U) - np.log1p(r2)

            right = vol_factor * _side_value(log_right, 1.0, alpha, n, radii)
            ratios.append(left / right)
            rep.add(f"{member.name}: left {v_left} ({left:.4g}), right {v_right} ({right:.4g})",
                    left, right, 0.0, 0.0 if ok else -1.0, ok)
        else:
            rep.add(f"{member.name}: left {v_left}, right {v_right}",
                    0.0, 0.0, 0.0, 0.0 if ok else -1.0, ok)
    if ratios:
        rep.envelopes["left/right ratio"] = envelope(ratios)
    return rep.finalize()


# ---------------------------------------------------------------------------
# conjecture explorers (evidence only)
# ---------------------------------------------------------------------------

def explore_conjecture13(
    alpha: float = 1.0,
    p_list=(0.5, 1.0, 2.0, _INF),
    orders=(1, 2, 3),
    n: int = 1,
    radii=DEFAULT_RADII,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Finiteness of R^N f /(1+|z|^2)^N in the weighted p-space vs membership.

    Evidence only: agreements are tabulated; any disagreement would be
    counterexample material and is highlighted in the notes.
    """
    rep = SuiteReport("conj13", {"alpha": alpha, "n": n, "orders": list(orders),
                                 "p_list": ["inf" if not math.isfinite(p) else p for p in p_list],
                                 "radii": list(radii)}, seed=seed)
    members = build_family(alpha, n, seed)
    agreements, total = 0, 0
    for member in members:
        f = member.fn
        for order in orders:
            rnf = radial_power(f, order)
            for p in p_list:
                expected = member_in(member, p)
                if not math.isfinite(p):
                    div = sup_unbounded(rnf, alpha, quad_div=order)
                    verdict = "divergent" if div else "finite"
                else:
                    verdict = classify_membership(rnf, p, alpha, quad_div=order, radii=radii)
                agree = (verdict == "finite") == expected
                total += 1
                agreements += agree
                if not agree:
                    rep.notes.append(
                        f"potential counterexample material: {member.name}, N={order}, "
                        f"p={p}: radial side {verdict}, membership "
                        f"{'finite' if expected else 'divergent'}"
                    )
                rep.add(
                    f"{member.name}, N={order}, p={'inf' if not math.isfinite(p) else p}: "
                    f"{verdict}", float(verdict == "finite"), float(expected), 0.0,
                    0.0 if agree else -1.0, agree,
                )
    rep.envelopes["agreement"] = {"agree": agreements, "total": total}
    return rep.finalize(evidence_only=True)


def explore_conjecture14(
    alpha: float = 1.0,
    p: float = 2.0,
    pairs: int = 40,
    n: int = 1,
    samples: int = 20_000,
    radii=DEFAULT_RADII,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Paired-Lipschitz candidate g(z) = max_k |d_k f(z)| / ((1+|z|) e^{a|z|^2/2}).

    For members of the p-space: test |f(z)-f(w)| <= d_alpha(z,w) (g(z)+g(w))
    on sampled pairs, report the violation rate, the scaling constant that
    would make the bound hold, and the p-integrability of g under plain
    volume measure.  Evidence only.
    """
    rep = SuiteReport("conj14", {"alpha": alpha, "n": n,
                                 "p": "inf" if not math.isfinite(p) else p,
                                 "pairs": pairs, "samples": samples}, seed=seed)
    rng = np.random.default_rng(seed)
    seeds = _SeedStream(seed)
    quad = QuadIntegrator()
    dp = DistanceParams.canonical(alpha)
    members = [m for m in build_family(alpha, n, seed) if member_in(m, p)]
    pair_list = _pairs(rng, pairs, n)
    dists = [distance(dp, z, w, quad) for z, w in pair_list]

    for member in members:
        f = member.fn
        grads = gradient(f)

        def g_at(z, grads=grads):
            pt = np.asarray(z).reshape(1, n)
            vals = [math.exp(gg.weighted_log_abs_many(pt, alpha)[0]) for gg in grads]
            return max(vals) / (1.0 + math.sqrt(abs2(z)))

        violations = 0
        worst_scale = 0.0
        for (z, w), d in zip(pair_list, dists):
            lhs = abs(f.evaluate(z) - f.evaluate(w))
            rhs = d.value * (g_at(z) + g_at(w))
            if rhs > 0:
                scale = lhs / rhs
                worst_scale = max(worst_scale, scale)
                if lhs > rhs * (1.0 + 1e-9) and scale > 1.0:
                    violations += 1
            elif lhs > combined_tolerance(d, scale=1.0):
                violations += 1
        rate = violations / len(pair_list)
        rep.add(f"{member.name}: unscaled violation rate", rate, 0.0, 0.0, -rate, True)
        rep.add(f"{member.name}: scaling constant making the bound hold",
                worst_scale, 0.0, 0.0, 0.0, True)

        def log_g(U, grads=grads):
            logs = np.stack([gg.weighted_log_abs_many(U, alpha) for gg in grads])
            r = np.sqrt(np.sum(U.real ** 2 + U.imag ** 2, axis=1))
            return np.max(logs, axis=0) - np.log1p(r)

        if math.isfinite(p):
            # plain-volume p-integral of g; the weight is inside log_g already
            rr, dirs, ww = _ball_nodes_for(n)
            vals = []
            for R in radii:
                pts = (R * rr)[:, None] * dirs
                lg = log_g(pts)
                vol = (R * rr) ** (2 * n - 1) * ww * R
                vals.append(float(np.sum(np.exp(p * lg) * vol)))
            verdict = classify_growth(vals)
            rep.add(f"{member.name}: candidate g in L^p(dv) ({verdict})",
                    vals[-1], 0.0, 0.0, 0.0, verdict == "finite")
    rep.notes.append("evidence only: the statement is open")
    return rep.finalize(evidence_only=True)


def _ball_nodes_for(n: int):
    from ..analysis import _ball_nodes

    if n == 2:
        return _ball_nodes(2, 48, 20)
    return _ball_nodes(1, 96, 128)


# ---------------------------------------------------------------------------
# membership detector
# ---------------------------------------------------------------------------

def divergence_probe(f: EntireFn, p: float, alpha: float, radii=DEFAULT_RADII) -> str:
    """Classify the weighted p-integral of f as finite / divergent / inconclusive.

    Truncated-ball integrals over increasing radii; divergent when the last
    step still grows by a factor above 1.5, finite when the last relative
    increment is below 1e-3.  For p = infinity the exact growth analysis of
    the representation is used instead.
    """
    if len(radii) < 3:
        raise ValueError("need at least three radii")
    return classify_membership(f, p, alpha, radii=tuple(radii))


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

SUITES = {
    "lemma1": check_metric_axioms,
    "prop2": check_prop2,
    "lemma3": check_lemma3,
    "lemma4": check_lemma4,
    "lemma5": check_lemma5,
    "thm6": check_thm6,
    "thm7": check_thm7,
    "thm9": check_hl_first,
    "thm11": check_hl_higher,
    "cor10": check_cor10,
    "cor12": check_cor12,
    "conj13": explore_conjecture13,
    "conj14": explore_conjecture14,
}


def run_suite(suite_id: str, **kwargs) -> SuiteReport:
    """Run a registered suite by id with keyword parameters."""
    if suite_id not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}; known: {sorted(SUITES)}")
    return SUITES[suite_id](**kwargs)
