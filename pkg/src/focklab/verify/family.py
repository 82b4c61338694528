"""The curated function family driving the verification suites.

Each member carries its known space memberships, derived from closed forms:
polynomials, exponential kernels, and their mixtures lie in every weighted
p-space; the critically-growing exp(alpha z^2 / 2) lies in the sup-normed
space only and is the divergence witness for the finite-p detectors.  Where a
closed-form weighted sup norm exists it is attached, so suites can use exact
right-hand sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..core import EntireFn

__all__ = ["FamilyMember", "build_family", "member_in", "sup_norm_monomial"]

MEMBER_ALL = "all"  # in the weighted p-space for every 0 < p <= inf
MEMBER_INF_ONLY = "inf-only"  # sup-normed space only
MEMBER_NONE = "none"  # in no weighted p-space


@dataclass(frozen=True)
class FamilyMember:
    name: str
    fn: EntireFn
    membership: str
    sup_norm: float | None  # closed-form weighted sup norm when known


def member_in(member: FamilyMember, p: float) -> bool:
    """Known membership of the member in the weighted p-space."""
    if member.membership == MEMBER_ALL:
        return True
    if member.membership == MEMBER_INF_ONLY:
        return not math.isfinite(p)
    return False


def sup_norm_monomial(m, alpha: float) -> float:
    """Closed form sup of |z^m| exp(-alpha|z|^2/2): prod (m_k / alpha e)^{m_k/2}."""
    out = 1.0
    for mk in m:
        if mk:
            out *= (mk / (alpha * math.e)) ** (mk / 2.0)
    return out


def build_family(alpha: float, n: int = 1, seed: int = 2024, include_witness: bool = True) -> list:
    """Deterministic family of test functions for dimension ``n``.

    The seed only affects the random polynomial-kernel mixture member.
    """
    rng = np.random.default_rng(seed)
    members: list[FamilyMember] = []

    def poly_coeffs(count, degree):
        coeffs = {}
        for _ in range(count):
            mono = tuple(int(rng.integers(0, degree + 1)) for _ in range(n))
            coeffs[mono] = complex(*(rng.normal(size=2)))
        return coeffs

    if n == 1:
        w1, w2 = 1.0, 1.0 + 0.5j
        lam = 0.7 - 0.3j
        members = [
            FamilyMember("one", EntireFn.constant(1.0, 1), MEMBER_ALL, 1.0),
            FamilyMember("coordinate", EntireFn.monomial((1,)), MEMBER_ALL,
                         sup_norm_monomial((1,), alpha)),
            FamilyMember("cubic", EntireFn.monomial((3,)), MEMBER_ALL,
                         sup_norm_monomial((3,), alpha)),
            FamilyMember("kernel", EntireFn.kernel(alpha, [w1]), MEMBER_ALL,
                         math.exp(alpha * abs(w1) ** 2 / 2.0)),
            FamilyMember("normalized-kernel", EntireFn.normalized_kernel(alpha, [w2]),
                         MEMBER_ALL, 1.0),
            FamilyMember("exp-line", EntireFn.exp_linear([lam]), MEMBER_ALL,
                         math.exp(abs(lam) ** 2 / (2.0 * alpha))),
        ]
        mix = (
            EntireFn.polynomial(poly_coeffs(3, 2), 1) * EntireFn.kernel(alpha, [0.5 - 0.4j])
            + EntireFn.polynomial(poly_coeffs(2, 3), 1)
        )
        members.append(FamilyMember("mixture", mix, MEMBER_ALL, None))
        if include_witness:
            members.append(
                FamilyMember("witness", EntireFn.exp_quadratic(alpha / 2.0),
                             MEMBER_INF_ONLY, 1.0)
            )
    elif n == 2:
        w1 = np.array([1.0, 0.0])
        w2 = np.array([0.5, 0.5j])
        members = [
            FamilyMember("one", EntireFn.constant(1.0, 2), MEMBER_ALL, 1.0),
            FamilyMember("cross-term", EntireFn.monomial((1, 1)), MEMBER_ALL,
                         sup_norm_monomial((1, 1), alpha)),
            FamilyMember("mixed-cubic", EntireFn.monomial((2, 1)), MEMBER_ALL,
                         sup_norm_monomial((2, 1), alpha)),
            FamilyMember("kernel", EntireFn.kernel(alpha, w1), MEMBER_ALL,
                         math.exp(alpha * float(np.sum(np.abs(w1) ** 2)) / 2.0)),
            FamilyMember("normalized-kernel", EntireFn.normalized_kernel(alpha, w2),
                         MEMBER_ALL, 1.0),
        ]
        mix = (
            EntireFn.polynomial(poly_coeffs(3, 2), 2) * EntireFn.kernel(alpha, [0.4, -0.3j])
            + EntireFn.polynomial(poly_coeffs(2, 2), 2)
        )
        members.append(FamilyMember("mixture", mix, MEMBER_ALL, None))
    else:
        raise ValueError("families are provided for n in {1, 2}")
    return members
