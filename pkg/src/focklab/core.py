"""Complex points, multi-indices, and an exactly-differentiable class of entire functions.

The function class is finite sums of terms

    P(z) * exp(a.z + g*z^2),    a.z = a_1 z_1 + ... + a_n z_n,

where P is a polynomial with complex coefficients and the quadratic exponent g
is only admitted in one complex variable.  The class contains polynomials,
exponential kernels exp(a.z), their normalized versions, and exp(g z^2), and it
is closed under addition, scalar multiples, products (with at most one
quadratic factor), and holomorphic differentiation.  Exactness of the
representation is the point: every derivative and product used elsewhere in
the package is computed symbolically, not numerically.

Weighted evaluations f(z) * exp(-alpha |z|^2 / 2) are carried in
log-magnitude/phase form (:class:`LogComplex`) so that growth like
exp(alpha |z|^2 / 2) never overflows before the Gaussian weight cancels it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Monomial",
    "as_point",
    "abs2",
    "mi_degree",
    "mi_factorial",
    "mi_log_factorial",
    "LogComplex",
    "logcomplex_sum",
    "Term",
    "EntireFn",
    "eval_fn",
    "eval_weighted",
]

# A monomial exponent: one non-negative integer per coordinate.
Monomial = tuple[int, ...]

_COEFF_EPS = 1e-300  # coefficients below this modulus are dropped on canonicalization
_LOG_OVERFLOW = 700.0  # exp() overflows just above this


# ---------------------------------------------------------------------------
# points and multi-indices
# ---------------------------------------------------------------------------

def as_point(z, n: int | None = None) -> np.ndarray:
    """Coerce ``z`` to a complex vector of length ``n`` (a point of C^n)."""
    arr = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    if arr.ndim != 1:
        raise ValueError(f"a point must be one-dimensional, got shape {arr.shape}")
    if n is not None and arr.shape[0] != n:
        raise ValueError(f"point has dimension {arr.shape[0]}, expected {n}")
    return arr


def abs2(z) -> float:
    """|z|^2 = sum of squared moduli of the coordinates."""
    arr = as_point(z)
    return float(np.sum(arr.real ** 2 + arr.imag ** 2))


def mi_degree(m: Monomial) -> int:
    """Total degree |m| = m_1 + ... + m_n."""
    return int(sum(m))


def mi_factorial(m: Monomial) -> int:
    """Exact m! = m_1! ... m_n! (use :func:`mi_log_factorial` for large orders)."""
    out = 1
    for mk in m:
        out *= math.factorial(mk)
    return out


def mi_log_factorial(m: Monomial) -> float:
    """log(m!) computed in the log domain; safe far beyond |m| = 64."""
    return float(sum(math.lgamma(mk + 1) for mk in m))


# ---------------------------------------------------------------------------
# log-magnitude/phase complex numbers
# ---------------------------------------------------------------------------

def _wrap_phase(phi: float) -> float:
    """Reduce a phase to (-pi, pi]."""
    out = math.remainder(phi, 2.0 * math.pi)
    if out <= -math.pi:
        out += 2.0 * math.pi
    return out


@dataclass(frozen=True)
class LogComplex:
    """A complex number stored as (log modulus, phase); logmag = -inf encodes 0."""

    logmag: float
    phase: float = 0.0

    def __mul__(self, other: "LogComplex") -> "LogComplex":
        if math.isinf(self.logmag) and self.logmag < 0:
            return self
        if math.isinf(other.logmag) and other.logmag < 0:
            return other
        return LogComplex(self.logmag + other.logmag, _wrap_phase(self.phase + other.phase))

    @property
    def magnitude(self) -> float:
        return math.exp(self.logmag) if self.logmag < _LOG_OVERFLOW else math.inf

    def to_complex(self) -> complex:
        """Convert to an ordinary complex number (exact up to logmag ~ 700)."""
        if self.logmag == -math.inf:
            return 0.0 + 0.0j
        if self.logmag > _LOG_OVERFLOW:
            raise OverflowError(f"logmag {self.logmag:.3g} exceeds double range")
        return cmath.rect(math.exp(self.logmag), self.phase)

    @classmethod
    def from_complex(cls, value: complex) -> "LogComplex":
        value = complex(value)
        if value == 0:
            return cls(-math.inf, 0.0)
        return cls(math.log(abs(value)), _wrap_phase(cmath.phase(value)))


def logcomplex_sum(parts: list[LogComplex]) -> LogComplex:
    """Sum of LogComplex values, stable against large common magnitudes."""
    finite = [p for p in parts if p.logmag != -math.inf]
    if not finite:
        return LogComplex(-math.inf, 0.0)
    m = max(p.logmag for p in finite)
    s = sum(cmath.rect(math.exp(p.logmag - m), p.phase) for p in finite)
    if s == 0:
        return LogComplex(-math.inf, 0.0)
    return LogComplex(m + math.log(abs(s)), _wrap_phase(cmath.phase(s)))


# ---------------------------------------------------------------------------
# terms and entire functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Term:
    """One summand P(z) * exp(a.z + gamma z^2).

    ``coeffs`` maps monomial exponent tuples to complex coefficients, ``expvec``
    is the linear form a, and ``gamma`` (one variable only) the quadratic
    exponent.  Instances are immutable; the coefficient dict must not be
    mutated after construction.
    """

    coeffs: dict
    expvec: tuple
    gamma: complex = 0j

    def degree(self) -> int:
        return max((mi_degree(m) for m in self.coeffs), default=0)

    def _poly_many(self, pts: np.ndarray) -> np.ndarray:
        """Evaluate the polynomial factor on an (N, n) array of points."""
        out = np.zeros(pts.shape[0], dtype=np.complex128)
        for mono, coeff in self.coeffs.items():
            vals = np.full(pts.shape[0], coeff, dtype=np.complex128)
            for k, mk in enumerate(mono):
                if mk:
                    vals *= pts[:, k] ** mk
            out += vals
        return out

    def _exponent_many(self, pts: np.ndarray) -> np.ndarray:
        """a.z + gamma z^2 on an (N, n) array of points."""
        expo = pts @ np.asarray(self.expvec, dtype=np.complex128)
        if self.gamma != 0:
            expo = expo + self.gamma * pts[:, 0] ** 2
        return expo


def _merge_key(term: Term):
    return (term.expvec, term.gamma)


def _canonical(n: int, terms) -> tuple:
    """Merge terms with identical exponent data and drop negligible coefficients."""
    merged: dict = {}
    for term in terms:
        key = _merge_key(term)
        dest = merged.setdefault(key, {})
        for mono, coeff in term.coeffs.items():
            dest[mono] = dest.get(mono, 0j) + coeff
    out = []
    for (expvec, gamma), coeffs in merged.items():
        kept = {m: c for m, c in coeffs.items() if abs(c) > _COEFF_EPS}
        if kept:
            out.append(Term(kept, expvec, gamma))
    out.sort(key=lambda t: (abs(t.gamma), repr(t.expvec), t.degree()))
    return tuple(out)


@dataclass(frozen=True)
class EntireFn:
    """An entire function on C^n in the closed representation described above."""

    n: int
    terms: tuple

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int = 1) -> "EntireFn":
        return cls(n, ())

    @classmethod
    def constant(cls, value: complex, n: int = 1) -> "EntireFn":
        zero = (0,) * n
        return cls(n, _canonical(n, [Term({zero: complex(value)}, (0j,) * n)]))

    @classmethod
    def monomial(cls, m: Monomial, coeff: complex = 1.0) -> "EntireFn":
        m = tuple(int(mk) for mk in m)
        if any(mk < 0 for mk in m):
            raise ValueError("monomial exponents must be non-negative")
        n = len(m)
        return cls(n, _canonical(n, [Term({m: complex(coeff)}, (0j,) * n)]))

    @classmethod
    def polynomial(cls, coeffs: dict, n: int) -> "EntireFn":
        cdict = {tuple(int(x) for x in m): complex(c) for m, c in coeffs.items()}
        for m in cdict:
            if len(m) != n:
                raise ValueError(f"monomial {m} does not match dimension {n}")
        return cls(n, _canonical(n, [Term(cdict, (0j,) * n)]))

    @classmethod
    def exp_linear(cls, a) -> "EntireFn":
        """exp(a.z) for a vector a."""
        a = as_point(a)
        n = a.shape[0]
        return cls(n, (Term({(0,) * n: 1.0 + 0j}, tuple(complex(x) for x in a)),))

    @classmethod
    def kernel(cls, alpha: float, w) -> "EntireFn":
        """The exponential kernel K_w(z) = exp(alpha z.conj(w))."""
        w = as_point(w)
        return cls.exp_linear(alpha * np.conj(w))

    @classmethod
    def normalized_kernel(cls, alpha: float, w) -> "EntireFn":
        """k_w = K_w scaled to unit quadratic norm: exp(alpha z.conj(w) - alpha|w|^2/2)."""
        w = as_point(w)
        scale = math.exp(-alpha * abs2(w) / 2.0)
        return scale * cls.kernel(alpha, w)

    @classmethod
    def exp_quadratic(cls, gamma: complex) -> "EntireFn":
        """exp(gamma z^2), one complex variable only."""
        return cls(1, (Term({(0,): 1.0 + 0j}, (0j,), complex(gamma)),))

    # -- structural queries --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def has_quadratic(self) -> bool:
        return any(t.gamma != 0 for t in self.terms)

    def degree(self) -> int:
        return max((t.degree() for t in self.terms), default=0)

    def max_exp_norm(self) -> float:
        """Largest |a| over the linear exponent vectors (0 for polynomials)."""
        out = 0.0
        for t in self.terms:
            out = max(out, math.sqrt(sum(abs(x) ** 2 for x in t.expvec)))
        return out

    def max_quadratic(self) -> float:
        return max((abs(t.gamma) for t in self.terms), default=0.0)

    def value_at_zero(self) -> complex:
        zero = (0,) * self.n
        return sum(t.coeffs.get(zero, 0j) for t in self.terms)

    # -- algebra -------------------------------------------------------------

    def _check_dim(self, other: "EntireFn") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = EntireFn.constant(other, self.n)
        self._check_dim(other)
        return EntireFn(self.n, _canonical(self.n, self.terms + other.terms))

    __radd__ = __add__

    def __neg__(self):
        return (-1.0) * self

    def __sub__(self, other):
        if isinstance(other, (int, float, complex)):
            other = EntireFn.constant(other, self.n)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            scaled = [
                Term({m: other * c for m, c in t.coeffs.items()}, t.expvec, t.gamma)
                for t in self.terms
            ]
            return EntireFn(self.n, _canonical(self.n, scaled))
        self._check_dim(other)
        out = []
        for s in self.terms:
            for t in other.terms:
                if s.gamma != 0 and t.gamma != 0:
                    raise ValueError(
                        "product of two quadratic-exponent terms is outside the class"
                    )
                coeffs: dict = {}
                for m1, c1 in s.coeffs.items():
                    for m2, c2 in t.coeffs.items():
                        mono = tuple(a + b for a, b in zip(m1, m2))
                        coeffs[mono] = coeffs.get(mono, 0j) + c1 * c2
                expvec = tuple(a + b for a, b in zip(s.expvec, t.expvec))
                out.append(Term(coeffs, expvec, s.gamma + t.gamma))
        return EntireFn(self.n, _canonical(self.n, out))

    __rmul__ = __mul__

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, z) -> complex:
        """Direct pointwise value; may overflow for extreme arguments."""
        pts = as_point(z, self.n).reshape(1, self.n)
        return complex(self.evaluate_many(pts)[0])

    def evaluate_many(self, pts: np.ndarray) -> np.ndarray:
        """Values on an (N, n) array of points."""
        pts = np.asarray(pts, dtype=np.complex128)
        if pts.ndim != 2 or pts.shape[1] != self.n:
            raise ValueError(f"expected points of shape (N, {self.n}), got {pts.shape}")
        out = np.zeros(pts.shape[0], dtype=np.complex128)
        for term in self.terms:
            out += term._poly_many(pts) * np.exp(term._exponent_many(pts))
        return out

    def log_abs_phase_many(self, pts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(log|f|, arg f) on an (N, n) array, stable against exponent growth.

        log|f| is -inf where f vanishes.
        """
        pts = np.asarray(pts, dtype=np.complex128)
        if pts.ndim != 2 or pts.shape[1] != self.n:
            raise ValueError(f"expected points of shape (N, {self.n}), got {pts.shape}")
        npts = pts.shape[0]
        if not self.terms:
            return np.full(npts, -np.inf), np.zeros(npts)
        logs = np.empty((len(self.terms), npts))
        phases = np.empty((len(self.terms), npts))
        for i, term in enumerate(self.terms):
            pv = term._poly_many(pts)
            expo = term._exponent_many(pts)
            with np.errstate(divide="ignore"):
                logs[i] = np.where(pv == 0, -np.inf, np.log(np.abs(pv))) + expo.real
            phases[i] = np.angle(pv) + expo.imag
        if len(self.terms) == 1:
            return logs[0], phases[0]
        m = np.max(logs, axis=0)
        safe_m = np.where(np.isfinite(m), m, 0.0)
        s = np.sum(np.exp(logs - safe_m[None, :] + 1j * phases), axis=0)
        with np.errstate(divide="ignore"):
            logmag = np.where(
                np.isfinite(m) & (s != 0), safe_m + np.log(np.abs(np.where(s == 0, 1, s))), -np.inf
            )
        return logmag, np.angle(s)

    def log_abs_many(self, pts: np.ndarray) -> np.ndarray:
        return self.log_abs_phase_many(pts)[0]

    def weighted_log_abs_many(self, pts: np.ndarray, alpha: float) -> np.ndarray:
        """log( |f(z)| exp(-alpha |z|^2 / 2) ), vectorized."""
        pts = np.asarray(pts, dtype=np.complex128)
        sq = np.sum(pts.real ** 2 + pts.imag ** 2, axis=1)
        return self.log_abs_many(pts) - 0.5 * alpha * sq


# Spec-level operation names; thin wrappers over the methods above.

def eval_fn(f: EntireFn, z) -> complex:
    """Pointwise value f(z)."""
    return f.evaluate(z)


def eval_weighted(f: EntireFn, z, alpha: float) -> LogComplex:
    """f(z) * exp(-alpha |z|^2 / 2) as a LogComplex (never overflows in range)."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    pts = as_point(z, f.n).reshape(1, f.n)
    logmag, phase = f.log_abs_phase_many(pts)
    w = 0.5 * alpha * abs2(z)
    lm = float(logmag[0]) - w
    if lm == -math.inf:
        return LogComplex(-math.inf, 0.0)
    return LogComplex(lm, _wrap_phase(float(phase[0])))
