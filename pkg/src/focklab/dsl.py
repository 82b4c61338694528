"""Text format for entire functions.

A function is a ``|``-separated sum of clauses:

    poly: 2 + (1+0.5i)*z1^2*z2 - 3i*z2      polynomial; optional "; a=(...)"
                                            attaches an exp(a.z) factor
    kernel: alpha=1; w=(1+0.5i, 2)          exponential kernel exp(alpha z.conj(w))
    expsq: gamma=0.5                        exp(gamma z^2), one variable only;
                                            optional "; a=A" and "; poly=..."

Complex literals are written ``a+bi`` (``2``, ``-1.5i``, ``1+2i``); inside a
polynomial body a coefficient with both parts must be parenthesized so the
term separators stay unambiguous.  ``z`` is accepted as an alias for ``z1``.
Printing uses ``repr`` floats, so parse -> print -> parse round-trips exactly.
"""

from __future__ import annotations

import re

import numpy as np

from .core import EntireFn, Term

__all__ = ["DSLError", "parse_complex", "format_complex", "parse_dsl", "format_dsl"]


class DSLError(ValueError):
    """Malformed function text; carries the offending position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"position {position}: {message}")
        self.position = position


_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_RE_FULL = re.compile(rf"^([+-]?{_NUM})\s*([+-]\s*(?:{_NUM})?)i$")
_RE_IMAG = re.compile(rf"^([+-]?(?:{_NUM})?)i$")
_RE_REAL = re.compile(rf"^[+-]?{_NUM}$")


def _imag_value(text: str) -> float:
    text = text.replace(" ", "")
    if text in ("", "+"):
        return 1.0
    if text == "-":
        return -1.0
    return float(text)


def parse_complex(text: str, position: int = 0) -> complex:
    """Parse ``a+bi`` / ``a`` / ``bi`` / ``i`` into a complex number."""
    s = text.strip()
    m = _RE_FULL.match(s)
    if m:
        return complex(float(m.group(1)), _imag_value(m.group(2)))
    m = _RE_IMAG.match(s)
    if m:
        return complex(0.0, _imag_value(m.group(1)))
    if _RE_REAL.match(s):
        return complex(float(s), 0.0)
    raise DSLError(f"bad complex literal {text!r}", position)


def format_complex(value: complex) -> str:
    """Shortest exact text for a complex number (repr floats round-trip)."""
    value = complex(value)
    if value.imag == 0.0:
        return repr(value.real)
    if value.real == 0.0:
        return f"{value.imag!r}i"
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real!r}{sign}{abs(value.imag)!r}i"


def _parse_cvector(text: str, position: int) -> tuple[complex, ...]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts = text.split(",")
    return tuple(parse_complex(p, position) for p in parts)


# -- polynomial bodies -------------------------------------------------------

_MONO_RE = re.compile(r"^z(\d*)(?:\^(\d+))?$")


def _split_terms(body: str, position: int):
    """Split on +/- at depth 0; yields (sign, text, pos)."""
    terms = []
    depth = 0
    sign = 1.0
    start = 0
    i = 0
    prev_nonspace = ""
    while i < len(body):
        ch = body[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise DSLError("unbalanced ')'", position + i)
        elif ch in "+-" and depth == 0:
            if prev_nonspace == "":
                sign = 1.0 if ch == "+" else -1.0
                start = i + 1
            elif prev_nonspace not in ("e", "E", "+", "-", "*", "(", ","):
                terms.append((sign, body[start:i], position + start))
                sign = 1.0 if ch == "+" else -1.0
                start = i + 1
        if not ch.isspace():
            prev_nonspace = ch
        i += 1
    if depth != 0:
        raise DSLError("unbalanced '('", position + len(body))
    terms.append((sign, body[start:], position + start))
    return terms


def _parse_polybody(body: str, position: int) -> dict:
    """Parse a sum of coefficient*monomial terms into {exponents: coeff} (dim inferred later)."""
    coeffs: dict = {}
    for sign, text, pos in _split_terms(body, position):
        text = text.strip()
        if not text:
            raise DSLError("empty term", pos)
        coeff = complex(sign)
        exps: dict[int, int] = {}
        for factor in (p.strip() for p in text.split("*")):
            if not factor:
                raise DSLError("empty factor", pos)
            mono = _MONO_RE.match(factor)
            if mono:
                idx = int(mono.group(1)) if mono.group(1) else 1
                if idx < 1:
                    raise DSLError(f"bad variable index in {factor!r}", pos)
                exps[idx - 1] = exps.get(idx - 1, 0) + (int(mono.group(2)) if mono.group(2) else 1)
            else:
                if factor.startswith("(") and factor.endswith(")"):
                    factor = factor[1:-1]
                coeff *= parse_complex(factor, pos)
        key = tuple(sorted(exps.items()))
        coeffs[key] = coeffs.get(key, 0j) + coeff
    return coeffs


def _expand_mono(sparse, n: int) -> tuple[int, ...]:
    out = [0] * n
    for idx, e in sparse:
        if idx >= n:
            raise DSLError(f"variable z{idx + 1} exceeds dimension {n}")
        out[idx] = e
    return tuple(out)


def _keyval(parts: list[str], clause_pos: int) -> dict:
    out = {}
    for part in parts:
        if "=" not in part:
            raise DSLError(f"expected key=value, got {part.strip()!r}", clause_pos)
        key, val = part.split("=", 1)
        out[key.strip()] = val.strip()
    return out


# -- parser -------------------------------------------------------------------

def parse_dsl(text: str, n: int | None = None) -> EntireFn:
    """Parse function text into an :class:`EntireFn` of dimension ``n``.

    When ``n`` is omitted it is inferred from the variables and vectors used.
    """
    clauses = []
    pos = 0
    for chunk in text.split("|"):
        stripped = chunk.strip()
        if not stripped:
            raise DSLError("empty clause", pos)
        head, sep, rest = stripped.partition(":")
        if not sep:
            raise DSLError("clause must start with 'poly:', 'kernel:' or 'expsq:'", pos)
        clauses.append((head.strip(), rest, pos))
        pos += len(chunk) + 1

    # first pass: raw clause data plus the dimension each clause requires
    parsed = []
    needed = 1
    for head, rest, cpos in clauses:
        if head == "poly":
            parts = rest.split(";")
            coeffs = _parse_polybody(parts[0], cpos)
            opts = _keyval(parts[1:], cpos)
            avec = _parse_cvector(opts["a"], cpos) if "a" in opts else None
            unknown = set(opts) - {"a"}
            if unknown:
                raise DSLError(f"unknown option(s) {sorted(unknown)} in poly clause", cpos)
            dim = max((idx + 1 for mono in coeffs for idx, _ in mono), default=1)
            if avec is not None:
                dim = max(dim, len(avec))
            parsed.append(("poly", (coeffs, avec), cpos))
        elif head == "kernel":
            opts = _keyval(rest.split(";"), cpos)
            if "alpha" not in opts or "w" not in opts:
                raise DSLError("kernel clause needs alpha=... and w=(...)", cpos)
            alpha = float(opts["alpha"])
            w = _parse_cvector(opts["w"], cpos)
            dim = len(w)
            parsed.append(("kernel", (alpha, w), cpos))
        elif head == "expsq":
            opts = _keyval(rest.split(";"), cpos)
            if "gamma" not in opts:
                raise DSLError("expsq clause needs gamma=...", cpos)
            gamma = parse_complex(opts["gamma"], cpos)
            avec = parse_complex(opts["a"], cpos) if "a" in opts else 0j
            poly = _parse_polybody(opts["poly"], cpos) if "poly" in opts else {(): 1.0 + 0j}
            dim = 1
            parsed.append(("expsq", (gamma, avec, poly), cpos))
        else:
            raise DSLError(f"unknown clause kind {head!r}", cpos)
        needed = max(needed, dim)

    if n is None:
        n = needed
    elif needed > n:
        raise DSLError(f"function uses dimension {needed} but n={n} was requested")

    total = EntireFn.zero(n)
    for kind, data, cpos in parsed:
        if kind == "poly":
            coeffs, avec = data
            dense = {_expand_mono(m, n): c for m, c in coeffs.items()}
            fn = EntireFn.polynomial(dense, n)
            if avec is not None:
                a = list(avec) + [0j] * (n - len(avec))
                fn = fn * EntireFn.exp_linear(np.asarray(a))
            total = total + fn
        elif kind == "kernel":
            alpha, w = data
            wfull = list(w) + [0j] * (n - len(w))
            total = total + EntireFn.kernel(alpha, np.asarray(wfull))
        else:
            gamma, a, poly = data
            if n != 1:
                raise DSLError("expsq clauses are one-variable only", cpos)
            dense = {_expand_mono(m, 1): c for m, c in poly.items()}
            total = total + EntireFn(1, (Term(dense, (complex(a),), complex(gamma)),))
    return total


# -- printer ------------------------------------------------------------------

def _format_polybody(coeffs: dict) -> str:
    items = sorted(coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    pieces = []
    for mono, coeff in items:
        monos = "*".join(
            f"z{k + 1}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(mono) if e > 0
        )
        if not monos:
            piece = format_complex(coeff)
        elif coeff == 1:
            piece = monos
        else:
            piece = f"({format_complex(coeff)})*{monos}"
        pieces.append(piece)
    return " + ".join(pieces) if pieces else "0"


def format_dsl(f: EntireFn) -> str:
    """Canonical text for a function; parseable by :func:`parse_dsl`."""
    if not f.terms:
        return "poly: 0"
    clauses = []
    for term in f.terms:
        body = _format_polybody(term.coeffs)
        if term.gamma != 0:
            clause = f"expsq: gamma={format_complex(term.gamma)}"
            if term.expvec[0] != 0:
                clause += f"; a={format_complex(term.expvec[0])}"
            if term.coeffs != {(0,): 1.0 + 0j}:
                clause += f"; poly={body}"
        elif any(x != 0 for x in term.expvec):
            avec = ", ".join(format_complex(x) for x in term.expvec)
            clause = f"poly: {body}; a=({avec})"
        else:
            clause = f"poly: {body}"
        clauses.append(clause)
    return " | ".join(clauses)
