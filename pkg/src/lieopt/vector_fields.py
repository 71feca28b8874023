"""First-order differential operators on (t, S, u) with monomial coefficients.

These realize the abstract basis as concrete symmetry generators, e.g.
``S*d/dS + (1-k)*u*d/du``.  The commutator of two fields is computed by
formal differentiation of monomials, which lets ``verify_realization`` check
exactly, symbolically in k, that a list of fields reproduces a given
structure-constant table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .scalars import RationalFunction, parse_scalar

__all__ = [
    "VectorField",
    "vf_bracket",
    "verify_realization",
    "parse_vector_field",
    "RealizationReport",
]

COORDS = ("t", "S", "u")
_DIRECTION = {name: i for i, name in enumerate(COORDS)}


def _coeff(value):
    return value if isinstance(value, RationalFunction) else parse_scalar(value)


@dataclass(frozen=True)
class VectorField:
    """Sum of terms coeff * t^a S^b u^c * d/dx, merged and sorted."""

    terms: tuple  # ((coeff, (a, b, c), direction), ...)

    @classmethod
    def from_terms(cls, terms):
        merged = {}
        for coeff, exps, direction in terms:
            coeff = _coeff(coeff)
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or any(e < 0 for e in exps):
                raise ValueError("exponents must be three non-negative ints")
            if direction not in (0, 1, 2):
                raise ValueError("direction must be 0 (t), 1 (S) or 2 (u)")
            key = (exps, direction)
            merged[key] = merged.get(key, RationalFunction.zero()) + coeff
        kept = tuple((c, e, d) for (e, d), c in sorted(merged.items()) if c)
        return cls(kept)

    @classmethod
    def zero(cls):
        return cls(())

    def __add__(self, other):
        return VectorField.from_terms(self.terms + other.terms)

    def scale(self, factor):
        factor = _coeff(factor)
        return VectorField.from_terms(
            tuple((factor * c, e, d) for c, e, d in self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for coeff, exps, direction in self.terms:
            factors = []
            text = str(coeff)
            if text not in ("1", "-1"):
                if any(op in text[1:] for op in "+-"):
                    text = f"({text})"
                factors.append(text)
            for name, e in zip(COORDS, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            factors.append(f"d/d{COORDS[direction]}")
            piece = "*".join(factors)
            if str(coeff) == "-1":
                piece = "-" + piece
            pieces.append(piece)
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out


def _differentiate(exps, coord):
    """d/d coord of the monomial; returns (factor, new exponents)."""
    e = exps[coord]
    if e == 0:
        return 0, exps
    lowered = list(exps)
    lowered[coord] = e - 1
    return e, tuple(lowered)


def vf_bracket(X, Y):
    """[X, Y] = X(Y) - Y(X) by formal differentiation of monomials."""
    out = []
    for cx, ex, dx in X.terms:
        for cy, ey, dy in Y.terms:
            factor, lowered = _differentiate(ey, dx)
            if factor:
                out.append((cx * cy * factor,
                            tuple(a + b for a, b in zip(ex, lowered)), dy))
    for cy, ey, dy in Y.terms:
        for cx, ex, dx in X.terms:
            factor, lowered = _differentiate(ex, dy)
            if factor:
                out.append((-(cy * cx * factor),
                            tuple(a + b for a, b in zip(ey, lowered)), dx))
    return VectorField.from_terms(out)


@dataclass(frozen=True)
class RealizationReport:
    ok: bool
    pairs_checked: int
    mismatches: tuple  # ((i, j, got_text, expected_text), ...), 1-based

    def __bool__(self):
        return self.ok


def verify_realization(fields, L):
    """Check [f_i, f_j] = sum_m C^m_ij f_m exactly for every pair."""
    if len(fields) != L.dim:
        raise ValueError(f"expected {L.dim} fields, got {len(fields)}")
    mismatches = []
    pairs = 0
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            pairs += 1
            got = vf_bracket(fields[i], fields[j])
            expected = VectorField.zero()
            for m, c in enumerate(L.basis_bracket(i, j)):
                if c:
                    expected = expected + fields[m].scale(c)
            if got != expected:
                mismatches.append((i + 1, j + 1, str(got), str(expected)))
    return RealizationReport(not mismatches, pairs, tuple(mismatches))


# --------------------------------------------------------------------------
# textual syntax, e.g. "S*d/dS + (1-k)*u*d/du"
# --------------------------------------------------------------------------

_COORD_FACTOR = re.compile(r"^([tSu])(?:\^(\d+))?$")


def _split_top_level(text, separators):
    """Split at top-level separator characters, keeping the separators."""
    parts, depth, start = [], 0, 0
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in separators:
            parts.append(text[start:pos])
            parts.append(ch)
            start = pos + 1
    parts.append(text[start:])
    return parts


def parse_vector_field(text):
    """Parse the CLI syntax for fields on (t, S, u)."""
    text = text.strip()
    if text == "0":
        return VectorField.zero()
    parts = _split_top_level(text, "+-")
    queue = []
    sign = 1
    for piece in parts:
        if piece in ("+", "-"):
            if piece == "-":
                sign = -sign
            continue
        if piece.strip():
            queue.append((sign, piece))
            sign = 1
    terms = []
    for sign, chunk in queue:
        chunk = chunk.strip()
        factors = [f.strip() for f in _split_top_level(chunk, "*")
                   if f.strip() not in ("", "*")]
        direction = None
        exps = [0, 0, 0]
        coeff = RationalFunction.constant(sign)
        for factor in factors:
            if factor.startswith("d/d"):
                name = factor[3:]
                if name not in _DIRECTION or direction is not None:
                    raise ValueError(f"bad direction factor {factor!r}")
                direction = _DIRECTION[name]
                continue
            m = _COORD_FACTOR.match(factor)
            if m:
                exps[_DIRECTION[m.group(1)]] += int(m.group(2) or 1)
                continue
            coeff = coeff * parse_scalar(factor)
        if direction is None:
            raise ValueError(f"term {chunk!r} lacks a d/dt, d/dS or d/du part")
        terms.append((coeff, tuple(exps), direction))
    return VectorField.from_terms(terms)
