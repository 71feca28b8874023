"""Structure-constant Lie algebras, subalgebras and structural invariants.

A ``LieAlgebra`` is a basis together with the table [e_i, e_j] = sum_m
C^m_ij e_m, with coefficients either exact rationals (fixed k) or
``RationalFunction`` (symbolic in k).  Elements are plain coordinate tuples.
Subspaces are kept in reduced row echelon form, so two subalgebras are equal
as subspaces exactly when their stored bases are identical tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import linalg
from .errors import DimensionMismatch, NotClosed, ZeroVector
from .scalars import RationalFunction, parse_scalar

__all__ = [
    "LieAlgebra",
    "Subalgebra",
    "JacobiReport",
    "bracket",
    "check_jacobi",
    "center",
    "derived_subalgebra",
    "normalizer",
    "close_subspace",
    "parse_element",
    "format_element",
]


@dataclass(frozen=True)
class LieAlgebra:
    """A finite-dimensional Lie algebra given by structure constants."""

    dim: int
    labels: tuple
    nonzero: tuple  # ((i, j, m, coeff), ...) with i < j, 0-based, coeff != 0

    @classmethod
    def from_brackets(cls, dim, labels, brackets):
        """brackets maps (i, j) with i < j (1-based) to {m: coeff}."""
        entries = []
        for (i, j), comps in sorted(brackets.items()):
            if not (1 <= i < j <= dim):
                raise ValueError(f"bad bracket index pair ({i}, {j})")
            for m, coeff in sorted(comps.items()):
                coeff = parse_scalar(coeff) if isinstance(coeff, str) else coeff
                if coeff:
                    entries.append((i - 1, j - 1, m - 1, coeff))
        symbolic = any(isinstance(c, RationalFunction) and not c.is_constant()
                       for *_ig, c in entries)
        if symbolic:
            entries = [(i, j, m, parse_scalar(c)) for i, j, m, c in entries]
        else:
            entries = [(i, j, m, c.as_constant()
                        if isinstance(c, RationalFunction) else Fraction(c))
                       for i, j, m, c in entries]
        return cls(dim, tuple(labels), tuple(entries))

    @property
    def symbolic(self):
        return any(isinstance(c, RationalFunction) and not c.is_constant()
                   for *_ignored, c in self.nonzero)

    @cached_property
    def _zero(self):
        for *_ignored, c in self.nonzero:
            if isinstance(c, RationalFunction):
                return RationalFunction.zero()
        return Fraction(0)

    @cached_property
    def _one(self):
        return linalg.one_like(self._zero)

    def scalar(self, value):
        if isinstance(self._zero, RationalFunction):
            return parse_scalar(value)
        if isinstance(value, RationalFunction):
            return value.as_constant()
        return Fraction(value)

    def zero_vector(self):
        return (self._zero,) * self.dim

    def basis_vector(self, i):
        """0-based basis vector."""
        return tuple(self._one if j == i else self._zero
                     for j in range(self.dim))

    def basis_bracket(self, i, j):
        """[e_i, e_j] as a vector, 0-based, any i, j."""
        out = list(self.zero_vector())
        for a, b, m, c in self.nonzero:
            if (a, b) == (i, j):
                out[m] = out[m] + c
            elif (a, b) == (j, i):
                out[m] = out[m] - c
        return tuple(out)

    def structure_constant(self, i, j, m):
        return self.basis_bracket(i, j)[m]

    def bracket(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(
                f"elements must have length {self.dim}")
        out = list(self.zero_vector())
        for i, j, m, c in self.nonzero:
            f = x[i] * y[j] - x[j] * y[i]
            if f:
                out[m] = out[m] + c * f
        return tuple(out)

    def at_k(self, k):
        """Evaluate a symbolic algebra at rational k (raises PoleAtK)."""
        k = Fraction(k)
        entries = []
        for i, j, m, c in self.nonzero:
            value = c(k) if isinstance(c, RationalFunction) else Fraction(c)
            if value:
                entries.append((i, j, m, value))
        return LieAlgebra(self.dim, self.labels, tuple(entries))

    # -- JSON interchange ----------------------------------------------------

    @classmethod
    def from_json_dict(cls, data):
        brackets = {}
        for entry in data["brackets"]:
            key = (entry["i"], entry["j"])
            brackets.setdefault(key, {})[entry["m"]] = parse_scalar(entry["coeff"])
        return cls.from_brackets(data["dim"], tuple(data["labels"]), brackets)

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as handle:
            return cls.from_json_dict(json.load(handle))

    def to_json_dict(self):
        return {
            "schema": 1,
            "dim": self.dim,
            "labels": list(self.labels),
            "brackets": [
                {"i": i + 1, "j": j + 1, "m": m + 1, "coeff": str(c)}
                for i, j, m, c in self.nonzero
            ],
        }


# --------------------------------------------------------------------------
# subalgebras
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Subalgebra:
    """A subspace in canonical echelon form with a closure certificate.

    ``certificate`` stores, for every pair of basis rows, the coefficients of
    their bracket in the row basis; it is the witness that the subspace is
    closed.
    """

    algebra: LieAlgebra
    rows: tuple
    pivots: tuple
    certificate: tuple = field(compare=False)

    @classmethod
    def from_span(cls, algebra, generators):
        rows, pivots = linalg.rref(tuple(tuple(g) for g in generators))
        cert = []
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                br = algebra.bracket(rows[a], rows[b])
                coeffs = linalg.span_coefficients(rows, pivots, br)
                if coeffs is None:
                    raise NotClosed(
                        "span is not closed under the bracket",
                        witness=(rows[a], rows[b], br))
                cert.append(((a, b), coeffs))
        return cls(algebra, rows, pivots, tuple(cert))

    @classmethod
    def trivial(cls, algebra):
        return cls(algebra, (), (), ())

    @property
    def dim_sub(self):
        return len(self.rows)

    def contains(self, v):
        if self.dim_sub == 0:
            return linalg.vec_is_zero(v)
        return linalg.in_span(self.rows, self.pivots, v)

    def contains_subalgebra(self, other):
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        return (isinstance(other, Subalgebra)
                and self.algebra == other.algebra
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.algebra.dim, self.rows))


def close_subspace(L, generators, k=None):
    """Smallest subalgebra containing the generators.

    Iterates span -> span + brackets; by dimension count a fixpoint occurs
    within dim steps.  Zero generators are ignored; an all-zero generator
    set is an error (use ``Subalgebra.trivial`` for {0}).
    """
    if k is not None:
        L = L.at_k(k)
    gens = [tuple(g) for g in generators if not linalg.vec_is_zero(g)]
    if not gens:
        raise ZeroVector(
            "all generators are zero; use Subalgebra.trivial for {0}")
    rows, pivots = linalg.rref(gens)
    for _ in range(L.dim):
        new = []
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                br = L.bracket(rows[a], rows[b])
                if not linalg.in_span(rows, pivots, br):
                    new.append(br)
        if not new:
            break
        rows, pivots = linalg.rref(rows + tuple(new))
    return Subalgebra.from_span(L, rows)


def bracket(L, x, y):
    """Bilinear antisymmetric product of two elements of L."""
    return L.bracket(x, y)


# --------------------------------------------------------------------------
# Jacobi verification
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    checked: int
    violations: tuple  # ((i, j, l, p, expression-string), ...), 1-based

    def __bool__(self):
        return self.ok


def check_jacobi(L):
    """Verify sum_m (C^m_ij C^p_ml + C^m_jl C^p_mi + C^m_li C^p_mj) = 0.

    Runs symbolically when the table is symbolic in k; a violation names the
    first witness tuple (i, j, l, p).
    """
    violations = []
    checked = 0
    table = [[L.basis_bracket(i, j) for j in range(L.dim)]
             for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for l in range(j + 1, L.dim):
                inner_ij = table[i][j]
                inner_jl = table[j][l]
                inner_li = table[l][i]
                total = list(L.zero_vector())
                for m in range(L.dim):
                    if inner_ij[m]:
                        term = linalg.vec_scale(inner_ij[m], table[m][l])
                        total = list(linalg.vec_add(total, term))
                    if inner_jl[m]:
                        term = linalg.vec_scale(inner_jl[m], table[m][i])
                        total = list(linalg.vec_add(total, term))
                    if inner_li[m]:
                        term = linalg.vec_scale(inner_li[m], table[m][j])
                        total = list(linalg.vec_add(total, term))
                for p in range(L.dim):
                    checked += 1
                    if total[p]:
                        violations.append(
                            (i + 1, j + 1, l + 1, p + 1, str(total[p])))
    return JacobiReport(not violations, checked, tuple(violations))


# --------------------------------------------------------------------------
# structural subalgebras
# --------------------------------------------------------------------------

def _at(L, k):
    if k is None:
        if L.symbolic:
            raise ValueError("a rational k is required for a symbolic algebra")
        return L
    return L.at_k(k)


def center(L, k=None):
    """{x : [x, y] = 0 for all y}, via an exact null space."""
    L = _at(L, k)
    conditions = []
    for j in range(L.dim):
        for m in range(L.dim):
            conditions.append(tuple(L.basis_bracket(i, j)[m]
                                    for i in range(L.dim)))
    basis = linalg.kernel(tuple(conditions))
    if not basis:
        return Subalgebra.trivial(L)
    return Subalgebra.from_span(L, basis)


def derived_subalgebra(L, k=None):
    """Span of all brackets [e_i, e_j]."""
    L = _at(L, k)
    vectors = [L.basis_bracket(i, j)
               for i in range(L.dim) for j in range(i + 1, L.dim)]
    vectors = [v for v in vectors if not linalg.vec_is_zero(v)]
    if not vectors:
        return Subalgebra.trivial(L)
    return Subalgebra.from_span(L, linalg.rref(vectors)[0])


def normalizer(L, N, k=None):
    """{y : [y, x] in N for all x in N}; N is an ideal of the result."""
    L = _at(L, k)
    if isinstance(N, Subalgebra):
        rows, pivots = N.rows, N.pivots
    else:
        rows, pivots = linalg.rref(tuple(tuple(v) for v in N))
    if not rows:
        return Subalgebra.from_span(L, linalg.identity(L.dim, L._one))
    conditions = []
    for x in rows:
        # residual of [e_i, x] against N, linear in the unknown y
        residuals = [linalg.reduce_mod_rows(rows, pivots, L.bracket(
            L.basis_vector(i), x)) for i in range(L.dim)]
        for m in range(L.dim):
            row = tuple(residuals[i][m] for i in range(L.dim))
            if not linalg.vec_is_zero(row):
                conditions.append(row)
    if not conditions:
        return Subalgebra.from_span(L, linalg.identity(L.dim, L._one))
    basis = linalg.kernel(tuple(conditions))
    return Subalgebra.from_span(L, basis)


# --------------------------------------------------------------------------
# element parsing / printing
# --------------------------------------------------------------------------

def parse_element(L, text):
    """Parse 'v2' / 'e3' style labels or comma-separated coordinates."""
    text = text.strip()
    if text in L.labels:
        return L.basis_vector(L.labels.index(text))
    parts = text.split(",")
    if len(parts) != L.dim:
        raise DimensionMismatch(
            f"expected {L.dim} comma-separated coordinates, got {len(parts)}")
    return tuple(L.scalar(parse_scalar(p)) for p in parts)


def format_element(coeffs, labels):
    """Render a coordinate vector as '-1/2 * v2 + v3' style text."""
    pieces = []
    for c, name in zip(coeffs, labels):
        if not c:
            continue
        text = str(c)
        if text == "1":
            pieces.append(name)
        elif text == "-1":
            pieces.append(f"-{name}")
        elif any(op in text[1:] for op in "+-") or "*" in text:
            pieces.append(f"({text}) * {name}")
        else:
            pieces.append(f"{text} * {name}")
    if not pieces:
        return "0"
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out
