"""Adjoint action, exact one-parameter adjoint maps, and group words.

The adjoint map of exp(eps*v) acts on w by the alternating Lie series

    w - eps [v, w] + eps^2/2! [v, [v, w]] - ...

i.e. as exp(-eps ad v).  For the algebras handled here every basis generator
has an ad-matrix that is either nilpotent (the series truncates, eps stays a
rational) or diagonal (the map scales basis vectors by t^(-d_j) with
t = e^eps stored exactly as a ``PosScale``).  Anything else goes through the
double-precision ``numeric_exp`` path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg

from . import linalg
from .errors import (
    NonRationalPower,
    SeriesDoesNotTerminate,
    UnsupportedGenerator,
)
from .lie_core import Subalgebra
from .scalars import PosScale, RationalFunction

__all__ = [
    "ad_matrix",
    "adjoint_exp",
    "lie_series_exp",
    "apply_word",
    "numeric_exp",
    "GroupWord",
]


def ad_matrix(L, x):
    """Matrix of y -> [x, y] in the basis of L (columns are images)."""
    cols = [L.bracket(x, L.basis_vector(j)) for j in range(L.dim)]
    return tuple(tuple(cols[j][i] for j in range(L.dim))
                 for i in range(L.dim))


def _is_zero_matrix(m):
    return all(not entry for row in m for entry in row)


def _is_diagonal(m):
    return all(not entry for i, row in enumerate(m)
               for j, entry in enumerate(row) if i != j)


def _nilpotency_order(L, m):
    """Smallest p <= dim+1 with m^p = 0, or None."""
    power = m
    for p in range(1, L.dim + 2):
        if _is_zero_matrix(power):
            return p
        power = linalg.mat_mul(power, m)
    return None


def adjoint_exp(L, generator_index, param):
    """Exact matrix of Ad(exp(eps e_i)) on L, 0-based generator index.

    Nilpotent directions take a rational eps; the scaling direction takes
    the image t = e^eps as a ``PosScale`` whose needed rational powers must
    exist (otherwise ``NonRationalPower``).
    """
    if not 0 <= generator_index < L.dim:
        raise UnsupportedGenerator(
            f"generator index {generator_index} out of range")
    ad = ad_matrix(L, L.basis_vector(generator_index))
    order = _nilpotency_order(L, ad)
    if order is not None:
        if isinstance(param, PosScale):
            raise TypeError(
                "nilpotent direction takes a rational parameter, not PosScale")
        eps = L.scalar(param) if L.symbolic else Fraction(param)
        out = linalg.identity(L.dim, L._one)
        power = linalg.identity(L.dim, L._one)
        factorial = 1
        for m in range(1, order):
            power = linalg.mat_mul(power, ad)
            factorial *= m
            coeff = (-eps) ** m / factorial
            term = tuple(tuple(coeff * e for e in row) for row in power)
            out = tuple(tuple(a + b for a, b in zip(r1, r2))
                        for r1, r2 in zip(out, term))
        return out
    if _is_diagonal(ad):
        if not isinstance(param, PosScale):
            raise TypeError(
                "the scaling direction takes a PosScale t = e^eps")
        diag = []
        for j in range(L.dim):
            d = ad[j][j]
            if isinstance(d, RationalFunction):
                if not d.is_constant():
                    raise NonRationalPower(
                        "scaling exponents must be fixed rationals; "
                        "evaluate the algebra at a rational k first")
                d = d.as_constant()
            diag.append(param.pow_exact(-d))
        zero = L._zero
        return tuple(tuple(L.scalar(diag[i]) if i == j else zero
                           for j in range(L.dim)) for i in range(L.dim))
    raise UnsupportedGenerator(
        "ad matrix is neither nilpotent nor diagonal; use numeric_exp")


def lie_series_exp(L, x, eps, w):
    """The alternating Lie series applied to w; must truncate within dim+1
    brackets, otherwise ``SeriesDoesNotTerminate`` tells the caller to use
    the numeric path."""
    eps = L.scalar(eps) if L.symbolic else Fraction(eps)
    acc = tuple(w)
    current = tuple(w)
    factorial = 1
    for m in range(1, L.dim + 2):
        current = L.bracket(x, current)
        if linalg.vec_is_zero(current):
            return acc
        if m == L.dim + 1:
            break
        factorial *= m
        coeff = (-eps) ** m / factorial
        acc = linalg.vec_add(acc, linalg.vec_scale(coeff, current))
    raise SeriesDoesNotTerminate(
        "iterated brackets do not vanish; use numeric_exp")


@dataclass(frozen=True)
class GroupWord:
    """An ordered composition of one-parameter adjoint maps.

    ``factors`` lists (generator_index, parameter) pairs, applied first to
    last; parameters are rationals for nilpotent directions, ``PosScale``
    for the scaling direction, and may be floats on the numeric path.
    """

    factors: tuple

    @classmethod
    def identity(cls):
        return cls(())

    @classmethod
    def of(cls, *factors):
        return cls(tuple((int(i), p) for i, p in factors))

    @property
    def is_exact(self):
        return all(isinstance(p, (int, Fraction, PosScale))
                   for _, p in self.factors)

    def then(self, generator_index, param):
        return GroupWord(self.factors + ((generator_index, param),))

    def inverse(self):
        inv = []
        for i, p in reversed(self.factors):
            if isinstance(p, PosScale):
                inv.append((i, p.inverse()))
            else:
                inv.append((i, -p))
        return GroupWord(tuple(inv))

    def matrix(self, L):
        """Exact matrix (applied-first factor rightmost)."""
        if not self.is_exact:
            raise ValueError("word has float parameters; use matrix_float")
        total = linalg.identity(L.dim, L._one)
        for i, p in self.factors:
            total = linalg.mat_mul(adjoint_exp(L, i, p), total)
        return total

    def matrix_float(self, L):
        total = np.eye(L.dim)
        for i, p in self.factors:
            eps = float(np.log(float(p))) if isinstance(p, PosScale) else float(p)
            x = np.zeros(L.dim)
            x[i] = 1.0
            total = numeric_exp(L, x, eps) @ total
        return total


def apply_word(word, S):
    """Image of a subalgebra under a group word (an automorphism, so the
    image is re-echelonized and stays closed)."""
    L = S.algebra
    m = word.matrix(L)
    rows = [linalg.mat_vec(m, r) for r in S.rows]
    return Subalgebra.from_span(L, rows)


def ad_matrix_float(L, x):
    ad = ad_matrix(L, tuple(float(c) for c in x))
    return np.array([[float(e) for e in row] for row in ad], dtype=float)


def numeric_exp(L, x, eps):
    """Double-precision Ad(exp(eps x)) = expm(-eps ad x) for arbitrary x.

    L must be at fixed k.  Scaling-and-squaring via scipy; at dimension 4
    this is accurate to ~1e-12 relative error.
    """
    if L.symbolic:
        raise ValueError("numeric_exp needs an algebra at fixed k")
    return scipy.linalg.expm(-float(eps) * ad_matrix_float(L, x))
