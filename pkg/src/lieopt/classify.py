"""Isomorphism classification of L(k) and basis changes to standard form.

The family splits five ways by the value of k:

  K0     k = 0        A_2 + 2A_1, single relation [e1, e2] = e2
  K1     k = 1        A_2 + 2A_1, single relation [e1, e2] = e2
  KHALF  k = 1/2      A_3.4 + A_1, [e1, e3] = e1, [e2, e3] = -e2
  KLOW   k < 1/2,!=0  A_3.5^a + A_1 with a = k/(k-1), 0 < |a| < 1
  KHIGH  k > 1/2,!=1  A_3.5^a + A_1 with a = (k-1)/k, 0 < |a| < 1

Each case carries the explicit invertible basis change from the original
v-basis to the standard e-basis; ``to_standard_basis`` transports the
structure constants through it and verifies the target relations exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from . import linalg
from .errors import RelationMismatch
from .lie_core import LieAlgebra, center, derived_subalgebra
from .scalars import RationalFunction, parse_scalar

__all__ = [
    "AlgebraCase",
    "ClassifiedAlgebra",
    "StructuralSignature",
    "classify_k",
    "paper_algebra",
    "standard_algebra",
    "to_standard_basis",
    "classified_algebra",
    "structural_invariants",
]

E_LABELS = ("e1", "e2", "e3", "e4")


@lru_cache(maxsize=1)
def paper_algebra():
    """The symbolic family L(k): [v2,v4] = -k v2, [v3,v4] = (1-k) v3."""
    data = resources.files("lieopt").joinpath("data/L_paper.json")
    with data.open(encoding="utf-8") as handle:
        return LieAlgebra.from_json_dict(json.load(handle))


@dataclass(frozen=True)
class AlgebraCase:
    """One of the five isomorphism regimes, with its basis change."""

    tag: str                 # K0 | K1 | KHALF | KLOW | KHIGH
    k: Fraction
    alpha: Fraction | None   # None for K0/K1; -1 for KHALF
    basis_change: tuple      # rows: e_i expressed in v coordinates
    standard_name: str

    @property
    def uses_generic_table(self):
        return self.tag in ("KHIGH", "KLOW", "KHALF")

    def alpha_symbolic(self):
        """alpha as a rational function of k on the open regimes."""
        k = RationalFunction.var()
        if self.tag == "KHIGH":
            return (k - 1) / k
        if self.tag == "KLOW":
            return k / (k - 1)
        if self.tag == "KHALF":
            return RationalFunction.constant(-1)
        return None

    def v_to_e(self, vector):
        """Coordinates of a v-basis vector in the e-basis."""
        bt = linalg.transpose(self.basis_change)
        return linalg.solve(bt, tuple(vector))

    def e_to_v(self, vector):
        """Coordinates of an e-basis vector in the v-basis."""
        return linalg.mat_vec(linalg.transpose(self.basis_change), vector)


@dataclass(frozen=True)
class ClassifiedAlgebra:
    """L(k) together with its case and the verified e-basis table."""

    case: AlgebraCase
    e_algebra: LieAlgebra
    k: Fraction

    @property
    def alpha(self):
        return self.case.alpha


def classify_k(k):
    """The unique case for a rational k; boundary values are exact."""
    k = Fraction(k)
    half = Fraction(1, 2)
    if k == 0:
        tag, alpha, name = "K0", None, "A_2 ⊕ 2A_1"
        rows = ((0, 0, 0, -1), (0, 0, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0))
    elif k == 1:
        tag, alpha, name = "K1", None, "A_2 ⊕ 2A_1"
        rows = ((0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0))
    elif k == half:
        tag, alpha, name = "KHALF", Fraction(-1), "A_{3.4} ⊕ A_1"
        rows = ((0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 2), (1, 0, 0, 0))
    elif k > half:
        tag, alpha, name = "KHIGH", (k - 1) / k, "A_{3.5}^α ⊕ A_1"
        rows = ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1 / k), (1, 0, 0, 0))
    else:
        tag, alpha, name = "KLOW", k / (k - 1), "A_{3.5}^α ⊕ A_1"
        rows = ((0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1 / (1 - k)),
                (1, 0, 0, 0))
    change = tuple(tuple(Fraction(x) for x in row) for row in rows)
    return AlgebraCase(tag, k, alpha, change, name)


def standard_algebra(case):
    """The expected e-basis table for a case, at its fixed k."""
    if case.tag in ("K0", "K1"):
        brackets = {(1, 2): {2: Fraction(1)}}
    else:
        brackets = {(1, 3): {1: Fraction(1)}, (2, 3): {2: case.alpha}}
    return LieAlgebra.from_brackets(4, E_LABELS, brackets)


def transport(L, change):
    """Structure constants of L in the basis given by the change rows."""
    dim = L.dim
    inv_t = linalg.mat_inverse(linalg.transpose(change))
    brackets = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            w = L.bracket(change[i], change[j])
            coeffs = linalg.mat_vec(inv_t, w)
            comps = {m + 1: c for m, c in enumerate(coeffs) if c}
            if comps:
                brackets[(i + 1, j + 1)] = comps
    return LieAlgebra.from_brackets(dim, E_LABELS, brackets)


def to_standard_basis(L, case):
    """Transport L through the case's basis change and verify the target.

    L must be the family algebra; pass it symbolic (it is evaluated at
    case.k) or already evaluated at case.k.
    """
    L_k = L.at_k(case.k) if L.symbolic else L
    change = tuple(tuple(L_k.scalar(x) for x in row)
                   for row in case.basis_change)
    got = transport(L_k, change)
    expected = standard_algebra(case)
    for i in range(4):
        for j in range(i + 1, 4):
            g = got.basis_bracket(i, j)
            e = expected.basis_bracket(i, j)
            if g != e:
                raise RelationMismatch(
                    f"[{E_LABELS[i]}, {E_LABELS[j]}] transported to "
                    f"{g}, expected {e}",
                    bracket=(i + 1, j + 1, g, e))
    return ClassifiedAlgebra(case, expected, case.k)


def classified_algebra(k):
    """Classify k and return the verified classified algebra in one step."""
    case = classify_k(k)
    return to_standard_basis(paper_algebra(), case)


# --------------------------------------------------------------------------
# isomorphism invariants
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class StructuralSignature:
    center_dim: int
    derived_dim: int
    second_derived_dim: int
    derived_nilpotent: bool
    ad_eigenvalue_ratio: tuple | None  # unordered pair {r, 1/r}, sorted

    def as_tuple(self):
        return (self.center_dim, self.derived_dim, self.second_derived_dim,
                self.derived_nilpotent, self.ad_eigenvalue_ratio)


def _rational_sqrt(value):
    if value < 0:
        return None
    from .scalars import rational_nth_root
    if value == 0:
        return Fraction(0)
    return rational_nth_root(value, 2)


def structural_invariants(L, k=None):
    """Basis-independent signature used for isomorphism sanity checks."""
    if k is not None:
        L = L.at_k(k)
    cen = center(L)
    der = derived_subalgebra(L)
    # second derived: span of brackets of derived basis vectors
    second_vecs = [L.bracket(a, b) for idx, a in enumerate(der.rows)
                   for b in der.rows[idx + 1:]]
    second_vecs = [v for v in second_vecs if not linalg.vec_is_zero(v)]
    second_dim = linalg.span_dim(second_vecs) if second_vecs else 0

    # nilpotency of the derived algebra: lower central series inside it
    series = der.rows
    nilpotent = True
    for _ in range(L.dim + 1):
        nxt = [L.bracket(a, b) for a in der.rows for b in series]
        nxt = [v for v in nxt if not linalg.vec_is_zero(v)]
        nxt_rows = linalg.rref(nxt)[0] if nxt else ()
        if not nxt_rows:
            break
        if nxt_rows == series:
            nilpotent = False
            break
        series = nxt_rows
    else:
        nilpotent = not series

    ratio = None
    if der.dim_sub == 2:
        ratio = _ad_ratio_on_plane(L, der)
    return StructuralSignature(cen.dim_sub, der.dim_sub, second_dim,
                               nilpotent, ratio)


def _ad_ratio_on_plane(L, der):
    """Unordered eigenvalue ratio {r, 1/r} of ad acting on a 2-dim derived
    algebra, when that action is a line with rational eigenvalues."""
    mats = []
    for i in range(L.dim):
        cols = []
        for row in der.rows:
            w = L.bracket(L.basis_vector(i), row)
            coeffs = linalg.span_coefficients(der.rows, der.pivots, w)
            if coeffs is None:
                return None  # not an invariant plane; no ratio defined
            cols.append(coeffs)
        mat = (cols[0][0], cols[1][0], cols[0][1], cols[1][1])
        if any(mat):
            mats.append(mat)
    if not mats or linalg.span_dim(tuple(mats)) != 1:
        return None
    a, b, c, d = mats[0]
    tr, det = a + d, a * d - b * c
    if det == 0:
        return None
    disc = tr * tr - 4 * det
    root = _rational_sqrt(disc)
    if root is None:
        return None
    lam1, lam2 = (tr + root) / 2, (tr - root) / 2
    if lam1 == 0 or lam2 == 0:
        return None
    r = lam1 / lam2
    pair = sorted((r, 1 / r))
    return (pair[0], pair[1])
