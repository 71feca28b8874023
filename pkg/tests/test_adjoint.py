import math
import random
from fractions import Fraction

import numpy as np
import pytest

from lieopt.adjoint import (
    GroupWord,
    ad_matrix,
    ad_matrix_float,
    adjoint_exp,
    apply_word,
    lie_series_exp,
    numeric_exp,
)
from lieopt.classify import classified_algebra, standard_algebra, classify_k
from lieopt.errors import (
    NonRationalPower,
    SeriesDoesNotTerminate,
    UnsupportedGenerator,
)
from lieopt.lie_core import Subalgebra
from lieopt.scalars import PosScale, RationalFunction, parse_scalar
from lieopt import linalg

ALPHA = parse_scalar("(k-1)/k")


def symbolic_generic():
    # e-basis table [e1,e3]=e1, [e2,e3]=alpha e2 with alpha symbolic in k
    from lieopt.lie_core import LieAlgebra
    return LieAlgebra.from_brackets(4, ("e1", "e2", "e3", "e4"), {
        (1, 3): {1: parse_scalar("1")},
        (2, 3): {2: ALPHA},
    })


def e_algebra(k=Fraction(3, 4)):
    return classified_algebra(k).e_algebra


class TestAdMatrix:
    def test_ad_e3_is_diagonal(self):
        E = symbolic_generic()
        ad = ad_matrix(E, E.basis_vector(2))
        assert ad[0][0] == parse_scalar("-1")
        assert ad[1][1] == -ALPHA
        assert ad[2][2] == RationalFunction.zero()
        assert ad[3][3] == RationalFunction.zero()
        assert all(not ad[i][j] for i in range(4) for j in range(4) if i != j)

    def test_ad_central_is_zero(self):
        E = e_algebra()
        ad = ad_matrix(E, E.basis_vector(3))
        assert all(not x for row in ad for x in row)

    def test_linearity(self):
        E = e_algebra()
        a = ad_matrix(E, E.basis_vector(0))
        b = ad_matrix(E, E.basis_vector(1))
        both = ad_matrix(E, linalg.vec_add(E.basis_vector(0),
                                           E.basis_vector(1)))
        assert both == tuple(tuple(x + y for x, y in zip(r1, r2))
                             for r1, r2 in zip(a, b))

    def test_derivation_property_on_basis(self):
        E = e_algebra()
        x = (Fraction(2), Fraction(-1), Fraction(3), Fraction(5))
        for i in range(4):
            for j in range(4):
                lhs = E.bracket(x, E.bracket(E.basis_vector(i),
                                             E.basis_vector(j)))
                rhs = linalg.vec_add(
                    E.bracket(E.bracket(x, E.basis_vector(i)),
                              E.basis_vector(j)),
                    E.bracket(E.basis_vector(i),
                              E.bracket(x, E.basis_vector(j))))
                assert lhs == rhs


class TestAdjointExp:
    @pytest.mark.parametrize("eps", [Fraction(1), Fraction(2, 7), Fraction(-3)])
    def test_nilpotent_rows_symbolic(self, eps):
        E = symbolic_generic()
        m1 = adjoint_exp(E, 0, eps)
        m2 = adjoint_exp(E, 1, eps)
        m4 = adjoint_exp(E, 3, eps)
        e = E.basis_vector
        # row e1: only e3 moves, to e3 - eps e1
        assert linalg.mat_vec(m1, e(2)) == linalg.vec_sub(
            e(2), linalg.vec_scale(E.scalar(eps), e(0)))
        for j in (0, 1, 3):
            assert linalg.mat_vec(m1, e(j)) == e(j)
        # row e2: e3 -> e3 - alpha eps e2
        assert linalg.mat_vec(m2, e(2)) == linalg.vec_sub(
            e(2), linalg.vec_scale(ALPHA * eps, e(1)))
        for j in (0, 1, 3):
            assert linalg.mat_vec(m2, e(j)) == e(j)
        # row e4: identity
        assert m4 == linalg.identity(4, RationalFunction.one())

    def test_scaling_row_exact(self):
        E = e_algebra(Fraction(3, 4))  # alpha = -1/3
        t = PosScale(8)
        m = adjoint_exp(E, 2, t)
        e = E.basis_vector
        assert linalg.mat_vec(m, e(0)) == linalg.vec_scale(Fraction(8), e(0))
        assert linalg.mat_vec(m, e(1)) == linalg.vec_scale(Fraction(1, 2), e(1))
        assert linalg.mat_vec(m, e(2)) == e(2)
        assert linalg.mat_vec(m, e(3)) == e(3)

    def test_scaling_rejects_irrational_power(self):
        E = e_algebra(Fraction(3, 4))
        with pytest.raises(NonRationalPower):
            adjoint_exp(E, 2, PosScale(2))  # 2^(1/3) is irrational

    def test_type_mismatches(self):
        E = e_algebra()
        with pytest.raises(TypeError):
            adjoint_exp(E, 0, PosScale(2))
        with pytest.raises(TypeError):
            adjoint_exp(E, 2, Fraction(1))
        with pytest.raises(UnsupportedGenerator):
            adjoint_exp(E, 7, Fraction(1))

    def test_automorphism_property_symbolic(self):
        E = symbolic_generic()
        for i, param in ((0, Fraction(2)), (1, Fraction(-1, 2)),
                         (3, Fraction(5))):
            m = adjoint_exp(E, i, param)
            for a in range(4):
                for b in range(4):
                    lhs = linalg.mat_vec(m, E.bracket(E.basis_vector(a),
                                                      E.basis_vector(b)))
                    rhs = E.bracket(linalg.mat_vec(m, E.basis_vector(a)),
                                    linalg.mat_vec(m, E.basis_vector(b)))
                    assert lhs == rhs

    def test_inverse_law(self):
        E = e_algebra(Fraction(3, 4))
        eye = linalg.identity(4, Fraction(1))
        m = adjoint_exp(E, 0, Fraction(5, 3))
        minv = adjoint_exp(E, 0, Fraction(-5, 3))
        assert linalg.mat_mul(m, minv) == eye
        t = PosScale(Fraction(27, 8))
        s = adjoint_exp(E, 2, t)
        sinv = adjoint_exp(E, 2, t.inverse())
        assert linalg.mat_mul(s, sinv) == eye

    def test_series_agrees_with_closed_form_on_table(self):
        E = e_algebra(Fraction(3, 4))
        for i in (0, 1, 3):
            m = adjoint_exp(E, i, Fraction(2, 5))
            for j in range(4):
                via_series = lie_series_exp(E, E.basis_vector(i),
                                            Fraction(2, 5), E.basis_vector(j))
                assert via_series == linalg.mat_vec(m, E.basis_vector(j))


class TestLieSeries:
    def test_row_e2_on_e3(self):
        E = symbolic_generic()
        eps = Fraction(3, 2)
        got = lie_series_exp(E, E.basis_vector(1), eps, E.basis_vector(2))
        assert got == (RationalFunction.zero(), -(ALPHA * eps),
                       RationalFunction.one(), RationalFunction.zero())

    def test_zero_eps(self):
        E = e_algebra()
        w = (Fraction(1), Fraction(2), Fraction(3), Fraction(4))
        assert lie_series_exp(E, E.basis_vector(0), 0, w) == w

    def test_non_terminating(self):
        E = e_algebra()
        with pytest.raises(SeriesDoesNotTerminate):
            lie_series_exp(E, E.basis_vector(2), Fraction(1),
                           E.basis_vector(0))


class TestGroupWords:
    def test_identity_word(self):
        E = e_algebra()
        S = Subalgebra.from_span(E, [E.basis_vector(0)])
        assert apply_word(GroupWord.identity(), S) == S

    def test_kill_e1_e2_components(self):
        # span{2e1+3e2+5e3}: xi = a/c = 2/5, zeta = b/(c alpha) = -9/5
        E = e_algebra(Fraction(3, 4))
        S = Subalgebra.from_span(
            E, [(Fraction(2), Fraction(3), Fraction(5), Fraction(0))])
        word = GroupWord.of((0, Fraction(2, 5)), (1, Fraction(-9, 5)))
        moved = apply_word(word, S)
        assert moved.rows == ((0, 0, 1, 0),)

    def test_diagonal_action(self):
        # alpha = 1/2 at k = 2; t = 4 sends e1+e2 to 4e1+2e2 ~ 2e1+e2
        E = e_algebra(Fraction(2))
        S = Subalgebra.from_span(E, [(Fraction(1), Fraction(1), 0, 0)])
        moved = apply_word(GroupWord.of((2, PosScale(4))), S)
        assert moved.rows == ((1, Fraction(1, 2), 0, 0),)

    def test_word_inverse_restores(self):
        E = e_algebra(Fraction(3, 4))
        word = GroupWord.of((0, Fraction(1, 3)), (2, PosScale(8)),
                            (1, Fraction(-2)))
        S = Subalgebra.from_span(E, [(Fraction(1), Fraction(2), Fraction(3),
                                      Fraction(1))])
        assert apply_word(word.inverse(), apply_word(word, S)) == S

    def test_preserves_dimension_and_closure(self):
        E = e_algebra(Fraction(3, 4))
        rng = random.Random(23)
        from lieopt.lie_core import close_subspace
        for _ in range(10):
            gens = [tuple(Fraction(rng.randint(-3, 3)) for _ in range(4))
                    for _ in range(2)]
            if all(not any(g) for g in gens):
                continue
            S = close_subspace(E, gens)
            word = GroupWord.of((0, Fraction(rng.randint(-3, 3))),
                                (1, Fraction(rng.randint(-3, 3), 2)),
                                (2, PosScale(Fraction(rng.randint(1, 5)) ** 3)))
            moved = apply_word(word, S)
            assert moved.dim_sub == S.dim_sub  # closure certified on build


class TestNumericExp:
    def test_central_gives_identity(self):
        E = e_algebra()
        m = numeric_exp(E, [0.0, 0.0, 0.0, 1.0], 3.7)
        assert np.allclose(m, np.eye(4), atol=1e-14)

    def test_scaling_direction_closed_form(self):
        E = e_algebra(Fraction(2))  # alpha = 1/2
        m = numeric_exp(E, [0.0, 0.0, 1.0, 0.0], math.log(2.0))
        assert np.allclose(np.diag(m), [2.0, math.sqrt(2.0), 1.0, 1.0],
                           rtol=1e-12, atol=1e-12)
        assert np.allclose(m, np.diag(np.diag(m)), atol=1e-13)

    def test_mixed_generator_against_series_oracle(self):
        E = e_algebra(Fraction(3, 4))
        rng = random.Random(31)
        for _ in range(10):
            x = np.array([rng.uniform(-1, 1) for _ in range(4)])
            eps = rng.uniform(-1.5, 1.5)
            got = numeric_exp(E, x, eps)
            # independent high-order truncated series for expm(-eps ad x)
            ad = ad_matrix_float(E, x)
            term = np.eye(4)
            series = np.eye(4)
            for m in range(1, 60):
                term = term @ (-eps * ad) / m
                series = series + term
            w = np.array([rng.uniform(-1, 1) for _ in range(4)])
            assert np.linalg.norm(got @ w - series @ w) < 1e-9

    def test_matches_exact_path_at_compatible_parameters(self):
        E = e_algebra(Fraction(3, 4))
        t = PosScale(8)
        exact = adjoint_exp(E, 2, t)
        exact_np = np.array([[float(c) for c in row] for row in exact])
        num = numeric_exp(E, [0.0, 0.0, 1.0, 0.0], math.log(8.0))
        assert np.allclose(num, exact_np, rtol=1e-12, atol=1e-12)
