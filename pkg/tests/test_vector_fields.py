import random
from fractions import Fraction

import pytest

from lieopt.classify import paper_algebra
from lieopt.lie_core import LieAlgebra
from lieopt.scalars import RationalFunction, parse_scalar
from lieopt.vector_fields import (
    VectorField,
    parse_vector_field,
    verify_realization,
    vf_bracket,
)

V1 = parse_vector_field("d/dt")
V2 = parse_vector_field("S*d/du")
V3 = parse_vector_field("d/du")
V4 = parse_vector_field("S*d/dS + (1-k)*u*d/du")
FAMILY = [V1, V2, V3, V4]


def fields_at(k):
    scale = parse_scalar(1 - Fraction(k))
    v4 = VectorField.from_terms([(1, (0, 1, 0), 1), (scale, (0, 0, 1), 2)])
    return [V1, V2, V3, v4]


class TestBracket:
    def test_v2_v4(self):
        got = vf_bracket(V2, V4)
        assert got == V2.scale(parse_scalar("-k"))

    def test_v3_v4(self):
        assert vf_bracket(V3, V4) == V3.scale(parse_scalar("1-k"))

    def test_self_bracket_vanishes(self):
        for f in FAMILY:
            assert not vf_bracket(f, f)

    def _random_field(self, rng):
        terms = []
        for _ in range(rng.randint(1, 3)):
            coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            exps = tuple(rng.randint(0, 3) for _ in range(3))
            terms.append((coeff, exps, rng.randint(0, 2)))
        return VectorField.from_terms(terms)

    def test_antisymmetry_and_jacobi_on_random_fields(self):
        rng = random.Random(17)
        zero = VectorField.zero()
        for _ in range(25):
            x, y, z = (self._random_field(rng) for _ in range(3))
            assert vf_bracket(x, y) + vf_bracket(y, x) == zero
            jac = (vf_bracket(vf_bracket(x, y), z)
                   + vf_bracket(vf_bracket(y, z), x)
                   + vf_bracket(vf_bracket(z, x), y))
            assert jac == zero


class TestVerifyRealization:
    def test_family_matches_symbolically(self):
        report = verify_realization(FAMILY, paper_algebra())
        assert report.ok
        assert report.pairs_checked == 6

    def test_k0_fields_match_k0_table(self):
        report = verify_realization(fields_at(0), paper_algebra().at_k(0))
        assert report.ok

    def test_khalf_fields_match_khalf_table(self):
        k = Fraction(1, 2)
        report = verify_realization(fields_at(k), paper_algebra().at_k(k))
        assert report.ok

    def test_perturbed_v4_fails_on_pair_3_4(self):
        bad_v4 = parse_vector_field("S*d/dS + k*u*d/du")
        report = verify_realization([V1, V2, V3, bad_v4], paper_algebra())
        assert not report.ok
        assert (3, 4) in {(i, j) for i, j, *_ in report.mismatches}


class TestTextSyntax:
    @pytest.mark.parametrize("text", [
        "d/dt",
        "S*d/du",
        "S*d/dS + (1-k)*u*d/du",
        "t^2*S*d/du - 3*u*d/dt",
        "-d/du",
        "1/2*S^3*d/dS",
    ])
    def test_round_trip(self, text):
        once = parse_vector_field(text)
        assert parse_vector_field(str(once)) == once

    def test_rejects_missing_direction(self):
        with pytest.raises(ValueError):
            parse_vector_field("S*u")

    def test_merging_and_zero(self):
        f = parse_vector_field("S*d/du - S*d/du")
        assert f == VectorField.zero()
        assert str(f) == "0"
