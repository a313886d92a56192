import random
from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import leibniz_det, naive_rank
from regseq.gaussian import GaussianRational
from regseq.macaulay import is_regular_sequence
from regseq.parser import parse_polynomial as P
from regseq.perturb import (
    RealEnclosure,
    abs_enclosure,
    distance,
    graded_piece_dimension,
    is_column_diagonally_dominant,
    near_powers_certificate,
)
from regseq.poly import Polynomial, coordinate_vector, monomials_of_degree
from regseq.report import Inconclusive, RegSeqError, Verdict
from strategies import forms, gaussians, real_gaussians


class TestAbsEnclosure:
    def test_exact_cases(self):
        assert abs_enclosure(GaussianRational(-3, 0)) == RealEnclosure.exact(3)
        assert abs_enclosure(GaussianRational(0, Fraction(-1, 2))) == RealEnclosure.exact(Fraction(1, 2))
        assert abs_enclosure(GaussianRational(Fraction(3, 5), Fraction(4, 5))).is_exact

    @given(gaussians, st.integers(4, 128))
    def test_encloses_modulus(self, z, bits):
        enc = abs_enclosure(z, bits)
        assert enc.lower >= 0
        assert enc.lower**2 <= z.norm() <= enc.upper**2
        assert enc.width <= Fraction(1, 2**bits)


class TestDistance:
    def test_distance_one_boundary(self):
        d = distance(P("x1^2 + x1*x2", 2), P("x1^2", 2))
        assert d.is_exact and d.value == 1

    def test_self_distance(self):
        f = P("x1^2 + (1+i)*x1*x2 - 7*x2^2", 2)
        assert distance(f, f) == RealEnclosure.exact(0)

    def test_half(self):
        assert distance(P("x1^2 + 1/2*x1*x2", 2), P("x1^2", 2)).value == Fraction(1, 2)

    def test_complex_difference(self):
        d = distance(P("x1 + (1+i)*x2", 2), P("x1", 2), bits=80)
        assert d.lower**2 < 2 < d.upper**2
        assert d.width == Fraction(1, 2**80)

    def test_degree_mismatch(self):
        with pytest.raises(RegSeqError):
            distance(P("x1^2", 2), P("x1^3", 2))
        with pytest.raises(RegSeqError):
            distance(P("x1^2", 2), P("x1^2", 3))

    def test_zero_matches_any_degree(self):
        assert distance(Polynomial.zero(2), P("x1^3 - x2^3", 2)).value == 2

    @settings(max_examples=100)
    @given(forms(2, 2, coeffs=real_gaussians), forms(2, 2, coeffs=real_gaussians), forms(2, 2, coeffs=real_gaussians))
    def test_metric_axioms_exact(self, f, g, h):
        dfg, dgf = distance(f, g), distance(g, f)
        assert dfg.is_exact and dfg == dgf
        assert (dfg.value == 0) == (f == g)
        assert distance(f, h).value <= dfg.value + distance(g, h).value

    @settings(max_examples=100)
    @given(forms(2, 2), forms(2, 2), forms(2, 2))
    def test_metric_axioms_complex(self, f, g, h):
        dfg, dgf = distance(f, g), distance(g, f)
        assert dfg == dgf
        assert (dfg.upper == 0) == (f == g)
        assert distance(f, h).lower <= dfg.upper + distance(g, h).upper


class TestNearPowers:
    def test_pure_powers(self):
        cert = near_powers_certificate([P("x1^2", 3), P("x2^2", 3), P("x3^2", 3)])
        assert cert.certified
        assert all(e.distance.value == 0 for e in cert.per_poly)

    def test_distance_one_pair_not_certified(self):
        fs = [P("x1^2 + x1*x2", 2), P("x1*x2^2 + x2^3", 2)]
        cert = near_powers_certificate(fs)
        assert not cert.certified
        assert [e.distance.value for e in cert.per_poly] == [1, 1]
        assert is_regular_sequence(fs).verdict is Verdict.NOT_REGULAR

    def test_small_perturbation(self):
        fs = [P("x1^2 + 1/2*x1*x2", 2), P("x2^2 + 1/3*x1^2", 2)]
        cert = near_powers_certificate(fs)
        assert cert.certified
        assert [e.distance.value for e in cert.per_poly] == [Fraction(1, 2), Fraction(1, 3)]
        # Leibniz determinant of the 4x4 Macaulay matrix is 13/12 (oracle, frozen)
        assert is_regular_sequence(fs).verdict is Verdict.REGULAR

    def test_scaled_leading_coefficient(self):
        # distance counts |nu - 1| for the pure-power coefficient too
        cert = near_powers_certificate([P("1/2*x1", 2), P("x2", 2)])
        assert cert.per_poly[0].distance.value == Fraction(1, 2)
        assert cert.certified

    def test_inconclusive_near_one(self):
        # |c| = sqrt(1 - delta) with delta ~ 1e-40: irrational, just below 1
        b = Fraction(isqrt(3 * 10**80), 2 * 10**40)
        c = GaussianRational(Fraction(1, 2), b)
        fs = [Polynomial(2, {(1, 0): 1, (0, 1): c}), P("x2", 2)]
        with pytest.raises(Inconclusive):
            near_powers_certificate(fs, bits=64)
        assert near_powers_certificate(fs, bits=512).certified

    def test_shape_errors(self):
        with pytest.raises(RegSeqError):
            near_powers_certificate([P("x1", 2)])


class TestDominance:
    def test_examples(self):
        assert is_column_diagonally_dominant([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert is_column_diagonally_dominant([[2, 1], [1, 3]])
        assert leibniz_det([[2, 1], [1, 3]]) == (5, 0)
        assert not is_column_diagonally_dominant([[0, 1], [1, 0]])

    def test_equality_is_not_dominance(self):
        assert not is_column_diagonally_dominant([[1, 1], [0, 1]])

    def test_columns_not_rows(self):
        # rows dominant, first column not
        assert not is_column_diagonally_dominant([[3, 2], [3, 4]])
        # columns dominant, second row not
        assert is_column_diagonally_dominant([[3, 0], [2, 1]])

    def test_complex_entries(self):
        assert is_column_diagonally_dominant([[GaussianRational(1, 1), 1], [1, 2]])
        assert not is_column_diagonally_dominant([[GaussianRational(Fraction(1, 2), Fraction(1, 2)), 0], [1, 1]])

    def test_non_square(self):
        with pytest.raises(RegSeqError):
            is_column_diagonally_dominant([[1, 2, 3], [4, 5, 6]])


class TestGradedPiece:
    def test_examples(self):
        assert graded_piece_dimension([P("x1", 2), P("x2", 2)]) == 3
        assert graded_piece_dimension([P("x1^2", 2)]) == 2
        assert graded_piece_dimension([P("x1^2 + x2^2", 2), P("x1*x2", 2)]) == 4

    def test_matches_naive(self):
        rng = random.Random(3)
        for _ in range(30):
            n, i, t = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
            gs = [
                Polynomial(n, {m: rng.randint(-1, 1) for m in monomials_of_degree(n, i)}) for _ in range(t)
            ]
            if all(g.is_zero() for g in gs):
                continue
            rows = [
                coordinate_vector(g.multiply_monomial(m), i + 1) for g in gs for m in monomials_of_degree(n, 1)
            ]
            assert graded_piece_dimension(gs) == naive_rank(rows)

    def test_errors(self):
        with pytest.raises(RegSeqError):
            graded_piece_dimension([])
        with pytest.raises(RegSeqError):
            graded_piece_dimension([P("x1", 2), P("x2^2", 2)])
