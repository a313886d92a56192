"""Exit criteria. Each test is one criterion; the terminal summary prints a
PASS/FAIL line per criterion. Run alone with ``pytest tests/test_acceptance.py``.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import factorial, gcd

import pytest

from oracles import leibniz_det, naive_rank, sylvester_matrix
from regseq.gaussian import GaussianRational
from regseq.macaulay import build_macaulay, critical_degree, is_regular_sequence
from regseq.parser import parse_polynomial as P
from regseq.perturb import (
    abs_enclosure,
    distance,
    graded_piece_dimension,
    is_column_diagonally_dominant,
    near_powers_certificate,
)
from regseq.poly import Polynomial, coordinate_vector, monomials_of_degree, pure_power
from regseq.powersum import (
    APSpec,
    ExponentSet,
    RootOfUnityWitness,
    ap_certificate,
    factorial_divisibility_equivalence,
    power_sums,
    vanishing_sum_search,
    verify_witness,
)
from regseq.report import Method, Verdict

acceptance = pytest.mark.acceptance


@contextmanager
def time_limit(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def random_rational(rng, span=5, max_den=7):
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def split_budget(rng, budget, k):
    """k positive rationals summing to at most ``budget``."""
    weights = [rng.randint(1, 20) for _ in range(k)]
    total = sum(weights)
    return [budget * w / total for w in weights]


@acceptance("AC1 distance-one pair: NotRegular (N=4, p=5, rank=4), distances exactly 1, not certified")
def test_ac1_distance_one_counterexample():
    with time_limit(1):
        fs = [P("x1^2 + x1*x2", 2), P("x1*x2^2 + x2^3", 2)]
        rep = is_regular_sequence(fs)
        assert rep.verdict is Verdict.NOT_REGULAR
        assert (rep.N, rep.p, rep.rank) == (4, 5, 4)
        cert = near_powers_certificate(fs)
        assert [e.distance.is_exact for e in cert.per_poly] == [True, True]
        assert [e.distance.value for e in cert.per_poly] == [1, 1]
        assert not cert.certified


@acceptance("AC2 worked example: symbolic 4x4 Macaulay matrix reproduced entry for entry")
def test_ac2_worked_example_matrix():
    rng = random.Random(2)
    for _ in range(20):
        lam = [GaussianRational(random_rational(rng), random_rational(rng)) for _ in range(6)]
        f1 = Polynomial(2, {(2, 0): lam[0], (1, 1): lam[1], (0, 2): lam[2]})
        f2 = Polynomial(2, {(2, 0): lam[3], (1, 1): lam[4], (0, 2): lam[5]})
        N = critical_degree([2, 2])
        M = build_macaulay([f1, f2], N)
        l1, l2, l3, l4, l5, l6 = lam
        z = GaussianRational(0)
        assert (N, M.p, M.q) == (3, 4, 4)
        assert M.entries == [
            [l1, z, l4, z],
            [l2, l1, l5, l4],
            [l3, l2, l6, l5],
            [z, l3, z, l6],
        ]


@acceptance("AC3 A={1,8,15}: AP certificate, 276x409 integer Macaulay matrix of rank 276")
def test_ac3_progression_1_8_15():
    with time_limit(30):
        cert = ap_certificate(APSpec(1, 7, 3))
        assert cert.verdict is Verdict.REGULAR and cert.method is Method.AP_CERTIFICATE
        fs = power_sums([1, 8, 15])
        M = build_macaulay(fs, 22)
        assert M.shape == (276, 409)
        assert M.is_integral()
        assert M.rank() == 276
        rep = is_regular_sequence(fs)
        assert (rep.verdict, rep.N, rep.p, rep.rank) == (Verdict.REGULAR, 22, 276, 276)


@acceptance("AC4 A={2,7,12}: AP certificate, Macaulay N=19, p=210, rank 210")
def test_ac4_progression_2_7_12():
    with time_limit(30):
        assert ap_certificate(APSpec(2, 5, 3)).verdict is Verdict.REGULAR
        rep = is_regular_sequence(power_sums([2, 7, 12]))
        assert (rep.verdict, rep.N, rep.p, rep.rank) == (Verdict.REGULAR, 19, 210, 210)


@acceptance("AC5 consecutive p1,p2,p3: certificate and Macaulay (N=4, p=15, rank 15)")
def test_ac5_consecutive():
    with time_limit(1):
        assert ap_certificate(APSpec(1, 1, 3)).verdict is Verdict.REGULAR
        rep = is_regular_sequence(power_sums([1, 2, 3]))
        assert (rep.verdict, rep.N, rep.p, rep.rank) == (Verdict.REGULAR, 4, 15, 15)


@acceptance("AC6 witness (zeta48, zeta48^25, 1, zeta48^24) kills p_{1,3,5,24}(4) exactly")
def test_ac6_example_witness():
    with time_limit(1):
        w = RootOfUnityWitness(48, [1, 25, 0, 24])
        assert verify_witness(ExponentSet([1, 3, 5, 24]), w)


@acceptance("AC7 divisibility equivalence sweep a,d<=30, n in 2..6: 0 mismatches")
def test_ac7_divisibility_sweep():
    with time_limit(10):
        mismatches = 0
        cases = 0
        for a in range(1, 31):
            for d in range(1, 31):
                if gcd(a, d) != 1:
                    continue
                for n in range(2, 7):
                    lhs, rhs = factorial_divisibility_equivalence(a, d, n)
                    mismatches += lhs != rhs
                    cases += 1
        assert cases > 2500
        assert mismatches == 0


@acceptance("AC8 vanishing-sum sweep m<=40, n in 2..4: none when gcd(m,n!)=1; hits only when >1")
def test_ac8_vanishing_sum_sweep():
    with time_limit(60):
        hits = 0
        for m in range(2, 41):
            for n in (2, 3, 4):
                w = vanishing_sum_search(n, m)
                coprime = gcd(m, factorial(n)) == 1
                if coprime:
                    assert w is None, (n, m)
                if w is not None:
                    assert not coprime
                    hits += 1
        assert hits > 0


def _near_power_sequence(rng):
    n = rng.choice([2, 3])
    fs = []
    for i in range(1, n + 1):
        a = rng.randint(1, 3)
        basis = monomials_of_degree(n, a)
        budget = Fraction(rng.randint(1, 9), 10)
        support = rng.sample(basis, rng.randint(1, len(basis)))
        parts = split_budget(rng, budget, len(support))
        terms = {m: rng.choice([-1, 1]) * c for m, c in zip(support, parts)}
        f = pure_power(n, i, a) + Polynomial(n, terms)
        fs.append(f)
    return fs


@acceptance("AC9 near-powers: 100/100 random trials certified and confirmed Regular by Macaulay")
def test_ac9_near_powers_property():
    rng = random.Random(9)
    passed = 0
    with time_limit(60):
        for _ in range(100):
            fs = _near_power_sequence(rng)
            n = len(fs)
            for i, f in enumerate(fs, start=1):
                d = distance(f, pure_power(n, i, f.homogeneous_degree()))
                assert d.upper <= Fraction(9, 10)
            cert = near_powers_certificate(fs)
            rep = is_regular_sequence(fs)
            passed += cert.certified and rep.verdict is Verdict.REGULAR
    assert passed == 100


def _dominant_matrix(rng):
    n = rng.randint(1, 6)
    complex_ = rng.random() < 0.3
    M = [[None] * n for _ in range(n)]
    for j in range(n):
        col_sum = Fraction(0)
        for i in range(n):
            if i == j:
                continue
            z = GaussianRational(random_rational(rng), random_rational(rng) if complex_ else 0)
            M[i][j] = z
            col_sum += abs_enclosure(z, 32).upper
        margin = Fraction(rng.randint(1, 50), rng.randint(50, 500))
        M[j][j] = GaussianRational((col_sum + margin) * rng.choice([-1, 1]))
    return M


@acceptance("AC10 column-dominant: 100 random matrices up to 6x6 have nonzero exact determinant")
def test_ac10_dominance_property():
    rng = random.Random(10)
    with time_limit(5):
        for _ in range(100):
            M = _dominant_matrix(rng)
            assert is_column_diagonally_dominant(M)
            assert leibniz_det(M) != (0, 0)


def _independent_forms(rng, n, i, t):
    while True:
        gs = [
            Polynomial(n, {m: rng.choice([0, 0, 1, -1, 2]) for m in monomials_of_degree(n, i)}) for _ in range(t)
        ]
        if naive_rank([coordinate_vector(g, i) for g in gs]) == t:
            return gs


def _perturb(rng, g, radius):
    n = g.num_vars
    i = g.homogeneous_degree()
    basis = monomials_of_degree(n, i)
    support = rng.sample(basis, rng.randint(1, len(basis)))
    parts = split_budget(rng, radius, len(support))
    return g + Polynomial(n, {m: rng.choice([-1, 1]) * c for m, c in zip(support, parts)})


@acceptance("AC11 semicontinuity: 100/100 trials at radius 1/1000 keep dim(perturbed) >= dim(original)")
def test_ac11_semicontinuity_probe():
    rng = random.Random(11)
    radius = Fraction(1, 1000)
    ok = 0
    with time_limit(30):
        for _ in range(100):
            n, i = rng.randint(1, 3), rng.randint(1, 3)
            t = rng.randint(1, min(3, len(monomials_of_degree(n, i))))
            fs = _independent_forms(rng, n, i, t)
            gs = [_perturb(rng, f, radius) for f in fs]
            assert all(distance(f, g).upper <= radius for f, g in zip(fs, gs))
            ok += graded_piece_dimension(gs) >= graded_piece_dimension(fs)
    assert ok == 100


def _binary_form(rng, d, complex_):
    coeffs = [
        GaussianRational(rng.randint(-2, 2), rng.randint(-2, 2) if complex_ else 0) if rng.random() < 0.7 else 0
        for _ in range(d + 1)
    ]
    if not any(coeffs):
        coeffs[rng.randrange(d + 1)] = 1
    return Polynomial(2, {(d - k, k): c for k, c in enumerate(coeffs)})


@acceptance("AC12 n=2: 50 random pairs, Macaulay verdict == nonvanishing Sylvester determinant")
def test_ac12_sylvester_oracle():
    rng = random.Random(12)
    outcomes = set()
    for trial in range(50):
        complex_ = trial % 3 == 0
        if trial % 4 == 0:
            ell = _binary_form(rng, 1, complex_)
            f = ell * _binary_form(rng, rng.randint(0, 2), complex_)
            g = ell * _binary_form(rng, rng.randint(0, 2), complex_)
        else:
            f = _binary_form(rng, rng.randint(1, 3), complex_)
            g = _binary_form(rng, rng.randint(1, 3), complex_)
        a, b = f.homogeneous_degree(), g.homogeneous_degree()
        fc = [f.coefficient((a - k, k)) for k in range(a + 1)]
        gc = [g.coefficient((b - k, k)) for k in range(b + 1)]
        nonzero = leibniz_det(sylvester_matrix(fc, gc)) != (0, 0)
        regular = is_regular_sequence([f, g]).verdict is Verdict.REGULAR
        assert regular == nonzero
        outcomes.add(regular)
    assert outcomes == {True, False}


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
