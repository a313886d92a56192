"""Regularity of n homogeneous polynomials in n variables, decided by the
rank of the Macaulay matrix of (g_1, ..., g_n) -> sum f_i g_i in the critical
degree N = 1 + sum(a_i - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .gaussian import ZERO, GaussianRational
from .linalg import integer_rank, rank_exact
from .poly import Monomial, Polynomial, monomial_index, monomials_of_degree
from .report import MatrixTooLarge, Method, RegSeqError, RegularityReport, Verdict

__all__ = [
    "DEFAULT_MAX_P",
    "MacaulayMatrix",
    "critical_degree",
    "build_macaulay",
    "rank_exact",
    "check_column_property",
    "is_regular_sequence",
    "sequence_degrees",
]

DEFAULT_MAX_P = 20_000


@dataclass(frozen=True)
class MacaulayMatrix:
    """p x q matrix; column (i, m) holds the coordinates of m * f_i in S_N."""

    entries: list[list[GaussianRational]]
    row_basis: list[Monomial]
    col_index: list[tuple[int, Monomial]]
    N: int

    @property
    def p(self) -> int:
        return len(self.row_basis)

    @property
    def q(self) -> int:
        return len(self.col_index)

    @property
    def shape(self) -> tuple[int, int]:
        return self.p, self.q

    def column(self, k: int) -> list[GaussianRational]:
        return [row[k] for row in self.entries]

    def is_integral(self) -> bool:
        return all(x.im == 0 and x.re.denominator == 1 for row in self.entries for x in row)

    def integer_rows(self) -> list[list[int]]:
        return [[x.re.numerator for x in row] for row in self.entries]

    def rank(self) -> int:
        if self.is_integral():
            return integer_rank(self.integer_rows(), self.q)
        return rank_exact(self.entries)


def critical_degree(degrees: Sequence[int]) -> int:
    """N = 1 + sum(a_i - 1)."""
    if not degrees:
        raise RegSeqError("need at least one degree")
    if any(a < 1 for a in degrees):
        raise RegSeqError("degrees must be >= 1")
    return 1 + sum(a - 1 for a in degrees)


def sequence_degrees(fs: Sequence[Polynomial]) -> list[int]:
    """Degrees of a square homogeneous sequence, validating its shape."""
    if not fs:
        raise RegSeqError("empty sequence")
    n = fs[0].num_vars
    if any(f.num_vars != n for f in fs):
        raise RegSeqError("polynomials live in different rings")
    if len(fs) != n:
        raise RegSeqError(f"sequence length {len(fs)} != number of variables {n}")
    degrees = []
    for k, f in enumerate(fs, start=1):
        if f.is_zero():
            raise RegSeqError(f"f{k} is the zero polynomial")
        if not f.is_homogeneous():
            raise RegSeqError(f"f{k} is not homogeneous")
        a = f.homogeneous_degree()
        if a < 1:
            raise RegSeqError(f"f{k} is a nonzero constant")
        degrees.append(a)
    return degrees


def build_macaulay(fs: Sequence[Polynomial], N: int, *, max_p: int | None = DEFAULT_MAX_P) -> MacaulayMatrix:
    """Matrix of (g_1..g_n) -> sum f_i g_i from sum S_{N-a_i} to S_N.

    Rows follow the lex basis of S_N; columns are grouped by i and ordered
    lex inside each block.
    """
    degrees = sequence_degrees(fs)
    n = fs[0].num_vars
    for k, a in enumerate(degrees, start=1):
        if a > N:
            raise RegSeqError(f"deg f{k} = {a} exceeds N = {N}")
    p = comb(n + N - 1, N)
    if max_p is not None and p > max_p:
        raise MatrixTooLarge(p, max_p)
    row_basis = monomials_of_degree(n, N)
    index = monomial_index(n, N)
    col_index: list[tuple[int, Monomial]] = []
    columns: list[dict[int, GaussianRational]] = []
    for i, (f, a) in enumerate(zip(fs, degrees)):
        terms = list(f.terms.items())
        for m in monomials_of_degree(n, N - a):
            col = {}
            for mono, c in terms:
                col[index[tuple(x + y for x, y in zip(mono, m))]] = c
            col_index.append((i, m))
            columns.append(col)
    entries = [[ZERO] * len(columns) for _ in range(p)]
    for k, col in enumerate(columns):
        for r, c in col.items():
            entries[r][k] = c
    return MacaulayMatrix(entries, row_basis, col_index, N)


def check_column_property(M: MacaulayMatrix, fs: Sequence[Polynomial]) -> bool:
    """Each column (i, m) carries every coefficient of f_i exactly once, in the
    row of mono*m, and zeros elsewhere."""
    n = fs[0].num_vars
    index = monomial_index(n, M.N)
    for k, (i, m) in enumerate(M.col_index):
        expected = {index[tuple(x + y for x, y in zip(mono, m))]: c for mono, c in fs[i].terms.items()}
        for r in range(M.p):
            if M.entries[r][k] != expected.get(r, ZERO):
                return False
    return True


def is_regular_sequence(fs: Sequence[Polynomial], *, max_p: int | None = DEFAULT_MAX_P) -> RegularityReport:
    """Decide regularity: regular iff the Macaulay matrix in degree N has rank p."""
    degrees = sequence_degrees(fs)
    N = critical_degree(degrees)
    M = build_macaulay(fs, N, max_p=max_p)
    r = M.rank()
    verdict = Verdict.REGULAR if r == M.p else Verdict.NOT_REGULAR
    return RegularityReport(
        verdict,
        Method.MACAULAY_RANK,
        N=N,
        p=M.p,
        q=M.q,
        rank=r,
        notes=f"degrees {degrees}; rank {r} of {M.p}",
    )
