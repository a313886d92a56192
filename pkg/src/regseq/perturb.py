"""Coefficient distance between forms, the near-pure-powers certificate,
column diagonal dominance, and dimensions of degree-(i+1) ideal pieces.

Moduli of Gaussian rationals are generally irrational. They are handled as
rational enclosures, refined until a strict comparison is decided, and an
undecidable comparison raises ``Inconclusive`` instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Sequence

from .gaussian import GaussianRational, as_gaussian
from .linalg import rank_exact
from .macaulay import sequence_degrees
from .poly import Polynomial, coordinate_vector, monomials_of_degree, pure_power
from .report import Inconclusive, Method, RegSeqError, RegularityReport, Verdict

__all__ = [
    "DEFAULT_PRECISION",
    "RealEnclosure",
    "DistanceEntry",
    "DistanceCertificate",
    "abs_enclosure",
    "distance",
    "near_powers_certificate",
    "is_column_diagonally_dominant",
    "graded_piece_dimension",
]

DEFAULT_PRECISION = 64
_START_BITS = 16


@dataclass(frozen=True)
class RealEnclosure:
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("empty enclosure")

    @classmethod
    def exact(cls, x) -> "RealEnclosure":
        x = Fraction(x)
        return cls(x, x)

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("enclosure is not a single point")
        return self.lower

    def __add__(self, other: "RealEnclosure") -> "RealEnclosure":
        return RealEnclosure(self.lower + other.lower, self.upper + other.upper)

    def __contains__(self, x) -> bool:
        return self.lower <= x <= self.upper

    def __float__(self):
        return float((self.lower + self.upper) / 2)

    def __str__(self):
        if self.is_exact:
            return str(self.lower)
        return f"[{float(self.lower):.17g}, {float(self.upper):.17g}]"


def _sqrt_enclosure(x: Fraction, bits: int) -> RealEnclosure:
    """Outward-rounded enclosure of sqrt(x) on the grid 2**-bits."""
    num, den = x.numerator, x.denominator
    r_num, r_den = isqrt(num), isqrt(den)
    if r_num * r_num == num and r_den * r_den == den:
        return RealEnclosure.exact(Fraction(r_num, r_den))
    lo = isqrt((num << (2 * bits)) // den)
    return RealEnclosure(Fraction(lo, 1 << bits), Fraction(lo + 1, 1 << bits))


def abs_enclosure(z, bits: int = DEFAULT_PRECISION) -> RealEnclosure:
    """|z| for a Gaussian rational; exact when z is real, imaginary, or |z| rational."""
    z = as_gaussian(z)
    if z.im == 0:
        return RealEnclosure.exact(abs(z.re))
    if z.re == 0:
        return RealEnclosure.exact(abs(z.im))
    return _sqrt_enclosure(z.norm(), bits)


def _sum_abs(values, bits: int) -> RealEnclosure:
    total = RealEnclosure.exact(0)
    for v in values:
        total = total + abs_enclosure(v, bits)
    return total


def _strictly_less(
    left: Callable[[int], RealEnclosure], right: Callable[[int], RealEnclosure], max_bits: int
) -> bool:
    """Rigorously decide left < right, refining both sides up to ``max_bits``."""
    bits = min(_START_BITS, max_bits)
    while True:
        L, R = left(bits), right(bits)
        if L.upper < R.lower:
            return True
        if L.lower >= R.upper:
            return False
        if bits >= max_bits:
            raise Inconclusive(f"cannot separate {L} from {R} at {max_bits} bits")
        bits = min(2 * bits, max_bits)


def _check_same_space(f: Polynomial, g: Polynomial) -> int:
    if f.num_vars != g.num_vars:
        raise RegSeqError(f"variable count mismatch: {f.num_vars} vs {g.num_vars}")
    degs = f.degrees() | g.degrees()
    if len(degs) > 1:
        raise RegSeqError(f"distance needs homogeneous forms of one degree, got degrees {sorted(degs)}")
    return degs.pop() if degs else 0


def _differences(f: Polynomial, g: Polynomial) -> list[GaussianRational]:
    _check_same_space(f, g)
    return [c for c in (f - g).terms.values()]


def distance(f: Polynomial, g: Polynomial, bits: int = DEFAULT_PRECISION) -> RealEnclosure:
    """Sum of |coefficient differences| over the lex monomial basis.

    Monomials absent from both forms contribute zero, so only the support of
    f - g is visited.
    """
    return _sum_abs(_differences(f, g), bits)


@dataclass(frozen=True)
class DistanceEntry:
    index: int
    distance: RealEnclosure
    strict_below_one: bool


@dataclass(frozen=True)
class DistanceCertificate:
    per_poly: tuple[DistanceEntry, ...]
    certified: bool

    def to_report(self) -> RegularityReport:
        verdict = Verdict.REGULAR if self.certified else Verdict.NOT_CERTIFIED
        note = "every f_i within distance < 1 of x_i^a_i" if self.certified else "some distance is >= 1"
        return RegularityReport(
            verdict,
            Method.NEAR_POWERS_CERTIFICATE,
            notes=note,
            evidence={"distances": [str(e.distance) for e in self.per_poly]},
        )


def near_powers_certificate(fs: Sequence[Polynomial], bits: int = DEFAULT_PRECISION) -> DistanceCertificate:
    """Certify regularity when every d(f_i, x_i^deg f_i) < 1.

    ``certified=False`` means only that the certificate does not apply.
    """
    degrees = sequence_degrees(fs)
    n = fs[0].num_vars
    one = RealEnclosure.exact(1)
    entries = []
    for i, (f, a) in enumerate(zip(fs, degrees), start=1):
        diffs = _differences(f, pure_power(n, i, a))
        below = _strictly_less(lambda b: _sum_abs(diffs, b), lambda b: one, bits)
        entries.append(DistanceEntry(i, _sum_abs(diffs, bits), below))
    return DistanceCertificate(tuple(entries), all(e.strict_below_one for e in entries))


def is_column_diagonally_dominant(M: Sequence[Sequence], bits: int = DEFAULT_PRECISION) -> bool:
    """|M[j][j]| > sum of |M[i][j]| over i != j, for every column j."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise RegSeqError("matrix is not square")
    rows = [[as_gaussian(x) for x in row] for row in M]
    for j in range(n):
        diag = rows[j][j]
        others = [rows[i][j] for i in range(n) if i != j]
        if not _strictly_less(lambda b: _sum_abs(others, b), lambda b: abs_enclosure(diag, b), bits):
            return False
    return True


def graded_piece_dimension(gs: Sequence[Polynomial]) -> int:
    """dim of (g_1, ..., g_t) in degree i+1, for forms g_j of common degree i.

    Rank of the nt x C(n+i, i+1) matrix whose rows are the coordinates of
    x_l * g_j.
    """
    if not gs:
        raise RegSeqError("need at least one polynomial")
    n = gs[0].num_vars
    if any(g.num_vars != n for g in gs):
        raise RegSeqError("polynomials live in different rings")
    degs = set()
    for g in gs:
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise RegSeqError("graded_piece_dimension needs homogeneous forms")
        degs |= g.degrees()
    if len(degs) > 1:
        raise RegSeqError(f"mixed degrees {sorted(degs)}")
    if not degs:
        return 0
    i = degs.pop()
    if i < 1:
        raise RegSeqError("forms must have degree >= 1")
    rows = []
    for g in gs:
        for mono in monomials_of_degree(n, 1):
            rows.append(coordinate_vector(g.multiply_monomial(mono), i + 1))
    return rank_exact(rows)
