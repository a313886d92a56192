"""Small-integer number theory: factorization, totient, gcd with n!, and
cyclotomic polynomials.

Integer polynomials here are tuples of coefficients in ascending degree,
``(c0, c1, ..., cd)``, with a nonzero last entry (``()`` is zero).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Factorization",
    "CyclotomicPoly",
    "factorize",
    "euler_phi",
    "gcd_with_factorial",
    "factorial_valuation",
    "cyclotomic",
    "divisors",
    "poly_mul",
    "poly_divmod",
    "poly_mod",
]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``(prime, exponent)`` pairs, primes ascending."""

    prime_powers: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.prime_powers:
            out *= p**e
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.prime_powers)

    def __iter__(self):
        return iter(self.prime_powers)

    def __len__(self) -> int:
        return len(self.prime_powers)


def factorize(n: int) -> Factorization:
    """Trial-division factorization of a positive integer."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return Factorization(tuple(out))


def euler_phi(n: int) -> int:
    result = 1
    for p, e in factorize(n):
        result *= (p - 1) * p ** (e - 1)
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def factorial_valuation(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``n!`` (Legendre's formula)."""
    v = 0
    q = p
    while q <= n:
        v += n // q
        q *= p
    return v


def gcd_with_factorial(d: int, n: int) -> int:
    """Return ``gcd(d, n!)`` without forming ``n!``.

    Only primes dividing ``d`` matter, so the work is bounded by the
    factorization of ``d``.
    """
    if d < 1 or n < 1:
        raise ValueError("gcd_with_factorial expects d >= 1 and n >= 1")
    g = 1
    for p, e in factorize(d):
        if p > n:
            continue
        g *= p ** min(e, factorial_valuation(n, p))
    return g


# -- integer polynomials -------------------------------------------------


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Division by a monic integer polynomial ``b``; stays in the integers."""
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    db = len(b) - 1
    if len(rem) <= db:
        return (), _trim(rem)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            quot[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] -= c * b[j]
    return _trim(quot), _trim(rem[:db])


def poly_mod(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return poly_divmod(a, b)[1]


@dataclass(frozen=True)
class CyclotomicPoly:
    """The m-th cyclotomic polynomial, dense ascending integer coefficients."""

    index: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    num = (-1,) + (0,) * (m - 1) + (1,)  # x^m - 1
    den: tuple[int, ...] = (1,)
    for e in divisors(m)[:-1]:
        den = poly_mul(den, _cyclotomic_coeffs(e))
    quot, rem = poly_divmod(num, den)
    if rem:
        raise ArithmeticError(f"x^{m} - 1 not divisible by lower cyclotomic factors")
    return quot


def cyclotomic(m: int) -> CyclotomicPoly:
    """Phi_m by exact division of ``x^m - 1`` by the Phi_e for proper divisors e."""
    if m < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {m}")
    return CyclotomicPoly(m, _cyclotomic_coeffs(m))
