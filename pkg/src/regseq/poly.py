"""Sparse multivariate polynomials over Q(i) and the lex monomial bases of
graded pieces S_d.

A monomial is a tuple of exponents ``(e1, ..., en)``. Python tuple order is
exactly lex order with x1 > x2 > ... > xn, so "decreasing lex" is simply
``sorted(..., reverse=True)``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from .gaussian import ONE, ZERO, GaussianRational, as_gaussian

__all__ = [
    "Monomial",
    "Polynomial",
    "monomials_of_degree",
    "monomial_index",
    "coordinate_vector",
    "evaluate",
    "variable",
    "pure_power",
]

Monomial = tuple  # tuple[int, ...]


class Polynomial:
    """Polynomial in ``num_vars`` variables as a map monomial -> coefficient.

    Zero coefficients are never stored; the zero polynomial has no terms and
    no degree.
    """

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Monomial, object] | Iterable = ()):
        if num_vars < 1:
            raise ValueError("num_vars must be >= 1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, GaussianRational] = {}
        for mono, coef in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != num_vars or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono} for {num_vars} variables")
            c = clean.get(mono, ZERO) + as_gaussian(coef)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.num_vars = num_vars
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, c) -> "Polynomial":
        return cls(num_vars, {(0,) * num_vars: c})

    @property
    def terms(self) -> dict[Monomial, GaussianRational]:
        return dict(self._terms)

    def items(self):
        """Terms in decreasing lex order."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, mono: Monomial) -> GaussianRational:
        return self._terms.get(tuple(mono), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degrees(self) -> set[int]:
        return {sum(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Total degree. Raises for the zero polynomial."""
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self.degrees())

    def homogeneous_degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial; raises otherwise."""
        degs = self.degrees()
        if not degs:
            raise ValueError("the zero polynomial has no degree")
        if len(degs) > 1:
            raise ValueError(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self._terms.values())

    # -- ring operations ------------------------------------------------
    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.num_vars != self.num_vars:
            raise ValueError(f"variable count mismatch: {self.num_vars} vs {other.num_vars}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.num_vars, other)
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, ZERO) + c
        return Polynomial(self.num_vars, {m: c for m, c in out.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.num_vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.num_vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = as_gaussian(c)
        if not c:
            return Polynomial(self.num_vars)
        return Polynomial(self.num_vars, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict[Monomial, GaussianRational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, ZERO) + c1 * c2
        return Polynomial(self.num_vars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.constant(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def multiply_monomial(self, mono: Monomial) -> "Polynomial":
        return Polynomial(
            self.num_vars,
            {tuple(a + b for a, b in zip(m, mono)): c for m, c in self._terms.items()},
        )

    def permute_variables(self, perm: Sequence[int]) -> "Polynomial":
        """Substitute x_{k+1} -> x_{perm[k]+1} (0-based ``perm``)."""
        out = {}
        for m, c in self._terms.items():
            new = [0] * self.num_vars
            for k, e in enumerate(m):
                new[perm[k]] = e
            out[tuple(new)] = c
        return Polynomial(self.num_vars, out)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.num_vars == other.num_vars and self._terms == other._terms
        if isinstance(other, (int, GaussianRational)) or hasattr(other, "denominator"):
            return self == Polynomial.constant(self.num_vars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .parser import format_polynomial

        return f"Polynomial({self.num_vars}, {format_polynomial(self)!r})"

    def __str__(self):
        from .parser import format_polynomial

        return format_polynomial(self)


def variable(num_vars: int, k: int) -> Polynomial:
    """The variable x_k (1-based)."""
    if not 1 <= k <= num_vars:
        raise ValueError(f"variable index {k} out of range 1..{num_vars}")
    mono = [0] * num_vars
    mono[k - 1] = 1
    return Polynomial(num_vars, {tuple(mono): ONE})


def pure_power(num_vars: int, k: int, a: int) -> Polynomial:
    """x_k ** a (1-based k)."""
    mono = [0] * num_vars
    mono[k - 1] = a
    return Polynomial(num_vars, {tuple(mono): ONE})


@lru_cache(maxsize=256)
def _monomials(n: int, d: int) -> tuple[Monomial, ...]:
    if n == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        out.extend((first,) + rest for rest in _monomials(n - 1, d - first))
    return tuple(out)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """Degree-``d`` monomials in ``n`` variables, strictly decreasing lex."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return list(_monomials(n, d))


@lru_cache(maxsize=256)
def monomial_index(n: int, d: int) -> dict[Monomial, int]:
    """Position of each degree-``d`` monomial in the lex basis of S_d."""
    return {m: k for k, m in enumerate(_monomials(n, d))}


def basis_size(n: int, d: int) -> int:
    return comb(n + d - 1, d)


def coordinate_vector(f: Polynomial, d: int) -> list[GaussianRational]:
    """Coefficients of ``f`` in the lex basis of S_d."""
    index = monomial_index(f.num_vars, d)
    vec = [ZERO] * len(index)
    for m, c in f._terms.items():
        pos = index.get(m)
        if pos is None:
            raise ValueError(f"polynomial is not homogeneous of degree {d}")
        vec[pos] = c
    return vec


def evaluate(f: Polynomial, point: Sequence) -> GaussianRational:
    """Exact value of ``f`` at ``point``."""
    if len(point) != f.num_vars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.num_vars} variables")
    pt = [as_gaussian(x) for x in point]
    total = ZERO
    for m, c in f._terms.items():
        term = c
        for x, e in zip(pt, m):
            if e:
                term = term * x**e
        total = total + term
    return total
