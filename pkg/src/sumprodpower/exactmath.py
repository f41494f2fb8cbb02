"""Exact integer and rational primitives shared by every other module.

Everything here is arbitrary precision: integer k-th roots, perfect-power
detection, divisor enumeration by trial division, and dense univariate
polynomials with ``Fraction`` coefficients (needed for the non-polynomiality
remainder certificate).  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Poly",
    "divisors",
    "int_nth_root",
    "perfect_sth_power",
    "poly_divrem",
    "poly_eval",
]


def int_nth_root(m: int, k: int) -> int:
    """Return ``floor(m ** (1/k))`` computed exactly with integer Newton steps.

    The result ``r`` satisfies ``r**k <= m < (r + 1)**k``.
    """
    if k < 1:
        raise ValueError("root index k must be >= 1")
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return 0
    if k == 1:
        return m
    # Start above the true root, then Newton steps decrease monotonically.
    x = 1 << ((m.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + m // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > m:
        x -= 1
    while (x + 1) ** k <= m:
        x += 1
    return x


def perfect_sth_power(m: int, s: int) -> int | None:
    """Return ``b`` with ``b**s == m``, or ``None`` if ``m`` is not an s-th power."""
    if m < 1:
        raise ValueError("m must be positive")
    if s < 2:
        raise ValueError("exponent s must be >= 2")
    b = int_nth_root(m, s)
    return b if b ** s == m else None


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n``, ascending, by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored ascending by degree with trailing zeros trimmed;
    the zero polynomial is the empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    def scaled(self, factor: Fraction | int) -> "Poly":
        f = Fraction(factor)
        return Poly(f * c for c in self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def poly_divrem(numer: Poly, denom: Poly) -> tuple[Poly, Poly]:
    """Exact long division: ``numer == q * denom + r`` with ``deg r < deg denom``."""
    if denom.is_zero:
        raise ValueError("division by the zero polynomial")
    rem = list(numer.coeffs)
    dcs: Sequence[Fraction] = denom.coeffs
    lead = dcs[-1]
    qlen = max(len(rem) - len(dcs) + 1, 0)
    q = [Fraction(0)] * qlen
    while len(rem) >= len(dcs) and rem:
        shift = len(rem) - len(dcs)
        c = rem[-1] / lead
        q[shift] = c
        for i, d in enumerate(dcs):
            rem[i + shift] -= c * d
        while rem and rem[-1] == 0:
            rem.pop()
    return Poly(q), Poly(rem)


def poly_eval(p: Poly, x: Fraction | int) -> Fraction:
    """Evaluate ``p`` at ``x`` by Horner's rule, exactly."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
