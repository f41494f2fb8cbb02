"""Charts between normalized solution vectors and curve points for s=3 and s=4.

The central objects of the whole package live here: ``DioSolution`` (a verified
integer solution of the sum/product system) and ``BVector`` (its normalization
b_i = a_i / b, which always satisfies prod(b) * sum(b) = 1).  For s = 3 the
chart u = b1/b2, v = 1/b2 turns that constraint into u^2 + u = v^3, which the
substitution x = 4v, y = 8u + 4 carries onto the Mordell curve y^2 = x^3 + 16
(note (8u+4)^2 = 64(u^2+u) + 16).  For s = 4 the fiber through the seed
solution (1, 2, 24) has prod = 2/9 and sum = 9/2; the chart u = b2/b1,
v = 1/b1 with x = -32v + 243, y = 384u - 864v + 192 carries it onto
y^2 = x^3 - 166779x + 26215254.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

from .elliptic import Point, WeierstrassCurve, on_curve
from .exactmath import perfect_sth_power

__all__ = [
    "BVector",
    "DioSolution",
    "S3Chart",
    "S4Chart",
    "S4_FIBER_PRODUCT",
    "S4_FIBER_SUM",
    "clear_denominators",
    "primitive_reduce",
    "s3_curve",
    "s3_trace_back",
    "s4_curve",
    "s4_forward",
    "s4_in_positive_region",
    "s4_inverse",
]

# The s=4 analysis works on the fiber through the seed solution (1, 2, 24).
S4_FIBER_PRODUCT = Fraction(2, 9)
S4_FIBER_SUM = Fraction(9, 2)


@dataclass(frozen=True)
class DioSolution:
    """Verified positive integer solution: n = sum(parts), prod(parts) * n = b**s."""

    s: int
    parts: tuple[int, ...]
    n: int
    b: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(a) for a in self.parts))
        if self.s < 3:
            raise ValueError("s must be >= 3")
        if len(self.parts) != self.s - 1:
            raise ValueError(f"expected {self.s - 1} parts, got {len(self.parts)}")
        if any(a < 1 for a in self.parts) or self.b < 1:
            raise ValueError("parts and b must be positive")
        if self.n != sum(self.parts):
            raise ValueError("n must equal the sum of the parts")
        if prod(self.parts) * self.n != self.b ** self.s:
            raise ValueError("prod(parts) * n is not b**s")

    @classmethod
    def from_parts(cls, s: int, parts: tuple[int, ...] | list[int]) -> "DioSolution":
        """Build a solution from parts alone, computing n and b; raises if
        prod(parts) * sum(parts) is not a perfect s-th power."""
        n = sum(parts)
        b = perfect_sth_power(prod(parts) * n, s)
        if b is None:
            raise ValueError(f"{prod(parts) * n} is not a perfect {s}-th power")
        return cls(s, tuple(parts), n, b)

    @property
    def sorted_parts(self) -> tuple[int, ...]:
        return tuple(sorted(self.parts))


@dataclass(frozen=True)
class BVector:
    """Normalized rational vector (b_1 .. b_{s-1}) with prod * sum = 1 exactly."""

    s: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))
        if self.s < 3:
            raise ValueError("s must be >= 3")
        if len(self.entries) != self.s - 1:
            raise ValueError(f"expected {self.s - 1} entries, got {len(self.entries)}")
        if prod(self.entries) * sum(self.entries) != 1:
            raise ValueError("entries must satisfy prod * sum = 1")

    @classmethod
    def from_solution(cls, sol: DioSolution) -> "BVector":
        return cls(sol.s, tuple(Fraction(a, sol.b) for a in sol.parts))

    @property
    def is_positive(self) -> bool:
        return all(e > 0 for e in self.entries)


def clear_denominators(bvec: BVector) -> DioSolution:
    """Scale a positive BVector by the least common denominator.

    With b* = lcm of the denominators, the parts a_i = b_i * b* are integers
    and prod(a) * sum(a) = (b*)**s * prod(b) * sum(b) = (b*)**s.
    """
    if not bvec.is_positive:
        raise ValueError("all entries must be positive to clear denominators")
    scale = lcm(*(e.denominator for e in bvec.entries))
    parts = tuple(int(e * scale) for e in bvec.entries)
    return DioSolution(bvec.s, parts, sum(parts), scale)


def primitive_reduce(sol: DioSolution) -> DioSolution:
    """Divide out the largest common factor d with d | gcd(parts) and d | b.

    Scaling every part by 1/d scales prod * sum by d**(-s) and b**s by the
    same factor, so the reduced tuple is again a solution.
    """
    d = gcd(gcd(*sol.parts), sol.b)
    if d == 1:
        return sol
    parts = tuple(a // d for a in sol.parts)
    return DioSolution(sol.s, parts, sol.n // d, sol.b // d)


# ---------------------------------------------------------------------------
# s = 3
# ---------------------------------------------------------------------------

_S3_CURVE = WeierstrassCurve(Fraction(0), Fraction(0), Fraction(16))


@dataclass(frozen=True)
class S3Chart:
    """Chart u = b1/b2, v = 1/b2; on a b-vector it satisfies u^2 + u = v^3."""

    u: Fraction
    v: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))

    @classmethod
    def from_bvector(cls, bvec: BVector) -> "S3Chart":
        if bvec.s != 3:
            raise ValueError("s=3 chart needs a BVector with s == 3")
        b1, b2 = bvec.entries
        chart = cls(b1 / b2, 1 / b2)
        if chart.u * chart.u + chart.u != chart.v ** 3:
            raise ValueError("chart does not satisfy u^2 + u = v^3")
        return chart

    def to_point(self) -> Point:
        # (8u+4)^2 = 64(u^2+u) + 16 = (4v)^3 + 16, so this lands on s3_curve().
        return Point(4 * self.v, 8 * self.u + 4)

    @classmethod
    def from_point(cls, point: Point) -> "S3Chart":
        if not on_curve(_S3_CURVE, point) or point.is_infinity:
            raise ValueError("point is not an affine point of y^2 = x^3 + 16")
        return cls((point.y - 4) / 8, point.x / 4)


def s3_curve() -> WeierstrassCurve:
    """The Mordell curve y^2 = x^3 + 16 carrying the s=3 chart."""
    return _S3_CURVE


def s3_trace_back(point: Point) -> tuple[Fraction, Fraction] | None:
    """Invert the s=3 chart: point -> (b1, b2), or None on the v = 0 fiber.

    Positivity of the returned pair is the caller's concern; for s=3 no curve
    point produces a positive pair, which is the negative result this module
    exists to make checkable.
    """
    chart = S3Chart.from_point(point)
    if chart.v == 0:
        return None
    return (chart.u / chart.v, 1 / chart.v)


# ---------------------------------------------------------------------------
# s = 4
# ---------------------------------------------------------------------------

_S4_CURVE = WeierstrassCurve(Fraction(0), Fraction(-166779), Fraction(26215254))


@dataclass(frozen=True)
class S4Chart:
    """Chart u = b2/b1, v = 1/b1 on the fiber prod = 2/9, sum = 9/2.

    Eliminating b3 from the fiber equations gives 18u + 18u^2 - 81uv + 4v^3 = 0.
    """

    u: Fraction
    v: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))

    @classmethod
    def from_bvector(cls, bvec: BVector) -> "S4Chart":
        if bvec.s != 4:
            raise ValueError("s=4 chart needs a BVector with s == 4")
        b1, b2, b3 = bvec.entries
        if b1 == 0:
            raise ValueError("chart is undefined for b1 == 0")
        if prod(bvec.entries) != S4_FIBER_PRODUCT or sum(bvec.entries) != S4_FIBER_SUM:
            raise ValueError("BVector is not on the fiber prod=2/9, sum=9/2")
        chart = cls(b2 / b1, 1 / b1)
        u, v = chart.u, chart.v
        if 18 * u + 18 * u * u - 81 * u * v + 4 * v ** 3 != 0:
            raise ValueError("chart does not satisfy the fiber cubic")
        return chart

    def to_point(self) -> Point:
        return Point(-32 * self.v + 243, 384 * self.u - 864 * self.v + 192)


def s4_curve() -> WeierstrassCurve:
    """The curve y^2 = x^3 - 166779x + 26215254 carrying the s=4 fiber."""
    return _S4_CURVE


def s4_forward(bvec: BVector) -> Point:
    """Map a fiber BVector (s=4, prod=2/9, sum=9/2, b1 != 0) to a curve point."""
    point = S4Chart.from_bvector(bvec).to_point()
    if not on_curve(_S4_CURVE, point):
        raise ArithmeticError("forward map left the curve; fiber input was invalid")
    return point


def s4_inverse(point: Point) -> tuple[Fraction, Fraction, Fraction]:
    """Invert the s=4 chart: curve point -> (b1, b2, b3) on the fiber.

    From the forward map, v = (243 - x)/32 and u = (y - 27x + 6369)/384;
    b3 closes the sum to 9/2.  The result always has prod = 2/9 and
    sum = 9/2 (hence prod * sum = 1), with signs depending on the point.
    """
    if not on_curve(_S4_CURVE, point) or point.is_infinity:
        raise ValueError("point is not an affine point of the s=4 curve")
    x, y = point.x, point.y
    if x == 243:
        raise ValueError("degenerate point: x = 243 has no chart preimage")
    d = 243 - x
    b1 = Fraction(32) / d
    b2 = (y - 27 * x + 6369) / (12 * d)
    b3 = (-y - 27 * x + 6369) / (12 * d)
    return (b1, b2, b3)


def s4_in_positive_region(point: Point) -> bool:
    """True iff the chart preimage (b1, b2, b3) of the point is strictly positive.

    Equivalent inequality form: x < 243 and |y| < 6369 - 27x.  On the curve
    y^2 - (6369 - 27x)^2 = (x - 243)^3, so the entire bounded real component
    satisfies it.
    """
    if not on_curve(_S4_CURVE, point):
        raise ValueError("point is not on the s=4 curve")
    if point.is_infinity:
        return False
    x, y = point.x, point.y
    return x < 243 and abs(y) < 6369 - 27 * x
