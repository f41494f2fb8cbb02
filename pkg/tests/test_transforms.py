from fractions import Fraction
from math import prod

import pytest

from sumprodpower import (
    BVector,
    DioSolution,
    Point,
    S4Chart,
    clear_denominators,
    nagell_lutz_candidates,
    negate,
    on_curve,
    primitive_reduce,
    s3_curve,
    s3_trace_back,
    s4_curve,
    s4_forward,
    s4_in_positive_region,
    s4_inverse,
    scalar_mul,
)

SEED = Point(235, 8)
# The second worked s=4 point: equals [3](235, 8).
EXAMPLE_POINT = Point(Fraction(60266587, 257049), Fraction(3852230624, 130323843))
EXAMPLE_PARTS = (781943058, 138991832, 18609625)
WITNESS = Point(Fraction(30507, 121), Fraction(-584592, 1331))


class TestDioSolution:
    def test_seed_solution(self):
        sol = DioSolution(4, (1, 2, 24), 27, 6)
        assert sol.sorted_parts == (1, 2, 24)

    def test_from_parts(self):
        sol = DioSolution.from_parts(4, (1, 2, 24))
        assert (sol.n, sol.b) == (27, 6)
        with pytest.raises(ValueError):
            DioSolution.from_parts(4, (1, 2, 25))

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(s=4, parts=(1, 2, 24), n=28, b=6),  # wrong sum
            dict(s=4, parts=(1, 2, 24), n=27, b=7),  # wrong power
            dict(s=4, parts=(1, 2), n=3, b=1),  # wrong arity
            dict(s=2, parts=(1,), n=1, b=1),  # s too small
            dict(s=4, parts=(1, -2, 24), n=23, b=6),  # negative part
        ],
    )
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ValueError):
            DioSolution(**kwargs)


class TestBVector:
    def test_product_sum_identity_enforced(self):
        BVector(4, (Fraction(1, 6), Fraction(1, 3), Fraction(4)))
        with pytest.raises(ValueError):
            BVector(4, (Fraction(1), Fraction(1), Fraction(1)))
        with pytest.raises(ValueError):
            BVector(3, (Fraction(1), Fraction(1)))

    def test_from_solution(self):
        sol = DioSolution(4, (1, 2, 24), 27, 6)
        bvec = BVector.from_solution(sol)
        assert bvec.entries == (Fraction(1, 6), Fraction(1, 3), Fraction(4))
        assert bvec.is_positive


class TestClearDenominators:
    def test_seed_fiber(self):
        bvec = BVector(4, (Fraction(1, 6), Fraction(1, 3), Fraction(4)))
        sol = clear_denominators(bvec)
        assert (sol.parts, sol.b, sol.n) == ((1, 2, 24), 6, 27)

    def test_s5_vector(self):
        bvec = BVector(5, (Fraction(1, 14), Fraction(7, 4), Fraction(7, 4), Fraction(1)))
        sol = clear_denominators(bvec)
        assert (sol.parts, sol.b, sol.n) == ((2, 49, 49, 28), 28, 128)

    def test_power_identity_always_holds(self, rng):
        # scaled-down integer solutions give positive b-vectors of any s
        for parts, b in [((1, 2, 24), 6), ((1, 2, 12, 12), 6), ((1, 1, 2, 2, 2), 2)]:
            s = len(parts) + 1
            bvec = BVector(s, tuple(Fraction(a, b) for a in parts))
            sol = clear_denominators(bvec)
            assert prod(sol.parts) * sol.n == sol.b ** sol.s

    def test_rejects_non_positive(self):
        entries = s4_inverse(Point(Fraction(30507, 121), Fraction(-584592, 1331)))
        bvec = BVector(4, entries)  # mixed signs still satisfy prod*sum = 1
        assert not bvec.is_positive
        with pytest.raises(ValueError):
            clear_denominators(bvec)


class TestPrimitiveReduce:
    def test_reduces_known_solution(self):
        sol = DioSolution(5, (20, 324, 1296, 360), 2000, 360)
        reduced = primitive_reduce(sol)
        assert (reduced.parts, reduced.b, reduced.n) == ((5, 81, 324, 90), 90, 500)

    def test_primitive_fixed_point(self):
        sol = DioSolution(4, (1, 2, 24), 27, 6)
        assert primitive_reduce(sol) is sol

    def test_scale_then_reduce_roundtrip(self):
        base = DioSolution(4, (1, 2, 24), 27, 6)
        scaled = DioSolution(4, tuple(3 * a for a in base.parts), 3 * base.n, 3 * base.b)
        assert primitive_reduce(scaled) == base


class TestS3:
    def test_curve_and_candidates(self):
        curve = s3_curve()
        assert (curve.a, curve.b, curve.c) == (0, 0, 16)
        assert nagell_lutz_candidates(curve) == [Point(0, -4), Point(0, 4)]

    def test_trace_back_degenerate(self):
        assert s3_trace_back(Point(0, 4)) is None
        assert s3_trace_back(Point(0, -4)) is None

    def test_trace_back_rejects_off_curve(self):
        # (4, 12) satisfies neither the curve nor the original constraint:
        # its would-be preimage (1, 1) has b1*b2*(b1+b2) = 2.
        with pytest.raises(ValueError):
            s3_trace_back(Point(4, 12))

    def test_no_rational_s3_vector_exists_for_small_candidates(self):
        # Both integral candidates are degenerate, so no positive pair at all.
        for point in nagell_lutz_candidates(s3_curve()):
            assert s3_trace_back(point) is None


class TestS4Maps:
    def test_curve_membership_examples(self):
        curve = s4_curve()
        assert on_curve(curve, Point(235, 8))
        assert on_curve(curve, Point(51, -4224))
        assert on_curve(curve, Point(243, 192))

    @pytest.mark.parametrize(
        "entries, expected",
        [
            ((Fraction(1, 6), Fraction(1, 3), Fraction(4)), Point(51, -4224)),
            ((Fraction(4), Fraction(1, 3), Fraction(1, 6)), Point(235, 8)),
            ((Fraction(1, 3), Fraction(1, 6), Fraction(4)), Point(147, -2208)),
        ],
    )
    def test_forward(self, entries, expected):
        point = s4_forward(BVector(4, entries))
        assert point == expected
        assert on_curve(s4_curve(), point)

    def test_forward_rejects_off_fiber(self):
        # (1, 8, 9) with b = 6 is a solution on a different fiber: prod = 1/3.
        bvec = BVector(4, (Fraction(1, 6), Fraction(4, 3), Fraction(3, 2)))
        with pytest.raises(ValueError):
            s4_forward(bvec)

    def test_inverse_examples(self):
        assert s4_inverse(Point(51, -4224)) == (Fraction(1, 6), Fraction(1, 3), Fraction(4))
        assert s4_inverse(Point(235, 8)) == (Fraction(4), Fraction(1, 3), Fraction(1, 6))

    def test_inverse_fiber_values(self):
        for k in (1, 2, 3, 5):
            point = scalar_mul(s4_curve(), k, SEED)
            triple = s4_inverse(point)
            assert prod(triple) == Fraction(2, 9)
            assert sum(triple) == Fraction(9, 2)

    def test_inverse_degenerate_point(self):
        with pytest.raises(ValueError):
            s4_inverse(Point(243, 192))

    def test_example_point_is_third_multiple(self):
        assert scalar_mul(s4_curve(), 3, SEED) == EXAMPLE_POINT

    def test_example_point_clears_to_published_parts(self):
        for point in (EXAMPLE_POINT, negate(EXAMPLE_POINT)):
            triple = s4_inverse(point)
            assert all(b > 0 for b in triple)
            sol = primitive_reduce(clear_denominators(BVector(4, triple)))
            assert sol.sorted_parts == tuple(sorted(EXAMPLE_PARTS))

    def test_witness_point_is_outside_region(self):
        # The non-integral witness certifies infinite order but sits off the
        # bounded component: x > 243, so its preimage has negative entries.
        assert on_curve(s4_curve(), WITNESS)
        assert not s4_in_positive_region(WITNESS)
        assert not all(b > 0 for b in s4_inverse(WITNESS))

    def test_roundtrip_random_multiples(self):
        curve = s4_curve()
        for k in range(1, 9):
            for point in (scalar_mul(curve, k, SEED), negate(scalar_mul(curve, k, SEED))):
                if point.x == 243:
                    continue
                triple = s4_inverse(point)
                assert s4_forward(BVector(4, triple)) == point

    def test_chart_roundtrip(self):
        bvec = BVector(4, (Fraction(1, 6), Fraction(1, 3), Fraction(4)))
        chart = S4Chart.from_bvector(bvec)
        assert (chart.u, chart.v) == (Fraction(2), Fraction(6))
        assert chart.to_point() == Point(51, -4224)


class TestPositiveRegion:
    def test_examples(self):
        assert s4_in_positive_region(Point(235, 8))
        assert s4_in_positive_region(Point(51, -4224))
        assert not s4_in_positive_region(Point(4291, 279856))

    def test_equivalent_to_positive_inverse(self):
        curve = s4_curve()
        for k in range(1, 13):
            point = scalar_mul(curve, k, SEED)
            if point.x == 243:
                continue
            for candidate in (point, negate(point)):
                positive = all(b > 0 for b in s4_inverse(candidate))
                assert s4_in_positive_region(candidate) == positive

    def test_cube_identity_behind_region(self):
        # On the curve, y^2 - (6369 - 27x)^2 = (x - 243)^3; this is why the
        # whole bounded component lies in the region.
        curve = s4_curve()
        for k in (1, 2, 3, 4):
            p = scalar_mul(curve, k, SEED)
            assert p.y ** 2 - (6369 - 27 * p.x) ** 2 == (p.x - 243) ** 3

    def test_infinity_not_in_region(self):
        from sumprodpower import INFINITY

        assert not s4_in_positive_region(INFINITY)
