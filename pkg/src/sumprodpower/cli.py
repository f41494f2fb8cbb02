"""Command-line front end.

Subcommands: verify, gen4, family, search, s3.  Records go to stdout, one per
line, as JSON objects ({"s": ..., "parts": [...], "n": ..., "b": ...,
"source": ...}) or as tab-separated columns a_1 .. a_{s-1}, b, n; diagnostics
go to stderr.  Rationals on the command line are written p/q, integers as
unbounded decimals.  Exit codes: 0 success, 1 mathematical failure (not a
solution, or positivity violated), 2 usage error, 3 generation budget
exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .elliptic import Point, WeierstrassCurve, add, nagell_lutz_candidates, negate, on_curve
from .exactmath import perfect_sth_power
from .family import FamilyParams, S5Substitution, general_solution, positivity_value, s5_polynomial_family
from .search import SearchSpec, enumerate_solutions
from .transforms import (
    BVector,
    DioSolution,
    clear_denominators,
    primitive_reduce,
    s3_curve,
    s3_trace_back,
    s4_curve,
    s4_in_positive_region,
    s4_inverse,
)

S4_SEED_POINT = Point(235, 8)


@dataclass(frozen=True)
class OutputRecord:
    """One verified solution plus the subcommand that produced it."""

    s: int
    parts: tuple[int, ...]
    n: int
    b: int
    source: str

    @classmethod
    def from_solution(cls, sol: DioSolution, source: str) -> "OutputRecord":
        return cls(sol.s, sol.sorted_parts, sol.n, sol.b, source)

    def to_jsonl(self) -> str:
        return json.dumps(
            {"s": self.s, "parts": list(self.parts), "n": self.n, "b": self.b,
             "source": self.source}
        )

    def to_tsv(self) -> str:
        return "\t".join(str(v) for v in (*self.parts, self.b, self.n))

    def render(self, fmt: str) -> str:
        return self.to_tsv() if fmt == "tsv" else self.to_jsonl()


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r}") from exc


def _fraction_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(tok) for tok in text.split(",") if tok != ""]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated rational list: {text!r}") from exc


def _point(text: str) -> Point:
    coords = _fraction_list(text)
    if len(coords) != 2:
        raise argparse.ArgumentTypeError(f"a point needs exactly two coordinates: {text!r}")
    return Point(coords[0], coords[1])


def cmd_verify(args: argparse.Namespace) -> int:
    s, parts = args.s, args.parts
    if s < 3:
        return _usage_error("--s must be at least 3")
    if len(parts) != s - 1:
        return _usage_error(f"expected {s - 1} parts for s={s}, got {len(parts)}")
    if any(a < 1 for a in parts):
        return _usage_error("parts must be positive integers")
    n = sum(parts)
    value = prod(parts) * n
    b = perfect_sth_power(value, s)
    if b is None:
        print(f"not a solution: {value} is not a perfect {s}-th power", file=sys.stderr)
        return 1
    record = OutputRecord.from_solution(DioSolution(s, tuple(parts), n, b), "verify")
    print(record.render(args.format))
    return 0


def _solution_from_point(point: Point, primitive: bool) -> DioSolution:
    bvec = BVector(4, s4_inverse(point))
    sol = clear_denominators(bvec)
    return primitive_reduce(sol) if primitive else sol


def cmd_gen4(args: argparse.Namespace) -> int:
    curve = s4_curve()
    if args.from_point is not None:
        point = args.from_point
        if not on_curve(curve, point):
            print(f"point ({point.x}, {point.y}) is not on the s=4 curve", file=sys.stderr)
            return 1
        if not s4_in_positive_region(point):
            print(
                f"point ({point.x}, {point.y}) is outside the positive region "
                "(needs x < 243 and |y| < 6369 - 27x)",
                file=sys.stderr,
            )
            return 1
        record = OutputRecord.from_solution(_solution_from_point(point, args.primitive), "gen4")
        print(record.render(args.format))
        return 0
    if args.count is None:
        return _usage_error("--count is required unless --from-point is given")
    emitted: set[tuple[int, ...]] = set()
    multiple = S4_SEED_POINT
    for k in range(1, args.max_multiple + 1):
        for point in (multiple, negate(multiple)):
            if not s4_in_positive_region(point):
                continue
            sol = _solution_from_point(point, args.primitive)
            key = sol.sorted_parts
            if key in emitted:
                continue
            emitted.add(key)
            print(OutputRecord.from_solution(sol, "gen4").render(args.format))
            if len(emitted) == args.count:
                return 0
        multiple = add(curve, multiple, S4_SEED_POINT)
    print(
        f"budget exhausted: found {len(emitted)} of {args.count} solutions "
        f"within {args.max_multiple} multiples",
        file=sys.stderr,
    )
    return 3


def cmd_family(args: argparse.Namespace) -> int:
    closed_form = args.t1 is not None or args.t2 is not None
    if closed_form:
        if args.t1 is None or args.t2 is None:
            return _usage_error("--t1 and --t2 must be given together")
        if args.tail is not None or args.t0 is not None:
            return _usage_error("--t1/--t2 and --tail/--t0 are mutually exclusive")
        if args.s != 5:
            return _usage_error("the closed form --t1/--t2 is only defined for --s 5")
        d = 4 * args.t1 ** 2 * args.t2 - args.t1 * args.t2 ** 3 + 4
        if d <= 0:
            print(f"positivity quadratic is not positive: D = {d}", file=sys.stderr)
            return 1
        sol = s5_polynomial_family(S5Substitution(args.t1, args.t2))
    else:
        if args.tail is None or args.t0 is None:
            return _usage_error("either --t1/--t2 or --tail/--t0 must be given")
        try:
            params = FamilyParams(args.s, tuple(args.tail), args.t0)
        except ValueError as exc:
            return _usage_error(str(exc))
        d = positivity_value(params)
        if d <= 0:
            print(f"positivity quadratic is not positive: D = {d}", file=sys.stderr)
            return 1
        sol = general_solution(args.s, args.tail, args.t0)
    if args.primitive:
        sol = primitive_reduce(sol)
    print(OutputRecord.from_solution(sol, "family").render(args.format))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    try:
        spec = SearchSpec(s=args.s, n_max=args.max_n, a_max=args.max_part, jobs=args.jobs)
    except ValueError as exc:
        return _usage_error(str(exc))
    for sol in enumerate_solutions(spec):
        print(OutputRecord.from_solution(sol, "search").render(args.format))
    return 0


def cmd_s3(args: argparse.Namespace) -> int:
    curve = s3_curve()
    print("curve: y^2 = x^3 + 16")
    candidates = nagell_lutz_candidates(curve)
    rendered = ", ".join(f"({p.x}, {p.y})" for p in candidates)
    print(f"integral candidates (y = 0 or y | disc): {rendered}")
    positive = 0
    for point in candidates:
        pair = s3_trace_back(point)
        if pair is None:
            print(f"trace back ({point.x}, {point.y}): v = 0, degenerate, no (b1, b2)")
        else:
            is_pos = pair[0] > 0 and pair[1] > 0
            positive += is_pos
            print(f"trace back ({point.x}, {point.y}): (b1, b2) = ({pair[0]}, {pair[1]}),"
                  f" positive: {'yes' if is_pos else 'no'}")
    print(f"positive preimages among candidates: {positive}")
    brute = enumerate_solutions(SearchSpec(3, args.brute_max))
    print(f"brute force a1 + a2 <= {args.brute_max}: {len(brute)} solutions")
    print(
        "erratum: the scaling x = 4v, y = 16u + 8 does not land on y^2 = x^3 + 64"
        " ((16u+8)^2 - (4v)^3 - 64 = 192(u^2+u) is not identically 0);"
        " the consistent scaling is x = 4v, y = 8u + 4 onto y^2 = x^3 + 16"
    )
    alt = WeierstrassCurve(0, 0, 64)
    for x, y in ((8, 24), (8, -24), (0, 8), (0, -8), (-4, 0)):
        ok = on_curve(alt, Point(x, y))
        print(f"point ({x}, {y}) on y^2 = x^3 + 64: {'yes' if ok else 'no'}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumprodpower",
        description="Construct, generate, search and verify solutions of "
        "n = a_1 + ... + a_{s-1} with a_1 * ... * a_{s-1} * n = b^s.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify one candidate solution")
    p_verify.add_argument("--s", type=int, required=True, help="number of terms s (>= 3)")
    p_verify.add_argument("--parts", type=_int_list, required=True,
                          help="comma-separated parts a_1,...,a_{s-1}")
    p_verify.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
    p_verify.set_defaults(func=cmd_verify)

    p_gen4 = sub.add_parser("gen4", help="generate s=4 solutions from curve multiples")
    p_gen4.add_argument("--count", type=_positive_int, help="number of distinct solutions")
    p_gen4.add_argument("--max-multiple", type=_positive_int, default=25,
                        help="largest multiple of the seed point to try (default 25)")
    p_gen4.add_argument("--primitive", action="store_true",
                        help="reduce each solution by its common factor")
    p_gen4.add_argument("--from-point", type=_point, metavar="X,Y",
                        help="map one explicit curve point instead of walking multiples")
    p_gen4.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
    p_gen4.set_defaults(func=cmd_gen4)

    p_family = sub.add_parser("family", help="instantiate the s>=5 solution family")
    p_family.add_argument("--s", type=int, required=True, help="number of terms s (>= 5)")
    p_family.add_argument("--tail", type=_fraction_list,
                          help="comma-separated positive rationals b4,...,b_{s-1}")
    p_family.add_argument("--t0", type=_fraction, help="positive rational parameter")
    p_family.add_argument("--t1", type=_positive_int, help="closed s=5 form: first integer")
    p_family.add_argument("--t2", type=_positive_int, help="closed s=5 form: second integer")
    p_family.add_argument("--primitive", action="store_true",
                          help="reduce the solution by its common factor")
    p_family.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
    p_family.set_defaults(func=cmd_family)

    p_search = sub.add_parser("search", help="enumerate all solutions within bounds")
    p_search.add_argument("--s", type=int, required=True, help="number of terms s (>= 3)")
    p_search.add_argument("--max-n", type=_positive_int, required=True,
                          help="largest allowed sum n")
    p_search.add_argument("--max-part", type=_positive_int, default=None,
                          help="largest allowed part (default: max-n)")
    p_search.add_argument("--jobs", type=_positive_int, default=1,
                          help="worker processes (default 1)")
    p_search.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    p_search.set_defaults(func=cmd_search)

    p_s3 = sub.add_parser("s3", help="report the s=3 non-existence analysis")
    p_s3.add_argument("--brute-max", type=_positive_int, default=10000,
                      help="brute-force bound on a1 + a2 (default 10000)")
    p_s3.set_defaults(func=cmd_s3)

    return parser


_PARSER: argparse.ArgumentParser | None = None


def main(argv: Sequence[str] | None = None) -> int:
    global _PARSER
    if _PARSER is None:
        _PARSER = _build_parser()
    try:
        args = _PARSER.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return args.func(args)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
