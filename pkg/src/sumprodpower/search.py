"""Bounded brute-force enumeration of solutions with nondecreasing parts.

The enumeration walks nondecreasing tuples (a_1 <= ... <= a_{s-1}) whose sum
stays within n_max, pruning a prefix as soon as the remaining slots cannot fit
(each remaining part is at least as large as the current one).  The perfect
s-th power test on prod * sum is a dict lookup into a precomputed power table,
which is small: by AM-GM the product of the parts is at most
(n_max / (s-1))**(s-1), so only b up to roughly n_max**(s/(s-1)) / (s-1) can
occur.  Candidates found by workers are re-verified exactly when they are
materialized as DioSolution values.

Parallel runs partition the work by the leading part; workers share nothing
and the merged result is sorted, so output is a function of the spec alone.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .transforms import DioSolution

__all__ = ["MembershipReport", "SearchSpec", "check_table_membership", "enumerate_solutions"]


@dataclass(frozen=True)
class SearchSpec:
    """Bounds for one enumeration run: s, sum bound, optional part bound, workers."""

    s: int
    n_max: int
    a_max: int | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.s < 3:
            raise ValueError("s must be >= 3")
        if self.n_max < self.s - 1:
            raise ValueError("n_max must be at least s - 1")
        if self.a_max is not None and self.a_max < 1:
            raise ValueError("a_max must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    @property
    def part_bound(self) -> int:
        return self.n_max if self.a_max is None else min(self.a_max, self.n_max)


def _power_table(s: int, n_max: int) -> dict[int, int]:
    # b**s -> b for every value prod * sum can reach under the bounds.
    k = s - 1
    limit = n_max * (n_max // k + 1) ** k
    table: dict[int, int] = {}
    b = 1
    while b ** s <= limit:
        table[b ** s] = b
        b += 1
    return table


def _extend(
    s: int,
    n_max: int,
    a_max: int,
    parts: tuple[int, ...],
    total: int,
    product: int,
    powers: dict[int, int],
    out: list[tuple[tuple[int, ...], int, int]],
) -> None:
    last = parts[-1]
    remaining = s - 1 - len(parts)
    if remaining == 1:
        get = powers.get
        hi = min(a_max, n_max - total)
        for a in range(last, hi + 1):
            b = get(product * a * (total + a))
            if b is not None:
                out.append((parts + (a,), total + a, b))
        return
    hi = min(a_max, (n_max - total) // remaining)
    for a in range(last, hi + 1):
        _extend(s, n_max, a_max, parts + (a,), total + a, product * a, powers, out)


def _leading_block(args: tuple[int, int, int, int]) -> list[tuple[tuple[int, ...], int, int]]:
    # All solutions whose smallest part is the given a1 (picklable worker).
    s, n_max, a_max, a1 = args
    powers = _power_table(s, n_max)
    out: list[tuple[tuple[int, ...], int, int]] = []
    _extend(s, n_max, a_max, (a1,), a1, a1, powers, out)
    return out


def enumerate_solutions(spec: SearchSpec) -> list[DioSolution]:
    """All solutions with nondecreasing parts, sum <= n_max and parts <= a_max,
    sorted by (n, parts); identical output for any jobs value."""
    a_max = spec.part_bound
    lead_hi = min(a_max, spec.n_max // (spec.s - 1))
    blocks = [(spec.s, spec.n_max, a_max, a1) for a1 in range(1, lead_hi + 1)]
    raw: list[tuple[tuple[int, ...], int, int]] = []
    if spec.jobs == 1 or len(blocks) <= 1:
        powers = _power_table(spec.s, spec.n_max)
        for _, _, _, a1 in blocks:
            _extend(spec.s, spec.n_max, a_max, (a1,), a1, a1, powers, raw)
    else:
        with multiprocessing.Pool(spec.jobs) as pool:
            for chunk in pool.imap_unordered(_leading_block, blocks):
                raw.extend(chunk)
    raw.sort(key=lambda item: (item[1], item[0]))
    return [DioSolution(spec.s, parts, n, b) for parts, n, b in raw]


@dataclass(frozen=True)
class MembershipReport:
    """Per-row membership of reference solutions in an enumeration run."""

    spec: SearchSpec
    rows: tuple[tuple[DioSolution, bool], ...]

    @property
    def all_present(self) -> bool:
        return all(found for _, found in self.rows)

    @property
    def missing(self) -> tuple[DioSolution, ...]:
        return tuple(row for row, found in self.rows if not found)


def check_table_membership(rows: list[DioSolution], spec: SearchSpec) -> MembershipReport:
    """Report which of the given verified rows the enumeration reproduces."""
    found = {(sol.sorted_parts, sol.b) for sol in enumerate_solutions(spec)}
    checked = tuple(
        (row, (row.sorted_parts, row.b) in found and row.s == spec.s) for row in rows
    )
    return MembershipReport(spec=spec, rows=checked)
