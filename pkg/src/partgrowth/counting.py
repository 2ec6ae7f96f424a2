"""Exact partition counting and structural checks on the count sequence.

partition_table builds p_A(0..limit) for a symbolic part set with the
classic bounded-coin dynamic program: parts larger than the table limit
can never occur in a partition of n <= limit, so truncating the part set
at the limit is lossless and the table is exact (Python integers keep it
exact at any size).  pentagonal_table provides an independent route to
the unrestricted counts via the alternating recurrence driven by the
generalized pentagonal numbers, and count_partitions_bruteforce a third
route by direct enumeration for tiny n.

The check_* functions verify inequalities the count sequence must satisfy
(translation monotonicity, eventual strict growth for cofinite sets) and
window_max_location finds where on [0, x] the count is maximized, which
for a set with least part a1 always happens within a1 of the right edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .partsets import AllParts, CofiniteTail, PartSetSpec, enumerate_parts

# Direct enumeration is exponential; keep it to oracle-sized inputs.
BRUTEFORCE_LIMIT = 40


@dataclass(frozen=True)
class PartitionTable:
    """Counts p_A(0), ..., p_A(limit) for one part set, exact integers."""

    spec: PartSetSpec
    limit: int
    values: tuple[int, ...]

    def __getitem__(self, n) -> int:
        if not 0 <= n <= self.limit:
            raise IndexError(f"n={n} outside table range [0, {self.limit}]")
        return self.values[n]

    def __len__(self):
        return self.limit + 1

    def to_csv_rows(self):
        rows = [["n", "count"]]
        rows.extend([n, str(v)] for n, v in enumerate(self.values))
        return rows

    def to_json_obj(self):
        # counts as decimal strings: they overflow doubles long before
        # limit=5000 and JSON numbers cannot be trusted past 2**53
        return {
            "set": str(self.spec),
            "limit": self.limit,
            "counts": [str(v) for v in self.values],
        }


def table_from_parts(parts, limit, spec=None) -> PartitionTable:
    """DP table from an explicit part list (order of parts is irrelevant)."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    values = [0] * (limit + 1)
    values[0] = 1
    for a in parts:
        if a < 1:
            raise ValueError(f"parts must be >= 1, got {a}")
        if a > limit:
            continue
        for n in range(a, limit + 1):
            values[n] += values[n - a]
    if spec is None:
        from .partsets import FiniteParts
        spec = FiniteParts(tuple(sorted(parts)))
    return PartitionTable(spec=spec, limit=limit, values=tuple(values))


def partition_table(spec, limit) -> PartitionTable:
    """Exact p_A(n) for 0 <= n <= limit."""
    parts = enumerate_parts(spec, limit) if limit >= 1 else []
    return table_from_parts(parts, limit, spec=spec)


def count_partitions_bruteforce(parts, n) -> int:
    """Number of multisets from `parts` summing to n, by direct recursion.

    Enumerates largest-first with a nonincreasing-choice bound.  Guarded
    to n <= BRUTEFORCE_LIMIT; this is the oracle the DP is checked against.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > BRUTEFORCE_LIMIT:
        raise ValueError(
            f"bruteforce counter is capped at n <= {BRUTEFORCE_LIMIT}, got {n}")
    usable = sorted({int(a) for a in parts if 1 <= a <= n}, reverse=True)

    def count(remaining, max_index):
        if remaining == 0:
            return 1
        total = 0
        for i in range(max_index, len(usable)):
            a = usable[i]
            if a <= remaining:
                total += count(remaining - a, i)
        return total

    return count(n, 0)


def pentagonal_table(limit) -> PartitionTable:
    """Unrestricted partition counts via the alternating recurrence.

    p(n) = sum_{k>=1} (-1)^(k+1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ],
    the sum running while the offsets stay nonnegative.  Completely
    independent of the coin DP, so the two tables cross-check each other.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    values = [0] * (limit + 1)
    values[0] = 1
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * values[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * values[n - g2]
            k += 1
        values[n] = total
    return PartitionTable(spec=AllParts(), limit=limit, values=tuple(values))


def scaled_count(table, d, n) -> int:
    """Count for a set with gcd d, read off the normalized table.

    `table` must be the table of the divided-through set; the original set
    only partitions multiples of d, so the count is table[n // d] when
    d | n and 0 otherwise.
    """
    if d < 1:
        raise ValueError(f"divisor must be >= 1, got {d}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n % d:
        return 0
    return table[n // d]


# ---------------------------------------------------------------------------
# Structural checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckReport:
    """Result of one exhaustive inequality check over a finite range."""

    ok: bool
    checked: int
    first_violation: Optional[tuple] = None
    note: str = ""

    def __bool__(self):
        return self.ok

    def to_json_obj(self):
        return {
            "ok": self.ok,
            "checked": self.checked,
            "first_violation": list(self.first_violation)
            if self.first_violation else None,
            "note": self.note,
        }


def check_shift_monotonicity(table, shift) -> CheckReport:
    """Verify p_A(n + shift) >= p_A(n) for all representable n.

    Sound whenever the shift itself is partitionable (p_A(shift) >= 1):
    appending a partition of the shift to any partition of n injects
    partitions of n into partitions of n + shift.
    """
    if not 0 <= shift <= table.limit:
        raise ValueError(f"shift {shift} outside table range [0, {table.limit}]")
    if table[shift] < 1:
        raise ValueError(
            f"shift {shift} has no partition in this set; inequality unsupported")
    checked = 0
    for n in range(0, table.limit - shift + 1):
        checked += 1
        if table[n + shift] < table[n]:
            return CheckReport(False, checked, (n, table[n], table[n + shift]),
                               note=f"shift={shift}")
    return CheckReport(True, checked, note=f"shift={shift}")


def window_max_location(table, least_part, x) -> int:
    """The largest u in [0, x] with p_A(u) maximal; always lands in
    (x - least_part, x] because adding one copy of the least part maps
    partitions of u to partitions of u + least_part.
    """
    if not 0 <= x <= table.limit:
        raise ValueError(f"x={x} outside table range [0, {table.limit}]")
    if least_part < 1:
        raise ValueError(f"least part must be >= 1, got {least_part}")
    best_u = 0
    for u in range(0, x + 1):
        if table[u] >= table[best_u]:
            best_u = u
    return best_u


def check_window_max(table, least_part, x) -> CheckReport:
    """Verify the maximizer over [0, x] lies within least_part of x."""
    u = window_max_location(table, least_part, x)
    ok = x - least_part < u <= x
    violation = None if ok else (x, u)
    return CheckReport(ok, x + 1, violation, note=f"x={x}, least_part={least_part}")


def check_cofinite_monotonicity(start, limit) -> CheckReport:
    """For the tail set {n >= start}: counts are nondecreasing from n=1 on,
    and strictly increasing once n >= 3*start + 2.

    The strict phase needs headroom beyond its threshold, hence the guard
    limit >= 3*start + 3.
    """
    if limit < 3 * start + 3:
        raise ValueError(
            f"limit {limit} too small; need >= {3 * start + 3} "
            f"to exercise the strict phase")
    table = partition_table(CofiniteTail(start), limit)
    checked = 0
    strict_from = 3 * start + 2
    for n in range(1, limit):
        checked += 1
        if table[n + 1] < table[n]:
            return CheckReport(False, checked, (n, table[n], table[n + 1]),
                               note="nondecreasing phase failed")
        if n >= strict_from and table[n + 1] <= table[n]:
            return CheckReport(False, checked, (n, table[n], table[n + 1]),
                               note="strict phase failed")
    return CheckReport(True, checked,
                       note=f"start={start}, strict from n>={strict_from}")
