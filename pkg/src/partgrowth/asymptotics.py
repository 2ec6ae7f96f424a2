"""Growth-rate diagnostics for restricted partition counts.

The unrestricted counts obey log p(n) ~ C0 * sqrt(n) with
C0 = pi * sqrt(2/3).  For a part set of lower density alpha and upper
density beta (gcd 1), the normalized ratio

    r(n) = log p_A(n) / (C0 * sqrt(n))

eventually sits between sqrt(alpha) and sqrt(beta); for density-zero sets
it decays to 0; for residue classes r_1..r_l mod m with
gcd(r_1, ..., r_l, m) = 1 it tends to sqrt(l/m).  The probes here sample
r(n) on a finite grid and judge the tail against a band; they are
experiments at finite scale, not limit proofs, and their reports say so.

Finite part sets instead grow polynomially: with k parts of product P and
gcd 1, p_A(n) * (k-1)! * P / n^(k-1) -> 1, and finite_set_leading_ratio
evaluates that ratio exactly as a rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .counting import PartitionTable, partition_table, pentagonal_table
from .partsets import (AllParts, FileParts, FiniteParts, PartSetSpec,
                       ResidueParts, gcd_of_set)
from .reports import ProbeReport, trend_direction

#: pi * sqrt(2/3), the growth constant of the unrestricted counts.
C0 = math.pi * math.sqrt(2.0 / 3.0)


def hardy_ramanujan_constant() -> float:
    return C0


# ---------------------------------------------------------------------------
# Ratio series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthSeries:
    """r(n) sampled on a grid; None where the count is 0 (log undefined)."""

    spec: PartSetSpec
    grid: tuple[int, ...]
    ratios: tuple[Optional[float], ...]

    def to_csv_rows(self):
        rows = [["n", "ratio"]]
        rows.extend([n, "" if r is None else r]
                    for n, r in zip(self.grid, self.ratios))
        return rows

    def to_json_obj(self):
        return {
            "set": str(self.spec),
            "grid": list(self.grid),
            "ratios": list(self.ratios),
        }


def growth_ratio(count, n) -> Optional[float]:
    """log(count) / (C0 * sqrt(n)); None when count == 0.

    math.log accepts arbitrary-size Python integers directly (it extracts
    the exponent and mantissa without converting the whole number to
    float), so counts with thousands of digits are fine.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if count == 0:
        return None
    return math.log(count) / (C0 * math.sqrt(n))


def growth_ratio_series(table, grid) -> GrowthSeries:
    """Sample growth_ratio at the grid points, reading counts from `table`."""
    grid = tuple(int(n) for n in grid)
    for n in grid:
        if not 1 <= n <= table.limit:
            raise ValueError(f"grid point {n} outside table range [1, {table.limit}]")
    ratios = tuple(growth_ratio(table[n], n) for n in grid)
    return GrowthSeries(table.spec, grid, ratios)


# ---------------------------------------------------------------------------
# Finite sets: polynomial leading coefficient
# ---------------------------------------------------------------------------

class LeadingRatio(NamedTuple):
    exact: Fraction
    value: float


def finite_set_leading_ratio(table, n) -> LeadingRatio:
    """p_A(n) * (k-1)! * (product of parts) / n^(k-1), exactly.

    Defined for finite part sets with gcd 1 (k = number of parts); the
    ratio tends to 1 as n grows.  Sets with a common divisor d > 1 must be
    divided through by d first.
    """
    spec = table.spec
    if not isinstance(spec, (FiniteParts, FileParts)):
        raise ValueError(f"leading ratio needs a finite part set, got {spec}")
    parts = spec.parts
    g = math.gcd(*parts)
    if g != 1:
        raise ValueError(
            f"part set has common divisor {g}; normalize by the gcd first")
    if not 1 <= n <= table.limit:
        raise ValueError(f"n={n} outside table range [1, {table.limit}]")
    k = len(parts)
    product = math.prod(parts)
    exact = Fraction(table[n] * math.factorial(k - 1) * product, n ** (k - 1))
    return LeadingRatio(exact, float(exact))


# ---------------------------------------------------------------------------
# Probes
# ---------------------------------------------------------------------------

def _table_for(spec, limit, table):
    if table is not None:
        if table.limit < limit:
            raise ValueError(
                f"supplied table stops at {table.limit}, need {limit}")
        return table
    if isinstance(spec, AllParts):
        # the recurrence is O(limit^1.5); the coin DP would be O(limit^2)
        return pentagonal_table(limit)
    return partition_table(spec, limit)


def density_growth_probe(spec, grid, *, lower_density, upper_density,
                         band=None, rel_tol=0.10, table=None) -> ProbeReport:
    """Judge the tail of r(n) against the density-derived band.

    Quantitative mode (upper density > 0): the default band is
    [(1 - rel_tol) * sqrt(alpha), min(1, (1 + rel_tol) * sqrt(beta))] and
    the probe passes when every tail sample (last third of the grid) lies
    inside it.  The cap at 1 is sound: every count is at most the
    unrestricted count, which stays below exp(C0 * sqrt(n)).

    Zero-density mode (upper density == 0): r(n) should decay, so with no
    explicit band the probe instead demands positive tail samples and a
    strictly decreasing trend across the whole grid.

    Sets with a common divisor d > 1 are rejected: divide through by d
    and probe the normalized set.
    """
    grid = tuple(int(n) for n in grid)
    if not grid or any(b <= a for a, b in zip(grid, grid[1:])) or grid[0] < 1:
        raise ValueError(f"grid must be strictly increasing and >= 1: {grid}")
    alpha = float(lower_density)
    beta = float(upper_density)
    if not 0.0 <= alpha <= beta <= 1.0:
        raise ValueError(
            f"need 0 <= lower <= upper <= 1, got {lower_density}, {upper_density}")
    limit = grid[-1]
    g = gcd_of_set(spec, limit)
    if g.value != 1:
        raise ValueError(
            f"set has common divisor {g.value}; normalize by the gcd and "
            f"probe the divided-through set")
    tab = _table_for(spec, limit, table)
    series = growth_ratio_series(tab, grid)
    values = series.ratios
    tail = values[-max(1, len(values) // 3):]
    direction = trend_direction([v for v in values if v is not None])

    if band is not None:
        lo, hi = float(band[0]), float(band[1])
    elif beta > 0.0:
        lo = (1.0 - rel_tol) * math.sqrt(alpha)
        hi = min(1.0, (1.0 + rel_tol) * math.sqrt(beta))
    else:
        lo = hi = None

    if lo is not None:
        passed = all(v is not None and lo <= v <= hi for v in tail)
    else:
        # decay regime: demand positive samples that strictly decrease
        passed = (all(v is not None and v > 0.0 for v in tail)
                  and direction == -1)

    finite_tail = [v for v in tail if v is not None]
    if band is not None:
        band_origin = "user"
    elif lo is not None:
        band_origin = "density-default"
    else:
        band_origin = "decay-qualitative"
    return ProbeReport(
        name="density-growth",
        xs=grid,
        values=values,
        target_low=lo,
        target_high=hi,
        passed=passed,
        tail_min=min(finite_tail) if finite_tail else math.nan,
        tail_max=max(finite_tail) if finite_tail else math.nan,
        direction=direction,
        meta={
            "set": str(spec),
            "lower_density": float(lower_density),
            "upper_density": float(upper_density),
            "sqrt_lower_target": math.sqrt(alpha),
            "sqrt_upper_target": math.sqrt(beta),
            "band_origin": band_origin,
            "band_note": "band widths are finite-scale calibration choices; "
                         "the limit statements fix no tolerance",
        },
    )


def arithmetic_progression_probe(modulus, residues, grid, *, band=None,
                                 rel_tol=0.10, table=None) -> ProbeReport:
    """Probe r(n) -> sqrt(l/m) for l residue classes mod m.

    Requires gcd(r_1, ..., r_l, m) = 1; otherwise the set has a common
    divisor and the target does not apply, so the offending gcd is
    reported as a witness.
    """
    spec = ResidueParts(modulus, tuple(residues))
    g = math.gcd(*spec.residues, spec.modulus)
    if g != 1:
        raise ValueError(
            f"need gcd(residues..., modulus) = 1; witness: gcd = {g} "
            f"for {spec}")
    density = Fraction(len(spec.residues), spec.modulus)
    report = density_growth_probe(
        spec, grid, lower_density=density, upper_density=density,
        band=band, rel_tol=rel_tol, table=table)
    meta = dict(report.meta)
    meta.update({
        "probe_target": math.sqrt(density),
        "modulus": modulus,
        "residues": list(spec.residues),
    })
    return ProbeReport(
        name="arithmetic-progression",
        xs=report.xs,
        values=report.values,
        target_low=report.target_low,
        target_high=report.target_high,
        passed=report.passed,
        tail_min=report.tail_min,
        tail_max=report.tail_max,
        direction=report.direction,
        meta=meta,
    )
