"""Logarithm of the partition product and its coefficient arithmetic.

The product F(x) = prod_{a in A} 1/(1 - x^a) generates the partition
counts of a part set A.  Its logarithm expands as a power series whose
coefficient at x^l collects 1/k for every way l = a*k with a in A:

    log F(x) = sum_l b_l x^l,   b_l = sum_{a in A, k >= 1, a k = l} 1/k.

Two exact identities tie the prefix sums S(n) = b_1 + ... + b_n to the
counting function A(x) of the set:

    S(n) = sum_{k=1}^{n} (1/k) * A(n // k)              (divisor sum)
    A(n) = sum_{k=1}^{n} (mu(k)/k) * S(n // k)          (Mobius inversion)

Everything on this side is exact rational arithmetic.  Internally the
series carries a cleared-denominator form over D = lcm(1..limit) so the
inversion runs on plain integers with quotient blocking; results are
reduced back to Fractions at the end.

log_gf evaluates log F(x) in floating point for 0 < x < 1 with a proven
truncation bound, and the two probes compare (1-x) log F(x) and S(n)/n
against their common limit pi^2 * density / 6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .partsets import (FileParts, FiniteParts, PartSetSpec, counting_function,
                       enumerate_parts, primes_upto)
from .reports import ProbeReport, trend_direction

PI2_OVER_6 = math.pi * math.pi / 6.0


def abelian_density_target(density) -> float:
    """Limit of (1-x) log F(x) and of S(n)/n for a set of natural density d."""
    return PI2_OVER_6 * float(density)


@dataclass(frozen=True)
class MobiusTable:
    """mu(0..limit) as a tuple; mu(0) is stored as 0 by convention."""

    limit: int
    values: tuple[int, ...]

    def __getitem__(self, n) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(f"n={n} outside sieve range [1, {self.limit}]")
        return self.values[n]


def mobius_sieve(limit) -> MobiusTable:
    """Sieve mu(1..limit): flip sign per prime factor, zero square multiples."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    mu = [1] * (limit + 1)
    mu[0] = 0
    for p in primes_upto(limit):
        for m in range(p, limit + 1, p):
            mu[m] = -mu[m]
        pp = p * p
        for m in range(pp, limit + 1, pp):
            mu[m] = 0
    return MobiusTable(limit=limit, values=tuple(mu))


@lru_cache(maxsize=256)
def _lcm_upto(n) -> int:
    """lcm(1, 2, ..., n) as a product of maximal prime powers."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    factors = []
    for p in primes_upto(n):
        q = p
        while q * p <= n:
            q *= p
        factors.append(q)
    return math.prod(factors)


# ---------------------------------------------------------------------------
# Coefficient series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientSeries:
    """b_1..b_limit of log F for one part set, as exact rationals.

    coeffs is indexed 0..limit with coeffs[0] = 0; sums holds the running
    prefix totals S(0..limit).
    """

    spec: PartSetSpec
    limit: int
    coeffs: tuple[Fraction, ...]

    @cached_property
    def sums(self) -> tuple[Fraction, ...]:
        acc = Fraction(0)
        out = []
        for c in self.coeffs:
            acc += c
            out.append(acc)
        return tuple(out)

    @cached_property
    def _cleared(self):
        """(D, S*D as ints, prefix of mu(k) * D // k) with D = lcm(1..limit).

        Every b_l is a sum of reciprocals 1/k with k <= limit, so D clears
        all denominators and the inversion can run on integers.
        """
        D = _lcm_upto(max(self.limit, 1))
        scaled = tuple((D // s.denominator) * s.numerator for s in self.sums)
        mu = mobius_sieve(self.limit).values
        weighted = [0]
        acc = 0
        for k in range(1, self.limit + 1):
            m = mu[k]
            if m:
                acc += m * (D // k)
            weighted.append(acc)
        return D, scaled, tuple(weighted)

    def to_csv_rows(self):
        from .reports import frac_str
        rows = [["l", "coeff", "prefix_sum"]]
        for l in range(1, self.limit + 1):
            rows.append([l, frac_str(self.coeffs[l]), frac_str(self.sums[l])])
        return rows

    def to_json_obj(self):
        from .reports import frac_str
        return {
            "set": str(self.spec),
            "limit": self.limit,
            "coeffs": [frac_str(c) for c in self.coeffs[1:]],
            "prefix_sums": [frac_str(s) for s in self.sums[1:]],
        }


def log_gf_coefficients(spec, limit) -> CoefficientSeries:
    """Exact b_1..b_limit: each member a contributes 1/k at position a*k."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    coeffs = [Fraction(0)] * (limit + 1)
    recip = [None] + [Fraction(1, k) for k in range(1, limit + 1)]
    for a in enumerate_parts(spec, limit):
        for k in range(1, limit // a + 1):
            coeffs[a * k] += recip[k]
    return CoefficientSeries(spec=spec, limit=limit, coeffs=tuple(coeffs))


def sums_via_counting(spec, n) -> Fraction:
    """S(n) evaluated through the divisor-sum identity, exactly.

    Clears denominators with D = lcm(1..n):
    S(n) = (1/D) * sum_k (D // k) * A(n // k), which needs only integer
    work per term and one reduction at the end.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return Fraction(0)
    D = _lcm_upto(n)
    total = 0
    for k in range(1, n + 1):
        count = counting_function(spec, n // k)
        if count:
            total += (D // k) * count
    return Fraction(total, D)


def mobius_invert_sums(series, n) -> Fraction:
    """Recover A(n) from the prefix sums of `series` by Mobius inversion.

    Exact: equals counting_function(series.spec, n) whenever n is within
    the series limit.  Runs on the cleared-denominator form, blocking
    over the O(sqrt(n)) distinct values of n // k.
    """
    if not 1 <= n <= series.limit:
        raise ValueError(f"n={n} outside series range [1, {series.limit}]")
    D, scaled, weighted = series._cleared
    total = 0
    k = 1
    while k <= n:
        v = n // k
        k2 = n // v
        total += scaled[v] * (weighted[k2] - weighted[k - 1])
        k = k2 + 1
    return Fraction(total, D * D)


# ---------------------------------------------------------------------------
# Float evaluation of log F on (0, 1)
# ---------------------------------------------------------------------------

def _neg_log_one_minus_exp(w) -> float:
    """-log(1 - e^(-w)) for w > 0, accurate in both regimes."""
    if w > math.log(2.0):
        return -math.log1p(-math.exp(-w))
    return -math.log(-math.expm1(-w))


def _tail_cutoff(x, tail_tol) -> int:
    """Smallest C with x^(C+1) / (1-x)^2 <= tail_tol.

    Each dropped term -log(1 - x^a) is at most x^a / (1-x), and the
    geometric tail past C sums to x^(C+1) / (1-x), giving the bound.
    Comparisons run in log space so nothing underflows.
    """
    t = -math.log1p(x - 1.0)          # -log x, accurate near x = 1
    log_rhs = math.log(tail_tol) + 2.0 * math.log1p(-x)
    c = max(0, math.ceil(-log_rhs / t) - 1)
    while -(c + 1) * t > log_rhs:     # float-guard: enlarge until bound holds
        c += 1
    while c > 0 and -c * t <= log_rhs:
        c -= 1
    return c


def log_gf(spec, x, *, tail_tol=1e-9) -> float:
    """log F(x) = sum_{a in A} -log(1 - x^a) for 0 < x < 1.

    Finite sets are summed in full (tail_tol may be 0).  Infinite sets
    are truncated at _tail_cutoff(x, tail_tol), so the result is within
    tail_tol of the true value before rounding; terms are evaluated with
    expm1/log1p branches and accumulated with math.fsum, keeping the
    rounding error near one ulp.
    """
    x = float(x)
    if not 0.0 < x < 1.0:
        raise ValueError(f"x must lie in (0, 1), got {x}")
    t = -math.log1p(x - 1.0)
    if isinstance(spec, (FiniteParts, FileParts)):
        if tail_tol < 0:
            raise ValueError(f"tail_tol must be >= 0, got {tail_tol}")
        parts = spec.parts
    else:
        if tail_tol <= 0:
            raise ValueError(
                f"tail_tol must be > 0 for an infinite set, got {tail_tol}")
        parts = enumerate_parts(spec, _tail_cutoff(x, tail_tol))
    return math.fsum(_neg_log_one_minus_exp(a * t) for a in parts)


# ---------------------------------------------------------------------------
# Probes
# ---------------------------------------------------------------------------

def abelian_probe(spec, density, x_grid, *, rel_tol=0.02, tail_tol=1e-9,
                  band=None) -> ProbeReport:
    """Sample (1-x) log F(x) on an x-grid rising toward 1.

    For a set of natural density d the quantity tends to pi^2 d / 6; the
    probe passes when the tail samples (last third of the grid) land in
    the band, by default the target widened by rel_tol either way.  A
    zero target (density 0, e.g. any finite set) turns rel_tol into an
    absolute ceiling: band [0, rel_tol].
    """
    xs = tuple(float(x) for x in x_grid)
    if not xs or any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError(f"x grid must be strictly increasing: {xs}")
    if not all(0.0 < x < 1.0 for x in xs):
        raise ValueError(f"x grid must lie in (0, 1): {xs}")
    target = abelian_density_target(density)
    if band is not None:
        lo, hi = float(band[0]), float(band[1])
    elif target > 0.0:
        lo = target * (1.0 - rel_tol)
        hi = target * (1.0 + rel_tol)
    else:
        lo, hi = 0.0, rel_tol
    values = tuple((1.0 - x) * log_gf(spec, x, tail_tol=tail_tol) for x in xs)
    tail = values[-max(1, len(values) // 3):]
    passed = all(lo <= v <= hi for v in tail)
    last_dev = (abs(values[-1] - target) / target if target > 0.0
                else abs(values[-1]))
    return ProbeReport(
        name="abelian",
        xs=xs,
        values=values,
        target_low=lo,
        target_high=hi,
        passed=passed,
        tail_min=min(tail),
        tail_max=max(tail),
        direction=trend_direction(values),
        meta={"set": str(spec), "density": float(density), "target": target,
              "last_point_deviation": last_dev, "tail_tol": tail_tol,
              "band_origin": "user" if band is not None else "target-default"},
    )


def tauberian_probe(spec, target_rate, n_grid, *, rel_tol=0.01) -> ProbeReport:
    """Sample S(n)/n on an n-grid against a claimed linear growth rate.

    S(n) is computed exactly through the divisor-sum identity and the
    ratio compared to target_rate (for density-d sets: pi^2 d / 6) with
    relative slack rel_tol on the tail samples.  target_rate 0 (finite
    sets: S(n) grows only logarithmically) reads rel_tol as an absolute
    ceiling instead, band [0, rel_tol].
    """
    grid = tuple(int(n) for n in n_grid)
    if not grid or any(b <= a for a, b in zip(grid, grid[1:])) or grid[0] < 1:
        raise ValueError(f"n grid must be strictly increasing and >= 1: {grid}")
    target = float(target_rate)
    if target < 0:
        raise ValueError(f"target rate must be >= 0, got {target_rate}")
    if target > 0:
        lo = target * (1.0 - rel_tol)
        hi = target * (1.0 + rel_tol)
    else:
        lo, hi = 0.0, rel_tol
    values = tuple(float(sums_via_counting(spec, n) / n) for n in grid)
    tail = values[-max(1, len(values) // 3):]
    passed = all(lo <= v <= hi for v in tail)
    return ProbeReport(
        name="tauberian",
        xs=grid,
        values=values,
        target_low=lo,
        target_high=hi,
        passed=passed,
        tail_min=min(tail),
        tail_max=max(tail),
        direction=trend_direction(values),
        meta={"set": str(spec), "target": target},
    )
