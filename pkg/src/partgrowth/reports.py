"""Report containers shared by the probe and check commands.

A probe evaluates a scale-dependent quantity on a finite grid and compares
the tail against a target band.  Nothing here proves a limit: the verdict
is "the finite-scale data sits inside / outside the band", and every
report says so in its metadata.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def frac_str(q) -> str:
    """Render a rational as 'numerator/denominator' (exact, JSON-safe)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def trend_direction(values) -> int:
    """+1 if strictly increasing, -1 if strictly decreasing, else 0."""
    ups = all(b > a for a, b in zip(values, values[1:]))
    downs = all(b < a for a, b in zip(values, values[1:]))
    if ups and not downs:
        return 1
    if downs and not ups:
        return -1
    return 0


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of one finite-scale probe.

    xs/values hold the sampled grid; target_low/target_high the admissible
    band; tail_min/tail_max the extremes over the tail portion actually
    judged; direction the strict trend over the whole grid (+1/-1/0).
    """

    name: str
    xs: tuple
    values: tuple
    target_low: float | None
    target_high: float | None
    passed: bool
    tail_min: float
    tail_max: float
    direction: int
    meta: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json_obj(self):
        obj = {
            "probe": self.name,
            "xs": [_json_scalar(x) for x in self.xs],
            "values": [_json_scalar(v) for v in self.values],
            "band": [self.target_low, self.target_high],
            "tail_min": self.tail_min,
            "tail_max": self.tail_max,
            "direction": self.direction,
            "passed": self.passed,
            "note": "finite-scale sample; band judgement is not a limit claim",
        }
        obj.update(self.meta)
        return obj

    def to_csv_rows(self):
        rows = [["x", "value"]]
        for x, v in zip(self.xs, self.values):
            rows.append([_json_scalar(x), _json_scalar(v)])
        return rows


def _json_scalar(v):
    """Values safe for JSON: big ints become decimal strings, rationals n/d."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, Fraction):
        return frac_str(v)
    if isinstance(v, int):
        return v if abs(v) <= 2**53 else str(v)
    return v
