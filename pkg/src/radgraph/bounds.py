"""Closed-form radius bounds for connected graphs with degree and girth floors.

All bounds are exact rationals (``fractions.Fraction``); comparisons against
measured integer radii therefore never suffer float rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "BoundReport",
    "exact_radius_formula_g4",
    "upper_bound_radius",
    "cage_lower_bound",
]


@dataclass(frozen=True)
class BoundReport:
    """Verdict of one bound or witness check.

    ``passed`` is ``measured >= claimed`` for lower-bound style checks and
    ``measured <= claimed`` for upper bounds; which direction applies is part
    of the ``kind``.  ``details`` carries check-specific extras (for example
    the sphere sizes behind a witness count) and is not serialised.
    """

    kind: str
    claimed: object
    measured: int
    passed: bool
    witness: object = None
    details: dict = field(default_factory=dict, compare=False)

    def to_json_dict(self) -> dict:
        claimed = self.claimed
        if isinstance(claimed, Fraction):
            claimed = int(claimed) if claimed.denominator == 1 else float(claimed)
        witness = None
        if self.witness is not None:
            witness = list(getattr(self.witness, "vertices", self.witness))
        return {
            "kind": self.kind,
            "claimed": claimed,
            "measured": self.measured,
            "pass": self.passed,
            "witness": witness,
        }


def exact_radius_formula_g4(n: int, delta: int) -> int | None:
    """Exact maximum radius of a connected triangle-free graph with minimum
    degree delta on n vertices, or None when no such graph exists (n < 2*delta).

    Piecewise: radius 2 on n in {2d, 2d+1}, radius 3 for 2d+2 <= n < 4d, and
    for n >= 4d the value is n/delta - 1 when delta is odd and n = k*delta
    with k odd, else floor(n/delta).
    """
    if delta < 2:
        raise ValueError(f"minimum degree must be >= 2, got {delta}")
    if n < 2 * delta:
        return None
    if n <= 2 * delta + 1:
        return 2
    if n < 4 * delta:
        return 3
    if delta % 2 and n % delta == 0 and (n // delta) % 2:
        return n // delta - 1
    return n // delta


def upper_bound_radius(n: int, delta: int, g: int) -> Fraction:
    """Universal radius upper bound n*k / (2*delta*(delta-1)^(k-2)) + 3*k
    for girth at least g = 2k (k >= 2).  Exact rational."""
    if delta < 2:
        raise ValueError(f"minimum degree must be >= 2, got {delta}")
    if g % 2:
        raise ValueError(f"bound applies to even girth only, got {g}")
    if g < 4:
        raise ValueError(f"girth must be at least 4, got {g}")
    k = g // 2
    return Fraction(n * k, 2 * delta * (delta - 1) ** (k - 2)) + 3 * k


def cage_lower_bound(n: int, delta: int, g: int) -> Fraction:
    """Lower bound on the maximum radius achievable at girth g in {6, 8, 12}
    when delta - 1 is a prime power (realised by glued incidence graphs):

      g = 6:   3n / (2 (d^2 - d + 1)) - 3
      g = 8:   2n / (d^3 - 2 d^2 + 2 d) - 4
      g = 12:  3n / (((d-1)^3 + 1) (d^2 - d + 1)) - 6
    """
    if delta < 2:
        raise ValueError(f"minimum degree must be >= 2, got {delta}")
    d = delta
    if g == 6:
        return Fraction(3 * n, 2 * (d * d - d + 1)) - 3
    if g == 8:
        return Fraction(2 * n, d**3 - 2 * d * d + 2 * d) - 4
    if g == 12:
        return Fraction(3 * n, ((d - 1) ** 3 + 1) * (d * d - d + 1)) - 6
    raise ValueError(f"cage-based lower bounds exist for g in (6, 8, 12), got {g}")
