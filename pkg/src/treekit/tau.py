"""Certified rational enclosures of tau, the real root of x**3 - x**2 - 3.

Every decision made here (``tau**k >= X`` and friends) is settled by exact
``Fraction`` comparisons; the interval is bisected until the answer is
forced. Since tau is an irrational cubic, ``tau**k`` is never rational for
``k >= 1`` and refinement always terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def cubic(x: Fraction) -> Fraction:
    return x * x * x - x * x - 3


@dataclass(frozen=True)
class TauInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not (lo < hi and cubic(lo) < 0 < cubic(hi)):
            raise ValueError(f"[{lo}, {hi}] does not bracket tau")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def bisect(self) -> "TauInterval":
        mid = (self.lo + self.hi) / 2
        # the cubic is increasing on [1, 2], and mid is rational so f(mid) != 0
        if cubic(mid) < 0:
            return TauInterval(mid, self.hi)
        return TauInterval(self.lo, mid)

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


INITIAL = TauInterval(Fraction(1), Fraction(2))


def tau_interval(width_bound, start: TauInterval | None = None) -> TauInterval:
    """Bisect from ``[1, 2]`` (or ``start``) until ``hi - lo <= width_bound``."""
    width_bound = Fraction(width_bound)
    if width_bound <= 0:
        raise ValueError("width bound must be positive")
    iv = start or INITIAL
    while iv.width > width_bound:
        iv = iv.bisect()
    return iv


def power_at_least(k: int, x, iv: TauInterval | None = None) -> tuple[bool, TauInterval]:
    """Decide ``tau**k >= x`` exactly; returns the verdict and the interval that settled it."""
    x = Fraction(x)
    iv = iv or INITIAL
    if k < 0:
        raise ValueError("negative exponent")
    if k == 0:
        return x <= 1, iv
    while True:
        if iv.lo**k >= x:
            return True, iv
        if iv.hi**k < x:
            return False, iv
        iv = iv.bisect()


def min_exponent(x, iv: TauInterval | None = None) -> tuple[int, TauInterval]:
    """Smallest integer ``k >= 0`` with ``tau**k >= x``, i.e. ``ceil(log_tau x)`` for ``x >= 1``."""
    k = 0
    iv = iv or INITIAL
    while True:
        ok, iv = power_at_least(k, x, iv)
        if ok:
            return k, iv
        k += 1


# Float approximation for human-readable report lines only; decisions never use it.
TAU_FLOAT = float(tau_interval(Fraction(1, 10**18)).lo)
