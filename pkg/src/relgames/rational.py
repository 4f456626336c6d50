"""Exact rational values and interval algebra.

Every quantity in the model (payoffs, relationship values, offers,
thresholds) is a `fractions.Fraction`.  Dominance and agreement
boundaries like 2/3 and 1/4 must compare bit-exactly, which rules out
floating point anywhere in core math.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_ZERO = Fraction(0)


class RationalFormatError(ValueError):
    """Raised for values that cannot be read as an exact rational."""


def parse_rational(value) -> Fraction:
    """Read an exact rational from an int, a Fraction, or a "p/q" / "n" string.

    Floats and decimal/scientific strings are rejected: silently
    converting them would hide rounding and break exact threshold
    comparisons downstream.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RationalFormatError(f"expected a rational value, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise RationalFormatError(
            f'float {value!r} is not allowed; write rationals as "p/q" or integer strings'
        )
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text or "E" in text:
            raise RationalFormatError(
                f'{value!r} looks like a float; write rationals as "p/q" or integer strings'
            )
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise RationalFormatError(f"cannot parse rational {value!r}: {exc}") from None
    raise RationalFormatError(
        f"expected a rational value, got {type(value).__name__}: {value!r}"
    )


def format_rational(value: Fraction) -> str:
    """Render a Fraction as "p/q", or plain "p" for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Interval:
    """A rational interval; ``None`` endpoints mean unbounded.

    Degenerate bounds normalize to one canonical empty interval so that
    equality behaves.
    """

    lo: Fraction | None = None
    hi: Fraction | None = None
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi or (self.lo == self.hi and (self.lo_open or self.hi_open)):
                object.__setattr__(self, "lo", _ZERO)
                object.__setattr__(self, "hi", _ZERO)
                object.__setattr__(self, "lo_open", True)
                object.__setattr__(self, "hi_open", True)

    @classmethod
    def all(cls) -> "Interval":
        return cls()

    @classmethod
    def empty(cls) -> "Interval":
        return cls(_ZERO, _ZERO, True, True)

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(Fraction(lo), Fraction(hi))

    @classmethod
    def open(cls, lo, hi) -> "Interval":
        return cls(Fraction(lo), Fraction(hi), True, True)

    @classmethod
    def at_least(cls, bound, strict: bool = False) -> "Interval":
        return cls(lo=Fraction(bound), lo_open=strict)

    @classmethod
    def at_most(cls, bound, strict: bool = False) -> "Interval":
        return cls(hi=Fraction(bound), hi_open=strict)

    @property
    def is_empty(self) -> bool:
        return (
            self.lo is not None
            and self.hi is not None
            and self.lo == self.hi
            and self.lo_open
            and self.hi_open
        )

    @property
    def bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def contains(self, x: Fraction) -> bool:
        if self.is_empty:
            return False
        if self.lo is not None and (x < self.lo or (x == self.lo and self.lo_open)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and self.hi_open)):
            return False
        return True

    def intersect(self, other: "Interval") -> "Interval":
        if self.is_empty or other.is_empty:
            return Interval.empty()
        if self.lo is None:
            lo, lo_open = other.lo, other.lo_open
        elif other.lo is None or self.lo > other.lo:
            lo, lo_open = self.lo, self.lo_open
        elif other.lo > self.lo:
            lo, lo_open = other.lo, other.lo_open
        else:
            lo, lo_open = self.lo, self.lo_open or other.lo_open
        if self.hi is None:
            hi, hi_open = other.hi, other.hi_open
        elif other.hi is None or self.hi < other.hi:
            hi, hi_open = self.hi, self.hi_open
        elif other.hi < self.hi:
            hi, hi_open = other.hi, other.hi_open
        else:
            hi, hi_open = self.hi, self.hi_open or other.hi_open
        return Interval(lo, hi, lo_open, hi_open)

    def midpoint(self) -> Fraction:
        if not self.bounded or self.is_empty:
            raise ValueError(f"no midpoint for {self}")
        return (self.lo + self.hi) / 2

    def __str__(self) -> str:
        if self.is_empty:
            return "(empty)"
        left = "(" if (self.lo is None or self.lo_open) else "["
        right = ")" if (self.hi is None or self.hi_open) else "]"
        lo = "-inf" if self.lo is None else format_rational(self.lo)
        hi = "inf" if self.hi is None else format_rational(self.hi)
        return f"{left}{lo}, {hi}{right}"


def linear_solution_set(const: Fraction, coeff: Fraction, strict: bool = False) -> Interval:
    """Solution set of ``const + coeff * r >= 0`` (or ``> 0`` when strict)."""
    if coeff == 0:
        satisfied = const > 0 if strict else const >= 0
        return Interval.all() if satisfied else Interval.empty()
    bound = -const / coeff
    if coeff > 0:
        return Interval(lo=bound, lo_open=strict)
    return Interval(hi=bound, hi_open=strict)


def intersect_all(intervals) -> Interval:
    result = Interval.all()
    for iv in intervals:
        result = result.intersect(iv)
    return result


def complement(interval: Interval) -> tuple[Interval, ...]:
    """Connected components of the real line outside ``interval``."""
    if interval.is_empty:
        return (Interval.all(),)
    parts = []
    if interval.lo is not None:
        parts.append(Interval(hi=interval.lo, hi_open=not interval.lo_open))
    if interval.hi is not None:
        parts.append(Interval(lo=interval.hi, lo_open=not interval.hi_open))
    return tuple(parts)


def hull(intervals) -> Interval:
    """Smallest single interval containing every given interval.

    Conservative for disconnected unions: points between components are
    included.
    """
    live = [iv for iv in intervals if not iv.is_empty]
    if not live:
        return Interval.empty()
    if any(iv.lo is None for iv in live):
        lo, lo_open = None, False
    else:
        lo = min(iv.lo for iv in live)
        lo_open = all(iv.lo_open for iv in live if iv.lo == lo)
    if any(iv.hi is None for iv in live):
        hi, hi_open = None, False
    else:
        hi = max(iv.hi for iv in live)
        hi_open = all(iv.hi_open for iv in live if iv.hi == hi)
    return Interval(lo, hi, lo_open, hi_open)


def sort_intervals(intervals) -> tuple[Interval, ...]:
    """Ascending by lower bound; unbounded-below first."""

    def key(iv: Interval):
        if iv.lo is None:
            return (0, _ZERO, False)
        return (1, iv.lo, iv.lo_open)

    return tuple(sorted((iv for iv in intervals if not iv.is_empty), key=key))
