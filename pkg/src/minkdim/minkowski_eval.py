"""Exact evaluation of the Minkowski question-mark function.

On a continued fraction x = [0; a1, a2, ...] the function is the alternating
dyadic series

    ?(x) = 2^(1-a1) - 2^(1-(a1+a2)) + 2^(1-(a1+a2+a3)) - ...

It maps (0, 1] onto (0, 1] monotonically, sending rationals (finite words) to
dyadic rationals m/2^e and eventually periodic expansions to rationals.
Evaluation here is exact: finite words produce `DyadicRational`, periodic
expansions produce `fractions.Fraction` via closed-form geometric summation,
and digit prefixes produce certified `DyadicInterval` enclosures from the
alternating-series bracket.  Floating point never enters; the sup/inf
identities downstream hold bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Sequence

from .cf_core import ContinuedFraction, _checked_digits


@total_ordering
@dataclass(frozen=True)
class DyadicRational:
    """Exact mantissa / 2^exponent with exponent >= 0, stored reduced.

    Reduced means the mantissa is odd, or zero with exponent zero, so equal
    values compare equal field-by-field.
    """

    mantissa: int
    exponent: int = 0

    def __post_init__(self):
        m, e = int(self.mantissa), int(self.exponent)
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if m == 0:
            e = 0
        else:
            # (m & -m).bit_length() - 1 counts trailing zero bits, sign-safe
            shift = min(e, (m & -m).bit_length() - 1)
            m >>= shift
            e -= shift
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "DyadicRational":
        den = fr.denominator
        e = den.bit_length() - 1
        if den != 1 << e:
            raise ValueError(f"{fr} is not dyadic")
        return cls(fr.numerator, e)

    def as_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.exponent)

    def __add__(self, other: "DyadicRational") -> "DyadicRational":
        e = max(self.exponent, other.exponent)
        m = (self.mantissa << (e - self.exponent)) + (
            other.mantissa << (e - other.exponent)
        )
        return DyadicRational(m, e)

    def __sub__(self, other: "DyadicRational") -> "DyadicRational":
        return self + (-other)

    def __neg__(self) -> "DyadicRational":
        return DyadicRational(-self.mantissa, self.exponent)

    def __lt__(self, other: "DyadicRational") -> bool:
        return (self.mantissa << other.exponent) < (other.mantissa << self.exponent)

    def __float__(self) -> float:
        return float(self.as_fraction())

    def __str__(self) -> str:
        return str(self.as_fraction())


@dataclass(frozen=True)
class DyadicInterval:
    """A closed interval with dyadic endpoints, lo <= hi."""

    lo: DyadicRational
    hi: DyadicRational

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError(f"interval needs lo <= hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> DyadicRational:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        """Closed containment; accepts DyadicRational, Fraction or int."""
        if isinstance(x, DyadicRational):
            x = x.as_fraction()
        return self.lo.as_fraction() <= x <= self.hi.as_fraction()

    def contains_interval(self, other: "DyadicInterval") -> bool:
        return not (other.lo < self.lo) and not (self.hi < other.hi)


def _word_value(word: Sequence[int]) -> DyadicRational:
    """Alternating sum over a digit word, as one exact dyadic value.

    With partial digit sums A_m, the value is
    sum_m (-1)^(m-1) 2^(1-A_m) = [sum_m (-1)^(m-1) 2^(1+A_n-A_m)] / 2^A_n.
    """
    total = sum(word)
    mantissa = 0
    running = 0
    for i, a in enumerate(word):
        running += a
        term = 1 << (1 + total - running)
        mantissa += -term if i % 2 else term
    return DyadicRational(mantissa, total)


def minkowski_finite(cf: ContinuedFraction) -> DyadicRational:
    """Exact value on a finite word; always lands in (0, 1].

    Both words naming the same rational give the same value, e.g.
    [0; 1, 1] and [0; 2] both map to 1/2.
    """
    if not cf.is_finite:
        raise ValueError("finite continued fraction required")
    return _word_value(cf.preperiod)


def minkowski_enclosure(prefix: Sequence[int]) -> DyadicInterval:
    """Certified interval containing ?(x) for every x starting with ``prefix``.

    The series alternates with strictly decreasing terms, so every
    continuation lands between the length-n partial sum S_n and
    S_n + (-1)^n 2^-(a1+...+an), the partial sum shifted by a signed bound on
    the whole remaining tail.  Width is exactly 2^-(a1+...+an).
    """
    word = _checked_digits(prefix)
    if not word:
        raise ValueError("prefix must be nonempty")
    s_n = _word_value(word)
    tail_bound = DyadicRational(1, sum(word))
    if len(word) % 2 == 0:
        return DyadicInterval(s_n, s_n + tail_bound)
    return DyadicInterval(s_n - tail_bound, s_n)


def minkowski_periodic(cf: ContinuedFraction) -> Fraction:
    """Exact rational value on an eventually periodic expansion.

    The repeating block is summed as a geometric series.  A block of odd
    length flips the sign of every term on each repeat, so it is doubled
    first; with head value H over the m preperiod digits (digit sum A),
    block value C and block digit sum B, the series collapses to

        H + (-1)^m 2^-A * C / (1 - 2^-B).
    """
    if cf.is_finite:
        raise ValueError("periodic continued fraction required")
    block = cf.period if len(cf.period) % 2 == 0 else cf.period * 2
    c = _word_value(block).as_fraction()
    tail = c / (1 - Fraction(1, 2 ** sum(block)))
    head = _word_value(cf.preperiod).as_fraction() if cf.preperiod else Fraction(0)
    sign = -1 if len(cf.preperiod) % 2 else 1
    return head + sign * tail / 2 ** sum(cf.preperiod)
