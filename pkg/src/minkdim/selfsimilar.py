"""Closed-form geometry of Minkowski images of digit-restricted sets.

Fix a digit set K = {k1 < ... < kS} and push the set of all x with digits in
K through the Minkowski function.  The image is a compact self-similar
subset of (0, 1): fixing the first digit k maps the image onto an affine
copy of itself scaled by exactly 2^-k, because the set of possible series
tails looks the same (up to sign) after any fixed head -- its diameter does
not depend on the rank at which it is cut.  This module computes, all as
exact `fractions.Fraction`:

  * sup, inf and diameter of the full image set (hull extremes are attained
    by the periodic words alternating the smallest and largest digits);
  * the rank-n tail sets (sets of series remainders after n fixed digits)
    and their rank-independent diameter;
  * image cylinders: the exact hull of the image points with a given digit
    head, whose diameters contract by 2^-k per appended digit k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .cf_core import (
    DEFAULT_BUDGET,
    ContinuedFraction,
    DigitSet,
    RationalInterval,
    _checked_digits,
)
from .errors import BudgetExceededError
from .minkowski_eval import _word_value, minkowski_periodic


@dataclass(frozen=True)
class ImageCylinder:
    """One construction piece of the image set, with its exact hull."""

    word: tuple[int, ...]
    enclosure: RationalInterval

    @property
    def diameter(self) -> Fraction:
        return self.enclosure.length


def image_sup(K: DigitSet) -> Fraction:
    """Exact supremum of the image set: the value on [0; k1, kS, k1, kS, ...].

    The recursion ?(x) = 2^(1-a1) - 2^(-a1) ?(shift x) makes the greedy
    choice optimal at every rank for any S: the smallest digit maximizes
    2^-a1 (2 - m) for any continuation value m in (0, 1], and the
    continuation must then be minimal, and vice versa.  For S = 2 this
    collapses to 2 (2^k2 - 1) / (2^(k1+k2) - 1).
    """
    k1, ks = K.digits[0], K.digits[-1]
    return minkowski_periodic(ContinuedFraction((), (k1, ks)))


def image_inf(K: DigitSet) -> Fraction:
    """Exact infimum: the value on [0; kS, k1, kS, k1, ...].

    For S = 2 this is 2 (2^k1 - 1) / (2^(k1+k2) - 1).
    """
    k1, ks = K.digits[0], K.digits[-1]
    return minkowski_periodic(ContinuedFraction((), (ks, k1)))


def image_diameter(K: DigitSet) -> Fraction:
    """sup - inf; for S = 2 equal to 2 (2^k2 - 2^k1) / (2^(k1+k2) - 1)."""
    return image_sup(K) - image_inf(K)


def _check_rank(rank: int) -> None:
    if rank < 0:
        raise ValueError("rank must be nonnegative")


def tail_set_sup(K: DigitSet, rank: int = 0) -> Fraction:
    """Sup of the rank-n tail set.

    The rank-n tail set collects the series remainders
    (-1)^n (2^-b1 - 2^-(b1+b2) + ...) over digits b_i in K.  Up to the sign
    (-1)^n it is exactly half the image set, so only the parity of the rank
    matters.
    """
    _check_rank(rank)
    return image_sup(K) / 2 if rank % 2 == 0 else -image_inf(K) / 2


def tail_set_inf(K: DigitSet, rank: int = 0) -> Fraction:
    """Inf of the rank-n tail set; mirror of tail_set_sup."""
    _check_rank(rank)
    return image_inf(K) / 2 if rank % 2 == 0 else -image_sup(K) / 2


def tail_set_diameter(K: DigitSet, rank: int = 0) -> Fraction:
    """Diameter of the rank-n tail set: identical for every rank.

    For S = 2 it equals (2^k2 - 2^k1) / (2^(k1+k2) - 1), half the image
    diameter.  Rank independence is what makes the image exactly
    self-similar.
    """
    return tail_set_sup(K, rank) - tail_set_inf(K, rank)


def _hull(word: tuple[int, ...], sup0: Fraction, inf0: Fraction) -> ImageCylinder:
    # head + (-1)^n 2^-(sum word) * (full image set)
    head = _word_value(word).as_fraction() if word else Fraction(0)
    scale = Fraction(1, 2 ** sum(word))
    if len(word) % 2 == 0:
        lo, hi = head + scale * inf0, head + scale * sup0
    else:
        lo, hi = head - scale * sup0, head - scale * inf0
    return ImageCylinder(word, RationalInterval(lo, hi))


def image_cylinder(K: DigitSet, word: Sequence[int]) -> ImageCylinder:
    """Exact hull of the image points whose expansion starts with ``word``.

    The fixed head contributes its finite value; the remaining tails fill a
    copy of the full tail set scaled by 2^-(sum of word), so the hull
    endpoints are the head value plus/minus the scaled image extremes and
    the diameter is exactly 2^-(sum of word) times the image diameter.
    The empty word yields the hull of the whole image set.
    """
    w = _checked_digits(word)
    for d in w:
        if d not in K:
            raise ValueError(f"digit {d} is not in {K}")
    return _hull(w, image_sup(K), image_inf(K))


def enumerate_image_cylinders(
    K: DigitSet, depth: int, budget: int | None = None
) -> Iterator[ImageCylinder]:
    """All S^depth image cylinders at the given depth, lexicographic.

    Child enclosures are nested in their parents and siblings have disjoint
    interiors; the union at each depth covers the image set.  Depth 0 yields
    the single whole-image hull.  Budget violations raise at call time.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    limit = DEFAULT_BUDGET if budget is None else budget
    count = K.size**depth
    if count > limit:
        raise BudgetExceededError(count, limit)
    sup0, inf0 = image_sup(K), image_inf(K)
    return (_hull(word, sup0, inf0) for word in product(K.digits, repeat=depth))
