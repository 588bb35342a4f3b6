"""Ordinal patterns of fixed order and distributions over them.

A vector ``x = (x_1, ..., x_d)`` of reals is summarized by its ordinal
pattern: the tuple of ranks ``pi`` with ``pi_i < pi_j`` exactly when
``x_i < x_j``, or ``x_i == x_j`` and ``i < j``.  Ties are therefore broken
toward the earlier index, which makes the map total and deterministic; a
constant vector gets the identity pattern ``(1, 2, ..., d)``.

Patterns are represented directly as rank tuples, i.e. permutations of
``1..d``.  The supported orders are ``2 <= d <= 8``; the pattern count d!
stays small enough for exact enumeration throughout the package.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DegenerateDistribution,
    EmptyInput,
    IndexOutOfRange,
    InvalidPermutation,
    ModelStructureError,
    NonFiniteInput,
    OrderTooLarge,
    OrderTooSmall,
)

Pattern = tuple[int, ...]

MIN_ORDER = 2
MAX_ORDER = 8


def _check_order(d: int) -> None:
    if d < MIN_ORDER:
        raise OrderTooSmall(f"order {d} is below the minimum of {MIN_ORDER}")
    if d > MAX_ORDER:
        raise OrderTooLarge(f"order {d} exceeds the maximum of {MAX_ORDER}")


def pattern_of(values: Sequence[float]) -> Pattern:
    """Return the ordinal pattern (rank tuple) of a window of reals.

    Ranks run from 1 (smallest value) to d (largest); equal values are
    ranked in index order, so the earlier coordinate gets the smaller rank.

    Raises:
        OrderTooSmall / OrderTooLarge: window length outside [2, 8].
        NonFiniteInput: any entry is NaN or infinite.
    """
    d = len(values)
    _check_order(d)
    vals = [float(v) for v in values]
    for v in vals:
        if not math.isfinite(v):
            raise NonFiniteInput(f"window contains non-finite value {v!r}")
    if d == 2:
        return (1, 2) if vals[0] <= vals[1] else (2, 1)
    order = sorted(range(d), key=lambda i: (vals[i], i))
    ranks = [0] * d
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return tuple(ranks)


def enumerate_patterns(d: int) -> tuple[Pattern, ...]:
    """All d! patterns of order d in lexicographic order of their rank tuples."""
    _check_order(d)
    return tuple(itertools.permutations(range(1, d + 1)))


def _check_permutation(pattern: Sequence[int], d: int | None = None) -> Pattern:
    pat = tuple(pattern)
    n = len(pat)
    if d is not None and n != d:
        raise InvalidPermutation(f"expected length {d}, got {n}")
    _check_order(n)
    if sorted(pat) != list(range(1, n + 1)):
        raise InvalidPermutation(f"{pat!r} is not a permutation of 1..{n}")
    return pat


def pattern_index(pattern: Sequence[int]) -> int:
    """Lexicographic rank of a pattern among all patterns of its order.

    The identity pattern maps to 0 and the reversal ``(d, ..., 1)`` to
    ``d! - 1``.  Inverse of :func:`index_to_pattern`.
    """
    pat = _check_permutation(pattern)
    d = len(pat)
    index = 0
    for i in range(d):
        smaller_after = sum(1 for j in range(i + 1, d) if pat[j] < pat[i])
        index += smaller_after * math.factorial(d - 1 - i)
    return index


def index_to_pattern(index: int, d: int) -> Pattern:
    """Pattern of order d at the given lexicographic position.

    Raises:
        IndexOutOfRange: index outside [0, d! - 1].
    """
    _check_order(d)
    total = math.factorial(d)
    if not 0 <= index < total:
        raise IndexOutOfRange(f"index {index} outside [0, {total - 1}] for order {d}")
    remaining = list(range(1, d + 1))
    ranks: list[int] = []
    rem = index
    for i in range(d):
        f = math.factorial(d - 1 - i)
        pos, rem = divmod(rem, f)
        ranks.append(remaining.pop(pos))
    return tuple(ranks)


def permute_coordinates(pattern: Sequence[int], sigma: Sequence[int]) -> Pattern:
    """Pattern of the window re-read through coordinate positions ``sigma``.

    If ``pattern`` is the pattern of a distinct-valued window x, the result
    is the pattern of the window ``(x[sigma_1], ..., x[sigma_d])`` (sigma
    1-based).  With ties the composition is still well defined on ranks but
    need not agree with re-reading the raw window, because tie-breaking
    follows the new index order.
    """
    pat = _check_permutation(pattern)
    sig = _check_permutation(sigma, d=len(pat))
    return tuple(pat[s - 1] for s in sig)


@dataclass(frozen=True)
class PatternDistribution:
    """Probability distribution over all patterns of one order.

    ``probs[k]`` is the probability of ``index_to_pattern(k, order)``.  The
    entries must be nonnegative and sum to 1 within 1e-12.
    """

    order: int
    probs: tuple[float, ...]

    def __post_init__(self) -> None:
        _check_order(self.order)
        expected = math.factorial(self.order)
        if len(self.probs) != expected:
            raise ModelStructureError(
                f"order {self.order} needs {expected} probabilities, got {len(self.probs)}"
            )
        total = 0.0
        for p in self.probs:
            if not math.isfinite(p) or p < 0.0:
                raise ModelStructureError(f"invalid probability {p!r}")
            total += p
        if abs(total - 1.0) > 1e-12:
            raise ModelStructureError(f"probabilities sum to {total!r}, not 1")

    def prob_of(self, pattern: Sequence[int]) -> float:
        """Probability of one pattern."""
        return self.probs[pattern_index(pattern)]

    def as_dict(self) -> dict[Pattern, float]:
        """Mapping from pattern to probability, in lexicographic order."""
        pats = enumerate_patterns(self.order)
        return {pat: p for pat, p in zip(pats, self.probs)}


def distribution_from_counts(order: int, counts: dict[Pattern, float]) -> PatternDistribution:
    """Normalize nonnegative pattern weights into a :class:`PatternDistribution`.

    Raises:
        EmptyInput: all weights are zero or the mapping is empty.
    """
    _check_order(order)
    total = math.fsum(counts.values())
    if not counts or total <= 0.0:
        raise EmptyInput("no pattern weight to normalize")
    probs = [0.0] * math.factorial(order)
    for pat, c in counts.items():
        probs[pattern_index(pat)] = c / total
    return PatternDistribution(order=order, probs=tuple(probs))


def cross_match_probability(p: PatternDistribution, q: PatternDistribution) -> float:
    """Probability that independent draws from p and q show the same pattern."""
    if p.order != q.order:
        raise InvalidPermutation(f"orders differ: {p.order} vs {q.order}")
    return math.fsum(a * b for a, b in zip(p.probs, q.probs))


def dependence_from_terms(coincidence: float, cross_term: float, tol: float = 1e-12) -> float:
    """Normalized pattern dependence from its two defining probabilities.

    Computes ``(coincidence - cross_term) / (1 - cross_term)``, the excess of
    observed pattern coincidence over the independence baseline, rescaled so
    that perfect coincidence gives 1.

    Raises:
        DegenerateDistribution: the baseline coincidence is 1 within tol, so
            the normalization is undefined.
    """
    denom = 1.0 - cross_term
    if abs(denom) <= tol:
        raise DegenerateDistribution(
            "independent-copy coincidence is 1; pattern dependence is undefined"
        )
    return (coincidence - cross_term) / denom


def patterns_equal_fraction(a: Iterable[Pattern], b: Iterable[Pattern]) -> float:
    """Fraction of positions where two equal-length pattern sequences agree."""
    xs = list(a)
    ys = list(b)
    if len(xs) != len(ys):
        raise InvalidPermutation(f"sequence lengths differ: {len(xs)} vs {len(ys)}")
    if not xs:
        raise EmptyInput("pattern sequences are empty")
    hits = sum(1 for u, v in zip(xs, ys) if u == v)
    return hits / len(xs)
