"""Discrete bivariate window laws and dependence-ordering conditions.

A :class:`DiscreteJoint` is a finitely supported joint law of two windows
``X = (X_1, ..., X_d)`` and ``Y = (Y_1, ..., Y_d)``, stored as atoms over
the flat coordinate layout ``(x_1, ..., x_d, y_1, ..., y_d)``.

Position subsets select window positions, not flat coordinates: subset
``I`` of ``{1, ..., d}`` refers to the pairs ``(X_i, Y_i), i in I``, and a
point for ``I`` lists the x values of its positions in increasing position
order followed by the y values.

The module provides exact cdf/survival and conditional laws, exact pattern
dependence, independent products and mixtures for assembling laws from
head and tail parts, and :func:`check_theorem_conditions`, which sweeps
the conditional (variant A) or marginal (variant B) domination inequality
families that order pattern dependence of two laws.

The mixed comparisons in variant A (one law's window part conditioned on
the other law's values) are only well defined relative to a coupling of
the two laws on one space.  The checker models the common construction in
which some positions are literally shared between the laws: for shared
conditioning positions the mixed term reduces to the second law's own
conditional at the same value, and when all compared positions are shared
the two sides coincide and the family is trivially satisfied.  Shared
positions are auto-detected (identical pair marginals) unless given
explicitly.  Conditioning values that have zero mass on one side are
skipped and logged rather than treated as violations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    InvalidMixture,
    InvalidParameter,
    MassNotOne,
    ModelStructureError,
    NonFiniteInput,
    ZeroMassCondition,
)
from .patterns import (
    PatternDistribution,
    Pattern,
    cross_match_probability,
    dependence_from_terms,
    distribution_from_counts,
    pattern_of,
)

Point = tuple[float, ...]
AtomItems = Iterable[tuple[Sequence[float], float]]


@dataclass(frozen=True)
class DiscreteJoint:
    """Finitely supported joint law of paired windows of one order.

    ``atoms`` maps distinct points of length ``2 * order`` to positive
    probabilities summing to 1 within 1e-12.  Atoms are kept sorted by
    point, so equal laws have equal representations.
    """

    order: int
    atoms: tuple[tuple[Point, float], ...]

    def __init__(self, order: int, atoms: Mapping[Sequence[float], float] | AtomItems) -> None:
        order = int(order)
        if order < 1:
            raise ModelStructureError(f"order must be >= 1, got {order}")
        items = atoms.items() if isinstance(atoms, Mapping) else atoms
        cleaned: dict[Point, float] = {}
        for raw_point, raw_prob in items:
            point = tuple(float(v) for v in raw_point)
            prob = float(raw_prob)
            if len(point) != 2 * order:
                raise DimensionMismatch(
                    f"atom {point} has {len(point)} coordinates, expected {2 * order}"
                )
            if any(not math.isfinite(v) for v in point):
                raise NonFiniteInput(f"atom {point} has a non-finite coordinate")
            if not math.isfinite(prob) or prob <= 0.0:
                raise ModelStructureError(f"atom probability must be positive, got {prob!r}")
            if point in cleaned:
                raise ModelStructureError(f"duplicate atom {point}")
            cleaned[point] = prob
        if not cleaned:
            raise ModelStructureError("a law needs at least one atom")
        mass = math.fsum(cleaned.values())
        if abs(mass - 1.0) > 1e-12:
            raise MassNotOne(mass)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "atoms", tuple(sorted(cleaned.items())))

    @property
    def dimension(self) -> int:
        return 2 * self.order

    def as_dict(self) -> dict[Point, float]:
        return dict(self.atoms)

    def prob_of(self, point: Sequence[float]) -> float:
        pt = tuple(float(v) for v in point)
        return self.as_dict().get(pt, 0.0)


def _check_point(dist: DiscreteJoint, point: Sequence[float]) -> Point:
    pt = tuple(float(v) for v in point)
    if len(pt) != dist.dimension:
        raise DimensionMismatch(
            f"point has {len(pt)} coordinates, law needs {dist.dimension}"
        )
    if any(math.isnan(v) for v in pt):
        raise NonFiniteInput("point contains NaN")
    return pt


def cdf(dist: DiscreteJoint, point: Sequence[float]) -> float:
    """P(all coordinates <= point), exactly."""
    pt = _check_point(dist, point)
    return math.fsum(
        prob for atom, prob in dist.atoms if all(a <= t for a, t in zip(atom, pt))
    )


def survival(dist: DiscreteJoint, point: Sequence[float]) -> float:
    """P(all coordinates >= point), exactly.  Not ``1 - cdf`` beyond dimension 1."""
    pt = _check_point(dist, point)
    return math.fsum(
        prob for atom, prob in dist.atoms if all(a >= t for a, t in zip(atom, pt))
    )


def _check_subset(d: int, subset: Iterable[int], allow_empty: bool = False) -> tuple[int, ...]:
    positions = tuple(sorted(set(int(i) for i in subset)))
    if not positions and not allow_empty:
        raise InvalidParameter("position subset must be nonempty")
    if any(not 1 <= i <= d for i in positions):
        raise InvalidParameter(f"positions {positions} outside 1..{d}")
    return positions


def subset_coordinates(order: int, positions: Sequence[int]) -> list[int]:
    """Flat coordinate indices of a position subset: its x's, then its y's."""
    return [i - 1 for i in positions] + [order + i - 1 for i in positions]


def _project(point: Point, coords: Sequence[int]) -> Point:
    return tuple(point[c] for c in coords)


def marginal(dist: DiscreteJoint, subset: Iterable[int]) -> DiscreteJoint:
    """Joint law of the window pairs at the given positions."""
    positions = _check_subset(dist.order, subset)
    coords = subset_coordinates(dist.order, positions)
    out: dict[Point, float] = {}
    for atom, prob in dist.atoms:
        key = _project(atom, coords)
        out[key] = out.get(key, 0.0) + prob
    return DiscreteJoint(order=len(positions), atoms=out)


def conditional(dist: DiscreteJoint, subset: Iterable[int], given: Sequence[float]) -> DiscreteJoint:
    """Law of the complement positions given exact values at ``subset``.

    ``given`` lists x values of the subset positions in increasing position
    order, then the y values.  With an empty subset the law is returned
    unchanged.

    Raises:
        ZeroMassCondition: the conditioning event has probability zero.
    """
    positions = _check_subset(dist.order, subset, allow_empty=True)
    if not positions:
        return dist
    complement = tuple(i for i in range(1, dist.order + 1) if i not in positions)
    if not complement:
        raise InvalidParameter("cannot condition on every position")
    value = tuple(float(v) for v in given)
    if len(value) != 2 * len(positions):
        raise DimensionMismatch(
            f"conditioning point has {len(value)} coordinates, subset needs {2 * len(positions)}"
        )
    cond_coords = subset_coordinates(dist.order, positions)
    keep_coords = subset_coordinates(dist.order, complement)
    out: dict[Point, float] = {}
    mass = 0.0
    for atom, prob in dist.atoms:
        if _project(atom, cond_coords) != value:
            continue
        mass += prob
        key = _project(atom, keep_coords)
        out[key] = out.get(key, 0.0) + prob
    if mass <= 0.0:
        raise ZeroMassCondition(f"no mass at positions {positions} = {value}")
    scaled = {point: prob / mass for point, prob in out.items()}
    return DiscreteJoint(order=len(complement), atoms=scaled)


def conditional_cdf(
    dist: DiscreteJoint, subset: Iterable[int], given: Sequence[float], point: Sequence[float]
) -> float:
    """Conditional lower orthant probability of the complement positions."""
    return cdf(conditional(dist, subset, given), point)


def conditional_survival(
    dist: DiscreteJoint, subset: Iterable[int], given: Sequence[float], point: Sequence[float]
) -> float:
    """Conditional upper orthant probability of the complement positions."""
    return survival(conditional(dist, subset, given), point)


def _pattern_pairs(dist: DiscreteJoint) -> list[tuple[Pattern, Pattern, float]]:
    d = dist.order
    out = []
    for atom, prob in dist.atoms:
        out.append((pattern_of(atom[:d]), pattern_of(atom[d:]), prob))
    return out


def marginal_pattern_distribution_discrete(dist: DiscreteJoint, axis: str) -> PatternDistribution:
    """Exact pattern distribution of the X or Y window of a discrete law."""
    if axis not in ("x", "y"):
        raise ModelStructureError(f"axis must be 'x' or 'y', got {axis!r}")
    counts: dict[Pattern, float] = {}
    for pat_x, pat_y, prob in _pattern_pairs(dist):
        pat = pat_x if axis == "x" else pat_y
        counts[pat] = counts.get(pat, 0.0) + prob
    return distribution_from_counts(dist.order, counts)


def pattern_coincidence_discrete(dist: DiscreteJoint) -> float:
    """Exact probability that both windows show the same pattern."""
    return math.fsum(prob for pat_x, pat_y, prob in _pattern_pairs(dist) if pat_x == pat_y)


def exact_opd_discrete(dist: DiscreteJoint, tol: float = 1e-12) -> float:
    """Exact normalized pattern dependence of a discrete law.

    Raises:
        DegenerateDistribution: the independent-copy coincidence is 1, e.g.
            when both windows are almost surely in the same fixed pattern.
    """
    coincidence = pattern_coincidence_discrete(dist)
    px = marginal_pattern_distribution_discrete(dist, "x")
    py = marginal_pattern_distribution_discrete(dist, "y")
    return dependence_from_terms(coincidence, cross_match_probability(px, py), tol=tol)


def sample_discrete(dist: DiscreteJoint, n: int, seed: int) -> list[Point]:
    """Draw ``n`` atoms by probability; Philox-seeded like continuous sampling."""
    from .randomness import make_rng

    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    rng = make_rng(seed)
    probs = [prob for _, prob in dist.atoms]
    total = math.fsum(probs)
    idx = rng.choice(len(dist.atoms), size=n, p=[p / total for p in probs])
    return [dist.atoms[i][0] for i in idx]


def product_extend(head: DiscreteJoint, tail: DiscreteJoint) -> DiscreteJoint:
    """Independent concatenation: head positions first, then tail positions."""
    d1 = head.order
    d2 = tail.order
    out: dict[Point, float] = {}
    for hp, hprob in head.atoms:
        for tp, tprob in tail.atoms:
            point = hp[:d1] + tp[:d2] + hp[d1:] + tp[d2:]
            out[point] = out.get(point, 0.0) + hprob * tprob
    return DiscreteJoint(order=d1 + d2, atoms=out)


def mixture_from_conditionals(
    tail: DiscreteJoint, conditionals: Mapping[Sequence[float], DiscreteJoint]
) -> DiscreteJoint:
    """Joint law with tail marginal ``tail`` and per-tail-value head laws.

    ``conditionals`` maps every tail atom point to the conditional law of
    the head positions given that tail value.  Head positions come first
    in the result, as in :func:`product_extend`.

    Raises:
        InvalidMixture: the conditional keys do not match the tail support
            or the head laws disagree in order.
    """
    keyed = {tuple(float(v) for v in key): law for key, law in conditionals.items()}
    support = {point for point, _ in tail.atoms}
    if set(keyed) != support:
        missing = sorted(support - set(keyed))
        extra = sorted(set(keyed) - support)
        raise InvalidMixture(
            f"conditional keys do not match tail support (missing {missing}, extra {extra})"
        )
    orders = {law.order for law in keyed.values()}
    if len(orders) != 1:
        raise InvalidMixture(f"conditional head laws disagree in order: {sorted(orders)}")
    d1 = orders.pop()
    d2 = tail.order
    out: dict[Point, float] = {}
    for tp, weight in tail.atoms:
        for hp, hprob in keyed[tp].atoms:
            point = hp[:d1] + tp[:d2] + hp[d1:] + tp[d2:]
            out[point] = out.get(point, 0.0) + weight * hprob
    return DiscreteJoint(order=d1 + d2, atoms=out)


def shared_position_detect(dist: DiscreteJoint, dist_star: DiscreteJoint, tol: float = 1e-12) -> tuple[int, ...]:
    """Positions whose pair marginals (X_i, Y_i) agree in both laws.

    These are the positions a common construction can share verbatim; the
    detection is necessary for sharing but cannot see the underlying
    coupling, so explicit knowledge should be passed through when present.
    """
    shared = []
    for i in range(1, dist.order + 1):
        a = marginal(dist, (i,)).as_dict()
        b = marginal(dist_star, (i,)).as_dict()
        if set(a) == set(b) and all(abs(a[k] - b[k]) <= tol for k in a):
            shared.append(i)
    return tuple(shared)


@dataclass(frozen=True)
class ConditionViolation:
    """One broken inequality: an unstarred value exceeding the starred one.

    ``outer`` names the law whose values were conditioned on ("first",
    "second", or "none" for unconditional families), ``side`` is "cdf" or
    "survival".
    """

    subset: tuple[int, ...]
    side: str
    outer: str
    conditioning_point: Point | None
    evaluation_point: Point
    lhs: float
    rhs: float

    def to_dict(self) -> dict:
        return {
            "subset": list(self.subset),
            "side": self.side,
            "outer": self.outer,
            "conditioning_point": None
            if self.conditioning_point is None
            else list(self.conditioning_point),
            "evaluation_point": list(self.evaluation_point),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class ConditionSkip:
    """A conditioning combination that could not be evaluated."""

    subset: tuple[int, ...]
    outer: str
    conditioning_point: Point
    reason: str

    def to_dict(self) -> dict:
        return {
            "subset": list(self.subset),
            "outer": self.outer,
            "conditioning_point": list(self.conditioning_point),
            "reason": self.reason,
        }


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a sweep of one variant's inequality families."""

    variant: str
    holds: bool
    violations: tuple[ConditionViolation, ...]
    skipped: tuple[ConditionSkip, ...]
    shared_positions: tuple[int, ...]
    tol: float

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "holds": self.holds,
            "violations": [v.to_dict() for v in self.violations],
            "skipped": [s.to_dict() for s in self.skipped],
            "shared_positions": list(self.shared_positions),
            "tol": self.tol,
        }


def _coordinate_values(
    dist: DiscreteJoint, dist_star: DiscreteJoint, coord: int
) -> list[float]:
    values = {atom[coord] for atom, _ in dist.atoms}
    values |= {atom[coord] for atom, _ in dist_star.atoms}
    ordered = sorted(values)
    return [ordered[0] - 1.0] + ordered + [ordered[-1] + 1.0]


def evaluation_grid(
    dist: DiscreteJoint, dist_star: DiscreteJoint, positions: Sequence[int]
) -> list[list[float]]:
    """Per-coordinate evaluation values for the given positions.

    All coordinate values occurring in either law, extended by one sentinel
    below and above; step-function comparisons attain their extremes on
    this grid.
    """
    coords = subset_coordinates(dist.order, positions)
    return [_coordinate_values(dist, dist_star, c) for c in coords]


def _sweep_unconditional(
    dist: DiscreteJoint,
    dist_star: DiscreteJoint,
    subset: tuple[int, ...],
    complement: tuple[int, ...],
    tol: float,
    violations: list[ConditionViolation],
) -> None:
    law = marginal(dist, complement) if subset else dist
    law_star = marginal(dist_star, complement) if subset else dist_star
    grid = evaluation_grid(dist, dist_star, complement)
    for point in itertools.product(*grid):
        for side, fn in (("cdf", cdf), ("survival", survival)):
            lhs = fn(law, point)
            rhs = fn(law_star, point)
            if lhs > rhs + tol:
                violations.append(
                    ConditionViolation(
                        subset=subset,
                        side=side,
                        outer="none",
                        conditioning_point=None,
                        evaluation_point=point,
                        lhs=lhs,
                        rhs=rhs,
                    )
                )


def _sweep_conditional(
    dist: DiscreteJoint,
    dist_star: DiscreteJoint,
    subset: tuple[int, ...],
    complement: tuple[int, ...],
    shared: frozenset[int],
    tol: float,
    violations: list[ConditionViolation],
    skipped: list[ConditionSkip],
) -> None:
    if set(complement) <= shared:
        # The compared window parts are literally the same variables, so
        # both sides of every inequality in these families coincide.
        return
    grid = evaluation_grid(dist, dist_star, complement)
    for outer_name, outer, inner, outer_is_first in (
        ("first", dist, dist_star, True),
        ("second", dist_star, dist, False),
    ):
        for value, _ in marginal(outer, subset).atoms:
            own = conditional(outer, subset, value)
            try:
                mixed = conditional(inner, subset, value)
            except ZeroMassCondition:
                skipped.append(
                    ConditionSkip(
                        subset=subset,
                        outer=outer_name,
                        conditioning_point=value,
                        reason="conditioning value has zero mass in the other law",
                    )
                )
                continue
            # Orient so that lhs belongs to the first law, rhs to the second.
            lhs_law, rhs_law = (own, mixed) if outer_is_first else (mixed, own)
            for point in itertools.product(*grid):
                for side, fn in (("cdf", cdf), ("survival", survival)):
                    lhs = fn(lhs_law, point)
                    rhs = fn(rhs_law, point)
                    if lhs > rhs + tol:
                        violations.append(
                            ConditionViolation(
                                subset=subset,
                                side=side,
                                outer=outer_name,
                                conditioning_point=value,
                                evaluation_point=point,
                                lhs=lhs,
                                rhs=rhs,
                            )
                        )


def check_theorem_conditions(
    dist: DiscreteJoint,
    dist_star: DiscreteJoint,
    variant: str,
    tol: float = 1e-12,
    shared_positions: Iterable[int] | None = None,
) -> ConditionReport:
    """Sweep the inequality families that order pattern dependence.

    Variant "A" checks, for every nonempty proper position subset I and
    every positive-mass value of the subset variables, that the first
    law's conditional cdf and survival of the complement positions never
    exceed the second law's (see the module docstring for how the mixed
    terms are resolved through shared positions).  Variant "B" checks the
    unconditional domination of cdf and survival for every complement
    marginal, including the full joint (I empty).

    All families are evaluated on the sentinel-extended atom grid, which
    attains the extremes of the step functions involved, so ``holds`` is
    exact for the swept family up to ``tol``.
    """
    if dist.order != dist_star.order:
        raise DimensionMismatch(f"orders differ: {dist.order} vs {dist_star.order}")
    if variant not in ("A", "B"):
        raise InvalidParameter(f"variant must be 'A' or 'B', got {variant!r}")
    if tol < 0.0:
        raise InvalidParameter(f"tol must be >= 0, got {tol}")
    d = dist.order
    if shared_positions is None:
        shared = frozenset(shared_position_detect(dist, dist_star, tol=min(tol, 1e-12) or 1e-12))
    else:
        shared = frozenset(_check_subset(d, shared_positions, allow_empty=True))
    positions = range(1, d + 1)
    violations: list[ConditionViolation] = []
    skipped: list[ConditionSkip] = []
    for size in range(0, d):
        for subset in itertools.combinations(positions, size):
            if variant == "A" and not subset:
                continue
            complement = tuple(i for i in positions if i not in subset)
            if variant == "B":
                _sweep_unconditional(dist, dist_star, subset, complement, tol, violations)
            else:
                _sweep_conditional(
                    dist, dist_star, subset, complement, shared, tol, violations, skipped
                )
    return ConditionReport(
        variant=variant,
        holds=not violations,
        violations=tuple(violations),
        skipped=tuple(skipped),
        shared_positions=tuple(sorted(shared)),
        tol=tol,
    )
