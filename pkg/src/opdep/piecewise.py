"""Piecewise-uniform joint densities with exact pattern probabilities.

A model describes the joint law of two windows ``X = (X_1, ..., X_d)`` and
``Y = (Y_1, ..., Y_d)`` as a finite sum of cells.  Each cell carries a
constant density value on a product region built from blocks:

* a ``free`` block places its coordinates independently and uniformly in
  ``[lo, hi]`` (as a region: the full hypercube),
* a ``chain`` block constrains its coordinates, in the listed order, to the
  simplex ``lo <= u_1 <= u_2 <= ... <= u_k <= hi``.

Coordinates are laid out as ``(x_1, ..., x_d, y_1, ..., y_d)``; block
``positions`` are 1-based window positions on their axis.  Within one cell
every block is a separate factor, so the X part and the Y part of a cell
are independent; dependence between the axes comes from mixing cells.

Interval endpoints are treated as closed throughout.  Because all laws are
absolutely continuous, boundary conventions never change a probability;
they only matter for region bookkeeping, and the overlap check below
compares interval interiors.

Pattern probabilities are exact: within a cell, the relative order of a
free block's coordinates is uniform over its k! arrangements, a chain
block's order is deterministic, and blocks with disjoint interval
interiors are almost surely ordered by position on the line.  Distribution
functions (cdf and survival, i.e. lower and upper orthant probabilities)
are exact in closed form for free blocks and chains of size 2; longer
chains have no closed form here and route to Monte Carlo.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

from .errors import (
    AmbiguousBlockOrder,
    DimensionMismatch,
    InvalidParameter,
    MassNotOne,
    ModelStructureError,
    NonFiniteInput,
    OverlappingCells,
    UnsupportedChainLength,
)
from .patterns import (
    Pattern,
    PatternDistribution,
    cross_match_probability,
    dependence_from_terms,
    enumerate_patterns,
)
from .randomness import make_rng

AXES = ("x", "y")
KINDS = ("chain", "free")


@dataclass(frozen=True)
class Block:
    """One factor of a cell: coordinates of a single axis on one interval.

    ``positions`` are 1-based window positions on ``axis``.  For a chain
    block the listed order is the almost-sure increasing order of the
    coordinate values.
    """

    axis: str
    positions: tuple[int, ...]
    lo: float
    hi: float
    kind: str

    def __post_init__(self) -> None:
        if self.axis not in AXES:
            raise ModelStructureError(f"axis must be one of {AXES}, got {self.axis!r}")
        if self.kind not in KINDS:
            raise ModelStructureError(f"kind must be one of {KINDS}, got {self.kind!r}")
        positions = tuple(int(p) for p in self.positions)
        if not positions:
            raise ModelStructureError("a block needs at least one position")
        if any(p < 1 for p in positions):
            raise ModelStructureError(f"positions must be >= 1, got {positions}")
        if len(set(positions)) != len(positions):
            raise ModelStructureError(f"duplicate positions in block: {positions}")
        lo = float(self.lo)
        hi = float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
            raise ModelStructureError(f"need finite lo < hi, got [{lo}, {hi}]")
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def size(self) -> int:
        return len(self.positions)

    @property
    def length(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class Cell:
    """A constant-density region: the product of its blocks' regions."""

    value: float
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        value = float(self.value)
        if not math.isfinite(value) or value <= 0.0:
            raise ModelStructureError(f"cell value must be finite and positive, got {value}")
        blocks = tuple(self.blocks)
        if not blocks:
            raise ModelStructureError("a cell needs at least one block")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "blocks", blocks)

    def axis_blocks(self, axis: str) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if b.axis == axis)


@dataclass(frozen=True)
class PiecewiseUniformDensity:
    """A joint density for windows of order ``order``, given as cells.

    Structural requirements checked on construction: for every cell and
    every axis, the blocks of that axis partition the positions 1..order.
    Mass and overlap properties are checked separately by :func:`validate`
    so that sub-probability building blocks can be represented too.
    """

    order: int
    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        order = int(self.order)
        if order < 1:
            raise ModelStructureError(f"order must be >= 1, got {order}")
        cells = tuple(self.cells)
        if not cells:
            raise ModelStructureError("a model needs at least one cell")
        full = set(range(1, order + 1))
        for ci, cell in enumerate(cells):
            for axis in AXES:
                seen: list[int] = []
                for block in cell.axis_blocks(axis):
                    seen.extend(block.positions)
                if sorted(seen) != sorted(full):
                    raise ModelStructureError(
                        f"cell {ci}: {axis} blocks cover positions {sorted(seen)}, "
                        f"expected exactly 1..{order}"
                    )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "cells", cells)

    @property
    def dimension(self) -> int:
        return 2 * self.order


class McResult(NamedTuple):
    """Monte Carlo estimate with its binomial standard error."""

    estimate: float
    std_error: float


@dataclass(frozen=True)
class PatternCoincidence:
    """Event: both windows show the same ordinal pattern."""


@dataclass(frozen=True)
class LowerOrthant:
    """Event: every coordinate is <= the corresponding point coordinate."""

    point: tuple[float, ...]


@dataclass(frozen=True)
class UpperOrthant:
    """Event: every coordinate is >= the corresponding point coordinate."""

    point: tuple[float, ...]


Event = Union[PatternCoincidence, LowerOrthant, UpperOrthant]


@dataclass(frozen=True)
class ConcordanceReport:
    """Outcome of a grid comparison of two models' distribution functions.

    ``cdf_dominated`` holds when ``F_A <= F_B + tol`` at every grid point,
    ``survival_dominated`` likewise for upper orthant probabilities; both
    together assert that model A precedes model B in the concordance order
    as far as the grid can see.  Violation maxima are exact over the full
    grid; ``witness_points`` keeps the worst offending points (largest
    violation first, capped at 20).
    """

    cdf_dominated: bool
    survival_dominated: bool
    max_cdf_violation: float
    max_survival_violation: float
    witness_points: tuple[tuple[float, ...], ...]
    tol: float

    @property
    def dominated(self) -> bool:
        return self.cdf_dominated and self.survival_dominated

    def to_dict(self) -> dict:
        return {
            "cdf_dominated": self.cdf_dominated,
            "survival_dominated": self.survival_dominated,
            "max_cdf_violation": self.max_cdf_violation,
            "max_survival_violation": self.max_survival_violation,
            "witness_points": [list(p) for p in self.witness_points],
            "tol": self.tol,
        }


def coordinate_index(order: int, axis: str, position: int) -> int:
    """Index of window position ``position`` of ``axis`` in the flat layout."""
    if axis not in AXES:
        raise ModelStructureError(f"axis must be one of {AXES}, got {axis!r}")
    if not 1 <= position <= order:
        raise ModelStructureError(f"position {position} outside 1..{order}")
    offset = 0 if axis == "x" else order
    return offset + position - 1


def cell_mass(cell: Cell) -> float:
    """Integral of the cell's constant density over its region.

    A free block of size k contributes ``length ** k``; a chain block
    contributes ``length ** k / k!`` (the simplex fraction of the cube).
    """
    mass = cell.value
    for block in cell.blocks:
        mass *= block.length ** block.size
        if block.kind == "chain":
            mass /= math.factorial(block.size)
    return mass


def total_mass(model: PiecewiseUniformDensity) -> float:
    return math.fsum(cell_mass(c) for c in model.cells)


def _cell_coordinate_intervals(cell: Cell, order: int) -> list[tuple[float, float]]:
    intervals: list[tuple[float, float] | None] = [None] * (2 * order)
    for block in cell.blocks:
        for p in block.positions:
            intervals[coordinate_index(order, block.axis, p)] = (block.lo, block.hi)
    return [iv for iv in intervals if iv is not None]


def _cell_strict_edges(cell: Cell, order: int) -> list[tuple[int, int]]:
    """Strict order constraints (u < v on coordinate indices) from chain blocks."""
    edges: list[tuple[int, int]] = []
    for block in cell.blocks:
        if block.kind != "chain" or block.size < 2:
            continue
        idx = [coordinate_index(order, block.axis, p) for p in block.positions]
        edges.extend(zip(idx, idx[1:]))
    return edges


def _order_constraints_feasible(
    bounds: Sequence[tuple[float, float]], edges: Iterable[tuple[int, int]]
) -> bool:
    """Whether open boxes plus strict order constraints admit any point.

    The constraint graph is propagated in topological order: the reachable
    infimum of a coordinate is the max of its own lower bound and those of
    its predecessors.  A directed cycle forces equality somewhere, which an
    open region cannot satisfy.
    """
    n = len(bounds)
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for u, v in edges:
        succ[u].append(v)
        indeg[v] += 1
    queue = [i for i in range(n) if indeg[i] == 0]
    lower = [b[0] for b in bounds]
    seen = 0
    while queue:
        u = queue.pop()
        seen += 1
        if lower[u] >= bounds[u][1]:
            return False
        for v in succ[u]:
            lower[v] = max(lower[v], lower[u])
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return seen == n


def cells_overlap(cell_a: Cell, cell_b: Cell, order: int) -> bool:
    """Whether two cells' regions intersect on a set of positive measure.

    The intersection is the product of per-coordinate interval overlaps cut
    by both cells' chain constraints; it has positive measure exactly when
    the open-interval intersections are all nonempty and the combined
    strict order constraints are feasible.
    """
    intervals_a = _cell_coordinate_intervals(cell_a, order)
    intervals_b = _cell_coordinate_intervals(cell_b, order)
    bounds: list[tuple[float, float]] = []
    for (lo_a, hi_a), (lo_b, hi_b) in zip(intervals_a, intervals_b):
        lo = max(lo_a, lo_b)
        hi = min(hi_a, hi_b)
        if lo >= hi:
            return False
        bounds.append((lo, hi))
    edges = _cell_strict_edges(cell_a, order) + _cell_strict_edges(cell_b, order)
    return _order_constraints_feasible(bounds, edges)


def validate(
    model: PiecewiseUniformDensity, expected_mass: float = 1.0, tol: float = 1e-12
) -> None:
    """Check that the model is a density of the expected total mass.

    Raises:
        MassNotOne: the total mass differs from ``expected_mass`` by more
            than ``tol``.
        OverlappingCells: two cells intersect with positive measure, so the
            cell decomposition double-counts density.
    """
    mass = total_mass(model)
    if abs(mass - expected_mass) > tol:
        raise MassNotOne(mass, expected_mass)
    for i, j in itertools.combinations(range(len(model.cells)), 2):
        if cells_overlap(model.cells[i], model.cells[j], model.order):
            raise OverlappingCells(i, j)


def _check_point(model: PiecewiseUniformDensity, point: Sequence[float]) -> tuple[float, ...]:
    pt = tuple(float(v) for v in point)
    if len(pt) != model.dimension:
        raise DimensionMismatch(
            f"point has {len(pt)} coordinates, model needs {model.dimension}"
        )
    if any(math.isnan(v) for v in pt):
        raise NonFiniteInput("point contains NaN")
    return pt


def _interval_lower(lo: float, hi: float, t: float) -> float:
    return max(0.0, min(t, hi) - lo)


def _chain2_lower(lo: float, hi: float, t1: float, t2: float) -> float:
    """Volume of {lo <= u <= v <= hi, u <= t1, v <= t2}."""
    beta = min(t2, hi)
    if beta <= lo:
        return 0.0
    a = min(max(t1, lo), beta)
    return (a - lo) * (a - lo) / 2.0 + (a - lo) * (beta - a)


def _block_orthant_volume(block: Block, thresholds: Sequence[float], lower: bool) -> float:
    """Volume of the block's region cut by per-coordinate half-lines.

    For the upper orthant the chain case uses the reflection
    ``u -> lo + hi - u``, which maps the simplex onto itself with the
    coordinate order reversed.
    """
    if block.kind == "free" or block.size == 1:
        vol = 1.0
        for t in thresholds:
            if lower:
                vol *= _interval_lower(block.lo, block.hi, t)
            else:
                vol *= _interval_lower(block.lo, block.hi, block.lo + block.hi - t)
            if vol == 0.0:
                return 0.0
        return vol
    if block.size == 2:
        t1, t2 = thresholds
        if lower:
            return _chain2_lower(block.lo, block.hi, t1, t2)
        return _chain2_lower(block.lo, block.hi, block.lo + block.hi - t2, block.lo + block.hi - t1)
    raise UnsupportedChainLength(
        f"no closed-form orthant volume for a chain of size {block.size}; use mc_probability"
    )


def _orthant_probability(
    model: PiecewiseUniformDensity, point: Sequence[float], lower: bool
) -> float:
    pt = _check_point(model, point)
    terms: list[float] = []
    for cell in model.cells:
        term = cell.value
        for block in cell.blocks:
            thresholds = [
                pt[coordinate_index(model.order, block.axis, p)] for p in block.positions
            ]
            term *= _block_orthant_volume(block, thresholds, lower)
            if term == 0.0:
                break
        terms.append(term)
    return math.fsum(terms)


def cdf(model: PiecewiseUniformDensity, point: Sequence[float]) -> float:
    """Lower orthant probability P(all coordinates <= point), exactly.

    ``point`` may contain infinities, so marginals are plain evaluations
    with the remaining coordinates at +inf.

    Raises:
        UnsupportedChainLength: the model has a chain block of size >= 3.
    """
    return _orthant_probability(model, point, lower=True)


def survival(model: PiecewiseUniformDensity, point: Sequence[float]) -> float:
    """Upper orthant probability P(all coordinates >= point), exactly.

    Note this is not ``1 - cdf`` beyond dimension one.
    """
    return _orthant_probability(model, point, lower=False)


def _ordered_axis_blocks(cell: Cell, axis: str) -> list[Block]:
    blocks = sorted(cell.axis_blocks(axis), key=lambda b: (b.lo, b.hi))
    for left, right in zip(blocks, blocks[1:]):
        if right.lo < left.hi:
            raise AmbiguousBlockOrder(
                f"{axis} blocks on [{left.lo}, {left.hi}] and [{right.lo}, {right.hi}] "
                "overlap, so their coordinates have no almost-sure order"
            )
    return blocks


def _axis_pattern_probability(cell: Cell, axis: str, pattern: Pattern) -> float:
    """Probability that the cell's ``axis`` window shows ``pattern``.

    Zero if the pattern contradicts a chain block's order or the
    almost-sure ordering between blocks on disjoint intervals; otherwise
    the product over free blocks of 1/k! for the one admissible
    within-block arrangement.
    """
    blocks = _ordered_axis_blocks(cell, axis)
    prev_max = 0
    prob = 1.0
    for block in blocks:
        ranks = [pattern[p - 1] for p in block.positions]
        if min(ranks) <= prev_max:
            return 0.0
        prev_max = max(ranks)
        if block.kind == "chain":
            if any(a >= b for a, b in zip(ranks, ranks[1:])):
                return 0.0
        elif block.size >= 2:
            prob /= math.factorial(block.size)
    return prob


def marginal_pattern_distribution(
    model: PiecewiseUniformDensity, axis: str
) -> PatternDistribution:
    """Exact pattern distribution of the X or Y window.

    For sub-probability models the result is normalized by total mass.

    Raises:
        AmbiguousBlockOrder: some cell has same-axis blocks on overlapping
            interval interiors.
        OrderTooSmall: the model order is below 2.
    """
    if axis not in AXES:
        raise ModelStructureError(f"axis must be one of {AXES}, got {axis!r}")
    patterns = enumerate_patterns(model.order)
    mass = total_mass(model)
    probs = []
    for pattern in patterns:
        acc = [
            cell_mass(cell) * _axis_pattern_probability(cell, axis, pattern)
            for cell in model.cells
        ]
        probs.append(math.fsum(acc) / mass)
    return PatternDistribution(order=model.order, probs=tuple(probs))


def joint_pattern_distribution(
    model: PiecewiseUniformDensity,
) -> dict[tuple[Pattern, Pattern], float]:
    """Exact joint law of (X pattern, Y pattern); zero entries are omitted.

    Within a cell the two axes are independent, so each cell contributes a
    product of its per-axis pattern probabilities, weighted by cell mass.
    """
    patterns = enumerate_patterns(model.order)
    mass = total_mass(model)
    joint: dict[tuple[Pattern, Pattern], float] = {}
    for cell in model.cells:
        weight = cell_mass(cell) / mass
        px = [(p, _axis_pattern_probability(cell, "x", p)) for p in patterns]
        py = [(p, _axis_pattern_probability(cell, "y", p)) for p in patterns]
        for pat_x, prob_x in px:
            if prob_x == 0.0:
                continue
            for pat_y, prob_y in py:
                if prob_y == 0.0:
                    continue
                key = (pat_x, pat_y)
                joint[key] = joint.get(key, 0.0) + weight * prob_x * prob_y
    return joint


def pattern_coincidence(model: PiecewiseUniformDensity) -> float:
    """Exact probability that both windows show the same pattern."""
    joint = joint_pattern_distribution(model)
    return math.fsum(prob for (a, b), prob in joint.items() if a == b)


def exact_opd(model: PiecewiseUniformDensity, tol: float = 1e-12) -> float:
    """Exact normalized pattern dependence of the model.

    Raises:
        DegenerateDistribution: both pattern marginals are the same point
            mass, so the coefficient is undefined.
    """
    coincidence = pattern_coincidence(model)
    px = marginal_pattern_distribution(model, "x")
    py = marginal_pattern_distribution(model, "y")
    cross = cross_match_probability(px, py)
    return dependence_from_terms(coincidence, cross, tol=tol)


def bounding_box(models: Sequence[PiecewiseUniformDensity]) -> list[tuple[float, float]]:
    """Per-coordinate hull of the models' cell intervals."""
    if not models:
        raise InvalidParameter("need at least one model")
    dim = models[0].dimension
    lo = [math.inf] * dim
    hi = [-math.inf] * dim
    for model in models:
        if model.dimension != dim:
            raise DimensionMismatch("models have different dimensions")
        for cell in model.cells:
            for block in cell.blocks:
                for p in block.positions:
                    c = coordinate_index(model.order, block.axis, p)
                    lo[c] = min(lo[c], block.lo)
                    hi[c] = max(hi[c], block.hi)
    return list(zip(lo, hi))


def default_grid(
    models: Sequence[PiecewiseUniformDensity],
    points_per_axis: int = 9,
    padding: float = 0.5,
) -> list[list[float]]:
    """Evenly spaced evaluation grid over the padded bounding box."""
    if points_per_axis < 2:
        raise InvalidParameter(f"points_per_axis must be >= 2, got {points_per_axis}")
    grid = []
    for lo, hi in bounding_box(models):
        a = lo - padding
        b = hi + padding
        n = points_per_axis
        grid.append([a + (b - a) * i / (n - 1) for i in range(n)])
    return grid


def concordance_check(
    model_a: PiecewiseUniformDensity,
    model_b: PiecewiseUniformDensity,
    grid: Sequence[Sequence[float]] | None = None,
    tol: float = 1e-12,
    points_per_axis: int = 9,
    padding: float = 0.5,
) -> ConcordanceReport:
    """Grid test of whether model A precedes model B in concordance order.

    At every grid point both the cdf and the survival function of A must
    not exceed B's by more than ``tol``.  With ``grid`` omitted, the grid
    is ``points_per_axis`` evenly spaced values per coordinate over the
    joint bounding box padded by ``padding``.
    """
    if model_a.dimension != model_b.dimension:
        raise DimensionMismatch("models have different dimensions")
    if grid is None:
        axes = default_grid([model_a, model_b], points_per_axis, padding)
    else:
        axes = [[float(v) for v in axis_values] for axis_values in grid]
        if len(axes) != model_a.dimension:
            raise DimensionMismatch(
                f"grid has {len(axes)} axes, models need {model_a.dimension}"
            )
        if any(not axis for axis in axes):
            raise InvalidParameter("every grid axis needs at least one value")
    max_cdf = 0.0
    max_surv = 0.0
    violators: list[tuple[float, tuple[float, ...]]] = []
    for point in itertools.product(*axes):
        v_cdf = cdf(model_a, point) - cdf(model_b, point)
        v_surv = survival(model_a, point) - survival(model_b, point)
        max_cdf = max(max_cdf, v_cdf)
        max_surv = max(max_surv, v_surv)
        worst = max(v_cdf, v_surv)
        if worst > tol:
            violators.append((worst, point))
    violators.sort(key=lambda item: -item[0])
    witnesses = tuple(point for _, point in violators[:20])
    return ConcordanceReport(
        cdf_dominated=max_cdf <= tol,
        survival_dominated=max_surv <= tol,
        max_cdf_violation=max(max_cdf, 0.0),
        max_survival_violation=max(max_surv, 0.0),
        witness_points=witnesses,
        tol=tol,
    )


def sample(model: PiecewiseUniformDensity, n: int, seed: int) -> np.ndarray:
    """Draw ``n`` points from the model; returns an (n, 2*order) array.

    The stream is the counter-based Philox generator, so a given seed
    yields the same draw on every platform.  Sub-probability models are
    sampled from their normalized law.
    """
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    rng = make_rng(seed)
    masses = np.array([cell_mass(c) for c in model.cells])
    choice = rng.choice(len(model.cells), size=n, p=masses / masses.sum())
    out = np.empty((n, model.dimension))
    for ci, cell in enumerate(model.cells):
        rows = np.flatnonzero(choice == ci)
        if rows.size == 0:
            continue
        for block in cell.blocks:
            draws = rng.uniform(block.lo, block.hi, size=(rows.size, block.size))
            if block.kind == "chain" and block.size > 1:
                draws.sort(axis=1)
            for col, p in enumerate(block.positions):
                out[rows, coordinate_index(model.order, block.axis, p)] = draws[:, col]
    return out


def _stable_rank_rows(values: np.ndarray) -> np.ndarray:
    order = np.argsort(values, axis=1, kind="stable")
    ranks = np.empty_like(order)
    cols = np.arange(1, values.shape[1] + 1)
    np.put_along_axis(ranks, order, np.broadcast_to(cols, order.shape), axis=1)
    return ranks


def mc_probability(
    model: PiecewiseUniformDensity, event: Event, n: int, seed: int
) -> McResult:
    """Monte Carlo estimate of an event probability with its standard error.

    The standard error is the binomial ``sqrt(p * (1 - p) / n)``.  This
    path works for any chain size, unlike the closed-form cdf/survival.
    """
    points = sample(model, n, seed)
    if isinstance(event, PatternCoincidence):
        d = model.order
        ranks_x = _stable_rank_rows(points[:, :d])
        ranks_y = _stable_rank_rows(points[:, d:])
        hits = np.all(ranks_x == ranks_y, axis=1)
    elif isinstance(event, (LowerOrthant, UpperOrthant)):
        pt = _check_point(model, event.point)
        if isinstance(event, LowerOrthant):
            hits = np.all(points <= np.asarray(pt), axis=1)
        else:
            hits = np.all(points >= np.asarray(pt), axis=1)
    else:
        raise InvalidParameter(f"unknown event {event!r}")
    estimate = float(hits.mean())
    std_error = math.sqrt(estimate * (1.0 - estimate) / n)
    return McResult(estimate=estimate, std_error=std_error)
