"""Canonical model pairs and their mechanical verification.

Three scenarios are built in code and re-checked from first principles:

``counterexample``
    Two piecewise-uniform laws for windows of order 2 that are ordered by
    concordance (pointwise cdf and survival domination) yet have pattern
    dependence 1 and 0: concordance ordering does not order pattern
    dependence.  The two laws share two cells; the auxiliary half-mass
    models carry the cells in which they differ.

``example42``
    Discrete laws with an independent, identically distributed second
    position (the tail) on top of dependent first-position pairs (the
    heads).  The starred head dominates the unstarred one in cdf and
    survival, all conditional inequality families hold, and the swapped
    order is refuted with an explicit witness.

``example43``
    Like ``example42``, but the head law depends on the tail value, so the
    conditional families genuinely vary with the conditioning point.

Every verifier returns a :class:`ScenarioReport` whose checks compare
computed values against frozen expectations; no randomness is involved.

Both discrete scenarios keep dependence well defined only if the tail can
interleave with the head values; with the default tails (far above every
head value) both window patterns are almost surely increasing and the
dependence coefficient is undefined by construction.  The verifiers
therefore check the dependence conclusion on interleaving-tail variants
and check that the default-tail laws raise the documented error.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from . import discrete as disc
from . import piecewise as pw
from .discrete import DiscreteJoint
from .errors import InvalidParameter, OpdepError
from .piecewise import Block, Cell, PiecewiseUniformDensity

INF = math.inf


@dataclass(frozen=True)
class CheckResult:
    """One named comparison of a computed value against a frozen expectation."""

    name: str
    expected: str
    actual: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CheckResult":
        return cls(
            name=data["name"],
            expected=data["expected"],
            actual=data["actual"],
            passed=data["pass"],
        )


@dataclass(frozen=True)
class ScenarioReport:
    """All checks of one scenario; ``passed`` is the conjunction."""

    scenario: str
    checks: tuple[CheckResult, ...]
    passed: bool

    @classmethod
    def from_checks(cls, scenario: str, checks: Sequence[CheckResult]) -> "ScenarioReport":
        return cls(scenario=scenario, checks=tuple(checks), passed=all(c.passed for c in checks))

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "checks": [c.to_dict() for c in self.checks],
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScenarioReport":
        return cls(
            scenario=data["scenario"],
            checks=tuple(CheckResult.from_dict(c) for c in data["checks"]),
            passed=data["pass"],
        )


def _fmt(value: object) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


def _value_check(name: str, expected: float, actual: float, tol: float) -> CheckResult:
    return CheckResult(
        name=name,
        expected=_fmt(float(expected)),
        actual=_fmt(float(actual)),
        passed=abs(actual - expected) <= tol,
    )


def _flag_check(name: str, expected: bool, actual: bool) -> CheckResult:
    return CheckResult(name=name, expected=_fmt(expected), actual=_fmt(actual), passed=actual == expected)


def _error_check(name: str, expected_error: str, thunk: Callable[[], object]) -> CheckResult:
    try:
        thunk()
        actual = "no error"
    except OpdepError as exc:
        actual = type(exc).__name__
    return CheckResult(name=name, expected=expected_error, actual=actual, passed=actual == expected_error)


def _chain(axis: str, positions: tuple[int, ...], lo: float, hi: float) -> Block:
    return Block(axis=axis, positions=positions, lo=lo, hi=hi, kind="chain")


def _free(axis: str, positions: tuple[int, ...], lo: float, hi: float) -> Block:
    return Block(axis=axis, positions=positions, lo=lo, hi=hi, kind="free")


class CounterexampleModels(NamedTuple):
    f: PiecewiseUniformDensity
    f_star: PiecewiseUniformDensity
    h: PiecewiseUniformDensity
    h_star: PiecewiseUniformDensity


def build_counterexample() -> CounterexampleModels:
    """The concordance-ordered pair with dependence 1 and 0, plus the parts.

    Both laws put mass 1/4 on each of four cells; two cells are shared.
    In ``f`` the window patterns agree in every cell (dependence 1); in
    ``f_star`` the four pattern combinations are uniform (dependence 0).
    ``h`` and ``h_star`` are the non-shared halves, each of total mass 1/2.
    """
    shared = (
        # x2 < x1 in [0, 1] with y2 < y1 in [1, 2]
        Cell(1.0, (_chain("x", (2, 1), 0.0, 1.0), _chain("y", (2, 1), 1.0, 2.0))),
        # x1 < x2 in [1, 2] with y1 < y2 in [0, 1]
        Cell(1.0, (_chain("x", (1, 2), 1.0, 2.0), _chain("y", (1, 2), 0.0, 1.0))),
    )
    own = (
        Cell(1.0, (_chain("x", (1, 2), 0.0, 1.0), _chain("y", (1, 2), 1.0, 2.0))),
        Cell(1.0, (_chain("x", (2, 1), 1.0, 2.0), _chain("y", (2, 1), 0.0, 1.0))),
    )
    own_star = (
        Cell(1.0, (_chain("x", (1, 2), 0.0, 1.0), _chain("y", (2, 1), 0.0, 1.0))),
        Cell(1.0, (_chain("x", (2, 1), 1.0, 2.0), _chain("y", (1, 2), 1.0, 2.0))),
    )
    f = PiecewiseUniformDensity(order=2, cells=(own[0],) + shared + (own[1],))
    f_star = PiecewiseUniformDensity(order=2, cells=(own_star[0],) + shared + (own_star[1],))
    h = PiecewiseUniformDensity(order=2, cells=own)
    h_star = PiecewiseUniformDensity(order=2, cells=own_star)
    return CounterexampleModels(f=f, f_star=f_star, h=h, h_star=h_star)


def _marginal_cdf_checks(
    name: str,
    model_a: PiecewiseUniformDensity,
    model_b: PiecewiseUniformDensity,
    coords_a: Sequence[int],
    coords_b: Sequence[int],
    values: Sequence[float],
    tol: float,
) -> CheckResult:
    """Equality of two marginal cdfs on a grid, as a single check.

    ``coords_a``/``coords_b`` select which flat coordinates carry the grid
    values; all other coordinates sit at +inf, which marginalizes them out.
    """
    dim = model_a.dimension
    worst = 0.0
    for combo in itertools.product(values, repeat=len(coords_a)):
        point_a = [INF] * dim
        point_b = [INF] * dim
        for c, v in zip(coords_a, combo):
            point_a[c] = v
        for c, v in zip(coords_b, combo):
            point_b[c] = v
        worst = max(worst, abs(pw.cdf(model_a, point_a) - pw.cdf(model_b, point_b)))
    return _value_check(name, 0.0, worst, tol)


def verify_counterexample(tol: float = 1e-12, points_per_axis: int = 9) -> ScenarioReport:
    """Re-derive every claim of the counterexample scenario.

    Checks: the four models validate at their stated masses; the two laws
    literally share two cells and split into shared plus own halves; both
    window marginals agree across the laws and are stationary within each
    law; the first law precedes the second in concordance order on the
    default grid; and the pattern coincidences and dependence values are
    exactly 1 vs 1/2 and 1 vs 0, so concordance ordering reverses nothing
    while dependence drops.
    """
    models = build_counterexample()
    f, f_star, h, h_star = models
    checks: list[CheckResult] = []

    for label, model, mass in (
        ("f", f, 1.0),
        ("f_star", f_star, 1.0),
        ("h", h, 0.5),
        ("h_star", h_star, 0.5),
    ):
        checks.append(
            _error_check(
                f"{label} validates with total mass {mass}",
                "no error",
                lambda m=model, em=mass: pw.validate(m, expected_mass=em, tol=tol),
            )
        )

    shared = [c for c in f.cells if c in f_star.cells]
    checks.append(_flag_check("two cells are shared between the laws", True, len(shared) == 2))
    checks.append(
        _flag_check(
            "h carries exactly the non-shared cells of f",
            True,
            sorted(map(repr, h.cells)) == sorted(repr(c) for c in f.cells if c not in shared),
        )
    )
    checks.append(
        _flag_check(
            "h_star carries exactly the non-shared cells of f_star",
            True,
            sorted(map(repr, h_star.cells))
            == sorted(repr(c) for c in f_star.cells if c not in shared),
        )
    )

    span = pw.default_grid([f, f_star], points_per_axis=points_per_axis)[0]
    checks.append(
        _marginal_cdf_checks("x window laws agree across f and f_star", f, f_star, (0, 1), (0, 1), span, tol)
    )
    checks.append(
        _marginal_cdf_checks("y window laws agree across f and f_star", f, f_star, (2, 3), (2, 3), span, tol)
    )
    for label, model in (("f", f), ("f_star", f_star)):
        checks.append(
            _marginal_cdf_checks(
                f"{label}: first and second x coordinates share one law", model, model, (0,), (1,), span, tol
            )
        )
        checks.append(
            _marginal_cdf_checks(
                f"{label}: first and second y coordinates share one law", model, model, (2,), (3,), span, tol
            )
        )

    report = pw.concordance_check(f, f_star, tol=tol, points_per_axis=points_per_axis)
    checks.append(_flag_check("f precedes f_star in cdf domination", True, report.cdf_dominated))
    checks.append(
        _flag_check("f precedes f_star in survival domination", True, report.survival_dominated)
    )
    checks.append(_value_check("max cdf violation on grid", 0.0, report.max_cdf_violation, tol))
    checks.append(
        _value_check("max survival violation on grid", 0.0, report.max_survival_violation, tol)
    )

    checks.append(_value_check("pattern coincidence of f", 1.0, pw.pattern_coincidence(f), tol))
    checks.append(
        _value_check("pattern coincidence of f_star", 0.5, pw.pattern_coincidence(f_star), tol)
    )
    opd_f = pw.exact_opd(f)
    opd_star = pw.exact_opd(f_star)
    checks.append(_value_check("pattern dependence of f", 1.0, opd_f, tol))
    checks.append(_value_check("pattern dependence of f_star", 0.0, opd_star, tol))
    checks.append(
        _flag_check(
            "dependence decreases although concordance increases",
            True,
            report.dominated and opd_f > opd_star,
        )
    )
    return ScenarioReport.from_checks("counterexample", checks)


# Head laws shared by both discrete scenarios: the dependent pair puts mass
# 1/2 on (1, 3) and (2, 2); its starred counterpart on (1, 2) and (2, 3).

def head_law() -> DiscreteJoint:
    return DiscreteJoint(order=1, atoms={(1.0, 3.0): 0.5, (2.0, 2.0): 0.5})


def head_law_star() -> DiscreteJoint:
    return DiscreteJoint(order=1, atoms={(1.0, 2.0): 0.5, (2.0, 3.0): 0.5})


def uniform_head_law() -> DiscreteJoint:
    return DiscreteJoint(
        order=1,
        atoms={(1.0, 2.0): 0.25, (1.0, 3.0): 0.25, (2.0, 2.0): 0.25, (2.0, 3.0): 0.25},
    )


class LawPair(NamedTuple):
    law: DiscreteJoint
    law_star: DiscreteJoint


class ModelPair(NamedTuple):
    model: PiecewiseUniformDensity
    model_star: PiecewiseUniformDensity


def example42_tail_default() -> DiscreteJoint:
    """Independent tail: (X2, Y2) uniform on (5,5) and (6,6)."""
    return DiscreteJoint(order=1, atoms={(5.0, 5.0): 0.5, (6.0, 6.0): 0.5})


def example42_tail_interleaved() -> DiscreteJoint:
    """Tail uniform on (1.5, 2.5) and (2.5, 1.5), interleaving the heads."""
    return DiscreteJoint(order=1, atoms={(1.5, 2.5): 0.5, (2.5, 1.5): 0.5})


def build_example42(tail: DiscreteJoint | None = None) -> LawPair:
    """Heads extended by one shared independent tail position."""
    if tail is None:
        tail = example42_tail_default()
    return LawPair(
        law=disc.product_extend(head_law(), tail),
        law_star=disc.product_extend(head_law_star(), tail),
    )


def example42_head_models() -> ModelPair:
    """Continuous analogue of the heads: matching unit boxes, mass 1/2 each."""
    model = PiecewiseUniformDensity(
        order=1,
        cells=(
            Cell(0.5, (_free("x", (1,), 0.0, 1.0), _free("y", (1,), 2.0, 3.0))),
            Cell(0.5, (_free("x", (1,), 1.0, 2.0), _free("y", (1,), 1.0, 2.0))),
        ),
    )
    model_star = PiecewiseUniformDensity(
        order=1,
        cells=(
            Cell(0.5, (_free("x", (1,), 0.0, 1.0), _free("y", (1,), 1.0, 2.0))),
            Cell(0.5, (_free("x", (1,), 1.0, 2.0), _free("y", (1,), 2.0, 3.0))),
        ),
    )
    return ModelPair(model=model, model_star=model_star)


def build_example42_continuous() -> ModelPair:
    """Continuous heads extended by an independent uniform tail on [5, 6]^2."""
    heads = example42_head_models()

    def extend(head: PiecewiseUniformDensity) -> PiecewiseUniformDensity:
        cells = []
        for cell in head.cells:
            x1 = next(b for b in cell.blocks if b.axis == "x")
            y1 = next(b for b in cell.blocks if b.axis == "y")
            cells.append(
                Cell(
                    cell.value,
                    (
                        _free("x", (1,), x1.lo, x1.hi),
                        _free("x", (2,), 5.0, 6.0),
                        _free("y", (1,), y1.lo, y1.hi),
                        _free("y", (2,), 5.0, 6.0),
                    ),
                )
            )
        return PiecewiseUniformDensity(order=2, cells=tuple(cells))

    return ModelPair(model=extend(heads.model), model_star=extend(heads.model_star))


def example43_tail(c1: Sequence[float] = (10.0, 10.0), c2: Sequence[float] = (20.0, 20.0)) -> DiscreteJoint:
    return DiscreteJoint(order=1, atoms={tuple(map(float, c1)): 0.5, tuple(map(float, c2)): 0.5})


def build_example43(
    c1: Sequence[float] = (10.0, 10.0), c2: Sequence[float] = (20.0, 20.0)
) -> LawPair:
    """Tail-dependent heads: the head law switches with the tail value.

    Given tail value ``c1`` the heads are the dependent pair and its star;
    given ``c2`` both are uniform on the four head points.
    """
    tail = example43_tail(c1, c2)
    key1 = tuple(map(float, c1))
    key2 = tuple(map(float, c2))
    law = disc.mixture_from_conditionals(tail, {key1: head_law(), key2: uniform_head_law()})
    law_star = disc.mixture_from_conditionals(
        tail, {key1: head_law_star(), key2: uniform_head_law()}
    )
    return LawPair(law=law, law_star=law_star)


_HEAD_POINTS = ((1.0, 2.0), (1.0, 3.0), (2.0, 2.0), (2.0, 3.0))

# Frozen head tables: cdf and survival of the order-1 head laws at the four
# head points, unstarred and starred.
_TABLE_HEADS = {
    "cdf": (0.0, 0.5, 0.5, 1.0),
    "survival": (1.0, 0.5, 0.5, 0.0),
    "cdf_star": (0.5, 0.5, 0.5, 1.0),
    "survival_star": (1.0, 0.5, 0.5, 0.5),
}
_TABLE_UNIFORM = {
    "cdf": (0.25, 0.5, 0.5, 1.0),
    "survival": (1.0, 0.5, 0.5, 0.25),
    "cdf_star": (0.25, 0.5, 0.5, 1.0),
    "survival_star": (1.0, 0.5, 0.5, 0.25),
}
_TABLE_MIXED = {
    "cdf": (0.125, 0.5, 0.5, 1.0),
    "survival": (1.0, 0.5, 0.5, 0.125),
    "cdf_star": (0.375, 0.5, 0.5, 1.0),
    "survival_star": (1.0, 0.5, 0.5, 0.375),
}


def _head_table_checks(
    prefix: str,
    head: DiscreteJoint,
    head_star: DiscreteJoint,
    table: dict[str, tuple[float, ...]],
    tol: float,
) -> list[CheckResult]:
    checks = []
    for k, point in enumerate(_HEAD_POINTS):
        checks.append(
            _value_check(f"{prefix}: cdf{point}", table["cdf"][k], disc.cdf(head, point), tol)
        )
        checks.append(
            _value_check(
                f"{prefix}: survival{point}", table["survival"][k], disc.survival(head, point), tol
            )
        )
        checks.append(
            _value_check(
                f"{prefix}: starred cdf{point}", table["cdf_star"][k], disc.cdf(head_star, point), tol
            )
        )
        checks.append(
            _value_check(
                f"{prefix}: starred survival{point}",
                table["survival_star"][k],
                disc.survival(head_star, point),
                tol,
            )
        )
    return checks


def _pair_marginal_equal(law: DiscreteJoint, law_star: DiscreteJoint, position: int, tol: float) -> bool:
    a = disc.marginal(law, (position,)).as_dict()
    b = disc.marginal(law_star, (position,)).as_dict()
    return set(a) == set(b) and all(abs(a[k] - b[k]) <= tol for k in a)


def verify_example42(tol: float = 1e-12) -> ScenarioReport:
    """Re-derive every claim of the independent-tail scenario."""
    pair = build_example42()
    law, law_star = pair
    checks: list[CheckResult] = []

    head = disc.marginal(law, (1,))
    head_star = disc.marginal(law_star, (1,))
    checks.extend(_head_table_checks("head table", head, head_star, _TABLE_HEADS, tol))

    # Product structure: conditioning on any tail value returns the head law.
    for tail_point, _ in example42_tail_default().atoms:
        cond = disc.conditional(law, (2,), tail_point)
        checks.append(
            _flag_check(
                f"head conditional on tail {tail_point} equals head marginal",
                True,
                cond.as_dict() == head.as_dict(),
            )
        )
    checks.append(
        _flag_check("tail pair laws agree across the two laws", True, _pair_marginal_equal(law, law_star, 2, tol))
    )

    rep_a = disc.check_theorem_conditions(law, law_star, "A", tol=tol)
    rep_b = disc.check_theorem_conditions(law, law_star, "B", tol=tol)
    checks.append(_flag_check("conditional families (variant A) hold", True, rep_a.holds))
    checks.append(_flag_check("marginal families (variant B) hold", True, rep_b.holds))
    checks.append(
        _flag_check("variant A auto-detects the shared tail", True, rep_a.shared_positions == (2,))
    )

    swapped = disc.check_theorem_conditions(law_star, law, "B", tol=tol)
    checks.append(_flag_check("swapped variant B fails", False, swapped.holds))
    witness = any(
        v.subset == (2,)
        and v.side == "cdf"
        and v.evaluation_point == (1.0, 2.0)
        and abs(v.lhs - 0.5) <= tol
        and abs(v.rhs - 0.0) <= tol
        for v in swapped.violations
    )
    checks.append(
        _flag_check("swapped run reports the head cdf witness at (1, 2)", True, witness)
    )

    heads_cont = example42_head_models()
    for label, model in (("continuous head", heads_cont.model), ("continuous starred head", heads_cont.model_star)):
        checks.append(
            _error_check(f"{label} validates as a density", "no error", lambda m=model: pw.validate(m, tol=tol))
        )
    checks.append(
        _value_check(
            "continuous head cdf at (1.5, 2.5)", 0.5, pw.cdf(heads_cont.model, (1.5, 2.5)), tol
        )
    )
    checks.append(
        _value_check(
            "continuous starred head cdf at (1.5, 2.5)",
            0.625,
            pw.cdf(heads_cont.model_star, (1.5, 2.5)),
            tol,
        )
    )
    head_report = pw.concordance_check(heads_cont.model, heads_cont.model_star, tol=tol)
    checks.append(
        _flag_check("continuous heads are concordance ordered", True, head_report.dominated)
    )
    full_cont = build_example42_continuous()
    full_report = pw.concordance_check(full_cont.model, full_cont.model_star, tol=tol)
    checks.append(
        _flag_check("continuous full laws are concordance ordered", True, full_report.dominated)
    )

    checks.append(
        _error_check(
            "default tail leaves dependence undefined",
            "DegenerateDistribution",
            lambda: disc.exact_opd_discrete(law),
        )
    )
    inter = build_example42(tail=example42_tail_interleaved())
    opd = disc.exact_opd_discrete(inter.law)
    opd_star = disc.exact_opd_discrete(inter.law_star)
    checks.append(_value_check("interleaved-tail dependence", -0.6, opd, tol))
    checks.append(_value_check("interleaved-tail starred dependence", 0.2, opd_star, tol))
    checks.append(_flag_check("dependence conclusion holds", True, opd <= opd_star + tol))
    return ScenarioReport.from_checks("example42", checks)


def verify_example43(tol: float = 1e-12) -> ScenarioReport:
    """Re-derive every claim of the tail-dependent scenario."""
    pair = build_example43()
    law, law_star = pair
    checks: list[CheckResult] = []

    c1 = (10.0, 10.0)
    c2 = (20.0, 20.0)
    head_c1 = disc.conditional(law, (2,), c1)
    head_c1_star = disc.conditional(law_star, (2,), c1)
    checks.extend(_head_table_checks("heads given first tail value", head_c1, head_c1_star, _TABLE_HEADS, tol))
    head_c2 = disc.conditional(law, (2,), c2)
    head_c2_star = disc.conditional(law_star, (2,), c2)
    checks.extend(
        _head_table_checks("heads given second tail value", head_c2, head_c2_star, _TABLE_UNIFORM, tol)
    )
    head = disc.marginal(law, (1,))
    head_star = disc.marginal(law_star, (1,))
    checks.extend(_head_table_checks("mixed head table", head, head_star, _TABLE_MIXED, tol))

    expected_head = {(1.0, 2.0): 0.125, (1.0, 3.0): 0.375, (2.0, 2.0): 0.375, (2.0, 3.0): 0.125}
    expected_head_star = {(1.0, 2.0): 0.375, (1.0, 3.0): 0.125, (2.0, 2.0): 0.125, (2.0, 3.0): 0.375}
    got = head.as_dict()
    got_star = head_star.as_dict()
    checks.append(
        _flag_check(
            "mixed head pmf",
            True,
            set(got) == set(expected_head) and all(abs(got[k] - v) <= tol for k, v in expected_head.items()),
        )
    )
    checks.append(
        _flag_check(
            "mixed starred head pmf",
            True,
            set(got_star) == set(expected_head_star)
            and all(abs(got_star[k] - v) <= tol for k, v in expected_head_star.items()),
        )
    )

    # Componentwise marginals agree even though the pair laws differ.
    for name, coords in (("first x coordinate", 0), ("first y coordinate", 2)):
        a: dict[float, float] = {}
        b: dict[float, float] = {}
        for atom, prob in law.atoms:
            a[atom[coords]] = a.get(atom[coords], 0.0) + prob
        for atom, prob in law_star.atoms:
            b[atom[coords]] = b.get(atom[coords], 0.0) + prob
        checks.append(
            _flag_check(
                f"{name} laws agree across the two laws",
                True,
                set(a) == set(b) and all(abs(a[k] - b[k]) <= tol for k in a),
            )
        )
    checks.append(
        _flag_check("tail pair laws agree across the two laws", True, _pair_marginal_equal(law, law_star, 2, tol))
    )

    rep_a = disc.check_theorem_conditions(law, law_star, "A", tol=tol)
    rep_b = disc.check_theorem_conditions(law, law_star, "B", tol=tol)
    checks.append(_flag_check("conditional families (variant A) hold", True, rep_a.holds))
    checks.append(_flag_check("marginal families (variant B) hold", True, rep_b.holds))
    checks.append(
        _flag_check("variant A auto-detects the shared tail", True, rep_a.shared_positions == (2,))
    )

    swapped = disc.check_theorem_conditions(law_star, law, "A", tol=tol)
    checks.append(_flag_check("swapped variant A fails", False, swapped.holds))
    witness = any(
        v.subset == (2,)
        and v.side == "cdf"
        and v.conditioning_point == c1
        and v.evaluation_point == (1.0, 2.0)
        and abs(v.lhs - 0.5) <= tol
        and abs(v.rhs - 0.0) <= tol
        for v in swapped.violations
    )
    checks.append(
        _flag_check("swapped run reports the conditional cdf witness at (1, 2)", True, witness)
    )

    checks.append(
        _error_check(
            "default tail values leave dependence undefined",
            "DegenerateDistribution",
            lambda: disc.exact_opd_discrete(law),
        )
    )
    inter = build_example43(c1=(1.5, 2.5), c2=(2.5, 1.5))
    opd = disc.exact_opd_discrete(inter.law)
    opd_star = disc.exact_opd_discrete(inter.law_star)
    checks.append(_value_check("interleaved-tail dependence", -0.6, opd, tol))
    checks.append(_value_check("interleaved-tail starred dependence", 0.2, opd_star, tol))
    checks.append(_flag_check("dependence conclusion holds", True, opd <= opd_star + tol))
    return ScenarioReport.from_checks("example43", checks)


SCENARIOS: dict[str, Callable[[], ScenarioReport]] = {
    "counterexample": verify_counterexample,
    "example42": verify_example42,
    "example43": verify_example43,
}


def run_scenario(name: str) -> ScenarioReport:
    """Run one named scenario verifier."""
    try:
        runner = SCENARIOS[name]
    except KeyError:
        raise InvalidParameter(
            f"unknown scenario {name!r}; choose from {', '.join(sorted(SCENARIOS))}"
        ) from None
    return runner()
