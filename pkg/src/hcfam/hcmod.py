"""Families of Harish-Chandra modules over the SL(2) contraction pair.

A module family is stored in the canonical weight basis: one section f_n per
weight n, raising action X f_n = A_n f_{n+2}, lowering action
Y f_{n+2} = z^{-1} B_n f_n, with A_n, B_n polynomials in z.  Infinite weight
sets are handled lazily: explicit polynomial overrides on a finite window of
transition indices, plus a unit-normalized closed-form rule on each tail.
The tail rules are checked symbolically in n, so validation genuinely covers
the whole (infinite) weight set.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .scalars import (
    INFINITY,
    GaussianRational,
    LaurentPoly,
    Point,
    QI_ZERO,
    RationalFunction,
    UnsplitQuadratic,
    gaussian_sqrt,
    poly_roots,
)


class NotValidated(Exception):
    pass


class WeightNotPresent(Exception):
    pass


class DegreeBoundViolated(Exception):
    pass


DEFAULT_WINDOW = (-24, 24)

Window = Tuple[int, int]


# ---------------------------------------------------------------------------
# Weight sets (the rows of the admissible-module table)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightSet:
    """The set of K-weights of a module family; one of the five admissible
    shapes: all-even, all-odd, lowest-weight, highest-weight, finite."""

    kind: str  # even | odd | lowest | highest | finite
    param: int = 0

    def __post_init__(self):
        if self.kind not in ("even", "odd", "lowest", "highest", "finite"):
            raise ValueError(f"unknown weight-set kind {self.kind!r}")
        if self.kind == "lowest" and self.param < 1:
            raise ValueError("lowest-weight parameter must be >= 1")
        if self.kind == "highest" and self.param > -1:
            raise ValueError("highest-weight parameter must be <= -1")
        if self.kind == "finite" and self.param < 0:
            raise ValueError("finite-dimensional parameter must be >= 0")

    @property
    def parity(self) -> int:
        if self.kind == "even":
            return 0
        if self.kind == "odd":
            return 1
        return self.param % 2

    def contains(self, n: int) -> bool:
        if n % 2 != self.parity:
            return False
        if self.kind in ("even", "odd"):
            return True
        if self.kind == "lowest":
            return n >= self.param
        if self.kind == "highest":
            return n <= self.param
        return -self.param <= n <= self.param

    @property
    def unbounded_above(self) -> bool:
        return self.kind in ("even", "odd", "lowest")

    @property
    def unbounded_below(self) -> bool:
        return self.kind in ("even", "odd", "highest")

    def has_transition(self, n: int) -> bool:
        return self.contains(n) and self.contains(n + 2)

    def transitions_in(self, window: Window) -> List[int]:
        """Transition indices to check explicitly.

        Finite weight sets list all of their transitions; infinite ones are
        clipped to the window (tails are handled symbolically elsewhere).
        """
        if self.kind == "finite":
            return list(range(-self.param, self.param - 1, 2))
        lo, hi = window
        if self.kind == "lowest":
            lo = max(lo, self.param)
        if self.kind == "highest":
            hi = min(hi, self.param - 2)
        start = lo if lo % 2 == self.parity else lo + 1
        return [n for n in range(start, hi + 1, 2) if self.has_transition(n)]

    def weights_in(self, window: Window) -> List[int]:
        lo, hi = window
        if self.kind == "finite":
            return list(range(-self.param, self.param + 1, 2))
        if self.kind == "lowest":
            lo = max(lo, self.param)
        if self.kind == "highest":
            hi = min(hi, self.param)
        start = lo if lo % 2 == self.parity else lo + 1
        return list(range(start, hi + 1, 2))

    def anchor_weight(self) -> int:
        if self.kind == "even":
            return 0
        if self.kind == "odd":
            return 1
        if self.kind == "finite":
            return self.param if self.param % 2 else 0
        return self.param

    def extreme_weight(self) -> Optional[int]:
        """The lowest/highest weight for the non-principal types."""
        if self.kind in ("lowest", "highest"):
            return self.param
        if self.kind == "finite":
            return self.param
        return None

    def to_json(self) -> dict:
        return {"kind": self.kind, "param": self.param}

    @staticmethod
    def from_json(data: dict) -> "WeightSet":
        return WeightSet(data["kind"], data.get("param", 0))


# ---------------------------------------------------------------------------
# Degree profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    """Degrees of the weight sheaves, n -> deg F_n.

    Linear tails from an anchor (slopes are per weight step of 2), with
    finitely many explicit overrides.
    """

    anchor: int
    anchor_deg: int
    slope_up: int  # deg F_{n+2} - deg F_n on the upper tail
    slope_down: int  # deg F_{n-2} - deg F_n on the lower tail
    overrides: tuple = ()  # sorted tuple of (n, deg)

    def deg(self, n: int) -> int:
        for m, d in self.overrides:
            if m == n:
                return d
        if n >= self.anchor:
            return self.anchor_deg + self.slope_up * ((n - self.anchor) // 2)
        return self.anchor_deg + self.slope_down * ((self.anchor - n) // 2)

    def step(self, n: int) -> int:
        """deg F_{n+2} - deg F_n."""
        return self.deg(n + 2) - self.deg(n)

    def shifted(self, d: int) -> "DegreeProfile":
        return replace(
            self,
            anchor_deg=self.anchor_deg + d,
            overrides=tuple((n, v + d) for n, v in self.overrides),
        )

    def to_json(self) -> dict:
        return {
            "anchor": self.anchor,
            "anchor_deg": self.anchor_deg,
            "slope_up": self.slope_up,
            "slope_down": self.slope_down,
            "overrides": [[n, d] for n, d in self.overrides],
        }

    @staticmethod
    def from_json(data: dict) -> "DegreeProfile":
        return DegreeProfile(
            data["anchor"],
            data["anchor_deg"],
            data["slope_up"],
            data["slope_down"],
            tuple((n, d) for n, d in data.get("overrides", [])),
        )


def profiles_equal(a: DegreeProfile, b: DegreeProfile, weights: WeightSet, window: Window) -> bool:
    """Equality of degree profiles as functions on the weight set."""
    for n in weights.weights_in(window):
        if a.deg(n) != b.deg(n):
            return False
    if weights.unbounded_above and a.slope_up != b.slope_up:
        return False
    if weights.unbounded_below and a.slope_down != b.slope_down:
        return False
    return True


# ---------------------------------------------------------------------------
# Transition data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TailRule:
    """Closed-form rule for tail transitions: one of A_n, B_n is the constant
    ``value``, the other is q_n divided by four times that constant."""

    unit_on: str  # 'A' or 'B'
    value: GaussianRational = GaussianRational(1)

    def __post_init__(self):
        if self.unit_on not in ("A", "B"):
            raise ValueError("unit_on must be 'A' or 'B'")
        if self.value.is_zero():
            raise ValueError("tail unit constant must be nonzero")

    def to_json(self) -> dict:
        return {"unit": self.unit_on, "value": str(self.value)}

    @staticmethod
    def from_json(data: dict) -> "TailRule":
        return TailRule(data["unit"], GaussianRational.parse(data["value"]))


@dataclass(frozen=True)
class TransitionData:
    """Raising/lowering polynomials per transition index n.

    ``overrides`` holds explicit (A_n, B_n) pairs; everything else follows
    the tail rule of its side of the pivot.
    """

    pivot: int
    rule_up: TailRule  # transitions with n >= pivot
    rule_down: TailRule  # transitions with n < pivot
    overrides: tuple = ()  # sorted tuple of (n, A: LaurentPoly, B: LaurentPoly)

    def override_for(self, n: int):
        for m, A, B in self.overrides:
            if m == n:
                return (A, B)
        return None

    def rule_for(self, n: int) -> TailRule:
        return self.rule_up if n >= self.pivot else self.rule_down

    def with_override(self, n: int, A: LaurentPoly, B: LaurentPoly) -> "TransitionData":
        others = tuple((m, a, b) for m, a, b in self.overrides if m != n)
        return replace(self, overrides=tuple(sorted(others + ((n, A, B),))))

    def to_json(self) -> dict:
        return {
            "pivot": self.pivot,
            "up": self.rule_up.to_json(),
            "down": self.rule_down.to_json(),
            "overrides": [
                {"n": n, "A": A.to_json(), "B": B.to_json()}
                for n, A, B in self.overrides
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "TransitionData":
        return TransitionData(
            data["pivot"],
            TailRule.from_json(data["up"]),
            TailRule.from_json(data["down"]),
            tuple(
                (o["n"], LaurentPoly.from_json(o["A"]), LaurentPoly.from_json(o["B"]))
                for o in data.get("overrides", [])
            ),
        )


# ---------------------------------------------------------------------------
# The module family
# ---------------------------------------------------------------------------


Casimir = Tuple[GaussianRational, GaussianRational, GaussianRational]


def casimir_triple(c1, c0, cm1) -> Casimir:
    return (
        GaussianRational._coerce(c1),
        GaussianRational._coerce(c0),
        GaussianRational._coerce(cm1),
    )


@dataclass(frozen=True)
class HCModuleFamily:
    weights: WeightSet
    degrees: DegreeProfile
    transitions: TransitionData
    casimir: Casimir

    def q_poly(self, n: int) -> LaurentPoly:
        """q_n(z) = c1 z^2 + (c0 - n(n+2)) z + c_{-1}; four times A_n B_n."""
        c1, c0, cm1 = self.casimir
        return LaurentPoly({2: c1, 1: c0 - GaussianRational(n * (n + 2)), 0: cm1})

    def transition_polys(self, n: int) -> Tuple[LaurentPoly, LaurentPoly]:
        if not self.weights.has_transition(n):
            raise WeightNotPresent(f"no transition at weight {n}")
        ov = self.transitions.override_for(n)
        if ov is not None:
            return ov
        rule = self.transitions.rule_for(n)
        q = self.q_poly(n)
        unit = LaurentPoly.constant(rule.value)
        other = q.scale((GaussianRational(4) * rule.value).inverse())
        if rule.unit_on == "A":
            return unit, other
        return other, unit

    def degree_bounds(self, n: int) -> Tuple[int, int]:
        """(bound for deg A_n, bound for deg B_n)."""
        s = self.degrees.step(n)
        return 1 + s, 1 - s

    def to_json(self) -> dict:
        return {
            "weights": self.weights.to_json(),
            "degree_rule": self.degrees.to_json(),
            "transitions": self.transitions.to_json(),
            "casimir": [str(c) for c in self.casimir],
        }

    @staticmethod
    def from_json(data: dict) -> "HCModuleFamily":
        return HCModuleFamily(
            WeightSet.from_json(data["weights"]),
            DegreeProfile.from_json(data["degree_rule"]),
            TransitionData.from_json(data["transitions"]),
            tuple(GaussianRational.parse(c) for c in data["casimir"]),
        )


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass
class Violation:
    where: object  # transition index, 'tail-up', 'tail-down', or 'structure'
    message: str

    def to_json(self) -> dict:
        return {"where": str(self.where), "message": self.message}


@dataclass
class ValidationReport:
    violations: List[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}


def _integer_weight_solutions(c0: GaussianRational) -> List[int]:
    """Integers n with n(n+2) equal to the given scalar."""
    if not c0.is_real():
        return []
    s = _sqrt_rational_integerish(Fraction(1) + c0.re)
    if s is None:
        return []
    m = -1 + s
    out = {m, -m - 2}
    return sorted(out)


def _sqrt_rational_integerish(f: Fraction) -> Optional[int]:
    if f < 0 or f.denominator != 1:
        return None
    import math

    r = math.isqrt(f.numerator)
    return r if r * r == f.numerator else None


def validate(module: HCModuleFamily, window: Window = DEFAULT_WINDOW) -> ValidationReport:
    """Check every structural invariant of the module family.

    Explicit transitions in the window are checked directly; infinite tails
    are checked through the closed-form rules, symbolically in n.  Violations
    are data, not exceptions.
    """
    v: List[Violation] = []
    w = module.weights
    lo, hi = window
    if lo > hi:
        raise ValueError("empty window")

    # Structural coverage requirements.
    for n, _, _ in module.transitions.overrides:
        if not w.has_transition(n):
            v.append(Violation(n, "override at an absent transition"))
        elif w.kind != "finite" and not (lo <= n <= hi):
            v.append(Violation(n, "override outside the checked window"))
    for n, _ in module.degrees.overrides:
        if w.kind != "finite" and not (lo - 2 <= n <= hi + 2):
            v.append(Violation(n, "degree override outside the checked window"))
    if w.kind != "finite" and not (lo <= module.transitions.pivot <= hi + 2):
        v.append(Violation("structure", "tail pivot outside the checked window"))

    # Per-transition checks.
    for n in w.transitions_in(window):
        try:
            A, B = module.transition_polys(n)
        except WeightNotPresent:
            continue
        q = module.q_poly(n)
        if q.is_zero():
            v.append(Violation(n, "q_n is identically zero (excluded Casimir value)"))
            continue
        if not (A.is_ordinary() and B.is_ordinary()):
            v.append(Violation(n, "transition data is not polynomial"))
            continue
        if A.is_zero() or B.is_zero():
            v.append(Violation(n, "zero transition polynomial (not generically irreducible)"))
            continue
        if (A * B).scale(4) != q:
            v.append(Violation(n, "Casimir equation 4 A_n B_n = q_n fails"))
        step = module.degrees.step(n)
        if abs(step) > 1:
            v.append(Violation(n, "degree profile jumps by more than one"))
        ba, bb = module.degree_bounds(n)
        if A.degree() > ba:
            v.append(Violation(n, f"deg A_n = {A.degree()} exceeds bound {ba}"))
        if B.degree() > bb:
            v.append(Violation(n, f"deg B_n = {B.degree()} exceeds bound {bb}"))

    # Symbolic tail checks.
    if w.unbounded_above:
        v.extend(_tail_violations(module, window, up=True))
    if w.unbounded_below:
        v.extend(_tail_violations(module, window, up=False))
    return ValidationReport(v)


def _tail_violations(module: HCModuleFamily, window: Window, up: bool) -> List[Violation]:
    out: List[Violation] = []
    where = "tail-up" if up else "tail-down"
    rule = module.transitions.rule_up if up else module.transitions.rule_down
    slope = module.degrees.slope_up if up else -module.degrees.slope_down
    # slope here is deg F_{n+2} - deg F_n for transitions n deep in the tail.
    if abs(slope) > 1:
        out.append(Violation(where, "tail degree slope exceeds one per step"))
        return out
    c1, c0, cm1 = module.casimir
    # q_n identically zero somewhere in the tail?
    if c1.is_zero() and cm1.is_zero():
        for m in _integer_weight_solutions(c0):
            if _in_tail(module, m, window, up) and module.weights.has_transition(m):
                out.append(
                    Violation(where, f"q_n vanishes identically at tail transition n={m}")
                )
    # Degree bound for the non-unit polynomial q_n / (4 * unit).
    bound = (1 - slope) if rule.unit_on == "A" else (1 + slope)
    if bound <= 0:
        out.append(
            Violation(
                where,
                f"tail rule puts the unit on {rule.unit_on} but its partner needs "
                f"degree <= {bound}, impossible for a whole tail",
            )
        )
    elif bound == 1 and not c1.is_zero():
        out.append(
            Violation(where, "tail degree bound 1 requires the z-coefficient c1 = 0")
        )
    return out


def _in_tail(module: HCModuleFamily, n: int, window: Window, up: bool) -> bool:
    lo, hi = window
    return n > hi if up else n < lo


def generically_irreducible(module: HCModuleFamily, window: Window = DEFAULT_WINDOW) -> bool:
    report = validate(module, window)
    return report.ok


# ---------------------------------------------------------------------------
# Degrees lemma
# ---------------------------------------------------------------------------


def degrees_lemma_check(module: HCModuleFamily, window: Window = DEFAULT_WINDOW) -> bool:
    """Descending steps force constant nonzero A_n; ascending force B_n."""
    _require_valid(module, window)
    for n in module.weights.transitions_in(window):
        A, B = module.transition_polys(n)
        step = module.degrees.step(n)
        if step == -1 and not (A.degree() == 0 and not A.is_zero()):
            return False
        if step == 1 and not (B.degree() == 0 and not B.is_zero()):
            return False
    # Tail rules: the unit side must sit where the lemma forces a constant.
    w = module.weights
    if w.unbounded_above:
        if module.degrees.slope_up == -1 and module.transitions.rule_up.unit_on != "A":
            return False
        if module.degrees.slope_up == 1 and module.transitions.rule_up.unit_on != "B":
            return False
    if w.unbounded_below:
        if -module.degrees.slope_down == -1 and module.transitions.rule_down.unit_on != "A":
            return False
        if -module.degrees.slope_down == 1 and module.transitions.rule_down.unit_on != "B":
            return False
    return True


def _require_valid(module: HCModuleFamily, window: Window):
    report = validate(module, window)
    if not report.ok:
        raise NotValidated(
            "module fails validation: "
            + "; ".join(v.message for v in report.violations[:3])
        )


# ---------------------------------------------------------------------------
# Fibers
# ---------------------------------------------------------------------------


def _scalar_at(poly: LaurentPoly, p: Point, bound: int) -> GaussianRational:
    if poly.is_zero():
        return QI_ZERO
    if p is INFINITY:
        return poly.leading_coeff() if poly.degree() == bound else QI_ZERO
    return poly.evaluate(GaussianRational._coerce(p))


def fiber_module(
    module: HCModuleFamily, p: Point, window: Window = DEFAULT_WINDOW
) -> Dict[int, Tuple[GaussianRational, GaussianRational]]:
    """Transition scalars {n: (a_n, b_n)} of the fiber at p, over the window.

    At interior points these are plain evaluations (the local basis at 0 is
    f_n, X, zY); at infinity a polynomial contributes its leading coefficient
    exactly when its degree attains the degree bound.
    """
    _require_valid(module, window)
    out = {}
    for n in module.weights.transitions_in(window):
        A, B = module.transition_polys(n)
        ba, bb = module.degree_bounds(n)
        out[n] = (_scalar_at(A, p, ba), _scalar_at(B, p, bb))
    return out


def _tail_scalar_vanishes(module: HCModuleFamily, p: Point, window: Window, up: bool) -> bool:
    """Whether some tail transition scalar vanishes at p (closed form in n)."""
    w = module.weights
    if up and not w.unbounded_above:
        return False
    if not up and not w.unbounded_below:
        return False
    rule = module.transitions.rule_up if up else module.transitions.rule_down
    slope = module.degrees.slope_up if up else -module.degrees.slope_down
    c1, c0, cm1 = module.casimir
    if p is INFINITY:
        # Unit side: constant attains its bound iff the bound is zero.
        unit_bound = (1 + slope) if rule.unit_on == "A" else (1 - slope)
        if unit_bound != 0:
            return True
        # Partner side: deg q_n against its bound.
        partner_bound = (1 - slope) if rule.unit_on == "A" else (1 + slope)
        if partner_bound == 2:
            if c1.is_zero():
                return True
            return False
        # partner_bound == 1 (validation forces c1 = 0 here): the degree of
        # q_n drops below 1 exactly at integer solutions of c0 = n(n+2).
        for m in _integer_weight_solutions(c0):
            if _in_tail(module, m, window, up) and w.has_transition(m):
                return True
        return False
    p = GaussianRational._coerce(p)
    if p.is_zero():
        # q_n(0) = c_{-1} for every n.
        return cm1.is_zero()
    # q_n(p) = 0  <=>  n(n+2) = (c1 p^2 + c0 p + cm1) / p.
    target = (c1 * p * p + c0 * p + cm1) / p
    for m in _integer_weight_solutions(target):
        if _in_tail(module, m, window, up) and w.has_transition(m):
            return True
    return False


def fiber_irreducible(module: HCModuleFamily, p: Point, window: Window = DEFAULT_WINDOW) -> bool:
    """Transition-scalar irreducibility criterion for the fiber at p.

    A weight-supported proper invariant subspace exists iff some transition
    scalar vanishes; the explicit window is scanned directly and the tails
    through the closed-form rules, so the verdict covers the whole weight set.
    """
    scalars = fiber_module(module, p, window)
    for a, b in scalars.values():
        if a.is_zero() or b.is_zero():
            return False
    if _tail_scalar_vanishes(module, p, window, up=True):
        return False
    if _tail_scalar_vanishes(module, p, window, up=False):
        return False
    return True


@dataclass
class ReducibleLocus:
    """Roots of the transition polynomials over a window, plus any boundary
    points whose fiber scalars vanish, plus quadratics that fail to split."""

    points: frozenset
    boundary: frozenset
    unsplit: tuple

    def all_points(self) -> frozenset:
        return self.points | self.boundary


def reducible_locus(module: HCModuleFamily, window: Window = DEFAULT_WINDOW) -> ReducibleLocus:
    _require_valid(module, window)
    points = set()
    unsplit = []
    for n in module.weights.transitions_in(window):
        A, B = module.transition_polys(n)
        for which, poly in (("A", A), ("B", B)):
            try:
                points.update(poly_roots(poly))
            except UnsplitQuadratic:
                unsplit.append((n, which, poly))
    boundary = set()
    for bp in (GaussianRational(0), INFINITY):
        scalars = fiber_module(module, bp, window)
        if any(a.is_zero() or b.is_zero() for a, b in scalars.values()):
            boundary.add(bp)
        elif _tail_scalar_vanishes(module, bp, window, True) or _tail_scalar_vanishes(
            module, bp, window, False
        ):
            boundary.add(bp)
    return ReducibleLocus(frozenset(points), frozenset(boundary), tuple(unsplit))


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


@dataclass
class IsoResult:
    isomorphic: bool
    scalars: Dict[int, GaussianRational]
    obstruction: Optional[str] = None

    def __bool__(self):
        return self.isomorphic


def _proportionality(a: LaurentPoly, b: LaurentPoly) -> Optional[GaussianRational]:
    """The constant mu with b = mu * a, or None."""
    if a.is_zero() or b.is_zero():
        return None
    if set(a.coeffs) != set(b.coeffs):
        return None
    mu = b.leading_coeff() / a.leading_coeff()
    return mu if a.scale(mu) == b else None


def iso_check(
    m1: HCModuleFamily, m2: HCModuleFamily, window: Window = DEFAULT_WINDOW
) -> IsoResult:
    """Isomorphism of validated module families.

    Isomorphisms rescale the canonical sections, so the test is: equal
    weights, degree profiles, and Casimir triples, and per-transition scalars
    mu_n with A'_n = mu_n A_n and B'_n = mu_n^{-1} B_n.  Scalars are matched
    greedily from the smallest-magnitude weight upward.
    """
    _require_valid(m1, window)
    _require_valid(m2, window)
    if m1.weights != m2.weights:
        return IsoResult(False, {}, "weight sets differ")
    if not profiles_equal(m1.degrees, m2.degrees, m1.weights, window):
        return IsoResult(False, {}, "degree profiles differ")
    if m1.casimir != m2.casimir:
        return IsoResult(False, {}, "Casimir triples differ")
    w = m1.weights
    if w.unbounded_above and (
        m1.transitions.rule_up.unit_on != m2.transitions.rule_up.unit_on
    ):
        return IsoResult(False, {}, "upper tail rules place units on different sides")
    if w.unbounded_below and (
        m1.transitions.rule_down.unit_on != m2.transitions.rule_down.unit_on
    ):
        return IsoResult(False, {}, "lower tail rules place units on different sides")
    scalars: Dict[int, GaussianRational] = {}
    for n in sorted(w.transitions_in(window), key=lambda n: (abs(n), n)):
        A1, B1 = m1.transition_polys(n)
        A2, B2 = m2.transition_polys(n)
        mu = _proportionality(A1, A2)
        if mu is None or mu.is_zero():
            return IsoResult(False, scalars, f"A_{n} is not a scalar multiple")
        if B1.scale(mu.inverse()) != B2:
            return IsoResult(False, scalars, f"B_{n} does not match the scalar of A_{n}")
        scalars[n] = mu
    return IsoResult(True, scalars)


def picard_twist(module: HCModuleFamily, d: int, window: Window = DEFAULT_WINDOW) -> HCModuleFamily:
    """Tensor by a degree-d line bundle: shift every sheaf degree by d."""
    _require_valid(module, window)
    return replace(module, degrees=module.degrees.shifted(d))


def swap_transitions(
    module: HCModuleFamily, indices, window: Window = DEFAULT_WINDOW
) -> HCModuleFamily:
    """Exchange A_n with B_n at the given equal-degree transition indices."""
    _require_valid(module, window)
    t = module.transitions
    for n in indices:
        if module.degrees.step(n) != 0:
            raise DegreeBoundViolated(f"transition {n} does not have equal degrees")
        A, B = module.transition_polys(n)
        if A.degree() > 1 or B.degree() > 1:
            raise DegreeBoundViolated(f"transition {n} polynomials exceed degree one")
        t = t.with_override(n, B, A)
    out = replace(module, transitions=t)
    _require_valid(out, window)
    return out
