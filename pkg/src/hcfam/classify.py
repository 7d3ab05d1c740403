"""Classification of generically irreducible module families.

Four classes of degree profiles occur:

  I(k):  a single maximal degree at weight k, both tails descending;
  II(k): a single minimal degree at weight k, both tails ascending;
  III:   degrees ascend with the weight everywhere (deg F_n = floor(n/2));
  IV:    degrees descend with the weight everywhere (deg F_n = -floor(n/2)).

For each admissible Casimir triple and weight set there is exactly one family
per applicable class up to isomorphism; ``uniqueness_probe`` stress-tests
that by rescaling the canonical sections randomly and checking the result is
isomorphic to the canonical construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .scalars import GaussianRational, QI_ZERO
from . import hcmod
from .hcmod import (
    Casimir,
    DegreeProfile,
    HCModuleFamily,
    TailRule,
    TransitionData,
    WeightSet,
    Window,
    DEFAULT_WINDOW,
    casimir_triple,
    iso_check,
    validate,
)


class InadmissibleCasimir(Exception):
    pass


class IncompatibleClass(Exception):
    pass


@dataclass(frozen=True)
class ClassSpec:
    kind: str  # 'I' | 'II' | 'III' | 'IV' | 'EQUAL'
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("I", "II", "III", "IV", "EQUAL"):
            raise ValueError(f"unknown class {self.kind!r}")
        if self.kind in ("I", "II") and self.k is None:
            raise ValueError(f"class {self.kind} needs an extremal weight k")

    def __str__(self):
        return self.kind if self.k is None else f"{self.kind}({self.k})"


@dataclass
class AdmissibilityVerdict:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def _forced_casimir(weights: WeightSet) -> Optional[Casimir]:
    """Extreme weight sets admit exactly one Casimir triple."""
    if weights.kind in ("lowest", "highest"):
        l = abs(weights.param)
        return casimir_triple(0, l * l - 2 * l, 0)
    if weights.kind == "finite":
        k = weights.param
        return casimir_triple(0, k * k + 2 * k, 0)
    return None


def admissible_casimir(weights: WeightSet, casimir: Casimir) -> AdmissibilityVerdict:
    """Whether the Casimir triple admits a generically irreducible family on
    the given weight set."""
    casimir = tuple(GaussianRational._coerce(c) for c in casimir)
    forced = _forced_casimir(weights)
    if forced is not None:
        if casimir == forced:
            return AdmissibilityVerdict(True)
        return AdmissibilityVerdict(
            False,
            f"weight set {weights.kind}({weights.param}) forces the Casimir "
            f"triple {tuple(str(c) for c in forced)}",
        )
    c1, c0, cm1 = casimir
    if c1.is_zero() and cm1.is_zero():
        for m in hcmod._integer_weight_solutions(c0):
            if m % 2 == weights.parity:
                return AdmissibilityVerdict(
                    False,
                    f"constant Casimir value {c0} equals n(n+2) at weight n={m}, "
                    "so q_n vanishes identically there",
                )
    return AdmissibilityVerdict(True)


def _profile_for(cls: ClassSpec, weights: WeightSet) -> DegreeProfile:
    a = weights.anchor_weight()
    if cls.kind == "I":
        return DegreeProfile(cls.k, 0, -1, -1)
    if cls.kind == "II":
        return DegreeProfile(cls.k, 0, 1, 1)
    if cls.kind == "III":
        # deg F_n = floor(n/2), written with an anchor in the weight set.
        return DegreeProfile(a, a // 2, 1, -1)
    if cls.kind == "IV":
        return DegreeProfile(a, -(a // 2), -1, 1)
    raise IncompatibleClass("equal-degree profiles lie outside classes I-IV")


def _transitions_for(cls: ClassSpec, weights: WeightSet, unit=None) -> TransitionData:
    u = GaussianRational(1) if unit is None else unit
    if cls.kind == "I":
        # Degrees descend away from k: constant A above, constant B below.
        return TransitionData(cls.k, TailRule("A", u), TailRule("B", u))
    if cls.kind == "II":
        return TransitionData(cls.k, TailRule("B", u), TailRule("A", u))
    if cls.kind == "III":
        return TransitionData(weights.anchor_weight(), TailRule("B", u), TailRule("B", u))
    if cls.kind == "IV":
        return TransitionData(weights.anchor_weight(), TailRule("A", u), TailRule("A", u))
    raise IncompatibleClass("equal-degree profiles lie outside classes I-IV")


def construct(
    weights: WeightSet,
    cls: ClassSpec,
    casimir: Casimir,
    window: Window = DEFAULT_WINDOW,
) -> HCModuleFamily:
    """The canonical family of the given class, weight set and Casimir."""
    casimir = tuple(GaussianRational._coerce(c) for c in casimir)
    verdict = admissible_casimir(weights, casimir)
    if not verdict:
        raise InadmissibleCasimir(verdict.reason)
    if cls.kind in ("I", "II"):
        if not weights.contains(cls.k):
            raise IncompatibleClass(
                f"extremal weight {cls.k} lies outside the weight set"
            )
    if cls.kind == "EQUAL":
        raise IncompatibleClass("equal-degree profiles lie outside classes I-IV")
    module = HCModuleFamily(
        weights,
        _profile_for(cls, weights),
        _transitions_for(cls, weights),
        casimir,
    )
    report = validate(module, window)
    if not report.ok:
        raise IncompatibleClass(
            f"class {cls} is incompatible with this weight set and Casimir: "
            + "; ".join(v.message for v in report.violations[:3])
        )
    return module


def applicable_classes(weights: WeightSet, window: Window = DEFAULT_WINDOW):
    """Class specs that admit a valid family on the weight set (extremal
    weights for I/II are drawn from the window)."""
    out = [ClassSpec("III"), ClassSpec("IV")]
    lo, hi = window
    for k in weights.weights_in(window):
        out.append(ClassSpec("I", k))
        out.append(ClassSpec("II", k))
    return out


def classification_report(weights: WeightSet, cls: ClassSpec) -> dict:
    """Moduli description: which Casimir triples occur and how many families
    each supports."""
    forced = _forced_casimir(weights)
    if forced is not None:
        return {
            "weights": weights.to_json(),
            "class": str(cls),
            "casimir_moduli": "single point",
            "casimir": [str(c) for c in forced],
            "families_per_casimir": 1,
        }
    return {
        "weights": weights.to_json(),
        "class": str(cls),
        "casimir_moduli": "all triples (c1, c0, c-1) except constant ones "
        "with c0 = n(n+2) for a weight n of this parity",
        "excluded": f"c1 = c-1 = 0 and c0 in {{n(n+2) : n parity {weights.parity}}}",
        "families_per_casimir": 1,
    }


@dataclass
class ProbeResult:
    status: str  # 'pass' | 'fail' | 'inapplicable'
    trials: int = 0
    detail: str = ""

    def __bool__(self):
        return self.status == "pass"


def _random_unit(rng: random.Random) -> GaussianRational:
    while True:
        g = GaussianRational(rng.randint(-5, 5), rng.randint(-2, 2))
        if not g.is_zero():
            return g


def uniqueness_probe(
    weights: WeightSet,
    cls: ClassSpec,
    casimir: Casimir,
    trials: int = 25,
    seed: int = 0,
    window: Window = DEFAULT_WINDOW,
) -> ProbeResult:
    """Randomized check that the class determines the family up to
    isomorphism: rescaling each canonical section by a random nonzero scalar
    must land back in the same isomorphism class."""
    if cls.kind == "EQUAL":
        return ProbeResult(
            "inapplicable",
            0,
            "equal-degree profiles admit genuinely non-isomorphic variants; "
            "the probe only applies to classes I-IV",
        )
    canonical = construct(weights, cls, casimir, window)
    rng = random.Random(seed)
    for trial in range(trials):
        t = canonical.transitions
        for n in canonical.weights.transitions_in(window):
            u = _random_unit(rng)
            q = canonical.q_poly(n)
            other = q.scale((GaussianRational(4) * u).inverse())
            rule = canonical.transitions.rule_for(n)
            if rule.unit_on == "A":
                t = t.with_override(n, hcmod.LaurentPoly.constant(u), other)
            else:
                t = t.with_override(n, other, hcmod.LaurentPoly.constant(u))
        variant = hcmod.replace(canonical, transitions=t)
        result = iso_check(canonical, variant, window)
        if not result:
            return ProbeResult(
                "fail", trial + 1, f"trial {trial}: {result.obstruction}"
            )
    return ProbeResult("pass", trials)
