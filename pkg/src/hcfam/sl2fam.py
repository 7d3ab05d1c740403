"""The sl(2) contraction family and its canonical rational sections.

Over the z-chart the family has the regular basis (h, x, y) with
[h, x] = 2x, [h, y] = -2y, [x, y] = z h; over the w-chart (w = 1/z) the same
relations with w in place of z.  The canonical weight-homogeneous sections

    H = h,   X = x,   Y = z^{-1} y          (z-chart coordinates)
    H = h,   X = w^{-1} x,  Y = y           (w-chart coordinates)

satisfy the genuine sl(2) relations [H, X] = 2X, [H, Y] = -2Y, [X, Y] = H at
every interior point, at the cost of poles: X and Y each span a degree -1
invertible subsheaf, H a degree 0 one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .scalars import (
    INFINITY,
    GaussianRational,
    RationalFunction,
    RF_ONE,
    RF_ZERO,
    RF_Z,
)
from .liefam import (
    Involution,
    LieFamily,
    contraction_family,
    sl2_algebra,
)
from . import hcmod


class NotHomogeneous(Exception):
    pass


@dataclass(frozen=True)
class Section:
    """A rational section of the family, in both charts' regular bases."""

    name: str
    weight: int
    z_coords: Tuple[RationalFunction, ...]
    w_coords: Tuple[RationalFunction, ...]

    def degree(self) -> int:
        """Degree of the invertible sheaf the section spans: the sum of its
        orders of vanishing over every point of the projective line."""
        total = 0
        for f in self.z_coords:
            if not f.is_zero():
                # Sum of finite-point orders of a rational function is
                # deg(num) - deg(den), each finite root counted once.
                total += f.num.degree() - f.den.degree()
        for f in self.w_coords:
            if not f.is_zero():
                total += f.ord_at(GaussianRational(0))  # order at w = 0, i.e. infinity
        return total


@dataclass(frozen=True)
class Sl2ContractionPair:
    """The contraction family of (sl2, SO(2)-ish torus) with its canonical
    sections and the Casimir section."""

    family: LieFamily
    H: Section
    X: Section
    Y: Section

    def sections(self) -> Tuple[Section, Section, Section]:
        return (self.H, self.X, self.Y)


def sl2_involution() -> Involution:
    """The involution fixing h and negating x, y (adjoint of diag(1, -1))."""
    return Involution.from_matrix(
        sl2_algebra(),
        [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
    )


def build_sl2_contraction() -> Sl2ContractionPair:
    family = contraction_family(sl2_algebra(), sl2_involution())
    zinv = RF_ONE / RF_Z
    winv_in_w = RF_ONE / RF_Z  # coordinate functions of the w-chart reuse z
    H = Section("H", 0, (RF_ONE, RF_ZERO, RF_ZERO), (RF_ONE, RF_ZERO, RF_ZERO))
    X = Section("X", 2, (RF_ZERO, RF_ONE, RF_ZERO), (RF_ZERO, winv_in_w, RF_ZERO))
    Y = Section("Y", -2, (RF_ZERO, RF_ZERO, zinv), (RF_ZERO, RF_ZERO, RF_ONE))
    pair = Sl2ContractionPair(family, H, X, Y)
    err = _relations_counterexample(pair)
    if err is not None:
        raise AssertionError(f"canonical sections violate sl(2) relations: {err}")
    return pair


# Weights of the regular basis vectors (h, x, y) under the torus action.
_BASIS_WEIGHTS = (0, 2, -2)


def weight_of_section(coords: Sequence[RationalFunction]) -> int:
    """Weight of a torus-homogeneous section given in the regular basis."""
    weights = {
        _BASIS_WEIGHTS[i] for i, c in enumerate(coords) if not c.is_zero()
    }
    if len(weights) != 1:
        raise NotHomogeneous(f"section mixes weights {sorted(weights)}")
    return weights.pop()


def _chart_bracket(constants, u, v):
    d = len(u)
    out = [RF_ZERO] * d
    for i in range(d):
        if u[i].is_zero():
            continue
        for j in range(d):
            if v[j].is_zero():
                continue
            f = u[i] * v[j]
            for k in range(d):
                c = constants[i][j][k]
                if not c.is_zero():
                    out[k] = out[k] + f * c
    return out


def _relations_counterexample(pair: Sl2ContractionPair) -> Optional[str]:
    """Check [H,X]=2X, [H,Y]=-2Y, [X,Y]=H in both charts."""
    fam = pair.family
    two = RationalFunction.constant(GaussianRational(2))
    cases = [
        ("[H,X]=2X", pair.H, pair.X, lambda s: [two * c for c in s]),
        ("[H,Y]=-2Y", pair.H, pair.Y, lambda s: [-(two * c) for c in s]),
        ("[X,Y]=H", pair.X, pair.Y, None),
    ]
    for chart, constants in (("z", fam.constants), ("w", fam.w_constants)):
        for name, a, b, scale in cases:
            u = a.z_coords if chart == "z" else a.w_coords
            v = b.z_coords if chart == "z" else b.w_coords
            got = _chart_bracket(constants, u, v)
            if scale is None:
                h = pair.H.z_coords if chart == "z" else pair.H.w_coords
                want = list(h)
            else:
                want = scale(v)
            if got != want:
                return f"{name} in {chart}-chart"
    return None


# ---------------------------------------------------------------------------
# The Casimir section
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CasimirSection:
    """C = H^2 + 2H + 4YX (equivalently H^2 - 2H + 4XY), a section of the
    enveloping-algebra sheaf with a first-order pole at 0 and at infinity."""

    ord_at_zero: int
    ord_at_infinity: int


def casimir_section(pair: Sl2ContractionPair) -> CasimirSection:
    """Orders of the Casimir at the two degenerate points, computed from the
    coefficient functions of its terms in the local regular bases."""
    # z-chart: C = h^2 + 2h + 4 z^{-1} y x; minimum term order at z = 0.
    yx_coeff_z = pair.Y.z_coords[2] * pair.X.z_coords[1]
    ord0 = min(0, yx_coeff_z.ord_at(GaussianRational(0)))
    # w-chart: C = h^2 + 2h + 4 w^{-1} y x; minimum term order at w = 0.
    yx_coeff_w = pair.Y.w_coords[2] * pair.X.w_coords[1]
    ordinf = min(0, yx_coeff_w.ord_at(GaussianRational(0)))
    return CasimirSection(ord0, ordinf)


class WeightMissing(Exception):
    pass


def casimir_acting_function(module: "hcmod.HCModuleFamily", n: int) -> RationalFunction:
    """The rational function by which the Casimir acts on the weight-n line.

    Computed with the ordering H^2 + 2H + 4YX when the transition above n
    exists, and with the reordered H^2 - 2H + 4XY otherwise; the two agree
    wherever both apply.
    """
    return _acting_function(module, n, prefer_up=True)


def casimir_acting_function_reordered(
    module: "hcmod.HCModuleFamily", n: int
) -> RationalFunction:
    return _acting_function(module, n, prefer_up=False)


def _acting_function(module, n, prefer_up):
    w = module.weights
    if not w.contains(n):
        raise WeightMissing(f"weight {n} is not in the module")
    zinv = RF_ONE / RF_Z
    four = RationalFunction.constant(GaussianRational(4))
    has_up = w.has_transition(n)
    has_down = w.has_transition(n - 2)
    if has_up and (prefer_up or not has_down):
        A, B = module.transition_polys(n)
        prod = RationalFunction(A) * RationalFunction(B)
        return RationalFunction.constant(GaussianRational(n * n + 2 * n)) + four * prod * zinv
    if has_down:
        A, B = module.transition_polys(n - 2)
        prod = RationalFunction(A) * RationalFunction(B)
        return RationalFunction.constant(GaussianRational(n * n - 2 * n)) + four * prod * zinv
    # Isolated weight: both X and Y act by zero.
    return RationalFunction.constant(GaussianRational(n * n + 2 * n))
