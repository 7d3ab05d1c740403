"""Tests for the sl(2) contraction pair and its Casimir."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcfam.scalars import GaussianRational, RationalFunction, RF_ONE, RF_Z, RF_ZERO
from hcfam.sl2fam import (
    NotHomogeneous,
    build_sl2_contraction,
    casimir_acting_function,
    casimir_acting_function_reordered,
    casimir_section,
    weight_of_section,
    WeightMissing,
)
from hcfam.hcmod import WeightSet, casimir_triple
from hcfam.classify import ClassSpec, construct


@pytest.fixture(scope="module")
def pair():
    return build_sl2_contraction()


class TestCanonicalSections:
    def test_weights(self, pair):
        assert pair.H.weight == 0
        assert pair.X.weight == 2
        assert pair.Y.weight == -2

    def test_degrees_from_order_ledgers(self, pair):
        assert pair.H.degree() == 0
        assert pair.X.degree() == -1
        assert pair.Y.degree() == -1

    def test_weight_of_section(self, pair):
        assert weight_of_section(pair.X.z_coords) == 2
        assert weight_of_section(pair.Y.w_coords) == -2
        assert weight_of_section((RF_ONE, RF_ZERO, RF_ZERO)) == 0
        with pytest.raises(NotHomogeneous):
            weight_of_section((RF_ONE, RF_Z, RF_ZERO))

    def test_relations_hold_in_both_charts(self, pair):
        # build_sl2_contraction verifies the relations at construction time;
        # a doctored section must be caught by the same check.
        from hcfam.sl2fam import Section, Sl2ContractionPair, _relations_counterexample
        import dataclasses

        broken = dataclasses.replace(pair, X=dataclasses.replace(pair.X, z_coords=(RF_ZERO, RF_Z, RF_ZERO)))
        assert _relations_counterexample(broken) is not None
        assert _relations_counterexample(pair) is None


class TestCasimir:
    def test_orders_at_degenerate_points(self, pair):
        cas = casimir_section(pair)
        assert cas.ord_at_zero == -1
        assert cas.ord_at_infinity == -1

    @pytest.mark.parametrize(
        "weights,cls",
        [
            (WeightSet("even"), ClassSpec("III")),
            (WeightSet("odd"), ClassSpec("IV")),
            (WeightSet("finite", 4), ClassSpec("III")),
        ],
    )
    def test_acting_function_matches_triple(self, weights, cls):
        if weights.kind == "finite":
            cas = casimir_triple(0, 24, 0)
        else:
            cas = casimir_triple(1, 2, 3)
        module = construct(weights, cls, cas, (-8, 8))
        c1, c0, cm1 = cas
        expected = (
            RationalFunction.constant(c1) * RF_Z
            + RationalFunction.constant(c0)
            + RationalFunction.constant(cm1) / RF_Z
        )
        for n in weights.weights_in((-8, 8)):
            assert casimir_acting_function(module, n) == expected

    @given(st.integers(-8, 8))
    @settings(max_examples=17, deadline=None)
    def test_orderings_agree(self, n):
        module = construct(WeightSet("even"), ClassSpec("III"), casimir_triple(0, 0, 1), (-10, 10))
        m = n * 2  # stay on the even lattice
        if not module.weights.contains(m):
            return
        assert casimir_acting_function(module, m) == casimir_acting_function_reordered(module, m)

    def test_missing_weight_rejected(self):
        module = construct(WeightSet("even"), ClassSpec("III"), casimir_triple(0, 0, 1))
        with pytest.raises(WeightMissing):
            casimir_acting_function(module, 3)

    def test_isolated_weight(self):
        weights = WeightSet("finite", 0)
        module = construct(weights, ClassSpec("III"), casimir_triple(0, 0, 0))
        f = casimir_acting_function(module, 0)
        assert f == RF_ZERO
