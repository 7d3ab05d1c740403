"""Tests for Lie algebras and families over the line."""

import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcfam.scalars import (
    INFINITY,
    GaussianRational,
    LaurentPoly,
    PoleAtPoint,
    RF_ONE,
    RF_Z,
    RF_ZERO,
    RationalFunction,
)
from hcfam.liefam import (
    FamilyMorphism,
    Involution,
    InvalidInvolution,
    LieAlgebra,
    LieFamily,
    NotALieAlgebra,
    abelian_algebra,
    ad_diag_involution,
    base_change,
    check_morphism,
    constant_family,
    contraction_family,
    deformation_family,
    fiber,
    fiber_invariants,
    glue_consistent,
    gl2_algebra,
    jacobi_check,
    matrix_algebra,
    scaled_bracket_family,
    sl2_algebra,
)
from hcfam.sl2fam import sl2_involution

QI = GaussianRational


class TestLieAlgebra:
    def test_sl2_relations(self):
        g = sl2_algebra()
        h, x, y = [[QI(1 if i == j else 0) for i in range(3)] for j in range(3)]
        assert g.bracket(h, x) == [QI(0), QI(2), QI(0)]
        assert g.bracket(h, y) == [QI(0), QI(0), QI(-2)]
        assert g.bracket(x, y) == [QI(1), QI(0), QI(0)]

    def test_jacobi_rejects_corruption(self):
        g = sl2_algebra()
        bad = [[[c for c in row] for row in plane] for plane in g.constants]
        bad[0][1][2] = QI(1)
        with pytest.raises(NotALieAlgebra):
            LieAlgebra.from_constants(g.labels, bad)

    def test_antisymmetry_enforced(self):
        tbl = [[[QI(1)]]]
        with pytest.raises(NotALieAlgebra):
            LieAlgebra.from_constants(("e",), tbl)

    def test_matrix_algebra_matches_sl2(self):
        h = ((QI(1), QI(0)), (QI(0), QI(-1)))
        x = ((QI(0), QI(1)), (QI(0), QI(0)))
        y = ((QI(0), QI(0)), (QI(1), QI(0)))
        g = matrix_algebra(("H", "X", "Y"), [h, x, y])
        assert g.constants == sl2_algebra().constants

    def test_gl2_dimension_and_jacobi(self):
        g = gl2_algebra()
        assert g.rank == 4
        assert g.jacobi_counterexample() is None


class TestInvolution:
    def test_eigenspace_split(self):
        theta = sl2_involution()
        assert len(theta.k_vectors) == 1
        assert len(theta.p_vectors) == 2

    def test_non_involution_rejected(self):
        with pytest.raises(InvalidInvolution):
            Involution.from_matrix(sl2_algebra(), [[2, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_non_automorphism_rejected(self):
        # Negating only X respects theta^2 = 1 but not the bracket.
        with pytest.raises(InvalidInvolution):
            Involution.from_matrix(sl2_algebra(), [[1, 0, 0], [0, -1, 0], [0, 0, 1]])


FAMILY_BUILDERS = [
    lambda: constant_family(sl2_algebra()),
    lambda: scaled_bracket_family(sl2_algebra(), 1),
    lambda: scaled_bracket_family(sl2_algebra(), 3),
    lambda: contraction_family(sl2_algebra(), sl2_involution()),
    lambda: deformation_family(sl2_algebra(), sl2_involution()),
]


class TestFamilies:
    @pytest.mark.parametrize("build", FAMILY_BUILDERS)
    def test_jacobi_symbolic(self, build):
        assert jacobi_check(build()) is None

    @pytest.mark.parametrize("build", FAMILY_BUILDERS)
    def test_two_chart_gluing(self, build):
        fam = build()
        if fam.w_constants is not None:
            assert glue_consistent(fam)

    def test_corrupted_family_witnessed(self):
        fam = contraction_family(sl2_algebra(), sl2_involution())
        tbl = [[[c for c in row] for row in plane] for plane in fam.constants]
        tbl[1][2][0] = tbl[1][2][0] + RF_ONE
        from hcfam.liefam import _freeze

        bad = dataclasses.replace(fam, constants=_freeze(tbl))
        assert jacobi_check(bad) is not None

    def test_contraction_fibers(self):
        fam = contraction_family(sl2_algebra(), sl2_involution())
        for p in (GaussianRational(0), INFINITY):
            inv = fiber_invariants(fiber(fam, p))
            assert inv == {"dim_derived": 2, "dim_center": 0, "solvable": True}
        inv = fiber_invariants(fiber(fam, GaussianRational(5)))
        assert inv == {"dim_derived": 3, "dim_center": 0, "solvable": False}

    def test_scaled_family_special_fiber_abelian(self):
        fam = scaled_bracket_family(sl2_algebra(), 1)
        inv = fiber_invariants(fiber(fam, GaussianRational(0)))
        assert inv["dim_derived"] == 0 and inv["solvable"]

    def test_fiber_at_infinity_needs_second_chart(self):
        # Serialization keeps only the z-chart, so the point at infinity is
        # out of reach afterwards.
        fam = LieFamily.from_json(constant_family(abelian_algebra(2)).to_json())
        with pytest.raises(PoleAtPoint):
            fiber(fam, INFINITY)

    def test_base_change_square(self):
        con = contraction_family(sl2_algebra(), sl2_involution())
        pulled = base_change(con, LaurentPoly.monomial(2))
        # The p-p entry z becomes z^2.
        assert pulled.constants[1][2][0] == RF_Z * RF_Z

    def test_json_round_trip(self):
        fam = contraction_family(sl2_algebra(), sl2_involution())
        back = LieFamily.from_json(fam.to_json())
        assert back.constants == fam.constants
        assert back.labels == fam.labels


class TestMorphisms:
    def test_identity_is_morphism(self):
        fam = contraction_family(sl2_algebra(), sl2_involution())
        assert check_morphism(FamilyMorphism.identity(3), fam, fam) is None

    def test_pullback_matches_deformation(self):
        con = contraction_family(sl2_algebra(), sl2_involution())
        de = deformation_family(sl2_algebra(), sl2_involution())
        pulled = base_change(con, LaurentPoly.monomial(2))
        assert check_morphism(FamilyMorphism.identity(3), de, pulled) is None

    def test_p_scaling_embeds_deformation_in_constant_family(self):
        de = deformation_family(sl2_algebra(), sl2_involution())
        phi = FamilyMorphism.diagonal([RF_ONE, RF_Z, RF_Z])
        assert check_morphism(phi, de, constant_family(sl2_algebra())) is None

    def test_identity_fails_between_contraction_and_deformation(self):
        con = contraction_family(sl2_algebra(), sl2_involution())
        de = deformation_family(sl2_algebra(), sl2_involution())
        witness = check_morphism(FamilyMorphism.identity(3), con, de)
        assert witness is not None
        i, j, residual = witness
        assert any(not r.is_zero() for r in residual)

    @given(st.integers(1, 4))
    @settings(max_examples=4, deadline=None)
    def test_scaled_bracket_glues_for_any_exponent(self, m):
        fam = scaled_bracket_family(sl2_algebra(), m)
        assert glue_consistent(fam)
        assert fam.transition_powers == (2 * m, 2 * m, 2 * m)


class TestAdDiagInvolution:
    def test_gl2_split(self):
        e11 = ((QI(1), QI(0)), (QI(0), QI(0)))
        e12 = ((QI(0), QI(1)), (QI(0), QI(0)))
        e21 = ((QI(0), QI(0)), (QI(1), QI(0)))
        e22 = ((QI(0), QI(0)), (QI(0), QI(1)))
        theta = ad_diag_involution(gl2_algebra(), [e11, e12, e21, e22], [QI(1), QI(-1)])
        assert len(theta.k_vectors) == 2
        assert len(theta.p_vectors) == 2
        fam = contraction_family(gl2_algebra(), theta)
        assert jacobi_check(fam) is None
        assert glue_consistent(fam)
