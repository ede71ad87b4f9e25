"""Deformations of Rota-Baxter operators: linear, higher order, equivalence,
Nijenhuis elements and obstructions."""

import random

import pytest

import lieyamaguti as ly
from conftest import Model, fr, random_matrix


@pytest.fixture(scope="module")
def trivial2(dim2: Model) -> ly.TruncatedDeformation:
    return ly.trivial_deformation_from(dim2.op, dim2.x)


class TestTruncatedDeformation:
    def test_normalizes_and_orders(self, dim2: Model):
        z = ly.Matrix.zero(2, 2)
        d = ly.TruncatedDeformation([dim2.op.t_matrix, z])
        assert isinstance(d.terms, tuple)
        assert d.order == 1

    def test_validation(self, dim2: Model):
        with pytest.raises(ValueError, match="constant term"):
            ly.TruncatedDeformation(())
        with pytest.raises(ValueError, match="shape 3x3"):
            ly.TruncatedDeformation((dim2.op.t_matrix, ly.Matrix.zero(3, 3)))


class TestLinearCheck:
    def test_trivial_direction_passes(self, dim2: Model, trivial2):
        report = ly.linear_deformation_check(dim2.op, trivial2.terms[1])
        assert report.valid

    def test_bad_direction_witness(self, dim2: Model):
        bad = ly.Matrix(((fr(0), fr(0)), (fr(1), fr(0))))
        report = ly.linear_deformation_check(dim2.op, bad)
        assert not report.valid
        first = report.first()
        assert first.identity == "binary@t^1"
        assert first.args == (0, 1)
        assert first.residual == (fr(0), fr(-1))
        assert len(report.violations) == 3

    def test_matches_sampled_parameters(self, dim4: Model):
        # a direction is a linear deformation exactly when T + t*direction
        # stays an operator for generic t
        rng = random.Random(17)
        a, r, t0 = dim4.algebra, dim4.rep, dim4.op.t_matrix
        for _ in range(8):
            direction = random_matrix(rng, 4, 4, span=2, den=2)
            report = ly.linear_deformation_check(dim4.op, direction)
            sampled = all(
                ly.check_rbo(a, r, t0 + direction.scale(fr(t))).valid
                for t in (1, 2, 3))
            assert report.valid == sampled

    def test_shape_check(self, dim2: Model):
        with pytest.raises(ValueError):
            ly.linear_deformation_check(dim2.op, ly.Matrix.zero(3, 3))


class TestNijenhuisElements:
    def test_small_fixture_element(self, dim2: Model):
        report = ly.nijenhuis_element_check(dim2.op, dim2.x)
        assert report.is_nijenhuis
        assert [lab for lab, _ in report.conditions] == [
            "bracket-binary", "bracket-ternary-quadratic",
            "bracket-ternary-cubic", "mu-quadratic", "mu-cubic", "closing"]
        # adjoint representation: the reduced condition set is also reported
        assert report.plain_conditions is not None
        assert [lab for lab, _ in report.plain_conditions] == [
            "bracket-binary", "bracket-ternary-quadratic",
            "bracket-ternary-cubic", "closing"]
        assert all(r.valid for _, r in report.plain_conditions)

    def test_plain_conditions_reserved_for_adjoint(self, dim2: Model):
        zr = ly.zero_rep(dim2.algebra, 2)
        zo = ly.RelRBO.build(dim2.algebra, zr, ly.Matrix.zero(2, 2))
        report = ly.nijenhuis_element_check(zo, ly.Wedge2.basis(2, 0, 1))
        assert report.plain_conditions is None
        assert report.is_nijenhuis

    def test_failing_element(self):
        consts = {(0, 1): (fr(0), fr(2), fr(0)),
                  (0, 2): (fr(0), fr(0), fr(-2)),
                  (1, 2): (fr(1), fr(0), fr(0))}
        a = ly.lya_from_lie(3, consts)
        r = ly.adjoint_rep(a)
        o = ly.RelRBO.build(a, r, ly.Matrix.zero(3, 3))
        w = ly.Wedge2.basis(3, 0, 1)
        report = ly.nijenhuis_element_check(o, w)
        assert not report.is_nijenhuis
        failing = [(lab, ar.first()) for lab, ar in report.conditions
                   if not ar.valid]
        label, violation = failing[0]
        assert label == "bracket-binary"
        assert violation.args == (0, 2)
        assert violation.residual == (fr(0), fr(16), fr(0))
        with pytest.raises(ly.NotNijenhuisElement) as info:
            ly.trivial_deformation_from(o, w)
        assert info.value.label == "bracket-binary"
        assert info.value.violation.args == (0, 2)


class TestTrivialDeformation:
    def test_terms(self, dim2: Model, trivial2):
        assert trivial2.order == 1
        assert trivial2.terms[0] == dim2.op.t_matrix
        assert trivial2.terms[1].entries == ((fr(0), fr(-1)), (fr(0), fr(0)))

    def test_direction_is_delta_of_element(self, dim2: Model, trivial2):
        assert trivial2.terms[1] == ly.rbo_delta0(dim2.op, dim2.x).as_matrix()

    def test_equivalent_to_constant_deformation(self, dim2: Model, trivial2):
        base = ly.TruncatedDeformation((dim2.op.t_matrix, ly.Matrix.zero(2, 2)))
        report = ly.equivalence_check_linear(dim2.op, base, trivial2, dim2.x)
        assert report.valid


class TestEquivalence:
    def test_input_validation(self, dim2: Model, trivial2):
        t, z = dim2.op.t_matrix, ly.Matrix.zero(2, 2)
        with pytest.raises(ValueError, match="linear deformations"):
            ly.equivalence_check_linear(
                dim2.op, ly.TruncatedDeformation((t,)), trivial2, dim2.x)
        with pytest.raises(ValueError, match="start at the operator"):
            ly.equivalence_check_linear(
                dim2.op, ly.TruncatedDeformation((z, z)), trivial2, dim2.x)

    def test_wrong_witness_detected(self, dim2: Model):
        # X relates T to its own trivial deformation, not to that of 2X
        base = ly.TruncatedDeformation((dim2.op.t_matrix, ly.Matrix.zero(2, 2)))
        two_x = ly.Wedge2.from_dict(2, {(0, 1): fr(2)})
        other = ly.trivial_deformation_from(dim2.op, two_x)
        report = ly.equivalence_check_linear(dim2.op, base, other, dim2.x)
        assert not report.valid
        first = report.first()
        assert first.identity == "t-intertwine@t^1"
        assert first.args == (1,)
        assert first.residual == (fr(1), fr(0))


class TestOrderN:
    def test_must_start_at_operator(self, dim2: Model):
        z = ly.Matrix.zero(2, 2)
        with pytest.raises(ValueError, match="start at the operator"):
            ly.order_n_check(dim2.op, ly.TruncatedDeformation((z, z)))

    def test_reports_first_failing_coefficient(self, dim2: Model):
        bad = ly.TruncatedDeformation(
            (dim2.op.t_matrix, ly.Matrix(((fr(0), fr(0)), (fr(1), fr(0))))))
        report = ly.order_n_check(dim2.op, bad)
        assert not report.valid
        assert report.first().identity == "binary@t^1"

    def test_valid_orders(self, dim2: Model, trivial2):
        assert ly.order_n_check(dim2.op, trivial2).valid
        single = ly.TruncatedDeformation((dim2.op.t_matrix,))
        assert ly.order_n_check(dim2.op, single).valid


class TestObstruction:
    def test_trivial_deformation_extends_freely(self, dim2: Model, trivial2):
        res = ly.obstruction(dim2.op, trivial2)
        assert res.ob.is_zero()
        assert res.is_cocycle and res.trivial
        assert res.witness is not None and res.witness.is_zero()
        d2 = ly.extend_deformation(dim2.op, trivial2)
        assert d2 is not None and d2.order == 2
        assert d2.terms[-1].is_zero()
        d3 = ly.extend_deformation(dim2.op, d2)
        assert d3 is not None and d3.order == 3
        assert ly.order_n_check(dim2.op, d3).valid

    def test_gate_on_invalid_deformation(self, dim2: Model):
        bad = ly.TruncatedDeformation(
            (dim2.op.t_matrix, ly.Matrix(((fr(0), fr(0)), (fr(1), fr(0))))))
        with pytest.raises(ly.NotOrderN) as info:
            ly.obstruction(dim2.op, bad)
        assert info.value.violation.identity == "binary@t^1"
        with pytest.raises(ly.NotOrderN):
            ly.extend_deformation(dim2.op, bad)

    def test_order_zero(self, dim2: Model):
        single = ly.TruncatedDeformation((dim2.op.t_matrix,))
        res = ly.obstruction(dim2.op, single)
        assert res.ob.is_zero() and res.trivial


class TestPreLyDeformationTerms:
    def test_small_fixture_tables(self, dim2: Model, trivial2):
        phi, om1, om2 = ly.pre_ly_deformation_terms(dim2.op, trivial2.terms[1])
        assert phi[1][1] == (fr(-1), fr(0))
        assert phi[0][0] == phi[0][1] == phi[1][0] == (fr(0), fr(0))
        nonzero1 = {(i, j, k): om1[i][j][k]
                    for i in range(2) for j in range(2) for k in range(2)
                    if om1[i][j][k] != (fr(0), fr(0))}
        assert nonzero1 == {(1, 1, 1): (fr(1), fr(0))}
        assert all(om2[i][j][k] == (fr(0), fr(0))
                   for i in range(2) for j in range(2) for k in range(2))

    def test_gate(self, dim2: Model):
        bad = ly.Matrix(((fr(0), fr(0)), (fr(1), fr(0))))
        with pytest.raises(ly.NotLinearDeformation) as info:
            ly.pre_ly_deformation_terms(dim2.op, bad)
        assert info.value.violation.identity == "binary@t^1"

    def test_matches_deformed_products_at_samples(self, dim2: Model, trivial2):
        a, r = dim2.algebra, dim2.rep
        frak_t = trivial2.terms[1]
        phi, om1, om2 = ly.pre_ly_deformation_terms(dim2.op, frak_t)
        base_b, base_t = ly.pre_ly_products(dim2.op)
        for t in (1, 2, 3):
            ot = ly.RelRBO.build(a, r, dim2.op.t_matrix + frak_t.scale(fr(t)))
            def_b, def_t = ly.pre_ly_products(ot)
            for i in range(2):
                for j in range(2):
                    assert def_b[i][j] == ly.vadd(
                        base_b[i][j], ly.vscale(fr(t), phi[i][j]))
                    for k in range(2):
                        expect = ly.vadd(
                            base_t[i][j][k],
                            ly.vadd(ly.vscale(fr(t), om1[i][j][k]),
                                    ly.vscale(fr(t * t), om2[i][j][k])))
                        assert def_t[i][j][k] == expect


class TestRigidity:
    def test_small_fixture_probe(self, dim2: Model):
        probe = ly.rigidity_probe(dim2.op)
        assert probe.dim_z1 == 3
        assert probe.dim_delta_image == 1
        assert not probe.nijenhuis_image_contained
