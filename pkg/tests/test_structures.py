"""Algebras, representations, semidirect sums and Nijenhuis operators."""

import random

import pytest

import lieyamaguti as ly
from conftest import (
    LIE_FAMILIES,
    Model,
    conjugated_lie_lya,
    corrupt_rep,
    fr,
    random_valid_pair,
)


class TestLYAlgebra:
    def test_fixtures_are_valid(self, dim2: Model, dim4: Model):
        assert ly.check_lya(dim2.algebra).valid
        assert ly.check_lya(dim4.algebra).valid

    def test_broken_algebra_witness(self, broken_algebra):
        report = ly.check_lya(broken_algebra)
        assert not report.valid
        first = report.first()
        assert first.identity == "binary-derivation"
        assert first.args == (0, 1, 0, 1)
        assert first.residual == (fr(-1), fr(0))
        assert len(report.violations) == 8

    def test_skew_extension_of_constants(self, dim2: Model):
        a = dim2.algebra
        e1, e2 = a.basis(0), a.basis(1)
        assert a.bracket(e1, e2) == (fr(1), fr(0))
        assert a.bracket(e2, e1) == (fr(-1), fr(0))
        assert a.bracket_basis(1, 0) == (fr(-1), fr(0))
        assert a.triple(e2, e1, e2) == (fr(-1), fr(0))
        assert a.triple_basis(0, 0, 1) == (fr(0), fr(0))
        assert a.basis_names == ("e1", "e2")

    def test_constructor_validation(self):
        with pytest.raises(ValueError, match="i < j"):
            ly.LYAlgebra(2, binary={(1, 0): (fr(1), fr(0))})
        with pytest.raises(ValueError, match="i < j"):
            ly.LYAlgebra(2, ternary={(1, 0, 0): (fr(1), fr(0))})
        with pytest.raises(ValueError, match="length"):
            ly.LYAlgebra(2, binary={(0, 1): (fr(1),)})
        with pytest.raises(ValueError, match="out of range"):
            ly.LYAlgebra(2, binary={(0, 5): (fr(1), fr(0))})

    def test_zero_values_dropped(self):
        a = ly.LYAlgebra(2, binary={(0, 1): (fr(0), fr(0))})
        assert a.binary_constants() == {}


class TestLyaFromLie:
    def test_lifts_all_families(self):
        rng = random.Random(7)
        for family in sorted(LIE_FAMILIES):
            for _ in range(3):
                a = conjugated_lie_lya(rng, family)
                assert ly.check_lya(a).valid, family

    def test_non_jacobi_bracket_rejected(self):
        bad = {(0, 1): (fr(0), fr(0), fr(1)),
               (1, 2): (fr(1), fr(0), fr(0)),
               (0, 2): (fr(-1), fr(0), fr(0))}
        with pytest.raises(ly.JacobiViolation) as info:
            ly.lya_from_lie(3, bad)
        assert info.value.triple == (0, 1, 2)
        assert info.value.residual == (fr(0), fr(0), fr(1))

    def test_ternary_is_nested_bracket(self):
        rng = random.Random(11)
        a = conjugated_lie_lya(rng, "sl2")
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    nested = a.bracket(a.bracket_basis(i, j), a.basis(k))
                    assert a.triple_basis(i, j, k) == nested


class TestAdjointRep:
    def test_matrices_on_small_fixture(self, dim2: Model):
        r = dim2.rep
        assert r.rho(0).entries == ((fr(0), fr(1)), (fr(0), fr(0)))
        assert r.rho(1).entries == ((fr(-1), fr(0)), (fr(0), fr(0)))
        assert r.mu(0, 1).entries == ((fr(0), fr(-1)), (fr(0), fr(0)))
        assert r.mu(1, 0).is_zero()
        assert r.mu(1, 1).entries == ((fr(1), fr(0)), (fr(0), fr(0)))
        assert r.d_basis(0, 1).entries == ((fr(0), fr(1)), (fr(0), fr(0)))

    def test_d_variants_agree(self, dim2: Model):
        r = dim2.rep
        e1, e2 = dim2.algebra.basis(0), dim2.algebra.basis(1)
        assert r.d_of(e1, e2) == r.d_basis(0, 1) == ly.d_map(r, 0, 1)
        assert r.d_of(e2, e1) == r.d_basis(0, 1).scale(fr(-1))

    def test_valid_on_fixtures(self, dim2: Model, dim4: Model):
        assert ly.check_representation(dim2.rep).valid
        assert ly.check_representation(dim4.rep).valid

    def test_rejects_invalid_algebra(self, broken_algebra):
        with pytest.raises(ly.InvalidAlgebra, match="binary-derivation"):
            ly.adjoint_rep(broken_algebra)

    def test_linearity_of_rho_and_mu(self, dim2: Model):
        r = dim2.rep
        x = (fr(2), fr(-3))
        y = (fr(1), fr(1, 2))
        expected = r.rho(0).scale(x[0]) + r.rho(1).scale(x[1])
        assert r.rho_of(x) == expected
        mixed = r.mu_of(x, y)
        by_parts = ly.Matrix.zero(2, 2)
        for i in range(2):
            for j in range(2):
                by_parts = by_parts + r.mu(i, j).scale(x[i] * y[j])
        assert mixed == by_parts


class TestCheckRepresentation:
    def test_bad_rep_witness(self, bad_rep):
        report = ly.check_representation(bad_rep)
        assert not report.valid
        first = report.first()
        assert first.identity == "mu-bracket-right"
        assert first.args == (1, 0, 1, 1)
        assert first.residual == (fr(-1), fr(0))
        assert len(report.violations) == 8

    def test_zero_rep_valid(self, dim2: Model):
        for k in (1, 3):
            assert ly.check_representation(ly.zero_rep(dim2.algebra, k)).valid

    def test_random_corruptions_mostly_caught(self):
        rng = random.Random(23)
        caught = 0
        for _ in range(20):
            a, r = random_valid_pair(rng)
            assert ly.check_representation(r).valid
            if not ly.check_representation(corrupt_rep(rng, r)).valid:
                caught += 1
        assert caught >= 10


class TestSemidirect:
    def test_shape_and_names(self, dim2: Model):
        sd = ly.semidirect(dim2.algebra, dim2.rep)
        assert sd.dim == 4
        assert sd.basis_names == ("e1", "e2", "u1", "u2")

    def test_valid_iff_representation_valid(self, dim2: Model, bad_rep):
        assert ly.check_lya(ly.semidirect(dim2.algebra, dim2.rep)).valid
        assert not ly.check_lya(ly.semidirect(dim2.algebra, bad_rep)).valid

    def test_subalgebra_and_action(self, dim2: Model):
        a, r = dim2.algebra, dim2.rep
        sd = ly.semidirect(a, r)
        # g x g block reproduces the original bracket
        assert sd.bracket_basis(0, 1)[:2] == a.bracket_basis(0, 1)
        assert sd.bracket_basis(0, 1)[2:] == (fr(0), fr(0))
        # g acting on V is rho
        assert sd.bracket_basis(0, 3)[2:] == tuple(r.rho(0).column(1))
        # V x V brackets vanish
        assert sd.bracket_basis(2, 3) == (fr(0),) * 4


class TestNijenhuisOperators:
    def test_identity_and_projection(self, dim2: Model):
        a = dim2.algebra
        assert ly.nijenhuis_operator_check(a, ly.Matrix.identity(2)).valid
        proj = ly.Matrix(((fr(0), fr(0)), (fr(0), fr(1))))
        assert ly.nijenhuis_operator_check(a, proj).valid
        deformed = ly.deformed_brackets(a, proj)
        assert deformed.binary_constants() == {(0, 1): (fr(1), fr(0))}
        assert deformed.ternary_constants() == {(0, 1, 1): (fr(1), fr(0))}

    def test_failing_operator(self, dim4: Model):
        n = ly.Matrix(((fr(-1), fr(2), fr(-2), fr(0)),
                       (fr(-2), fr(1), fr(1), fr(1)),
                       (fr(1), fr(-1), fr(-2), fr(1)),
                       (fr(-2), fr(1), fr(1), fr(2))))
        report = ly.nijenhuis_operator_check(dim4.algebra, n)
        assert not report.valid
        first = report.first()
        assert first.identity == "nijenhuis-binary"
        assert first.args == (0, 1)
        assert first.residual == (fr(0), fr(8), fr(-2), fr(18))
        with pytest.raises(ly.NotNijenhuis):
            ly.deformed_brackets(dim4.algebra, n)

    def test_shape_check(self, dim2: Model):
        with pytest.raises(ValueError):
            ly.nijenhuis_operator_check(dim2.algebra, ly.Matrix.identity(3))


class TestReports:
    def test_report_helpers(self, broken_algebra):
        ok = ly.check_lya(ly.LYAlgebra(2))
        assert ok.valid and ok.first() is None and ok.violations == ()
        bad = ly.check_lya(broken_algebra)
        assert bad.first() == bad.violations[0]
