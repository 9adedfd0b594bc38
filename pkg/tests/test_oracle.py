"""Tests for the brute-force invariant oracle and certification."""

import pytest
from cyclotomic import root_of_unity
from expr_parser import parse_poly
from group import GroupSpec
from hilbert import Generator, GeneratorSet, gamma_basis
from oracle import (
    OracleInapplicable, certify, invariant_basis_in_degree,
    invariants_up_to_degree, subalgebra_span
)
from poly import LinearMap, VarTable, substitute_linear


Z4_TABLE = VarTable.build([("z", "zb")])
Z4 = GroupSpec(
    Z4_TABLE, (),
    LinearMap.diagonal(Z4_TABLE, [root_of_unity(1, 4), root_of_unity(3, 4)]),
    4,
)


def z4(src: str):
    return parse_poly(src, Z4_TABLE)


def generator_set(table, *polys):
    return GeneratorSet(table, [Generator(p, f"g{k}") for k, p in enumerate(polys)])


class TestInvariants:
    """Tests for invariants_up_to_degree."""

    def test_z4_rotation(self):
        space = invariants_up_to_degree(Z4, 4)
        assert space.dimensions() == {0: 1, 1: 0, 2: 1, 3: 0, 4: 3}
        assert space.bases[2] == [z4("z*zb")]
        assert space.bases[4] == [z4("z^4"), z4("z^2*zb^2"), z4("zb^4")]

    def test_o2_degree_two(self, o2_spec, poly_in):
        space = invariants_up_to_degree(o2_spec.group, 2)
        assert space.dimension(1) == 0
        assert space.bases[2] == [poly_in(o2_spec, "z*zb"), poly_in(o2_spec, "x^2")]

    def test_degree_zero_is_constants(self, d6_spec, poly_in):
        space = invariants_up_to_degree(d6_spec.group, 0)
        assert space.bases[0] == [poly_in(d6_spec, "1")]

    def test_basis_elements_are_invariant(self, d6_spec):
        g = d6_spec.group
        for b in invariant_basis_in_degree(g, 4):
            assert substitute_linear(b, g.delta) == b
            assert g.fixed_by_h(b)

    def test_inapplicable_generator(self, o2_spec):
        g = GroupSpec(o2_spec.group.table, (object(),), o2_spec.group.delta, 2)
        with pytest.raises(OracleInapplicable):
            invariants_up_to_degree(g, 2)


class TestSubalgebraSpan:
    """Tests for subalgebra_span."""

    def test_z4_generators_match_oracle(self):
        gens = generator_set(Z4_TABLE, z4("z*zb"), z4("z^4"), z4("zb^4"))
        span = subalgebra_span(gens, 4)
        assert span.dimensions() == invariants_up_to_degree(Z4, 4).dimensions()

    def test_empty_set_gives_constants(self):
        span = subalgebra_span(generator_set(Z4_TABLE), 3)
        assert span.dimensions() == {0: 1, 1: 0, 2: 0, 3: 0}

    def test_single_generator(self, o2_spec, poly_in):
        gens = generator_set(o2_spec.group.table, poly_in(o2_spec, "x^2"))
        span = subalgebra_span(gens, 4)
        assert span.bases[2] == [poly_in(o2_spec, "x^2")]
        assert span.bases[4] == [poly_in(o2_spec, "x^4")]
        assert span.dimension(3) == 0

    def test_non_homogeneous_generator_uses_components(self, o2_spec, poly_in):
        gens = generator_set(o2_spec.group.table, poly_in(o2_spec, "z*zb + x^2"))
        span = subalgebra_span(gens, 2)
        assert span.bases[2] == [poly_in(o2_spec, "z*zb"), poly_in(o2_spec, "x^2")]

    def test_span_is_contained_in_invariants(self, z3z3_spec):
        gens = gamma_basis(z3z3_spec.group, z3z3_spec.h_basis)
        span = subalgebra_span(gens, 4)
        oracle = invariants_up_to_degree(z3z3_spec.group, 4)
        assert span.dimensions() == oracle.dimensions()


class TestCertify:
    """Tests for certify."""

    @pytest.mark.parametrize("fixture", ["o2_spec", "z3z3_spec", "d6_spec"])
    def test_shipped_specs_pass(self, fixture, request):
        spec = request.getfixturevalue(fixture)
        gens = gamma_basis(spec.group, spec.h_basis)
        report = certify(spec.group, gens, 6)
        assert report.passed, report.table_lines()
        assert len(report.rows) == 7
        assert report.table_lines()[-1] == "PASS through degree 6"

    def test_missing_generator_fails_with_witness(self, z3z3_spec, poly_in):
        gens = gamma_basis(z3z3_spec.group, z3z3_spec.h_basis)
        gens = gens.without(poly_in(z3z3_spec, "z2^3"))
        report = certify(z3z3_spec.group, gens, 3)
        assert not report.passed
        assert report.failed_degree == 3
        assert report.witness == poly_in(z3z3_spec, "z2^3")
        lines = report.table_lines()
        assert lines[0].split() == ["degree", "dim_oracle", "dim_span", "status"]
        assert lines[4].split() == ["3", "4", "3", "FAIL"]
        assert lines[-2] == "FAIL at degree 3"
        assert lines[-1] == "witness (invariant outside the span): z2^3"

    def test_non_invariant_generator_is_reported(self, o2_spec, poly_in):
        gens = generator_set(o2_spec.group.table, poly_in(o2_spec, "z*zb"),
                             poly_in(o2_spec, "x^2"), poly_in(o2_spec, "x"))
        report = certify(o2_spec.group, gens, 2)
        assert report.failed_degree == 1
        assert report.witness == poly_in(o2_spec, "x")
        assert report.witness_kind == "span element that is not invariant"
