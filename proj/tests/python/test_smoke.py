# Copyright 2026 The fuzzyspace authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import fuzzyspace as fz

MU_DOC = "field gf 2\nambient 2\nlevel 1\n1 0\nlevel 1/2\n0 1\n"
ETA_DOC = "field gf 2\nambient 2\nlevel 1\n1 1\nlevel 1/2\n1 0\n"
ETAC_DOC = "field gf 2\nambient 2\nlevel 3/4\n1 0\n0 1\n"


@pytest.fixture
def mu():
    return fz.parse_flag(MU_DOC)


@pytest.fixture
def eta():
    return fz.parse_flag(ETA_DOC)


def test_rational_arithmetic_is_exact():
    half = fz.Rational(1, 2)
    third = fz.Rational(1, 3)
    assert str(half + third) == "5/6"
    assert fz.Rational("2/4") == half
    assert half.numerator == 1 and half.denominator == 2
    assert fz.Rational(1, 3) < fz.Rational(1, 2)
    with pytest.raises(fz.FuzzySpaceError):
        fz.Rational(1, 0)


def test_field_specs_round_trip():
    f7 = fz.FieldSpec.gf(7)
    assert str(f7) == "gf 7"
    assert fz.FieldSpec.parse("gf 7") == f7
    with pytest.raises(fz.FuzzySpaceError):
        fz.FieldSpec.gf(6)


def test_flag_parse_membership_dimension(mu):
    assert str(mu.dimension()) == "3/2"
    assert str(mu.membership([1, 0])) == "1"
    assert str(mu.membership([1, 1])) == "1/2"
    assert [str(t) for t in mu.image_set()] == ["1", "1/2"]
    assert mu.serialize() == MU_DOC


def test_level_subspaces(mu):
    line = fz.span(fz.FieldSpec.gf(2), 2, [[1, 0]])
    assert mu.level_subspace("3/4") == line
    assert mu.level_subspace("1/2").rank == 2
    low = fz.FuzzyFlag.parse(ETAC_DOC)
    assert low.level_subspace(1) is None


def test_iso_decision_and_witness(mu, eta):
    assert fz.are_isomorphic(mu, eta)
    w = fz.witness_isomorphism(mu, eta)
    ok, why = fz.verify_isomorphism(w, mu, eta)
    assert ok and why == ""
    assert fz.zadeh_image(w, mu) == eta
    assert w.rows() == [[1, 1], [1, 0]]


def test_equal_dimension_pair_is_not_isomorphic(mu):
    etac = fz.parse_flag(ETAC_DOC)
    assert mu.dimension() == etac.dimension()
    assert not fz.are_isomorphic(mu, etac)
    assert fz.brute_force_iso(mu, etac) is None
    with pytest.raises(fz.FuzzySpaceError):
        fz.witness_isomorphism(mu, etac)


def test_profile_reports_empty_level_sets(mu):
    profile = fz.dim_profile(mu)
    assert [(str(t), str(d)) for t, d in profile.entries()] == [("1", "1"), ("1/2", "3/2")]
    low = fz.dim_profile(fz.parse_flag(ETAC_DOC))
    assert low.query(1) is None
    assert str(low.query("3/4")) == "3/2"


def test_pointwise_tables_and_axiom_check():
    f2 = fz.FieldSpec.gf(2)
    table = fz.PointwiseTable(f2, 2, ["1", "1/2", "1", "1/2"])
    assert fz.check_axioms(table) is None
    flag = fz.from_pointwise(table)
    assert fz.expand_flag(flag) == table

    bad = fz.PointwiseTable(f2, 2, [1, 1, 1, 0])
    witness = fz.check_axioms(bad)
    assert witness is not None
    assert witness.kind == "subtraction"
    assert witness.x == [1, 0] and witness.y == [0, 1]
    with pytest.raises(fz.FuzzySpaceError):
        fz.from_pointwise(bad)


def test_enumeration_counts():
    f2 = fz.FieldSpec.gf(2)
    flags = fz.enumerate_flags(f2, 2, ["1", "1/2", "0"])
    assert len(flags) == 18
    assert len(fz.enumerate_invertible_maps(f2, 2)) == 6
    assert len(fz.enumerate_vectors(f2, 2)) == 4
    for flag in flags:
        assert fz.parse_flag(fz.serialize_flag(flag)) == flag


def test_budget_guard():
    with pytest.raises(fz.FuzzySpaceError):
        fz.enumerate_vectors(fz.FieldSpec.gf(7), 12)


def test_fuzzy_basis_and_transport(mu):
    basis = fz.fuzzy_basis(mu)
    assert [(v, str(g)) for v, g in basis.elements()] == [([1, 0], "1"), ([0, 1], "1/2")]
    f = fz.LinearMap(fz.FieldSpec.gf(2), [[1, 0], [1, 1]])
    moved = fz.transport_basis(f, basis)
    assert [(v, str(g)) for v, g in moved.elements()] == [([1, 1], "1"), ([0, 1], "1/2")]


def test_restriction(mu):
    diag = fz.span(fz.FieldSpec.gf(2), 2, [[1, 1]])
    restricted = mu.restrict_to(diag)
    assert restricted.ambient == 1
    assert [str(t) for t in restricted.image_set()] == ["1", "1/2"]
    assert str(restricted.dimension()) == "1/2"


def test_rationals_field_flags():
    q = fz.FieldSpec.rationals()
    line = fz.span(q, 2, [["1/2", "-3"]])
    full = fz.Subspace.full(q, 2)
    flag = fz.FuzzyFlag.validate(q, 2, [("1", line), ("1/4", full)])
    assert str(flag.dimension()) == "5/4"
    assert flag == fz.parse_flag(flag.serialize())


def test_cli_in_process(tmp_path):
    flag_file = tmp_path / "mu.flag"
    flag_file.write_text(MU_DOC)
    code, out, err = fz.run_command(["dim", str(flag_file)])
    assert (code, out, err) == (0, "3/2\n", "")
    code, out, _ = fz.run_command(["profile", str(flag_file)])
    assert code == 0
    assert out == "1 -> 1\n1/2 -> 3/2\n"
