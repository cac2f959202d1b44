/*
 * Copyright 2026 The fuzzyspace authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include "test_helpers.hpp"

using namespace fuzzyspace;

namespace {

const FieldSpec F2 = FieldSpec::gf(2);

Vector v2(FieldSpec f, long long a, long long b) { return Vector::from_ints(f, {a, b}); }

FuzzyFlag mu_star() {
    return validate_flag(F2, 2,
                         {FlagEntry{Rational(1), span(F2, 2, {v2(F2, 1, 0)})},
                          FlagEntry{Rational(1, 2), Subspace::full(F2, 2)}});
}

FuzzyFlag eta_star() {
    return validate_flag(F2, 2,
                         {FlagEntry{Rational(1), span(F2, 2, {v2(F2, 1, 1)})},
                          FlagEntry{Rational(1, 2), Subspace::full(F2, 2)}});
}

// Same dimension as mu_star but a different image set.
FuzzyFlag eta_c() { return validate_flag(F2, 2, {FlagEntry{Rational(3, 4), Subspace::full(F2, 2)}}); }

} // namespace

TEST_CASE("zadeh_image on the frozen examples") {
    FuzzyFlag mu = mu_star();
    CHECK(flags_equal(zadeh_image(LinearMap::identity(F2, 2), mu), mu));

    LinearMap proj = LinearMap::from_matrix(Matrix::from_int_rows(F2, {{1, 0}}));
    FuzzyFlag image = zadeh_image(proj, mu);
    CHECK(image.ambient() == 1);
    CHECK(image.levels() == 1);
    CHECK(image.entries().front().level == Rational(1));
    CHECK(image.entries().front().space == Subspace::full(F2, 1));

    // Inclusion of GF(2) into GF(2)^2: empty fibers get grade 0.
    LinearMap incl = LinearMap::from_matrix(Matrix::from_int_rows(F2, {{1}, {0}}));
    FuzzyFlag constant = validate_flag(F2, 1, {FlagEntry{Rational(2, 3), Subspace::full(F2, 1)}});
    FuzzyFlag included = zadeh_image(incl, constant);
    REQUIRE(included.levels() == 2);
    CHECK(included.entries()[0].level == Rational(2, 3));
    CHECK(included.entries()[0].space == span(F2, 2, {v2(F2, 1, 0)}));
    CHECK(included.entries()[1].level == Rational(0));
    CHECK(included.entries()[1].space == Subspace::full(F2, 2));
}

TEST_CASE("zadeh_image agrees with the pointwise-sup oracle for every square map") {
    std::vector<FuzzyFlag> flags = enumerate_flags(F2, 2, {Rational(1), Rational(1, 2), Rational(0)});
    const std::uint64_t p = 2;
    for (std::uint64_t code = 0; code < 16; ++code) { // every 2x2 matrix, singular ones included
        std::vector<std::vector<long long>> rows{{0, 0}, {0, 0}};
        std::uint64_t rest = code;
        for (std::size_t k = 4; k-- > 0;) {
            rows[k / 2][k % 2] = static_cast<long long>(rest % p);
            rest /= p;
        }
        LinearMap f = LinearMap::from_matrix(Matrix::from_int_rows(F2, rows));
        for (const auto& mu : flags)
            CHECK(expand_flag(zadeh_image(f, mu)) == zadeh_pointwise(f, expand_flag(mu)));
    }
}

TEST_CASE("zadeh_image of non-square maps matches the oracle too") {
    LinearMap proj = LinearMap::from_matrix(Matrix::from_int_rows(F2, {{1, 0}}));
    LinearMap incl = LinearMap::from_matrix(Matrix::from_int_rows(F2, {{1}, {0}}));
    for (const auto& mu : enumerate_flags(F2, 2, {Rational(1), Rational(1, 2), Rational(0)}))
        CHECK(expand_flag(zadeh_image(proj, mu)) == zadeh_pointwise(proj, expand_flag(mu)));
    for (const auto& mu : enumerate_flags(F2, 1, {Rational(1), Rational(1, 2), Rational(0)}))
        CHECK(expand_flag(zadeh_image(incl, mu)) == zadeh_pointwise(incl, expand_flag(mu)));
}

TEST_CASE("transport_basis pushes bases through invertible maps") {
    FuzzyBasis b = fuzzy_basis(mu_star());
    CHECK(transport_basis(LinearMap::identity(F2, 2), b) == b);

    LinearMap f = LinearMap::from_matrix(Matrix::from_int_rows(F2, {{1, 0}, {1, 1}}));
    FuzzyBasis moved = transport_basis(f, b);
    REQUIRE(moved.size() == 2);
    CHECK(moved.elements()[0].vector == v2(F2, 1, 1));
    CHECK(moved.elements()[0].grade == Rational(1));
    CHECK(moved.elements()[1].vector == v2(F2, 0, 1));
    CHECK(moved.elements()[1].grade == Rational(1, 2));

    LinearMap singular = LinearMap::from_matrix(Matrix::from_int_rows(F2, {{1, 0}, {1, 0}}));
    CHECK_THROWS_AS(transport_basis(singular, b), Error);
}

TEST_CASE("transported bases stay fuzzy bases") {
    std::vector<FuzzyFlag> flags = enumerate_flags(F2, 2, {Rational(1), Rational(1, 2), Rational(0)});
    for (const auto& f : enumerate_invertible_maps(F2, 2))
        for (const auto& mu : flags)
            CHECK(testutil::is_fuzzy_basis(zadeh_image(f, mu), transport_basis(f, fuzzy_basis(mu))));
}

TEST_CASE("dim_profile on the frozen examples") {
    DimProfile p = dim_profile(mu_star());
    REQUIRE(p.entries().size() == 2);
    CHECK(p.entries()[0] == DimProfile::Entry{Rational(1), Rational(1)});
    CHECK(p.entries()[1] == DimProfile::Entry{Rational(1, 2), Rational(3, 2)});
    CHECK_FALSE(dim_profile(eta_c()).query(Rational(1)).has_value()); // EMPTY above 3/4
    CHECK(dim_profile(eta_c()).query(Rational(3, 4)) == Rational(3, 2));
    DimProfile constant = dim_profile(validate_flag(F2, 2, {FlagEntry{Rational(1), Subspace::full(F2, 2)}}));
    CHECK(constant.entries() == std::vector<DimProfile::Entry>{{Rational(1), Rational(2)}});
}

TEST_CASE("profile entries match restriction dimensions level by level") {
    for (const auto& mu : enumerate_flags(F2, 3, {Rational(1), Rational(2, 3), Rational(1, 3), Rational(0)})) {
        DimProfile p = dim_profile(mu);
        REQUIRE(p.entries().size() == mu.levels());
        for (std::size_t i = 0; i < mu.levels(); ++i) {
            CHECK(p.entries()[i].level == mu.entries()[i].level);
            CHECK(p.entries()[i].value == dimension(restrict_to(mu, mu.entries()[i].space)));
        }
    }
}

TEST_CASE("profile values strictly increase until a trailing zero level") {
    for (const auto& mu : enumerate_flags(F2, 2, {Rational(1), Rational(1, 2), Rational(0)})) {
        DimProfile profile = dim_profile(mu);
        const auto& es = profile.entries();
        for (std::size_t i = 0; i + 1 < es.size(); ++i) {
            if (es[i + 1].level.is_zero())
                CHECK(es[i].value == es[i + 1].value);
            else
                CHECK(es[i].value < es[i + 1].value);
        }
    }
}

TEST_CASE("are_isomorphic separates the equal-dimension pair") {
    CHECK(are_isomorphic(mu_star(), eta_star()));
    CHECK(dimension(mu_star()) == dimension(eta_c()));
    CHECK_FALSE(are_isomorphic(mu_star(), eta_c()));
    CHECK(are_isomorphic(mu_star(), mu_star()));
    CHECK_THROWS_AS(are_isomorphic(mu_star(), validate_flag(FieldSpec::gf(3), 1,
                                                            {FlagEntry{Rational(1),
                                                                       Subspace::full(FieldSpec::gf(3), 1)}})),
                    Error);
}

TEST_CASE("equal profiles over different ambient spaces are still not isomorphic") {
    FuzzyFlag zero2 = validate_flag(F2, 2, {FlagEntry{Rational(0), Subspace::full(F2, 2)}});
    FuzzyFlag zero3 = validate_flag(F2, 3, {FlagEntry{Rational(0), Subspace::full(F2, 3)}});
    CHECK(dim_profile(zero2) == dim_profile(zero3));
    CHECK_FALSE(are_isomorphic(zero2, zero3));
}

TEST_CASE("witness_isomorphism produces the frozen deterministic witness") {
    LinearMap w = witness_isomorphism(mu_star(), eta_star());
    // Chain pairing sends (1,0) to (1,1) and (0,1) to (1,0).
    CHECK(w.matrix() == Matrix::from_int_rows(F2, {{1, 1}, {1, 0}}));
    CHECK(verify_isomorphism(w, mu_star(), eta_star()));
    CHECK(flags_equal(zadeh_image(w, mu_star()), eta_star()));

    // Identical flags pair their own chains, so the witness is the identity.
    CHECK(witness_isomorphism(mu_star(), mu_star()).matrix() == Matrix::identity(F2, 2));

    CHECK_THROWS_AS(witness_isomorphism(mu_star(), eta_c()), Error);
    try {
        witness_isomorphism(mu_star(), eta_c());
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotIsomorphic);
    }
}

TEST_CASE("verify_isomorphism accepts real witnesses and rejects the rest") {
    LinearMap w = witness_isomorphism(mu_star(), eta_star());
    CHECK(verify_isomorphism(w, mu_star(), eta_star()));
    std::string why;
    CHECK_FALSE(verify_isomorphism(LinearMap::identity(F2, 2), mu_star(), eta_star(), &why));
    CHECK(why == "level subspace at 1 maps to the wrong subspace");
    LinearMap singular = LinearMap::from_matrix(Matrix::from_int_rows(F2, {{1, 0}, {1, 0}}));
    CHECK_FALSE(verify_isomorphism(singular, mu_star(), eta_star(), &why));
    CHECK(why == "map is not invertible");
    LinearMap wrong_shape = LinearMap::from_matrix(Matrix::from_int_rows(F2, {{1, 0}}));
    CHECK_FALSE(verify_isomorphism(wrong_shape, mu_star(), eta_star(), &why));
}

TEST_CASE("level sets commute with invertible images") {
    std::vector<Rational> grid{Rational(1), Rational(1, 2), Rational(0)};
    for (const auto& f : enumerate_invertible_maps(F2, 2))
        for (const auto& mu : enumerate_flags(F2, 2, grid))
            for (const auto& t : grid) {
                auto before = level_subspace(mu, t);
                auto after = level_subspace(zadeh_image(f, mu), t);
                REQUIRE(before.has_value() == after.has_value());
                if (before)
                    CHECK(apply_to_subspace(f.matrix(), *before) == *after);
            }
}

TEST_CASE("isomorphism invariants: dimension transfers, the converse fails") {
    std::vector<FuzzyFlag> flags = enumerate_flags(F2, 2, {Rational(1), Rational(1, 2), Rational(0)});
    for (const auto& a : flags)
        for (const auto& b : flags)
            if (are_isomorphic(a, b))
                CHECK(dimension(a) == dimension(b));
    // The recorded separation pair: equal dimensions, different profiles.
    CHECK(dimension(mu_star()) == dimension(eta_c()));
    CHECK_FALSE(are_isomorphic(mu_star(), eta_c()));
}

TEST_CASE("the decision, witness and brute force agree over GF(3)^2 too") {
    const FieldSpec F3 = FieldSpec::gf(3);
    std::vector<FuzzyFlag> flags = enumerate_flags(F3, 2, {Rational(1), Rational(1, 2), Rational(0)});
    REQUIRE(flags.size() == 22);
    for (const auto& a : flags)
        for (const auto& b : flags) {
            bool decided = are_isomorphic(a, b);
            CHECK(decided == brute_force_iso(a, b).has_value());
            if (decided) {
                LinearMap w = witness_isomorphism(a, b);
                CHECK(verify_isomorphism(w, a, b));
                CHECK(flags_equal(zadeh_image(w, a), b));
            }
        }
}

TEST_CASE("are_isomorphic is an equivalence relation on the enumerated population") {
    std::vector<FuzzyFlag> flags = enumerate_flags(F2, 2, {Rational(1), Rational(1, 2), Rational(0)});
    for (std::size_t i = 0; i < flags.size(); ++i) {
        CHECK(are_isomorphic(flags[i], flags[i]));
        for (std::size_t j = 0; j < flags.size(); ++j) {
            CHECK(are_isomorphic(flags[i], flags[j]) == are_isomorphic(flags[j], flags[i]));
            for (std::size_t k = 0; k < flags.size(); ++k)
                if (are_isomorphic(flags[i], flags[j]) && are_isomorphic(flags[j], flags[k]))
                    CHECK(are_isomorphic(flags[i], flags[k]));
        }
    }
}
