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
#include "fuzzyspace/flag.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace fuzzyspace {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > limit / base)
            fail(Errc::BudgetExceeded, "space too large to enumerate");
        out *= base;
    }
    return out;
}

} // namespace

FuzzyFlag FuzzyFlag::validate(FieldSpec field, std::size_t ambient, std::vector<FlagEntry> entries) {
    if (entries.empty())
        fail(Errc::TopNotAmbient, "a flag needs at least one level");
    for (const auto& e : entries) {
        if (!e.level.in_unit_interval())
            fail(Errc::LevelOutOfRange, "level " + e.level.str() + " outside [0,1]");
        if (e.space.field() != field)
            fail(Errc::FieldMismatch, "chain member over a different field");
        if (e.space.ambient() != ambient)
            fail(Errc::DimensionMismatch, "chain member of ambient dimension " +
                                              std::to_string(e.space.ambient()) + ", expected " +
                                              std::to_string(ambient));
    }
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        if (!(entries[i].level > entries[i + 1].level))
            fail(Errc::LevelsNotDecreasing, "level " + entries[i + 1].level.str() +
                                               " does not decrease below " + entries[i].level.str());
        if (!(entries[i].space.rank() < entries[i + 1].space.rank()) ||
            !is_subset(entries[i].space, entries[i + 1].space))
            fail(Errc::ChainNotStrict, "chain member " + std::to_string(i + 1) +
                                           " does not strictly contain its predecessor");
    }
    if (entries.back().space.rank() != ambient)
        fail(Errc::TopNotAmbient, "chain must end at the full ambient space");
    return FuzzyFlag(field, ambient, std::move(entries));
}

PointwiseTable::PointwiseTable(FieldSpec field, std::size_t ambient, std::vector<Rational> grades)
    : field_(field), ambient_(ambient), grades_(std::move(grades)) {
    if (!field_.is_prime_field())
        fail(Errc::InvalidArgument, "pointwise tables require a prime field");
    std::uint64_t expect = checked_pow(field_.prime(), ambient_, UINT64_MAX);
    if (grades_.size() != expect)
        fail(Errc::InvalidArgument, "table must grade all " + std::to_string(expect) + " vectors");
    for (const auto& g : grades_)
        if (!g.in_unit_interval())
            fail(Errc::LevelOutOfRange, "grade " + g.str() + " outside [0,1]");
}

std::size_t PointwiseTable::index_of(const Vector& x) const {
    if (x.size() != ambient_ || x.field() != field_)
        fail(Errc::DimensionMismatch, "vector does not match the table's space");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < ambient_; ++i)
        idx = idx * static_cast<std::size_t>(field_.prime()) + static_cast<std::size_t>(x[i].residue());
    return idx;
}

Vector PointwiseTable::vector_at(std::size_t index) const {
    std::vector<FieldScalar> entries(ambient_, FieldScalar::zero(field_));
    for (std::size_t i = ambient_; i-- > 0;) {
        entries[i] = FieldScalar(field_, Integer(index % field_.prime()));
        index /= field_.prime();
    }
    return Vector(field_, std::move(entries));
}

FuzzyBasis::FuzzyBasis(FieldSpec field, std::size_t ambient, std::vector<Element> elements)
    : field_(field), ambient_(ambient), elements_(std::move(elements)) {
    std::vector<Vector> vectors;
    vectors.reserve(elements_.size());
    for (const auto& e : elements_) {
        if (!e.grade.in_unit_interval())
            fail(Errc::LevelOutOfRange, "grade " + e.grade.str() + " outside [0,1]");
        vectors.push_back(e.vector);
    }
    for (std::size_t i = 0; i + 1 < elements_.size(); ++i)
        if (elements_[i].grade < elements_[i + 1].grade)
            fail(Errc::LevelsNotDecreasing, "fuzzy basis grades must be weakly decreasing");
    if (elements_.size() != ambient || span(field_, ambient_, vectors).rank() != ambient_)
        fail(Errc::InvalidArgument, "elements do not form a basis of the ambient space");
}

Rational FuzzyBasis::grade_sum() const {
    Rational sum;
    for (const auto& e : elements_)
        sum = sum + e.grade;
    return sum;
}

Rational membership(const FuzzyFlag& flag, const Vector& x) {
    for (const auto& e : flag.entries())
        if (contains(e.space, x))
            return e.level;
    // The chain ends at the full space, so the loop always returns.
    fail(Errc::DimensionMismatch, "vector outside the ambient space");
}

std::optional<Subspace> level_subspace(const FuzzyFlag& flag, const Rational& t) {
    if (!t.in_unit_interval())
        fail(Errc::LevelOutOfRange, "level " + t.str() + " outside [0,1]");
    std::optional<Subspace> best;
    for (const auto& e : flag.entries())
        if (e.level >= t)
            best = e.space; // entries are level-descending, keep the last hit
    return best;
}

FuzzyFlag from_pointwise(const PointwiseTable& table) {
    const std::size_t count = table.size();
    if (count > 1000000)
        fail(Errc::BudgetExceeded, "pointwise check limited to 10^6 vectors");

    std::vector<Vector> vectors;
    vectors.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        vectors.push_back(table.vector_at(i));

    // Subtraction axiom: grade(x - y) >= min(grade(x), grade(y)) for all pairs.
    for (std::size_t yi = 0; yi < count; ++yi)
        for (std::size_t xi = 0; xi < count; ++xi) {
            const Rational& low = std::min(table.grade_at(xi), table.grade_at(yi));
            if (table.grade(vectors[xi] - vectors[yi]) < low)
                fail(Errc::AxiomViolation, "mu(x-y) < min(mu(x),mu(y)) for x=(" + vectors[xi].str() +
                                               "), y=(" + vectors[yi].str() + ")");
        }
    // Scalar axiom: grade(a*x) >= grade(x) for every scalar a.
    for (std::size_t xi = 0; xi < count; ++xi)
        for (std::uint64_t a = 0; a < table.field().prime(); ++a) {
            FieldScalar alpha(table.field(), Integer(a));
            if (table.grade(vectors[xi].scaled(alpha)) < table.grade_at(xi))
                fail(Errc::AxiomViolation, "mu(a*x) < mu(x) for x=(" + vectors[xi].str() + "), a=" +
                                               alpha.str());
        }

    // Distinct grades, descending.
    std::vector<Rational> levels = table.grades();
    std::sort(levels.begin(), levels.end(), [](const Rational& a, const Rational& b) { return a > b; });
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<FlagEntry> entries;
    for (const auto& t : levels) {
        std::vector<Vector> cut;
        for (std::size_t i = 0; i < count; ++i)
            if (table.grade_at(i) >= t)
                cut.push_back(vectors[i]);
        Subspace space = span(table.field(), table.ambient(), cut);
        // The span adds nothing iff the level set was already a subspace.
        std::uint64_t points = checked_pow(table.field().prime(), space.rank(), UINT64_MAX);
        if (points != cut.size())
            fail(Errc::LevelSetNotSubspace, "level set at " + t.str() + " is not a subspace");
        entries.push_back(FlagEntry{t, std::move(space)});
    }
    return FuzzyFlag::validate(table.field(), table.ambient(), std::move(entries));
}

FuzzyFlag restrict_to(const FuzzyFlag& flag, const Subspace& a) {
    if (a.field() != flag.field())
        fail(Errc::FieldMismatch, "restriction subspace over a different field");
    if (a.ambient() != flag.ambient())
        fail(Errc::DimensionMismatch, "restriction subspace in a different ambient space");
    const std::size_t k = a.rank();
    std::vector<FlagEntry> entries;
    for (const auto& e : flag.entries()) {
        Subspace cut = intersect(e.space, a);
        std::vector<Vector> local;
        local.reserve(cut.rank());
        for (const auto& row : cut.basis_rows())
            local.push_back(coords_in_basis(a, row));
        Subspace reexpressed = span(flag.field(), k, local);
        if (!entries.empty() && entries.back().space == reexpressed)
            continue; // merged: the earlier (larger) level wins
        entries.push_back(FlagEntry{e.level, std::move(reexpressed)});
    }
    return FuzzyFlag::validate(flag.field(), k, std::move(entries));
}

FuzzyBasis fuzzy_basis(const FuzzyFlag& flag) {
    std::vector<FuzzyBasis::Element> elements;
    Subspace prev = Subspace::zero(flag.field(), flag.ambient());
    for (const auto& e : flag.entries()) {
        for (auto& v : extend_basis(prev, e.space))
            elements.push_back(FuzzyBasis::Element{std::move(v), e.level});
        prev = e.space;
    }
    return FuzzyBasis(flag.field(), flag.ambient(), std::move(elements));
}

Rational dimension(const FuzzyFlag& flag) {
    Rational sum;
    std::size_t prev_rank = 0;
    for (const auto& e : flag.entries()) {
        sum = sum + e.level * Rational(static_cast<long long>(e.space.rank() - prev_rank));
        prev_rank = e.space.rank();
    }
    return sum;
}

std::vector<Rational> image_set(const FuzzyFlag& flag) {
    std::vector<Rational> out;
    out.reserve(flag.levels());
    for (const auto& e : flag.entries())
        out.push_back(e.level);
    return out;
}

bool flags_equal(const FuzzyFlag& a, const FuzzyFlag& b) {
    if (a.field() != b.field())
        fail(Errc::FieldMismatch, "flags over different fields");
    if (a.ambient() != b.ambient())
        fail(Errc::DimensionMismatch, "flags over different ambient dimensions");
    return a.entries() == b.entries();
}

} // namespace fuzzyspace
