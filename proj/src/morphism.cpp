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
#include "fuzzyspace/morphism.hpp"

#include <utility>

namespace fuzzyspace {

LinearMap::LinearMap(FieldSpec field, std::size_t domain_dim, std::size_t codomain_dim, Matrix matrix)
    : field_(field), domain_dim_(domain_dim), codomain_dim_(codomain_dim), matrix_(std::move(matrix)) {
    if (matrix_.field() != field_)
        fail(Errc::FieldMismatch, "matrix over a different field than the map");
    if (matrix_.rows() != codomain_dim_ || matrix_.cols() != domain_dim_)
        fail(Errc::DimensionMismatch, "matrix shape does not match declared dimensions");
}

bool LinearMap::is_invertible() const {
    return domain_dim_ == codomain_dim_ && rref(matrix_).rank == domain_dim_;
}

DimProfile::DimProfile(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        fail(Errc::InvalidArgument, "a dimension profile needs at least one entry");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
        if (!(entries_[i].level > entries_[i + 1].level))
            fail(Errc::LevelsNotDecreasing, "profile levels must strictly decrease");
        // Values strictly increase while levels are positive; a trailing
        // zero level adds a zero increment and ties with its predecessor.
        bool ok = entries_[i + 1].level.is_zero() ? entries_[i].value <= entries_[i + 1].value
                                                  : entries_[i].value < entries_[i + 1].value;
        if (!ok)
            fail(Errc::InvalidArgument, "profile values must increase as levels decrease");
    }
}

std::optional<Rational> DimProfile::query(const Rational& t) const {
    if (!t.in_unit_interval())
        fail(Errc::LevelOutOfRange, "level " + t.str() + " outside [0,1]");
    std::optional<Rational> best;
    for (const auto& e : entries_)
        if (e.level >= t)
            best = e.value;
    return best;
}

FuzzyFlag zadeh_image(const LinearMap& f, const FuzzyFlag& flag) {
    if (f.field() != flag.field())
        fail(Errc::FieldMismatch, "map and flag over different fields");
    if (f.domain_dim() != flag.ambient())
        fail(Errc::DimensionMismatch, "map domain differs from the flag's ambient space");
    std::vector<FlagEntry> entries;
    for (const auto& e : flag.entries()) {
        Subspace image = apply_to_subspace(f.matrix(), e.space);
        if (!entries.empty() && entries.back().space == image)
            continue; // merged: the earlier (larger) level wins
        entries.push_back(FlagEntry{e.level, std::move(image)});
    }
    // Points outside the image of f have grade sup{} = 0.
    Subspace full = Subspace::full(f.field(), f.codomain_dim());
    if (!(entries.back().space == full)) {
        if (entries.back().level.is_zero())
            entries.back().space = full;
        else
            entries.push_back(FlagEntry{Rational(0), full});
    }
    return FuzzyFlag::validate(f.field(), f.codomain_dim(), std::move(entries));
}

FuzzyBasis transport_basis(const LinearMap& f, const FuzzyBasis& basis) {
    if (f.field() != basis.field())
        fail(Errc::FieldMismatch, "map and basis over different fields");
    if (f.domain_dim() != basis.ambient())
        fail(Errc::DimensionMismatch, "map domain differs from the basis's ambient space");
    if (!f.is_invertible())
        fail(Errc::NotInvertible, "transport requires an invertible map");
    std::vector<FuzzyBasis::Element> elements;
    elements.reserve(basis.size());
    for (const auto& e : basis.elements())
        elements.push_back(FuzzyBasis::Element{f.matrix() * e.vector, e.grade});
    return FuzzyBasis(f.field(), f.codomain_dim(), std::move(elements));
}

DimProfile dim_profile(const FuzzyFlag& flag) {
    std::vector<DimProfile::Entry> entries;
    entries.reserve(flag.levels());
    Rational acc;
    std::size_t prev_rank = 0;
    for (const auto& e : flag.entries()) {
        acc = acc + e.level * Rational(static_cast<long long>(e.space.rank() - prev_rank));
        prev_rank = e.space.rank();
        entries.push_back(DimProfile::Entry{e.level, acc});
    }
    return DimProfile(std::move(entries));
}

bool are_isomorphic(const FuzzyFlag& a, const FuzzyFlag& b) {
    if (a.field() != b.field())
        fail(Errc::FieldMismatch, "flags over different fields");
    // Equal profiles over unequal ambient spaces can only happen for the
    // everywhere-zero fuzzy subspace; no isomorphism exists either way.
    if (a.ambient() != b.ambient())
        return false;
    return dim_profile(a) == dim_profile(b);
}

namespace {

// Deterministic basis of F^n ordered along the flag's chain: canonical
// basis of V_0, then the extend_basis completion through each later V_i.
std::vector<Vector> chain_basis(const FuzzyFlag& flag) {
    std::vector<Vector> out;
    Subspace prev = Subspace::zero(flag.field(), flag.ambient());
    for (const auto& e : flag.entries()) {
        for (auto& v : extend_basis(prev, e.space))
            out.push_back(std::move(v));
        prev = e.space;
    }
    return out;
}

} // namespace

LinearMap witness_isomorphism(const FuzzyFlag& a, const FuzzyFlag& b) {
    if (!are_isomorphic(a, b))
        fail(Errc::NotIsomorphic, "flags have different dimension profiles");
    const std::size_t n = a.ambient();
    std::vector<Vector> from = chain_basis(a);
    std::vector<Vector> to = chain_basis(b);
    // Equal profiles give equal chain-step sizes, so the two bases pair up
    // index by index.
    Matrix b_cols(a.field(), n, n);
    Matrix c_cols(a.field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            b_cols.at(i, j) = from[j][i];
            c_cols.at(i, j) = to[j][i];
        }
    Matrix witness = c_cols * invert(b_cols);
    return LinearMap(a.field(), n, n, std::move(witness));
}

bool verify_isomorphism(const LinearMap& f, const FuzzyFlag& a, const FuzzyFlag& b,
                        std::string* diagnostic) {
    auto reject = [&](const std::string& why) {
        if (diagnostic)
            *diagnostic = why;
        return false;
    };
    if (f.field() != a.field() || f.field() != b.field())
        return reject("field mismatch");
    if (f.domain_dim() != f.codomain_dim())
        return reject("map is not square");
    if (f.domain_dim() != a.ambient() || f.codomain_dim() != b.ambient())
        return reject("map shape does not match the flags");
    if (!f.is_invertible())
        return reject("map is not invertible");
    if (a.levels() != b.levels())
        return reject("image sets differ");
    for (std::size_t i = 0; i < a.levels(); ++i) {
        if (!(a.entries()[i].level == b.entries()[i].level))
            return reject("image sets differ");
        if (!(apply_to_subspace(f.matrix(), a.entries()[i].space) == b.entries()[i].space))
            return reject("level subspace at " + a.entries()[i].level.str() + " maps to the wrong subspace");
    }
    return true;
}

} // namespace fuzzyspace
