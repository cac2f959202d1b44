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
#pragma once

#include <optional>
#include <string>

#include "fuzzyspace/flag.hpp"

namespace fuzzyspace {

/// Linear map F^n -> F^r as an r x n matrix; column j is the image of the
/// j-th standard basis vector.
class LinearMap {
public:
    LinearMap(FieldSpec field, std::size_t domain_dim, std::size_t codomain_dim, Matrix matrix);

    static LinearMap identity(FieldSpec field, std::size_t n) {
        return LinearMap(field, n, n, Matrix::identity(field, n));
    }
    static LinearMap from_matrix(Matrix m) {
        FieldSpec f = m.field();
        std::size_t d = m.cols(), c = m.rows();
        return LinearMap(f, d, c, std::move(m));
    }

    const FieldSpec& field() const { return field_; }
    std::size_t domain_dim() const { return domain_dim_; }
    std::size_t codomain_dim() const { return codomain_dim_; }
    const Matrix& matrix() const { return matrix_; }

    bool is_invertible() const;

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    FieldSpec field_;
    std::size_t domain_dim_;
    std::size_t codomain_dim_;
    Matrix matrix_;
};

/// The step function t -> dim of the restriction to the level subspace at t,
/// sampled at the flag's levels: the value on (t_{i+1}, t_i] is entry i. For
/// t above the top level the level set is empty and the value is the EMPTY
/// sentinel (query returns nullopt; the CLI renders it as -1).
class DimProfile {
public:
    struct Entry {
        Rational level;
        Rational value;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    explicit DimProfile(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    const Rational& top_level() const { return entries_.front().level; }

    /// Value at t in [0,1]; nullopt encodes EMPTY (never conflated with 0).
    std::optional<Rational> query(const Rational& t) const;

    friend bool operator==(const DimProfile&, const DimProfile&) = default;

private:
    std::vector<Entry> entries_;
};

/// Image flag of a fuzzy subspace under a linear map: level subspaces map
/// through f, consecutive duplicates merge keeping the larger level, and a
/// non-surjective map contributes level 0 on the rest of the codomain
/// (the sup over an empty preimage is 0).
FuzzyFlag zadeh_image(const LinearMap& f, const FuzzyFlag& flag);

/// Pushes a fuzzy basis through an invertible map, keeping grades; throws
/// NotInvertible otherwise.
FuzzyBasis transport_basis(const LinearMap& f, const FuzzyBasis& basis);

/// Dimension profile of a flag: entry i carries the dimension of the
/// restriction to V_i, i.e. sum_{j<=i} t_j * (dim V_j - dim V_{j-1}).
DimProfile dim_profile(const FuzzyFlag& flag);

/// Isomorphism decision: true iff some invertible map carries one fuzzy
/// subspace onto the other, decided by structural equality of the two
/// dimension profiles. Throws FieldMismatch on different fields; flags over
/// different ambient dimensions are never isomorphic.
bool are_isomorphic(const FuzzyFlag& a, const FuzzyFlag& b);

/// Constructs an explicit witness isomorphism for an isomorphic pair by
/// pairing deterministic chain bases level by level; throws NotIsomorphic
/// when the profiles differ.
LinearMap witness_isomorphism(const FuzzyFlag& a, const FuzzyFlag& b);

/// Certificate check: true iff f is invertible and maps every level
/// subspace of a onto the same-level subspace of b. Never throws; when
/// given, *diagnostic explains a false result.
bool verify_isomorphism(const LinearMap& f, const FuzzyFlag& a, const FuzzyFlag& b,
                        std::string* diagnostic = nullptr);

} // namespace fuzzyspace
