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
#include <vector>

#include "fuzzyspace/linalg.hpp"

namespace fuzzyspace {

struct FlagEntry {
    Rational level;
    Subspace space;

    friend bool operator==(const FlagEntry&, const FlagEntry&) = default;
};

/// A fuzzy subspace of F^n with finite image, encoded as its flag of level
/// subspaces: strictly decreasing levels t_0 > ... > t_m >= 0 paired with a
/// strictly increasing chain V_0 < ... < V_m = F^n. The membership grade of
/// x is the level of the first chain member containing x.
///
/// The zero subspace may appear as V_0 (it grades only the zero vector) and
/// level 0 may appear only at the bottom entry. The chain shape bounds the
/// image size by n+1 on its own.
class FuzzyFlag {
public:
    /// Checks every flag invariant and builds the flag.
    /// Throws LevelOutOfRange, LevelsNotDecreasing, ChainNotStrict,
    /// TopNotAmbient or DimensionMismatch.
    static FuzzyFlag validate(FieldSpec field, std::size_t ambient, std::vector<FlagEntry> entries);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    const std::vector<FlagEntry>& entries() const { return entries_; }
    std::size_t levels() const { return entries_.size(); }

    const Rational& top_level() const { return entries_.front().level; }
    const Rational& bottom_level() const { return entries_.back().level; }

    friend bool operator==(const FuzzyFlag&, const FuzzyFlag&) = default;

private:
    FuzzyFlag(FieldSpec field, std::size_t ambient, std::vector<FlagEntry> entries)
        : field_(field), ambient_(ambient), entries_(std::move(entries)) {}

    FieldSpec field_;
    std::size_t ambient_;
    std::vector<FlagEntry> entries_;
};

/// A raw fuzzy set over a prime-field space: a grade in [0,1] for every one
/// of the p^n vectors, indexed lexicographically (leftmost coordinate most
/// significant).
class PointwiseTable {
public:
    PointwiseTable(FieldSpec field, std::size_t ambient, std::vector<Rational> grades);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t size() const { return grades_.size(); } // p^n

    const Rational& grade_at(std::size_t index) const { return grades_[index]; }
    const Rational& grade(const Vector& x) const { return grades_[index_of(x)]; }
    const std::vector<Rational>& grades() const { return grades_; }

    std::size_t index_of(const Vector& x) const;
    Vector vector_at(std::size_t index) const;

    friend bool operator==(const PointwiseTable&, const PointwiseTable&) = default;

private:
    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Rational> grades_;
};

/// An ordinary basis of the ambient space tagged with membership grades,
/// listed with weakly decreasing grades.
class FuzzyBasis {
public:
    struct Element {
        Vector vector;
        Rational grade;

        friend bool operator==(const Element&, const Element&) = default;
    };

    FuzzyBasis(FieldSpec field, std::size_t ambient, std::vector<Element> elements);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    Rational grade_sum() const;

    friend bool operator==(const FuzzyBasis&, const FuzzyBasis&) = default;

private:
    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Element> elements_;
};

/// validate + construct, spec-facing alias.
inline FuzzyFlag validate_flag(FieldSpec field, std::size_t ambient, std::vector<FlagEntry> entries) {
    return FuzzyFlag::validate(field, ambient, std::move(entries));
}

/// Membership grade of x: the level of the first chain member containing x,
/// which equals max{ t : x in the level subspace at t }.
Rational membership(const FuzzyFlag& flag, const Vector& x);

/// Level subspace at t in [0,1]; std::nullopt when the level set is empty
/// (t above the top level).
std::optional<Subspace> level_subspace(const FuzzyFlag& flag, const Rational& t);

/// Checks both fuzzy-subspace axioms on the table by exhaustive pairwise
/// scan and, on success, builds the canonical flag of its level sets.
/// Throws AxiomViolation (with a concrete witness in the message) or the
/// defensive LevelSetNotSubspace.
FuzzyFlag from_pointwise(const PointwiseTable& table);

/// Restriction to a subspace A, expressed in coordinates relative to A's
/// canonical basis; consecutive equal intersections are merged keeping the
/// larger level.
FuzzyFlag restrict_to(const FuzzyFlag& flag, const Subspace& a);

/// Deterministic fuzzy basis: canonical basis of V_0 graded t_0, extended
/// through each V_i by extend_basis with new vectors graded t_i.
FuzzyBasis fuzzy_basis(const FuzzyFlag& flag);

/// Sum of grades over any fuzzy basis, computed by the closed form
/// sum_i t_i * (dim V_i - dim V_{i-1}).
Rational dimension(const FuzzyFlag& flag);

/// The image set t_0 > ... > t_m (at most n+1 values).
std::vector<Rational> image_set(const FuzzyFlag& flag);

/// Structural flag equality; canonical representations make this exact
/// equality of the encoded fuzzy sets.
bool flags_equal(const FuzzyFlag& a, const FuzzyFlag& b);

} // namespace fuzzyspace
