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

#include "fuzzyspace/morphism.hpp"

namespace fuzzyspace {

/// Caps on brute-force enumeration: max_vectors bounds p^n, max_maps bounds
/// the p^(n*n) matrix candidates (and the subspace-lattice size). Exceeding
/// a cap raises BudgetExceeded.
struct EnumerationBudget {
    std::uint64_t max_vectors = 4096;
    std::uint64_t max_maps = 300000;
};

/// All p^n vectors of GF(p)^n in lexicographic order (leftmost coordinate
/// most significant).
std::vector<Vector> enumerate_vectors(FieldSpec field, std::size_t n,
                                      const EnumerationBudget& budget = {});

/// First witness against one of the two fuzzy-subspace axioms, if any.
struct AxiomWitness {
    enum class Kind { Subtraction, Scalar };

    Kind kind;
    Vector x;
    Vector y;          // subtraction witness; equals x for scalar witnesses
    FieldScalar alpha; // scalar witness; 0 for subtraction witnesses

    std::string describe() const;
};

/// Exhaustive check of both fuzzy-subspace axioms over all pairs, scanning
/// the subtraction axiom first (outer loop over y) and then the scalar
/// axiom (outer loop over x). Returns the first violation, or nullopt when
/// the table is a fuzzy subspace.
std::optional<AxiomWitness> check_axioms(const PointwiseTable& table,
                                        const EnumerationBudget& budget = {});

/// Pointwise image table: each codomain vector gets the max grade over its
/// fiber, 0 when the fiber is empty. Independent of the flag-based image.
PointwiseTable zadeh_pointwise(const LinearMap& f, const PointwiseTable& table,
                               const EnumerationBudget& budget = {});

/// Membership grades of every vector of the (prime-field) ambient space.
PointwiseTable expand_flag(const FuzzyFlag& flag, const EnumerationBudget& budget = {});

/// Every subspace of GF(p)^n, by enumerating reduced row-echelon bases:
/// rank ascending, pivot sets in lexicographic order, free entries in
/// row-major lexicographic order.
std::vector<Subspace> enumerate_subspaces(FieldSpec field, std::size_t n,
                                          const EnumerationBudget& budget = {});

/// Every valid flag over GF(p)^n whose levels come from the given strictly
/// decreasing grid: all strictly increasing subspace chains ending at the
/// full space, each combined with every decreasing level selection of
/// matching length. Deterministic order.
std::vector<FuzzyFlag> enumerate_flags(FieldSpec field, std::size_t n,
                                       const std::vector<Rational>& grid,
                                       const EnumerationBudget& budget = {});

/// All invertible n x n maps over GF(p): the p^(n*n) candidate matrices in
/// row-major lexicographic order, filtered by full rank.
std::vector<LinearMap> enumerate_invertible_maps(FieldSpec field, std::size_t n,
                                                 const EnumerationBudget& budget = {});

/// Exhaustive isomorphism search: the first invertible map (in enumeration
/// order) carrying one flag onto the other, or nullopt when none exists.
std::optional<LinearMap> brute_force_iso(const FuzzyFlag& a, const FuzzyFlag& b,
                                         const EnumerationBudget& budget = {});

} // namespace fuzzyspace
