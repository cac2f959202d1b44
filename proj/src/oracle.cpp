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
#include "fuzzyspace/oracle.hpp"

#include <algorithm>

namespace fuzzyspace {

namespace {

void require_prime(const FieldSpec& field) {
    if (!field.is_prime_field())
        fail(Errc::InvalidArgument, "enumeration requires a prime field");
}

// p^exp if it stays within limit, else BudgetExceeded.
std::uint64_t budget_pow(std::uint64_t p, std::size_t exp, std::uint64_t limit, const char* what) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > limit / p)
            fail(Errc::BudgetExceeded, std::string(what) + " enumeration exceeds the budget");
        out *= p;
    }
    if (out > limit)
        fail(Errc::BudgetExceeded, std::string(what) + " enumeration exceeds the budget");
    return out;
}

// Next selection of `count` strictly increasing indices below `limit`.
bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < limit) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// All strictly increasing subspace chains ending at `top`, where chain
// members are drawn from `all` (indices into the canonical enumeration).
// Chains are emitted with the bare [top] first, then recursively with each
// eligible predecessor in enumeration order.
void collect_chains(const std::vector<Subspace>& all, std::size_t top,
                    std::vector<std::vector<std::size_t>>& out) {
    out.push_back({top});
    for (std::size_t w = 0; w < all.size(); ++w) {
        if (all[w].rank() >= all[top].rank() || !is_subset(all[w], all[top]))
            continue;
        std::vector<std::vector<std::size_t>> sub;
        collect_chains(all, w, sub);
        for (auto& chain : sub) {
            chain.push_back(top);
            out.push_back(std::move(chain));
        }
    }
}

} // namespace

std::vector<Vector> enumerate_vectors(FieldSpec field, std::size_t n, const EnumerationBudget& budget) {
    require_prime(field);
    std::uint64_t count = budget_pow(field.prime(), n, budget.max_vectors, "vector");
    std::vector<Vector> out;
    out.reserve(count);
    std::vector<std::uint64_t> digits(n, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<FieldScalar> entries;
        entries.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            entries.emplace_back(field, Integer(digits[i]));
        out.emplace_back(field, std::move(entries));
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < field.prime())
                break;
            digits[i] = 0;
        }
    }
    return out;
}

std::string AxiomWitness::describe() const {
    if (kind == Kind::Subtraction)
        return "mu(x-y) < min(mu(x),mu(y)) for x=(" + x.str() + "), y=(" + y.str() + ")";
    return "mu(a*x) < mu(x) for x=(" + x.str() + "), a=" + alpha.str();
}

std::optional<AxiomWitness> check_axioms(const PointwiseTable& table, const EnumerationBudget& budget) {
    std::vector<Vector> vectors = enumerate_vectors(table.field(), table.ambient(), budget);
    for (const auto& y : vectors)
        for (const auto& x : vectors) {
            const Rational& low = std::min(table.grade(x), table.grade(y));
            if (table.grade(x - y) < low)
                return AxiomWitness{AxiomWitness::Kind::Subtraction, x, y,
                                    FieldScalar::zero(table.field())};
        }
    for (const auto& x : vectors)
        for (std::uint64_t a = 0; a < table.field().prime(); ++a) {
            FieldScalar alpha(table.field(), Integer(a));
            if (table.grade(x.scaled(alpha)) < table.grade(x))
                return AxiomWitness{AxiomWitness::Kind::Scalar, x, x, alpha};
        }
    return std::nullopt;
}

PointwiseTable zadeh_pointwise(const LinearMap& f, const PointwiseTable& table,
                               const EnumerationBudget& budget) {
    if (f.field() != table.field())
        fail(Errc::FieldMismatch, "map and table over different fields");
    if (f.domain_dim() != table.ambient())
        fail(Errc::DimensionMismatch, "map domain differs from the table's space");
    if (table.size() > budget.max_vectors)
        fail(Errc::BudgetExceeded, "vector enumeration exceeds the budget");
    const std::uint64_t p = f.field().prime();
    std::uint64_t cod_size = budget_pow(p, f.codomain_dim(), budget.max_vectors, "vector");
    std::vector<Rational> grades(cod_size, Rational(0));
    for (std::size_t i = 0; i < table.size(); ++i) {
        Vector y = f.matrix() * table.vector_at(i);
        std::size_t yi = 0;
        for (std::size_t k = 0; k < y.size(); ++k)
            yi = yi * static_cast<std::size_t>(p) + static_cast<std::size_t>(y[k].residue());
        grades[yi] = std::max(grades[yi], table.grade_at(i));
    }
    return PointwiseTable(f.field(), f.codomain_dim(), std::move(grades));
}

PointwiseTable expand_flag(const FuzzyFlag& flag, const EnumerationBudget& budget) {
    std::vector<Vector> vectors = enumerate_vectors(flag.field(), flag.ambient(), budget);
    std::vector<Rational> grades;
    grades.reserve(vectors.size());
    for (const auto& x : vectors)
        grades.push_back(membership(flag, x));
    return PointwiseTable(flag.field(), flag.ambient(), std::move(grades));
}

std::vector<Subspace> enumerate_subspaces(FieldSpec field, std::size_t n, const EnumerationBudget& budget) {
    require_prime(field);
    budget_pow(field.prime(), n, budget.max_vectors, "vector");
    const std::uint64_t p = field.prime();
    std::vector<Subspace> out;
    out.push_back(Subspace::zero(field, n));
    for (std::size_t rank = 1; rank <= n; ++rank) {
        std::vector<std::size_t> pivots(rank);
        for (std::size_t i = 0; i < rank; ++i)
            pivots[i] = i;
        do {
            // Free positions: to the right of the row's pivot, outside pivot columns.
            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
            for (std::size_t i = 0; i < rank; ++i)
                for (std::size_t j = pivots[i] + 1; j < n; ++j)
                    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                        free_pos.emplace_back(i, j);
            std::uint64_t fills = budget_pow(p, free_pos.size(), budget.max_maps, "subspace");
            if (out.size() + fills > budget.max_maps)
                fail(Errc::BudgetExceeded, "subspace enumeration exceeds the budget");
            for (std::uint64_t code = 0; code < fills; ++code) {
                Matrix basis(field, rank, n);
                for (std::size_t i = 0; i < rank; ++i)
                    basis.at(i, pivots[i]) = FieldScalar::one(field);
                std::uint64_t rest = code;
                for (std::size_t k = free_pos.size(); k-- > 0;) {
                    basis.at(free_pos[k].first, free_pos[k].second) = FieldScalar(field, Integer(rest % p));
                    rest /= p;
                }
                out.push_back(span(field, n, [&] {
                    std::vector<Vector> rows;
                    for (std::size_t i = 0; i < rank; ++i)
                        rows.push_back(basis.row(i));
                    return rows;
                }()));
            }
        } while (next_combination(pivots, n));
    }
    return out;
}

std::vector<FuzzyFlag> enumerate_flags(FieldSpec field, std::size_t n, const std::vector<Rational>& grid,
                                       const EnumerationBudget& budget) {
    require_prime(field);
    if (grid.empty())
        fail(Errc::InvalidArgument, "empty level grid");
    for (const auto& t : grid)
        if (!t.in_unit_interval())
            fail(Errc::LevelOutOfRange, "grid level " + t.str() + " outside [0,1]");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] > grid[i + 1]))
            fail(Errc::LevelsNotDecreasing, "grid levels must strictly decrease");

    std::vector<Subspace> all = enumerate_subspaces(field, n, budget);
    std::size_t top = 0;
    while (all[top].rank() != n)
        ++top;
    std::vector<std::vector<std::size_t>> chains;
    collect_chains(all, top, chains);

    std::vector<FuzzyFlag> out;
    for (const auto& chain : chains) {
        if (chain.size() > grid.size())
            continue;
        std::vector<std::size_t> pick(chain.size());
        for (std::size_t i = 0; i < pick.size(); ++i)
            pick[i] = i;
        do {
            std::vector<FlagEntry> entries;
            entries.reserve(chain.size());
            for (std::size_t i = 0; i < chain.size(); ++i)
                entries.push_back(FlagEntry{grid[pick[i]], all[chain[i]]});
            out.push_back(FuzzyFlag::validate(field, n, std::move(entries)));
        } while (next_combination(pick, grid.size()));
    }
    return out;
}

std::vector<LinearMap> enumerate_invertible_maps(FieldSpec field, std::size_t n,
                                                 const EnumerationBudget& budget) {
    require_prime(field);
    const std::uint64_t p = field.prime();
    std::uint64_t candidates = budget_pow(p, n * n, budget.max_maps, "map");
    std::vector<LinearMap> out;
    for (std::uint64_t code = 0; code < candidates; ++code) {
        Matrix m(field, n, n);
        std::uint64_t rest = code;
        for (std::size_t k = n * n; k-- > 0;) {
            m.at(k / n, k % n) = FieldScalar(field, Integer(rest % p));
            rest /= p;
        }
        if (rref(m).rank == n)
            out.push_back(LinearMap(field, n, n, std::move(m)));
    }
    return out;
}

std::optional<LinearMap> brute_force_iso(const FuzzyFlag& a, const FuzzyFlag& b,
                                         const EnumerationBudget& budget) {
    if (a.field() != b.field())
        fail(Errc::FieldMismatch, "flags over different fields");
    if (a.ambient() != b.ambient())
        return std::nullopt;
    for (auto& f : enumerate_invertible_maps(a.field(), a.ambient(), budget))
        if (flags_equal(zadeh_image(f, a), b))
            return f;
    return std::nullopt;
}

} // namespace fuzzyspace
