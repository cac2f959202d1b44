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

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fuzzyspace/field.hpp"

namespace fuzzyspace {

/// Dense vector over one field.
class Vector {
public:
    Vector(FieldSpec field, std::vector<FieldScalar> entries);

    /// Convenience constructor from integer literals (reduced into the field).
    static Vector from_ints(FieldSpec field, const std::vector<long long>& values);

    const FieldSpec& field() const { return field_; }
    std::size_t size() const { return entries_.size(); }
    const FieldScalar& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<FieldScalar>& entries() const { return entries_; }

    bool is_zero() const;
    std::string str() const; // entries separated by single spaces

    Vector operator+(const Vector& rhs) const;
    Vector operator-(const Vector& rhs) const;
    Vector scaled(const FieldScalar& c) const;

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    FieldSpec field_;
    std::vector<FieldScalar> entries_;
};

/// Dense rectangular matrix over one field, row-major.
class Matrix {
public:
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<FieldScalar> data);

    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix from_rows(FieldSpec field, const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_int_rows(FieldSpec field, const std::vector<std::vector<long long>>& rows);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const FieldScalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    FieldScalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;

    Matrix operator*(const Matrix& rhs) const;
    Vector operator*(const Vector& x) const; // matrix acting on a column vector

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldScalar> data_;
};

struct RrefResult {
    Matrix matrix;               // reduced row-echelon form, zero rows kept in place
    std::size_t rank;
    std::vector<std::size_t> pivots; // strictly increasing pivot column indices
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
RrefResult rref(const Matrix& m);

/// Canonical subspace of F^n: basis held as the RREF matrix with zero rows
/// removed. Two Subspace values describe the same set of vectors iff they
/// compare equal, so set equality is structural equality.
class Subspace {
public:
    static Subspace zero(FieldSpec field, std::size_t ambient);
    static Subspace full(FieldSpec field, std::size_t ambient);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::vector<Vector> basis_rows() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

    friend Subspace span(FieldSpec field, std::size_t ambient, const std::vector<Vector>& vectors);

private:
    Subspace(FieldSpec field, std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
        : field_(field), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    FieldSpec field_;
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the given vectors; the empty list spans the
/// zero subspace.
Subspace span(FieldSpec field, std::size_t ambient, const std::vector<Vector>& vectors);

/// True iff x is a linear combination of s's basis rows.
bool contains(const Subspace& s, const Vector& x);

/// True iff every basis row of a lies in b.
bool is_subset(const Subspace& a, const Subspace& b);

/// Completes inner's basis to a basis of outer. Candidates are outer's
/// canonical basis rows scanned top-down; a row is kept iff it lies outside
/// the span accumulated so far. Throws NotNested unless inner is a subset
/// of outer.
std::vector<Vector> extend_basis(const Subspace& inner, const Subspace& outer);

/// Canonical image span { f*v : v in s } inside F^(f.rows()).
Subspace apply_to_subspace(const Matrix& f, const Subspace& s);

/// Intersection of two subspaces of the same ambient space (Zassenhaus).
Subspace intersect(const Subspace& a, const Subspace& b);

/// Coefficients of x in s's canonical basis; x must lie in s.
Vector coords_in_basis(const Subspace& s, const Vector& x);

/// Inverse of a square matrix; throws NotInvertible when singular.
Matrix invert(const Matrix& m);

} // namespace fuzzyspace
