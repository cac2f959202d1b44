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
#include "fuzzyspace/linalg.hpp"

#include <algorithm>
#include <utility>

namespace fuzzyspace {

namespace {

void check_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b)
        fail(Errc::FieldMismatch, "mixed fields " + a.str() + " and " + b.str());
}

} // namespace

Vector::Vector(FieldSpec field, std::vector<FieldScalar> entries) : field_(field), entries_(std::move(entries)) {
    for (const auto& e : entries_)
        check_field(field_, e.field());
}

Vector Vector::from_ints(FieldSpec field, const std::vector<long long>& values) {
    std::vector<FieldScalar> entries;
    entries.reserve(values.size());
    for (long long v : values)
        entries.emplace_back(field, Integer(v));
    return Vector(field, std::move(entries));
}

bool Vector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const FieldScalar& e) { return e.is_zero(); });
}

std::string Vector::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ' ';
        out += entries_[i].str();
    }
    return out;
}

Vector Vector::operator+(const Vector& rhs) const {
    check_field(field_, rhs.field_);
    if (size() != rhs.size())
        fail(Errc::DimensionMismatch, "vector sizes differ");
    std::vector<FieldScalar> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.push_back(entries_[i] + rhs.entries_[i]);
    return Vector(field_, std::move(out));
}

Vector Vector::operator-(const Vector& rhs) const {
    check_field(field_, rhs.field_);
    if (size() != rhs.size())
        fail(Errc::DimensionMismatch, "vector sizes differ");
    std::vector<FieldScalar> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.push_back(entries_[i] - rhs.entries_[i]);
    return Vector(field_, std::move(out));
}

Vector Vector::scaled(const FieldScalar& c) const {
    check_field(field_, c.field());
    std::vector<FieldScalar> out;
    out.reserve(size());
    for (const auto& e : entries_)
        out.push_back(e * c);
    return Vector(field_, std::move(out));
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldScalar::zero(field)) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<FieldScalar> data)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        fail(Errc::DimensionMismatch, "matrix data does not fill the declared shape");
    for (const auto& e : data_)
        check_field(field_, e.field());
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = FieldScalar::one(field);
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        check_field(field, rows[i].field());
        if (rows[i].size() != cols)
            fail(Errc::DimensionMismatch, "row length differs from column count");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_int_rows(FieldSpec field, const std::vector<std::vector<long long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Vector> vs;
    vs.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != cols)
            fail(Errc::DimensionMismatch, "ragged matrix rows");
        vs.push_back(Vector::from_ints(field, r));
    }
    return from_rows(field, vs, cols);
}

Vector Matrix::row(std::size_t i) const {
    std::vector<FieldScalar> out(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    return Vector(field_, std::move(out));
}

Vector Matrix::col(std::size_t j) const {
    std::vector<FieldScalar> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(at(i, j));
    return Vector(field_, std::move(out));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    check_field(field_, rhs.field_);
    if (cols_ != rhs.rows_)
        fail(Errc::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = out.at(i, j) + at(i, k) * rhs.at(k, j);
        }
    return out;
}

Vector Matrix::operator*(const Vector& x) const {
    check_field(field_, x.field());
    if (cols_ != x.size())
        fail(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<FieldScalar> out(rows_, FieldScalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero())
                out[i] = out[i] + at(i, j) * x[j];
    return Vector(field_, std::move(out));
}

RrefResult rref(const Matrix& m) {
    Matrix work = m;
    const std::size_t rows = work.rows(), cols = work.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = r;
        while (sel < rows && work.at(sel, col).is_zero())
            ++sel;
        if (sel == rows)
            continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(work.at(sel, j), work.at(r, j));
        FieldScalar inv = work.at(r, col).inv();
        for (std::size_t j = col; j < cols; ++j)
            work.at(r, j) = work.at(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || work.at(i, col).is_zero())
                continue;
            FieldScalar factor = work.at(i, col);
            for (std::size_t j = col; j < cols; ++j)
                work.at(i, j) = work.at(i, j) - factor * work.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return RrefResult{std::move(work), r, std::move(pivots)};
}

Subspace Subspace::zero(FieldSpec field, std::size_t ambient) {
    return Subspace(field, ambient, Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient) {
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        pivots[i] = i;
    return Subspace(field, ambient, Matrix::identity(field, ambient), std::move(pivots));
}

std::vector<Vector> Subspace::basis_rows() const {
    std::vector<Vector> out;
    out.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        out.push_back(basis_.row(i));
    return out;
}

Subspace span(FieldSpec field, std::size_t ambient, const std::vector<Vector>& vectors) {
    for (const auto& v : vectors) {
        check_field(field, v.field());
        if (v.size() != ambient)
            fail(Errc::DimensionMismatch, "generator length differs from ambient dimension");
    }
    RrefResult red = rref(Matrix::from_rows(field, vectors, ambient));
    Matrix basis(field, red.rank, ambient);
    for (std::size_t i = 0; i < red.rank; ++i)
        for (std::size_t j = 0; j < ambient; ++j)
            basis.at(i, j) = red.matrix.at(i, j);
    return Subspace(field, ambient, std::move(basis), std::move(red.pivots));
}

bool contains(const Subspace& s, const Vector& x) {
    check_field(s.field(), x.field());
    if (x.size() != s.ambient())
        fail(Errc::DimensionMismatch, "vector length differs from ambient dimension");
    Vector rem = x;
    for (std::size_t i = 0; i < s.rank(); ++i) {
        const FieldScalar& c = rem[s.pivots()[i]];
        if (!c.is_zero())
            rem = rem - s.basis().row(i).scaled(c);
    }
    return rem.is_zero();
}

bool is_subset(const Subspace& a, const Subspace& b) {
    check_field(a.field(), b.field());
    if (a.ambient() != b.ambient())
        fail(Errc::DimensionMismatch, "subspaces of different ambient spaces");
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!contains(b, a.basis().row(i)))
            return false;
    return true;
}

std::vector<Vector> extend_basis(const Subspace& inner, const Subspace& outer) {
    if (!is_subset(inner, outer))
        fail(Errc::NotNested, "inner subspace is not contained in outer");
    std::vector<Vector> kept;
    std::vector<Vector> current = inner.basis_rows();
    Subspace cur = inner;
    for (std::size_t i = 0; i < outer.rank(); ++i) {
        Vector candidate = outer.basis().row(i);
        if (contains(cur, candidate))
            continue;
        kept.push_back(candidate);
        current.push_back(candidate);
        cur = span(inner.field(), inner.ambient(), current);
    }
    return kept;
}

Subspace apply_to_subspace(const Matrix& f, const Subspace& s) {
    check_field(f.field(), s.field());
    if (f.cols() != s.ambient())
        fail(Errc::DimensionMismatch, "map domain differs from subspace ambient dimension");
    std::vector<Vector> images;
    images.reserve(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i)
        images.push_back(f * s.basis().row(i));
    return span(f.field(), f.rows(), images);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    check_field(a.field(), b.field());
    if (a.ambient() != b.ambient())
        fail(Errc::DimensionMismatch, "subspaces of different ambient spaces");
    const std::size_t n = a.ambient();
    // Zassenhaus block matrix: rows [v|v] for v in a, [w|0] for w in b.
    Matrix block(a.field(), a.rank() + b.rank(), 2 * n);
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.basis().at(i, j);
            block.at(i, n + j) = a.basis().at(i, j);
        }
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            block.at(a.rank() + i, j) = b.basis().at(i, j);
    RrefResult red = rref(block);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < red.rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            left_zero = red.matrix.at(i, j).is_zero();
        if (!left_zero)
            continue;
        std::vector<FieldScalar> right;
        right.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            right.push_back(red.matrix.at(i, n + j));
        gens.emplace_back(a.field(), std::move(right));
    }
    return span(a.field(), n, gens);
}

Vector coords_in_basis(const Subspace& s, const Vector& x) {
    check_field(s.field(), x.field());
    if (x.size() != s.ambient())
        fail(Errc::DimensionMismatch, "vector length differs from ambient dimension");
    // In RREF, pivot columns are cleared in every other row, so the
    // coefficient of basis row i is just x at pivot i.
    std::vector<FieldScalar> coeffs;
    coeffs.reserve(s.rank());
    Vector rebuilt(s.field(), std::vector<FieldScalar>(s.ambient(), FieldScalar::zero(s.field())));
    for (std::size_t i = 0; i < s.rank(); ++i) {
        coeffs.push_back(x[s.pivots()[i]]);
        rebuilt = rebuilt + s.basis().row(i).scaled(coeffs.back());
    }
    if (!(rebuilt == x))
        fail(Errc::DimensionMismatch, "vector outside the subspace");
    return Vector(s.field(), std::move(coeffs));
}

Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols())
        fail(Errc::NotInvertible, "non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = FieldScalar::one(m.field());
    }
    RrefResult red = rref(aug);
    // Full rank on the left block means the left half reduced to identity.
    if (red.rank < n || red.pivots[n - 1] >= n)
        fail(Errc::NotInvertible, "singular matrix");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = red.matrix.at(i, n + j);
    return inv;
}

} // namespace fuzzyspace
