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

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "fuzzyspace/error.hpp"
#include "fuzzyspace/rational.hpp"

namespace fuzzyspace {

/// Which field scalars live in: GF(p) for a machine-word prime p, or Q.
/// Primality is checked eagerly at construction.
class FieldSpec {
public:
    static FieldSpec gf(std::uint64_t p);
    static FieldSpec rationals() { return FieldSpec(0); }

    /// Parses "gf <p>" or "rationals".
    static FieldSpec parse(std::string_view text);

    bool is_prime_field() const { return p_ != 0; }
    std::uint64_t prime() const { return p_; }

    std::string str() const { return is_prime_field() ? "gf " + std::to_string(p_) : "rationals"; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint64_t p) : p_(p) {}

    std::uint64_t p_; // 0 encodes the rationals
};

/// One exact field element. Prime-field values are reduced residues in
/// [0, p); rational values are normalized Rationals. Arithmetic between
/// scalars of different fields throws FieldMismatch.
class FieldScalar {
public:
    FieldScalar(FieldSpec field, const Integer& value);
    FieldScalar(FieldSpec field, const Rational& value);
    FieldScalar(FieldSpec field, long long value) : FieldScalar(field, Integer(value)) {}

    static FieldScalar zero(FieldSpec field) { return FieldScalar(field, Integer(0)); }
    static FieldScalar one(FieldSpec field) { return FieldScalar(field, Integer(1)); }

    /// Parses a residue (prime field) or a rational literal.
    static FieldScalar parse(FieldSpec field, std::string_view text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue in [0, p); only valid on prime-field scalars.
    const Integer& residue() const;
    /// Rational value; only valid on scalars over the rationals.
    const Rational& rat() const;

    std::string str() const;

    FieldScalar operator+(const FieldScalar& rhs) const;
    FieldScalar operator-(const FieldScalar& rhs) const;
    FieldScalar operator*(const FieldScalar& rhs) const;
    FieldScalar operator-() const;

    /// Multiplicative inverse; throws ZeroInverse on 0.
    FieldScalar inv() const;

    friend bool operator==(const FieldScalar&, const FieldScalar&) = default;

private:
    void check_same_field(const FieldScalar& rhs) const;

    FieldSpec field_;
    std::variant<Integer, Rational> value_;
};

inline FieldScalar fe_inv(const FieldScalar& a) { return a.inv(); }
inline FieldScalar fe_mul(const FieldScalar& a, const FieldScalar& b) { return a * b; }

} // namespace fuzzyspace
