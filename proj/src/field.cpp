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
#include "fuzzyspace/field.hpp"

#include <sstream>

namespace fuzzyspace {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

Integer mod_reduce(const Integer& v, std::uint64_t p) {
    Integer r = v % p;
    if (r < 0)
        r += p;
    return r;
}

// Extended Euclid: inverse of a mod p for 0 < a < p.
Integer mod_inverse(const Integer& a, std::uint64_t p) {
    Integer old_r = a, r = Integer(p);
    Integer old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return mod_reduce(old_s, p);
}

} // namespace

FieldSpec FieldSpec::gf(std::uint64_t p) {
    if (!is_prime_u64(p))
        fail(Errc::NotPrime, "field order " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string head;
    in >> head;
    if (head == "rationals") {
        std::string rest;
        if (in >> rest)
            fail(Errc::SyntaxError, "trailing tokens after 'rationals'");
        return rationals();
    }
    if (head == "gf") {
        std::uint64_t p = 0;
        if (!(in >> p))
            fail(Errc::SyntaxError, "expected prime after 'gf'");
        std::string rest;
        if (in >> rest)
            fail(Errc::SyntaxError, "trailing tokens after field spec");
        return gf(p);
    }
    fail(Errc::SyntaxError, "unknown field spec '" + std::string(text) + "'");
}

FieldScalar::FieldScalar(FieldSpec field, const Integer& value) : field_(field) {
    if (field_.is_prime_field())
        value_ = mod_reduce(value, field_.prime());
    else
        value_ = Rational(value);
}

FieldScalar::FieldScalar(FieldSpec field, const Rational& value) : field_(field) {
    if (field_.is_prime_field()) {
        if (value.den() != 1)
            fail(Errc::FieldMismatch, "non-integral value in GF(" + std::to_string(field_.prime()) + ")");
        value_ = mod_reduce(value.num(), field_.prime());
    } else {
        value_ = value;
    }
}

FieldScalar FieldScalar::parse(FieldSpec field, std::string_view text) {
    return FieldScalar(field, Rational::parse(text));
}

bool FieldScalar::is_zero() const {
    return field_.is_prime_field() ? std::get<Integer>(value_) == 0 : std::get<Rational>(value_).is_zero();
}

bool FieldScalar::is_one() const {
    return field_.is_prime_field() ? std::get<Integer>(value_) == 1 : std::get<Rational>(value_) == Rational(1);
}

const Integer& FieldScalar::residue() const {
    if (!field_.is_prime_field())
        fail(Errc::FieldMismatch, "residue() on a rational scalar");
    return std::get<Integer>(value_);
}

const Rational& FieldScalar::rat() const {
    if (field_.is_prime_field())
        fail(Errc::FieldMismatch, "rat() on a prime-field scalar");
    return std::get<Rational>(value_);
}

std::string FieldScalar::str() const {
    return field_.is_prime_field() ? std::get<Integer>(value_).str() : std::get<Rational>(value_).str();
}

void FieldScalar::check_same_field(const FieldScalar& rhs) const {
    if (field_ != rhs.field_)
        fail(Errc::FieldMismatch, "scalars over " + field_.str() + " and " + rhs.field_.str());
}

FieldScalar FieldScalar::operator+(const FieldScalar& rhs) const {
    check_same_field(rhs);
    if (field_.is_prime_field())
        return FieldScalar(field_, std::get<Integer>(value_) + std::get<Integer>(rhs.value_));
    return FieldScalar(field_, std::get<Rational>(value_) + std::get<Rational>(rhs.value_));
}

FieldScalar FieldScalar::operator-(const FieldScalar& rhs) const {
    check_same_field(rhs);
    if (field_.is_prime_field())
        return FieldScalar(field_, std::get<Integer>(value_) - std::get<Integer>(rhs.value_));
    return FieldScalar(field_, std::get<Rational>(value_) - std::get<Rational>(rhs.value_));
}

FieldScalar FieldScalar::operator*(const FieldScalar& rhs) const {
    check_same_field(rhs);
    if (field_.is_prime_field())
        return FieldScalar(field_, std::get<Integer>(value_) * std::get<Integer>(rhs.value_));
    return FieldScalar(field_, std::get<Rational>(value_) * std::get<Rational>(rhs.value_));
}

FieldScalar FieldScalar::operator-() const {
    if (field_.is_prime_field())
        return FieldScalar(field_, -std::get<Integer>(value_));
    return FieldScalar(field_, -std::get<Rational>(value_));
}

FieldScalar FieldScalar::inv() const {
    if (is_zero())
        fail(Errc::ZeroInverse, "inverse of zero in " + field_.str());
    if (field_.is_prime_field())
        return FieldScalar(field_, mod_inverse(std::get<Integer>(value_), field_.prime()));
    return FieldScalar(field_, Rational(1) / std::get<Rational>(value_));
}

} // namespace fuzzyspace
