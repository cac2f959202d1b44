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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "fuzzyspace/error.hpp"

namespace fuzzyspace {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always stored normalized: positive denominator,
/// coprime numerator/denominator. Membership levels, grades and dimension
/// values are all of this type; equality and ordering are exact.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    explicit Rational(const Integer& n) : value_(n) {}

    /// Normalizing constructor; throws ZeroDenominator when den = 0.
    Rational(Integer num, Integer den) {
        if (den == 0)
            fail(Errc::ZeroDenominator, "rational with denominator 0");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        value_ = boost::multiprecision::cpp_rational(num, den);
    }

    /// Parses "num", "num/den" or "-num/den" (lowest terms not required).
    static Rational parse(std::string_view text);

    Integer num() const { return boost::multiprecision::numerator(value_); }
    Integer den() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool in_unit_interval() const { return value_ >= 0 && value_ <= 1; }

    /// Lowest-terms text form: "3/2", "1" (never "1/1"), "0", "-2/5".
    std::string str() const {
        if (den() == 1)
            return num().str();
        return num().str() + "/" + den().str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(boost::multiprecision::cpp_rational(a.value_ + b.value_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(boost::multiprecision::cpp_rational(a.value_ - b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(boost::multiprecision::cpp_rational(a.value_ * b.value_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            fail(Errc::ZeroInverse, "division by zero rational");
        return Rational(boost::multiprecision::cpp_rational(a.value_ / b.value_));
    }
    Rational operator-() const { return Rational(boost::multiprecision::cpp_rational(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

    boost::multiprecision::cpp_rational value_;
};

/// Exact three-way comparison of levels; Equal iff normalized forms coincide.
inline std::strong_ordering level_cmp(const Rational& a, const Rational& b) { return a <=> b; }

/// Spec form of the normalizing constructor.
inline Rational rat_normalize(const Integer& num, const Integer& den) { return Rational(num, den); }

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] { fail(Errc::SyntaxError, "malformed rational '" + std::string(text) + "'"); };
    if (text.empty())
        bad();
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part) -> Integer {
        if (part.empty() || (part.size() == 1 && (part[0] == '-' || part[0] == '+')))
            bad();
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                bad();
        return Integer(std::string(part));
    };
    if (slash == std::string_view::npos)
        return Rational(parse_int(text), Integer(1));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

} // namespace fuzzyspace
