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

#include <stdexcept>
#include <string>

namespace fuzzyspace {

/// Failure kinds raised across the library. The name of an Errc is stable
/// and appears verbatim in error messages and CLI output.
enum class Errc {
    ZeroInverse,
    ZeroDenominator,
    NotPrime,
    FieldMismatch,
    DimensionMismatch,
    NotNested,
    LevelsNotDecreasing,
    ChainNotStrict,
    TopNotAmbient,
    LevelOutOfRange,
    AxiomViolation,
    LevelSetNotSubspace,
    NotInvertible,
    NotIsomorphic,
    BudgetExceeded,
    SyntaxError,
    InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code),
          message_(message) {}

    Errc code() const noexcept { return code_; }
    /// The description without the leading error-name prefix.
    const std::string& message() const noexcept { return message_; }

private:
    Errc code_;
    std::string message_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

inline const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotNested: return "NotNested";
    case Errc::LevelsNotDecreasing: return "LevelsNotDecreasing";
    case Errc::ChainNotStrict: return "ChainNotStrict";
    case Errc::TopNotAmbient: return "TopNotAmbient";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::LevelSetNotSubspace: return "LevelSetNotSubspace";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotIsomorphic: return "NotIsomorphic";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace fuzzyspace
