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

#include <string>
#include <string_view>

#include "fuzzyspace/morphism.hpp"

namespace fuzzyspace {

/// Parses a flag document:
///
///   field gf 2          (or "field rationals")
///   ambient 2
///   level 1
///   1 0
///   level 1/2
///   0 1
///
/// Generator vectors are cumulative: block i spans V_i together with all
/// earlier blocks, so a block may be empty (the zero subspace as V_0).
/// Blank lines and lines starting with '#' are ignored. Errors carry the
/// offending line number.
FuzzyFlag parse_flag(std::string_view text);

/// Canonical document for a flag: each block lists the deterministic
/// extend_basis generators that grow the previous chain member, levels in
/// lowest terms. parse_flag(serialize_flag(f)) == f, byte-stable.
std::string serialize_flag(const FuzzyFlag& flag);

/// Matrix file: first line "rows cols", then row-major entries. Columns are
/// images of the standard basis vectors.
Matrix parse_matrix(std::string_view text, FieldSpec field);
std::string serialize_matrix(const Matrix& m);

/// Bare row-major matrix rows, one line per row (the form the CLI prints
/// after an ISO verdict).
std::string format_matrix_rows(const Matrix& m);

/// Pointwise table file: one line per vector, "v1 v2 ... vn grade", covering
/// all of GF(p)^n exactly once. The field is recovered from the line count
/// (p^n lines determine p) and verified prime.
PointwiseTable parse_pointwise_table(std::string_view text);
std::string serialize_pointwise_table(const PointwiseTable& table);

/// Comma-separated strictly decreasing level grid, e.g. "1,1/2,0".
std::vector<Rational> parse_level_grid(std::string_view text);

} // namespace fuzzyspace
