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
#include "fuzzyspace/io.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

namespace fuzzyspace {

namespace {

struct Line {
    std::size_t number; // 1-based
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                                              : end - pos);
        ++number;
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        std::istringstream in{std::string(raw)};
        std::vector<std::string> tokens;
        std::string tok;
        while (in >> tok)
            tokens.push_back(tok);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        lines.push_back(Line{number, std::move(tokens)});
    }
    return lines;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
    fail(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

Vector parse_vector_tokens(const Line& line, FieldSpec field, std::size_t expect,
                           std::size_t from = 0, std::size_t drop_tail = 0) {
    if (line.tokens.size() - from - drop_tail != expect)
        syntax_error(line.number, "expected " + std::to_string(expect) + " coordinates");
    std::vector<FieldScalar> entries;
    entries.reserve(expect);
    for (std::size_t i = from; i < line.tokens.size() - drop_tail; ++i) {
        try {
            entries.push_back(FieldScalar::parse(field, line.tokens[i]));
        } catch (const Error&) {
            syntax_error(line.number, "bad coordinate '" + line.tokens[i] + "'");
        }
    }
    return Vector(field, std::move(entries));
}

} // namespace

FuzzyFlag parse_flag(std::string_view text) {
    std::vector<Line> lines = tokenize(text);
    std::size_t at = 0;
    auto expect_line = [&](const std::string& what) -> const Line& {
        if (at >= lines.size())
            fail(Errc::SyntaxError, "unexpected end of document, expected " + what);
        return lines[at];
    };

    const Line& field_line = expect_line("'field ...'");
    if (field_line.tokens.front() != "field")
        syntax_error(field_line.number, "expected 'field gf <p>' or 'field rationals'");
    FieldSpec field = FieldSpec::rationals();
    try {
        std::string rest;
        for (std::size_t i = 1; i < field_line.tokens.size(); ++i)
            rest += (i > 1 ? " " : "") + field_line.tokens[i];
        field = FieldSpec::parse(rest);
    } catch (const Error& e) {
        syntax_error(field_line.number, e.message());
    }
    ++at;

    const Line& ambient_line = expect_line("'ambient <n>'");
    if (ambient_line.tokens.front() != "ambient" || ambient_line.tokens.size() != 2)
        syntax_error(ambient_line.number, "expected 'ambient <n>'");
    std::size_t ambient = 0;
    try {
        ambient = std::stoul(ambient_line.tokens[1]);
    } catch (...) {
        syntax_error(ambient_line.number, "bad ambient dimension '" + ambient_line.tokens[1] + "'");
    }
    ++at;

    std::vector<FlagEntry> entries;
    std::vector<Vector> generators; // cumulative across blocks
    while (at < lines.size()) {
        const Line& level_line = lines[at];
        if (level_line.tokens.front() != "level")
            syntax_error(level_line.number, "expected 'level <rational>'");
        if (level_line.tokens.size() != 2)
            syntax_error(level_line.number, "expected exactly one level value");
        Rational level;
        try {
            level = Rational::parse(level_line.tokens[1]);
        } catch (const Error&) {
            syntax_error(level_line.number, "bad level '" + level_line.tokens[1] + "'");
        }
        if (!level.in_unit_interval())
            fail(Errc::LevelOutOfRange,
                 "line " + std::to_string(level_line.number) + ": level " + level.str() + " outside [0,1]");
        if (!entries.empty() && !(entries.back().level > level))
            fail(Errc::LevelsNotDecreasing, "line " + std::to_string(level_line.number) + ": level " +
                                                level.str() + " does not decrease below " +
                                                entries.back().level.str());
        ++at;
        std::size_t block_rows = 0;
        while (at < lines.size() && lines[at].tokens.front() != "level") {
            generators.push_back(parse_vector_tokens(lines[at], field, ambient));
            ++block_rows;
            ++at;
        }
        Subspace space = span(field, ambient, generators);
        if (!entries.empty() && space.rank() <= entries.back().space.rank())
            fail(Errc::ChainNotStrict, "line " + std::to_string(level_line.number) +
                                           ": block does not enlarge the chain" +
                                           (block_rows ? " (generators already in the span)" : ""));
        entries.push_back(FlagEntry{level, std::move(space)});
    }
    if (entries.empty())
        fail(Errc::SyntaxError, "document has no level blocks");
    if (entries.back().space.rank() != ambient)
        fail(Errc::TopNotAmbient, "chain must end at the full ambient space (rank " +
                                      std::to_string(entries.back().space.rank()) + " of " +
                                      std::to_string(ambient) + ")");
    return FuzzyFlag::validate(field, ambient, std::move(entries));
}

std::string serialize_flag(const FuzzyFlag& flag) {
    std::string out = "field " + flag.field().str() + "\n";
    out += "ambient " + std::to_string(flag.ambient()) + "\n";
    Subspace prev = Subspace::zero(flag.field(), flag.ambient());
    for (const auto& e : flag.entries()) {
        out += "level " + e.level.str() + "\n";
        for (const auto& v : extend_basis(prev, e.space))
            out += v.str() + "\n";
        prev = e.space;
    }
    return out;
}

Matrix parse_matrix(std::string_view text, FieldSpec field) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty())
        fail(Errc::SyntaxError, "empty matrix document");
    const Line& head = lines.front();
    if (head.tokens.size() != 2)
        syntax_error(head.number, "expected 'rows cols' header");
    std::size_t rows = 0, cols = 0;
    try {
        rows = std::stoul(head.tokens[0]);
        cols = std::stoul(head.tokens[1]);
    } catch (...) {
        syntax_error(head.number, "bad matrix header");
    }
    std::vector<FieldScalar> data;
    data.reserve(rows * cols);
    for (std::size_t li = 1; li < lines.size(); ++li)
        for (const auto& tok : lines[li].tokens) {
            if (data.size() == rows * cols)
                syntax_error(lines[li].number, "more entries than rows*cols");
            try {
                data.push_back(FieldScalar::parse(field, tok));
            } catch (const Error&) {
                syntax_error(lines[li].number, "bad entry '" + tok + "'");
            }
        }
    if (data.size() != rows * cols)
        fail(Errc::SyntaxError, "matrix has " + std::to_string(data.size()) + " entries, expected " +
                                    std::to_string(rows * cols));
    return Matrix(field, rows, cols, std::move(data));
}

std::string serialize_matrix(const Matrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    return out + format_matrix_rows(m);
}

std::string format_matrix_rows(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out += m.row(i).str() + "\n";
    return out;
}

PointwiseTable parse_pointwise_table(std::string_view text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty())
        fail(Errc::SyntaxError, "empty table document");
    if (lines.front().tokens.size() < 2)
        syntax_error(lines.front().number, "expected 'v1 ... vn grade'");
    const std::size_t n = lines.front().tokens.size() - 1;
    const std::size_t count = lines.size();

    // The table must cover GF(p)^n exactly once, so p is the n-th root of
    // the line count.
    std::uint64_t p = n == 0 ? 0 : static_cast<std::uint64_t>(std::llround(std::pow(double(count), 1.0 / double(n))));
    auto pow_n = [&](std::uint64_t base) {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < n; ++i)
            r *= base;
        return r;
    };
    std::uint64_t chosen = 0;
    for (std::uint64_t cand = p > 1 ? p - 1 : 2; cand <= p + 1; ++cand)
        if (cand >= 2 && pow_n(cand) == count)
            chosen = cand;
    if (chosen == 0)
        fail(Errc::SyntaxError, std::to_string(count) + " lines do not cover GF(p)^" + std::to_string(n) +
                                    " for any prime p");
    FieldSpec field = FieldSpec::rationals();
    try {
        field = FieldSpec::gf(chosen);
    } catch (const Error&) {
        fail(Errc::SyntaxError, "inferred field order " + std::to_string(chosen) + " is not prime");
    }

    std::vector<Rational> grades(count, Rational(0));
    std::vector<bool> seen(count, false);
    PointwiseTable shape(field, n, grades); // index helper with zero grades
    for (const auto& line : lines) {
        Vector v = parse_vector_tokens(line, field, n, 0, 1);
        Rational grade;
        try {
            grade = Rational::parse(line.tokens.back());
        } catch (const Error&) {
            syntax_error(line.number, "bad grade '" + line.tokens.back() + "'");
        }
        if (!grade.in_unit_interval())
            fail(Errc::LevelOutOfRange,
                 "line " + std::to_string(line.number) + ": grade " + grade.str() + " outside [0,1]");
        std::size_t idx = shape.index_of(v);
        if (seen[idx])
            syntax_error(line.number, "vector (" + v.str() + ") listed twice");
        seen[idx] = true;
        grades[idx] = grade;
    }
    return PointwiseTable(field, n, std::move(grades));
}

std::string serialize_pointwise_table(const PointwiseTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.size(); ++i)
        out += table.vector_at(i).str() + " " + table.grade_at(i).str() + "\n";
    return out;
}

std::vector<Rational> parse_level_grid(std::string_view text) {
    std::vector<Rational> grid;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                 : comma - pos);
        grid.push_back(Rational::parse(part));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    for (const auto& t : grid)
        if (!t.in_unit_interval())
            fail(Errc::LevelOutOfRange, "grid level " + t.str() + " outside [0,1]");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] > grid[i + 1]))
            fail(Errc::LevelsNotDecreasing, "grid levels must strictly decrease");
    return grid;
}

} // namespace fuzzyspace
