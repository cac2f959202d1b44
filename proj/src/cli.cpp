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
#include "fuzzyspace/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "fuzzyspace/io.hpp"
#include "fuzzyspace/oracle.hpp"

namespace fuzzyspace {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(Errc::SyntaxError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FuzzyFlag load_flag(const std::string& path) {
    try {
        return parse_flag(read_file(path));
    } catch (const Error& e) {
        fail(e.code(), path + ": " + e.message());
    }
}

struct CertifyStats {
    std::size_t flags = 0;
    std::size_t pairs = 0;
    std::size_t iso_pairs = 0;
    std::size_t disagreements = 0;
    std::size_t witness_failures = 0;
};

/// Cross-check over the full enumerated population: the profile decision
/// must match exhaustive search over GL(n,p), and every positive decision
/// must come with a verified witness. Orbits are computed once per flag,
/// which is the same exhaustive search shared across pairs.
CertifyStats certify(FieldSpec field, std::size_t n, const std::vector<Rational>& grid,
                     const EnumerationBudget& budget) {
    CertifyStats stats;
    std::vector<FuzzyFlag> flags = enumerate_flags(field, n, grid, budget);
    std::vector<LinearMap> maps = enumerate_invertible_maps(field, n, budget);
    stats.flags = flags.size();

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < flags.size(); ++i)
        index.emplace(serialize_flag(flags[i]), i);

    std::vector<std::vector<bool>> reachable(flags.size(), std::vector<bool>(flags.size(), false));
    for (std::size_t i = 0; i < flags.size(); ++i)
        for (const auto& f : maps) {
            auto hit = index.find(serialize_flag(zadeh_image(f, flags[i])));
            if (hit != index.end())
                reachable[i][hit->second] = true;
        }

    for (std::size_t i = 0; i < flags.size(); ++i)
        for (std::size_t j = 0; j < flags.size(); ++j) {
            ++stats.pairs;
            bool decided = are_isomorphic(flags[i], flags[j]);
            if (decided != reachable[i][j])
                ++stats.disagreements;
            if (decided) {
                ++stats.iso_pairs;
                LinearMap witness = witness_isomorphism(flags[i], flags[j]);
                if (!verify_isomorphism(witness, flags[i], flags[j]) ||
                    !flags_equal(zadeh_image(witness, flags[i]), flags[j]))
                    ++stats.witness_failures;
            }
        }
    return stats;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact fuzzy-subspace toolkit"};
    app.name("fuzzyspace");
    app.fallthrough();
    app.require_subcommand(1);

    std::uint64_t budget_maps = EnumerationBudget{}.max_maps;
    app.add_option("--budget-maps", budget_maps, "override the map-enumeration budget");

    std::string flag_a, flag_b, map_file, table_file, grid_text;
    std::uint64_t field_p = 2;
    std::size_t dim_n = 1;

    CLI::App* c_validate = app.add_subcommand("validate", "check a flag document");
    c_validate->add_option("flag", flag_a, "flag document")->required()->check(CLI::ExistingFile);

    CLI::App* c_dim = app.add_subcommand("dim", "dimension of a fuzzy subspace");
    c_dim->add_option("flag", flag_a, "flag document")->required()->check(CLI::ExistingFile);

    CLI::App* c_basis = app.add_subcommand("basis", "deterministic fuzzy basis");
    c_basis->add_option("flag", flag_a, "flag document")->required()->check(CLI::ExistingFile);

    CLI::App* c_profile = app.add_subcommand("profile", "dimension profile, empty level sets as -1");
    c_profile->add_option("flag", flag_a, "flag document")->required()->check(CLI::ExistingFile);

    CLI::App* c_image = app.add_subcommand("image", "image flag under a linear map");
    c_image->add_option("flag", flag_a, "flag document")->required()->check(CLI::ExistingFile);
    c_image->add_option("--map", map_file, "matrix file")->required()->check(CLI::ExistingFile);

    CLI::App* c_iso = app.add_subcommand("iso", "decide isomorphism, print a witness when ISO");
    c_iso->add_option("flagA", flag_a, "first flag document")->required()->check(CLI::ExistingFile);
    c_iso->add_option("flagB", flag_b, "second flag document")->required()->check(CLI::ExistingFile);

    CLI::App* c_verify = app.add_subcommand("verify", "check a claimed witness isomorphism");
    c_verify->add_option("flagA", flag_a, "first flag document")->required()->check(CLI::ExistingFile);
    c_verify->add_option("flagB", flag_b, "second flag document")->required()->check(CLI::ExistingFile);
    c_verify->add_option("--map", map_file, "matrix file")->required()->check(CLI::ExistingFile);

    CLI::App* c_axioms = app.add_subcommand("check-axioms", "exhaustive fuzzy-subspace axiom check");
    c_axioms->add_option("table", table_file, "pointwise table file")->required()->check(CLI::ExistingFile);

    CLI::App* c_enum = app.add_subcommand("enumerate", "stream all flags over a level grid");
    c_enum->add_option("--field", field_p, "prime field order")->required();
    c_enum->add_option("--dim", dim_n, "ambient dimension")->required();
    c_enum->add_option("--grid", grid_text, "strictly decreasing levels, e.g. 1,1/2,0")->required();

    CLI::App* c_certify = app.add_subcommand("certify", "cross-check the profile decision against brute force");
    c_certify->add_option("--field", field_p, "prime field order")->required();
    c_certify->add_option("--dim", dim_n, "ambient dimension")->required();
    c_certify->add_option("--grid", grid_text, "strictly decreasing levels, e.g. 1,1/2,0")->required();

    try {
        std::vector<std::string> mutable_args = args;
        std::reverse(mutable_args.begin(), mutable_args.end());
        app.parse(mutable_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    EnumerationBudget budget;
    budget.max_maps = budget_maps;

    try {
        if (*c_validate) {
            FuzzyFlag flag = load_flag(flag_a);
            out << "OK ambient=" << flag.ambient() << " levels=" << flag.levels() << "\n";
            return 0;
        }
        if (*c_dim) {
            out << dimension(load_flag(flag_a)).str() << "\n";
            return 0;
        }
        if (*c_basis) {
            FuzzyBasis basis = fuzzy_basis(load_flag(flag_a));
            for (const auto& e : basis.elements())
                out << e.vector.str() << " " << e.grade.str() << "\n";
            return 0;
        }
        if (*c_profile) {
            DimProfile profile = dim_profile(load_flag(flag_a));
            if (profile.top_level() < Rational(1))
                out << "1 -> -1\n";
            for (const auto& e : profile.entries())
                out << e.level.str() << " -> " << e.value.str() << "\n";
            return 0;
        }
        if (*c_image) {
            FuzzyFlag flag = load_flag(flag_a);
            Matrix m = parse_matrix(read_file(map_file), flag.field());
            out << serialize_flag(zadeh_image(LinearMap::from_matrix(std::move(m)), flag));
            return 0;
        }
        if (*c_iso) {
            FuzzyFlag a = load_flag(flag_a);
            FuzzyFlag b = load_flag(flag_b);
            if (are_isomorphic(a, b)) {
                out << "ISO\n" << format_matrix_rows(witness_isomorphism(a, b).matrix());
                return 0;
            }
            Rational da = dimension(a), db = dimension(b);
            if (da == db)
                out << "NOT-ISO dim-equal=" << da.str() << "\n";
            else
                out << "NOT-ISO\n";
            return 1;
        }
        if (*c_verify) {
            FuzzyFlag a = load_flag(flag_a);
            FuzzyFlag b = load_flag(flag_b);
            LinearMap f = LinearMap::from_matrix(parse_matrix(read_file(map_file), a.field()));
            std::string why;
            if (verify_isomorphism(f, a, b, &why)) {
                out << "VALID\n";
                return 0;
            }
            out << "INVALID " << why << "\n";
            return 1;
        }
        if (*c_axioms) {
            PointwiseTable table = parse_pointwise_table(read_file(table_file));
            if (auto witness = check_axioms(table, budget)) {
                out << "VIOLATION " << witness->describe() << "\n";
                return 1;
            }
            out << "OK\n";
            return 0;
        }
        if (*c_enum) {
            std::vector<FuzzyFlag> flags =
                enumerate_flags(FieldSpec::gf(field_p), dim_n, parse_level_grid(grid_text), budget);
            for (std::size_t i = 0; i < flags.size(); ++i) {
                if (i)
                    out << "---\n";
                out << serialize_flag(flags[i]);
            }
            return 0;
        }
        if (*c_certify) {
            CertifyStats stats =
                certify(FieldSpec::gf(field_p), dim_n, parse_level_grid(grid_text), budget);
            out << "flags=" << stats.flags << " pairs=" << stats.pairs << " iso-pairs=" << stats.iso_pairs
                << " disagreements=" << stats.disagreements << " witness-failures=" << stats.witness_failures
                << "\n";
            bool ok = stats.disagreements == 0 && stats.witness_failures == 0;
            out << (ok ? "PASS\n" : "FAIL\n");
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace fuzzyspace
