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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails. All checks are
// exact (zero tolerance).

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "fuzzyspace/cli.hpp"
#include "fuzzyspace/io.hpp"
#include "../unit/test_helpers.hpp"

using namespace fuzzyspace;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " - " << detail << "\n";
    if (!ok)
        ++failures;
}

std::string fixture(const std::string& name) { return std::string(FUZZYSPACE_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const FieldSpec F2 = FieldSpec::gf(2);
const FieldSpec F3 = FieldSpec::gf(3);

const std::vector<Rational> grid_small{Rational(1), Rational(1, 2), Rational(0)};
const std::vector<Rational> grid_medium{Rational(1), Rational(2, 3), Rational(1, 3), Rational(0)};

struct PairRun {
    std::vector<FuzzyFlag> flags;
    std::vector<std::vector<bool>> oracle;   // exhaustive GL search, memoized per flag
    std::vector<std::vector<bool>> decision; // are_isomorphic
    std::size_t disagreements = 0;
};

// Cross-checks the profile decision against exhaustive search over all
// invertible maps. The search is shared across pairs by computing each
// flag's full orbit once; brute_force_iso itself is spot-checked on top.
PairRun run_population(FieldSpec field, std::size_t n, const std::vector<Rational>& grid) {
    PairRun run;
    run.flags = enumerate_flags(field, n, grid);
    std::vector<LinearMap> maps = enumerate_invertible_maps(field, n);

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < run.flags.size(); ++i)
        index.emplace(serialize_flag(run.flags[i]), i);

    run.oracle.assign(run.flags.size(), std::vector<bool>(run.flags.size(), false));
    for (std::size_t i = 0; i < run.flags.size(); ++i)
        for (const auto& f : maps)
            run.oracle[i][index.at(serialize_flag(zadeh_image(f, run.flags[i])))] = true;

    run.decision.assign(run.flags.size(), std::vector<bool>(run.flags.size(), false));
    for (std::size_t i = 0; i < run.flags.size(); ++i)
        for (std::size_t j = 0; j < run.flags.size(); ++j) {
            run.decision[i][j] = are_isomorphic(run.flags[i], run.flags[j]);
            if (run.decision[i][j] != run.oracle[i][j])
                ++run.disagreements;
        }
    return run;
}

} // namespace

int main() {
    // Criterion 1: exhaustive certification over GF(2)^2, grid {1, 1/2, 0},
    // with brute_force_iso called literally on every ordered pair.
    {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<FuzzyFlag> flags = enumerate_flags(F2, 2, grid_small);
        std::size_t gl_size = enumerate_invertible_maps(F2, 2).size();
        std::size_t disagreements = 0;
        for (const auto& a : flags)
            for (const auto& b : flags)
                if (are_isomorphic(a, b) != brute_force_iso(a, b).has_value())
                    ++disagreements;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        report(1, flags.size() == 18 && gl_size == 6 && disagreements == 0,
               "GF(2)^2 grid {1,1/2,0}: " + std::to_string(flags.size() * flags.size()) +
                   " ordered pairs vs GL(2,2), disagreements=" + std::to_string(disagreements) + ", " +
                   std::to_string(ms.count()) + " ms");
    }

    // Criterion 2: the same certification over GF(2)^3, grid {1, 2/3, 1/3, 0},
    // against GL(3,2); the exhaustive search is memoized per flag, and
    // brute_force_iso is re-run literally on a deterministic pair sample.
    PairRun medium = run_population(F2, 3, grid_medium);
    {
        auto t0 = std::chrono::steady_clock::now();
        std::size_t gl_size = enumerate_invertible_maps(F2, 3).size();
        std::size_t sampled = 0, sample_mismatch = 0;
        for (std::size_t i = 0; i < medium.flags.size(); i += 17)
            for (std::size_t j = 0; j < medium.flags.size(); j += 23) {
                ++sampled;
                if (brute_force_iso(medium.flags[i], medium.flags[j]).has_value() != medium.oracle[i][j])
                    ++sample_mismatch;
            }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        report(2,
               medium.flags.size() == 255 && gl_size == 168 && medium.disagreements == 0 &&
                   sample_mismatch == 0,
               "GF(2)^3 grid {1,2/3,1/3,0}: " +
                   std::to_string(medium.flags.size() * medium.flags.size()) +
                   " ordered pairs vs GL(3,2), disagreements=" + std::to_string(medium.disagreements) +
                   ", literal brute-force sample " + std::to_string(sampled) + " pairs, " +
                   std::to_string(ms.count()) + " ms");
    }

    // Criterion 3: every pair declared ISO in runs 1-2 comes with a witness
    // that verifies and reproduces the target flag exactly.
    {
        std::size_t iso_pairs = 0, bad = 0;
        std::vector<FuzzyFlag> small = enumerate_flags(F2, 2, grid_small);
        auto check_witnesses = [&](const std::vector<FuzzyFlag>& flags) {
            for (const auto& a : flags)
                for (const auto& b : flags) {
                    if (!are_isomorphic(a, b))
                        continue;
                    ++iso_pairs;
                    LinearMap w = witness_isomorphism(a, b);
                    if (!verify_isomorphism(w, a, b) || !flags_equal(zadeh_image(w, a), b))
                        ++bad;
                }
        };
        check_witnesses(small);
        check_witnesses(medium.flags);
        report(3, bad == 0 && iso_pairs > 0,
               std::to_string(iso_pairs) + " ISO pairs, invalid witnesses=" + std::to_string(bad));
    }

    // Criterion 4: grade sums of 1000 remixed fuzzy bases (10 each over 100
    // random flags on GF(3)^3) all equal the dimension exactly.
    {
        std::mt19937 rng(20260811);
        std::vector<Rational> pool{Rational(1),    Rational(4, 5), Rational(2, 3), Rational(1, 2),
                                   Rational(1, 3), Rational(1, 5), Rational(0)};
        std::size_t checked = 0, bad = 0;
        for (int flag_no = 0; flag_no < 100; ++flag_no) {
            FuzzyFlag mu = testutil::random_flag(rng, F3, 3, pool);
            FuzzyBasis basis = fuzzy_basis(mu);
            Rational dim = dimension(mu);
            for (int remix = 0; remix < 10; ++remix) {
                std::vector<Vector> mixed = testutil::remix_within_levels(rng, mu, basis);
                Rational sum;
                for (const auto& v : mixed)
                    sum = sum + membership(mu, v);
                ++checked;
                if (!(sum == dim && span(F3, 3, mixed).rank() == 3))
                    ++bad;
            }
        }
        report(4, checked == 1000 && bad == 0,
               std::to_string(checked) + " remixed bases over 100 random GF(3)^3 flags, mismatches=" +
                   std::to_string(bad));
    }

    // Criterion 5: the equal-dimension separation pair. Committed fixtures
    // pin the dimensions, the NOT-ISO verdict and the exact CLI bytes.
    {
        FuzzyFlag mu = parse_flag(slurp(fixture("mu.flag")));
        FuzzyFlag etac = parse_flag(slurp(fixture("etac.flag")));
        bool dims_ok = dimension(mu) == Rational(3, 2) && dimension(etac) == Rational(3, 2);
        bool not_iso = !are_isomorphic(mu, etac);

        std::ostringstream out, err;
        int code = run_command({"iso", fixture("mu.flag"), fixture("etac.flag")}, out, err);
        bool bytes_ok = code == 1 && out.str() == slurp(fixture("golden/iso_mu_etac.txt"));

        std::ostringstream dim_out, dim_err;
        int dim_code = run_command({"dim", fixture("mu.flag")}, dim_out, dim_err);
        bool dim_ok = dim_code == 0 && dim_out.str() == slurp(fixture("golden/dim_mu.txt"));

        report(5, dims_ok && not_iso && bytes_ok && dim_ok,
               "dim(mu)=dim(etac)=3/2, NOT-ISO, CLI bytes match the fixtures");
    }

    // Criterion 6: the image-set bound |Im| <= n+1 across runs 1-2 and for
    // every flag from_pointwise constructs.
    {
        std::size_t bad = 0;
        for (const auto& a : enumerate_flags(F2, 2, grid_small))
            if (image_set(a).size() > 3)
                ++bad;
        for (const auto& a : medium.flags)
            if (image_set(a).size() > 4)
                ++bad;
        std::size_t built = 0;
        for (std::size_t code = 0; code < 256; ++code) {
            std::vector<Rational> grades;
            std::size_t rest = code;
            for (int i = 0; i < 4; ++i) {
                grades.push_back(grid_medium[rest % 4]);
                rest /= 4;
            }
            PointwiseTable table(F2, 2, grades);
            if (check_axioms(table).has_value())
                continue;
            ++built;
            if (image_set(from_pointwise(table)).size() > 3)
                ++bad;
        }
        report(6, bad == 0 && built > 0,
               "bound holds on both populations and on " + std::to_string(built) +
                   " from_pointwise flags, violations=" + std::to_string(bad));
    }

    // Criterion 7: over GF(2)^2 every table on the 4-level grid either
    // round-trips through from_pointwise or is rejected with AxiomViolation,
    // in exact agreement with check_axioms.
    {
        std::size_t passing = 0, failing = 0, bad = 0;
        for (std::size_t code = 0; code < 256; ++code) {
            std::vector<Rational> grades;
            std::size_t rest = code;
            for (int i = 0; i < 4; ++i) {
                grades.push_back(grid_medium[rest % 4]);
                rest /= 4;
            }
            PointwiseTable table(F2, 2, grades);
            if (!check_axioms(table).has_value()) {
                ++passing;
                if (!(expand_flag(from_pointwise(table)) == table))
                    ++bad;
            } else {
                ++failing;
                try {
                    from_pointwise(table);
                    ++bad;
                } catch (const Error& e) {
                    if (e.code() != Errc::AxiomViolation)
                        ++bad;
                }
            }
        }
        report(7, bad == 0 && passing + failing == 256,
               std::to_string(passing) + " tables round trip, " + std::to_string(failing) +
                   " rejected with AxiomViolation, errors=" + std::to_string(bad));
    }

    // Criterion 8: images commute with level sets for every invertible map
    // over GF(2)^2, every run-1 flag and every grid level.
    {
        std::size_t bad = 0, checks = 0;
        for (const auto& f : enumerate_invertible_maps(F2, 2))
            for (const auto& mu : enumerate_flags(F2, 2, grid_small))
                for (const auto& t : grid_small) {
                    ++checks;
                    auto before = level_subspace(mu, t);
                    auto after = level_subspace(zadeh_image(f, mu), t);
                    if (before.has_value() != after.has_value()) {
                        ++bad;
                        continue;
                    }
                    if (before && !(apply_to_subspace(f.matrix(), *before) == *after))
                        ++bad;
                }
        report(8, bad == 0,
               std::to_string(checks) + " map/flag/level triples, violations=" + std::to_string(bad));
    }

    // Criterion 9: parse-serialize identity over the run-1 population plus
    // the three byte-exact golden commands.
    {
        std::size_t bad = 0;
        for (const auto& mu : enumerate_flags(F2, 2, grid_small))
            if (!flags_equal(parse_flag(serialize_flag(mu)), mu))
                ++bad;

        struct Golden {
            std::vector<std::string> args;
            int code;
            std::string file;
        };
        std::vector<Golden> goldens{
            {{"iso", fixture("mu.flag"), fixture("eta.flag")}, 0, "golden/iso_mu_eta.txt"},
            {{"iso", fixture("mu.flag"), fixture("etac.flag")}, 1, "golden/iso_mu_etac.txt"},
            {{"dim", fixture("mu.flag")}, 0, "golden/dim_mu.txt"},
        };
        for (const auto& g : goldens) {
            std::ostringstream out, err;
            int code = run_command(g.args, out, err);
            if (code != g.code || out.str() != slurp(fixture(g.file)))
                ++bad;
        }
        report(9, bad == 0, "round-trip identity on 18 flags and 3 byte-exact goldens, failures=" +
                                std::to_string(bad));
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
