/*
   Copyright 2026 The carlitz-shtuka Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "carlitz/drinfeld/carlitz.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/invariants/invariants.hpp"
#include "carlitz/verify/suites.hpp"

using namespace carlitz;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
}

// Runs body, turning an escaped error into a failed line.
template <class F>
void criterion(int id, const std::string& name, F body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, name, false, std::string("error: ") + e.what());
    }
}

std::vector<verify::CheckLine> filter(const std::vector<verify::CheckLine>& lines, const std::string& prefix) {
    std::vector<verify::CheckLine> out;
    for (const auto& l : lines)
        if (l.name.rfind(prefix, 0) == 0) out.push_back(l);
    return out;
}

std::string first_failure(const std::vector<verify::CheckLine>& lines) {
    for (const auto& l : lines)
        if (!l.ok) return l.name + " (" + l.detail + ")";
    return "";
}

}  // namespace

int main() {
    const std::vector<int> qs{2, 3, 4, 5};
    const auto& corpus = verify::builtin_corpus();
    std::mt19937_64 rng(20261016);

    // place-level checks are shared by criteria 3, 4 and 6
    std::vector<verify::CheckLine> places, diagrams;
    for (const auto& c : corpus) {
        const auto pkg = verify::builtin(c.name);
        for (auto& l : verify::place_suite(c.name, pkg, 64, 100, rng)) places.push_back(l);
        for (auto& l : verify::shtuka_suite(c.name, pkg, 64, 50, rng)) diagrams.push_back(l);
    }

    criterion(1, "functional equation", [&] {
        const auto t0 = Clock::now();
        bool ok = true;
        int checked = 0;
        for (int q : qs) {
            const auto rep = drinfeld::verify_functional_eq(ff::Fq::of_order(q), 4);
            ok = ok && rep.ok;
            checked += rep.checked;
        }
        const double s = seconds_since(t0);
        std::ostringstream d;
        d << "exact modulo x^(q^5) for q = 2, 3, 4, 5 (" << checked << " coefficients) in " << s << " s";
        report(1, "functional equation", ok && s < 5.0, d.str());
    });

    criterion(2, "coefficient degree law", [&] {
        bool ok = true;
        for (int q : qs) ok = ok && drinfeld::verify_degree_law(ff::Fq::of_order(q), 5).ok;
        report(2, "coefficient degree law", ok, "deg den - deg num of e_i is i q^i for i <= 5, q = 2, 3, 4, 5");
    });

    criterion(3, "log inversion", [&] {
        const auto lines = filter(places, "log-inversion");
        const bool ok = verify::all_ok(lines) && !lines.empty();
        report(3, "log inversion", ok,
               ok ? std::to_string(lines.size()) + " places, 100 samples each, residual >= 60 at precision 64"
                  : first_failure(lines));
    });

    criterion(4, "contraction", [&] {
        const auto lines = filter(places, "contraction");
        int witnesses = 0;
        for (const auto& l : lines) {
            if (l.detail.find("outside witness at") != std::string::npos) ++witnesses;
            std::cout << "    " << l.name << ": " << l.detail << '\n';
        }
        const bool ok = verify::all_ok(lines) && !lines.empty();
        report(4, "contraction", ok,
               ok ? std::to_string(lines.size()) + " places contract on 100 samples; non-contraction outside the domain logged at " +
                        std::to_string(witnesses)
                  : first_failure(lines));
    });

    criterion(5, "exactness away from infinity", [&] {
        std::vector<verify::CheckLine> lines;
        for (int q : {2, 3})
            for (auto& l : verify::exactness_suite(q, 8)) lines.push_back(l);
        const bool ok = verify::all_ok(lines) && lines.size() == 32;
        report(5, "exactness away from infinity", ok,
               ok ? "four checks on four algebras for q = 2, 3 at window 8" : first_failure(lines));
    });

    criterion(6, "diagram at infinity", [&] {
        const bool ok = verify::all_ok(diagrams) && !diagrams.empty();
        report(6, "diagram at infinity", ok,
               ok ? std::to_string(diagrams.size()) + " checks, 50 random (f, a) per place at precision 64"
                  : first_failure(diagrams));
    });

    criterion(7, "P1 end to end", [&] {
        const auto t0 = Clock::now();
        const auto pkg = verify::builtin("p1");
        const auto bd = invariants::boundary_data(pkg);
        const auto cm = invariants::class_module(bd);
        const auto um = invariants::unit_module(pkg, bd);
        int res = 1 << 20;
        for (const auto& g : um.generators) res = std::min(res, invariants::realize_unit(pkg, bd, g, 64).residual_min);
        const double s = seconds_since(t0);
        const bool ok = um.rank == 1 && um.torsion_divisors.empty() && um.kernel_d0 == 0 && cm.divisors.empty() &&
                        cm.finite && res >= 40 && s < 1.0;
        std::ostringstream d;
        d << "H0 free of rank " << um.rank << ", H1 " << invariants::poly_list(cm.divisors) << ", ker d0 rank "
          << um.kernel_d0 << ", residual " << res << ", " << s << " s";
        report(7, "P1 end to end", ok, d.str());
    });

    criterion(8, "analytic and algebraic class modules agree", [&] {
        int agree = 0, nontrivial = 0, tried = 0;
        std::string bad;
        for (const auto& c : corpus) {
            const auto pkg = verify::builtin(c.name);
            if (pkg.genus() < 1) continue;
            ++tried;
            const auto cm = invariants::class_module(invariants::boundary_data(pkg));
            const auto rep = invariants::analytic_check(pkg, cm, {{64, 4}, {96, 6}});
            std::cout << "    " << c.name << ": |H1| = q^" << cm.log_cardinality << ", analytic "
                      << rep.settings[0].codim << " and " << rep.settings[1].codim << ", " << rep.status << '\n';
            if (rep.status == "PASS") {
                ++agree;
                if (cm.log_cardinality > 0) ++nontrivial;
            } else {
                bad += " " + c.name;
            }
        }
        report(8, "analytic and algebraic class modules agree", agree >= 2 && bad.empty(),
               std::to_string(agree) + "/" + std::to_string(tried) + " curves of genus >= 1 at (64, 4) and (96, 6), " +
                   std::to_string(nontrivial) + " with nontrivial H1" + (bad.empty() ? "" : "; disagree:" + bad));
    });

    criterion(9, "structure forced on every package", [&] {
        std::vector<verify::CheckLine> lines;
        for (const auto& c : corpus)
            for (auto& l : verify::cech_suite(c.name, verify::builtin(c.name))) lines.push_back(l);
        const bool ok = verify::all_ok(lines);
        report(9, "structure forced on every package", ok,
               ok ? std::to_string(corpus.size()) + " packages: H1 finite, H0 torsion-free of rank n, Euler exact"
                  : first_failure(lines));
    });

    criterion(10, "twist invariance", [&] {
        std::string names;
        for (const char* name : {"p1", "g1_q3", "g2_q5", "g3_q3"}) {
            invariants::twist_invariance(verify::builtin(name), {0, 1, 2});
            names += std::string(names.empty() ? "" : ", ") + name;
        }
        report(10, "twist invariance", true, "identical invariants for twists 0, 1, 2 on " + names);
    });

    criterion(11, "generation table", [&] {
        const auto rows = invariants::generation_table(verify::builtin("g1_q3"), 8);
        bool monotone = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::cout << "    degree " << rows[i].degree << ": window " << rows[i].dim_window << ", image "
                      << rows[i].dim_image << ", generators needed " << rows[i].needed << '\n';
            if (i && rows[i].needed < rows[i - 1].needed) monotone = false;
        }
        const bool grows = rows.back().needed > rows.front().needed;
        report(11, "generation table", monotone && grows,
               "genus 1, generators needed grow from " + std::to_string(rows.front().needed) + " to " +
                   std::to_string(rows.back().needed) + " up to degree 8");
    });

    return failures == 0 ? 0 : 1;
}
