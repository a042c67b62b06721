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

// Command-line front end: coeffs, invariants and verify.

#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "carlitz/curve/places.hpp"
#include "carlitz/drinfeld/carlitz.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/invariants/invariants.hpp"
#include "carlitz/verify/suites.hpp"

namespace {

using namespace carlitz;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kInvalid = 3, kInconclusive = 4 };

struct RunConfig {
    int precision = 64;
    int depth = 4;
    bool machine = false;
    bool strict = false;
    std::string twists = "0";
};

// Collects key=value lines; human mode aligns them.
class Report {
public:
    explicit Report(bool machine) : machine_(machine) {}
    void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
    void note(const std::string& text) {
        if (!machine_) rows_.emplace_back("#", text);
    }
    void print(std::ostream& os) const {
        std::size_t w = 0;
        for (const auto& [k, v] : rows_)
            if (k != "#") w = std::max(w, k.size());
        for (const auto& [k, v] : rows_) {
            if (k == "#")
                os << "# " << v << '\n';
            else if (machine_)
                os << k << '=' << v << '\n';
            else
                os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
        }
    }

private:
    bool machine_;
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::vector<int> parse_twists(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size() || v < 0) throw std::invalid_argument("bad twist '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty twist list");
    return out;
}

int cmd_coeffs(const RunConfig& cfg, int q, int count) {
    const ff::Fq* F = nullptr;
    try {
        F = &ff::Fq::of_order(q);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    const auto c = drinfeld::exp_coeffs(*F, count);
    if (!cfg.machine) std::cout << "# exp x = sum e[i] x^(q^i), log x = sum l[i] x^(q^i) over F_" << q << "(t)\n";
    std::cout << "q=" << q << '\n' << "count=" << count << '\n';
    for (int i = 1; i <= count; ++i) std::cout << "e[" << i << "]=" << c.e[i].to_string() << '\n';
    for (int i = 1; i <= count; ++i) std::cout << "l[" << i << "]=" << c.l[i].to_string() << '\n';
    return kOk;
}

int cmd_invariants(const RunConfig& cfg, const std::string& path, bool cross_check, int bound) {
    std::vector<int> twists;
    try {
        twists = parse_twists(cfg.twists);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (!std::filesystem::is_regular_file(path)) {
        std::cerr << "error: cannot open curve package '" << path << "'\n";
        return kUsage;
    }
    std::optional<curve::CurvePackage> loaded;
    try {
        loaded = curve::load_package(path);
    } catch (const Error& e) {
        std::cerr << "error: invalid package: " << e.what() << '\n';
        return kInvalid;
    }
    const auto& pkg = *loaded;
    const int prec = std::max(cfg.precision, pkg.series_precision());
    const int q = pkg.field().q();

    Report rep(cfg.machine);
    int code = kOk;
    try {
        rep.add("curve.kind", pkg.kind_name());
        rep.add("curve.q", std::to_string(q));
        rep.add("curve.n", std::to_string(pkg.n()));
        rep.add("curve.genus", std::to_string(pkg.genus()));
        const auto places = curve::places_at_infinity(pkg, 16);
        std::string pl = "[";
        for (std::size_t i = 0; i < places.size(); ++i)
            pl += (i ? "," : "") + std::string("e=") + std::to_string(places[i].e) + "/d=" + std::to_string(places[i].d);
        rep.add("curve.places", pl + "]");

        const auto bd = invariants::boundary_data(pkg, twists.front());
        const auto cm = invariants::class_module(bd);
        const auto um = invariants::unit_module(pkg, bd);
        rep.add("H0.rank", std::to_string(um.rank));
        rep.add("H0.torsion", invariants::poly_list(um.torsion_divisors));
        rep.add("H1.divisors", invariants::poly_list(cm.divisors));
        rep.add("H1.cardinality", "q^" + std::to_string(cm.log_cardinality));
        for (std::size_t i = 0; i < um.generators.size(); ++i) {
            const auto& g = um.generators[i];
            const auto r = invariants::realize_unit(pkg, bd, g, prec);
            const std::string k = "unit[" + std::to_string(i) + "]";
            rep.add(k + ".kind", g.kind == invariants::UnitGenerator::Kind::Coker ? "coker" : "ker");
            rep.add(k + ".c", curve::yto_string(pkg.to_ypoly(r.c)));
            rep.add(k + ".residual_min", std::to_string(r.residual_min));
        }

        if (cross_check) {
            rep.note("the analytic estimate is evidence, not proof: it stops at a finite precision and depth");
            const std::vector<std::pair<int, int>> settings{{prec, cfg.depth}, {prec + 32, cfg.depth == 0 ? 0 : cfg.depth + 2}};
            const auto ar = invariants::analytic_check(pkg, cm, settings);
            for (std::size_t i = 0; i < ar.settings.size(); ++i) {
                const auto& st = ar.settings[i];
                const std::string k = "analytic[" + std::to_string(i) + "]";
                rep.add(k + ".precision", std::to_string(st.prec));
                rep.add(k + ".depth", std::to_string(st.depth));
                rep.add(k + ".codim", std::to_string(st.codim));
                rep.add(k + ".saturated", st.saturated ? "true" : "false");
            }
            rep.add("check.analytic", ar.status);
            if (cfg.strict && ar.status != "PASS") code = kInconclusive;
        }

        try {
            invariants::twist_invariance(pkg, twists);
            rep.add("check.twist", "PASS");
        } catch (const MismatchAcrossTwists& e) {
            rep.add("check.twist", "FAIL");
            rep.note(e.what());
            code = kFail;
        }

        if (bound >= 0)
            for (const auto& row : invariants::generation_table(pkg, bound))
                rep.add("generation[" + std::to_string(row.degree) + "].needed", std::to_string(row.needed));
    } catch (const InvalidPackage& e) {
        rep.print(std::cout);
        std::cerr << "error: invalid package: " << e.what() << '\n';
        return kInvalid;
    }
    rep.print(std::cout);
    return code;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, const std::vector<int>& qs) {
    static const std::vector<std::string> suites{"series", "exactness", "cech", "shtuka", "all"};
    if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kUsage;
    }
    for (int q : qs) {
        try {
            (void)ff::Fq::of_order(q);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kUsage;
        }
    }
    const bool all = suite == "all";
    std::mt19937_64 rng(20260101);
    std::vector<verify::CheckLine> lines;
    auto take = [&](std::vector<verify::CheckLine> more) {
        for (auto& l : more) lines.push_back(std::move(l));
    };
    if (all || suite == "series")
        for (int q : qs) take(verify::series_suite(q));
    if (all || suite == "exactness")
        for (int q : qs)
            if (q <= 3) take(verify::exactness_suite(q, 8));
    for (const auto& c : verify::builtin_corpus()) {
        const auto pkg = verify::builtin(c.name);
        const bool in_q = std::find(qs.begin(), qs.end(), pkg.field().q()) != qs.end();
        if ((all || suite == "series") && in_q) take(verify::place_suite(c.name, pkg, cfg.precision, 100, rng));
        if (all || suite == "cech") take(verify::cech_suite(c.name, pkg));
        if (all || suite == "shtuka") take(verify::shtuka_suite(c.name, pkg, cfg.precision, 50, rng));
    }
    for (const auto& l : lines) {
        std::cout << (l.ok ? "PASS " : "FAIL ") << l.name;
        if (!cfg.machine && !l.detail.empty()) std::cout << "  (" << l.detail << ")";
        std::cout << '\n';
    }
    return verify::all_ok(lines) ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit and class modules of the Carlitz module over curves over finite fields"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--precision", cfg.precision, "working precision in terms")->check(CLI::Range(16, 1 << 16));
    app.add_option("--depth", cfg.depth, "depth of the analytic estimate")->check(CLI::Range(0, 64));
    app.add_flag("--machine", cfg.machine, "key=value output");
    app.add_flag("--strict", cfg.strict, "exit 4 unless the analytic check passes");
    app.add_option("--twist", cfg.twists, "comma separated twists, e.g. 0,1,2");

    auto* coeffs = app.add_subcommand("coeffs", "exponential and logarithm coefficients");
    int q = 0, count = 4;
    coeffs->add_option("--q", q, "field order")->required();
    coeffs->add_option("--count", count, "number of coefficients")->check(CLI::Range(0, 8));

    auto* inv = app.add_subcommand("invariants", "unit and class modules of a curve package");
    std::string path;
    bool cross = false;
    int bound = -1;
    inv->add_option("--curve,curve", path, "curve package file")->required();
    inv->add_flag("--cross-check", cross, "compare with the analytic estimate");
    inv->add_option("--bound", bound, "print the generation table up to this degree")->check(CLI::Range(0, 32));

    auto* ver = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    std::vector<int> qs{2, 3, 4, 5};
    ver->add_option("--suite", suite, "series, exactness, cech, shtuka or all");
    ver->add_option("--q", qs, "field orders for the series and exactness suites");

    // options given after the subcommand are accepted too
    for (auto* sub : {coeffs, inv, ver}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*coeffs) return cmd_coeffs(cfg, q, count);
        if (*inv) return cmd_invariants(cfg, path, cross, bound);
        return cmd_verify(cfg, suite, qs);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
}
