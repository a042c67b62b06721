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

#include "carlitz/verify/suites.hpp"

#include <algorithm>
#include <sstream>

#include "carlitz/curve/cohomology.hpp"
#include "carlitz/curve/places.hpp"
#include "carlitz/drinfeld/carlitz.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/invariants/invariants.hpp"

namespace carlitz::verify {

using curve::CurvePackage;
using ff::Fq;
using ff::Poly;
using ff::ResidueField;
using series::LaurentSeries;
using shtuka::FiniteAlgebra;

namespace {

std::string superelliptic(int p, const char* f, int prec = 0) {
    std::string s = "[field] p=" + std::to_string(p) + " e=1\n[model] kind=superelliptic m=2 f=" + f + "\n";
    if (prec) s += "[precision] series=" + std::to_string(prec) + "\n";
    return s;
}

LaurentSeries random_series(const ResidueField& F, std::mt19937_64& rng, int v, int prec) {
    std::uniform_int_distribution<ResidueField::Elem> c(0, static_cast<ResidueField::Elem>(F.order() - 1));
    std::vector<ResidueField::Elem> cs(static_cast<std::size_t>(prec - v));
    for (auto& x : cs) x = c(rng);
    if (cs[0] == 0) cs[0] = 1;
    return {F, v, cs, prec};
}

CheckLine line(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail)}; }

CheckLine from_report(std::string name, const drinfeld::IdentityReport& rep) {
    std::string detail = std::to_string(rep.checked) + " coefficients";
    if (!rep.failures.empty()) detail += ", first failure " + rep.failures.front();
    return line(std::move(name), rep.ok, detail);
}

std::string tag(const std::string& name, std::size_t place) { return "[" + name + "/z" + std::to_string(place) + "]"; }

}  // namespace

const std::vector<BuiltinCurve>& builtin_corpus() {
    static const std::vector<BuiltinCurve> corpus{
        {"p1", "# the projective line over F_3\n[field] p=3 e=1\n[model] kind=pone\n"},
        {"p1_q4", "# the projective line over F_4\n[field] p=2 e=2\n[model] kind=pone\n"},
        {"g1_q3", "# genus 1\n" + superelliptic(3, "t^3+2*t+1")},
        {"g2_q3", "# genus 2\n" + superelliptic(3, "t^5+2*t+1")},
        {"g2_q5", "# genus 2, class module A/(t+1)\n" + superelliptic(5, "t^5+2*t^4+1")},
        {"g3_q3", "# genus 3, class module A/(t)\n" + superelliptic(3, "t^7+2*t^5+1")},
        {"g3_q5", "# genus 3\n" + superelliptic(5, "t^7+3*t^2+1")},
        {"q2_cubic",
         "# genus 1 over F_2, tame at infinity\n"
         "[field] p=2 e=1\n"
         "[model]\n"
         "kind=generic\n"
         "g=y^3-(t^3+t+1)\n"
         "basis_fin=1;y;y^2\n"
         "basis_inf=1;s*y;s^2*y^2\n"},
    };
    return corpus;
}

CurvePackage builtin(const std::string& name) {
    for (const auto& c : builtin_corpus())
        if (c.name == name) return curve::parse_package(c.text);
    throw ParseError("no built-in curve named '" + name + "'");
}

std::vector<FiniteAlgebra> standard_algebras(const Fq& F) {
    const Poly t = Poly::t(F);
    Poly irr(F);
    for (int c = 1; c < F.q() && irr.is_zero(); ++c) {
        const Poly cand = t * t + t + Poly::constant(F, static_cast<Fq::Elem>(c));
        bool root = false;
        for (int x = 0; x < F.q(); ++x) root = root || cand.eval(static_cast<Fq::Elem>(x)) == 0;
        if (!root) irr = cand;
    }
    return {FiniteAlgebra::quotient(F, t), FiniteAlgebra::quotient(F, t * t), FiniteAlgebra::quotient(F, irr),
            FiniteAlgebra::quotient(F, t * t - t)};
}

bool all_ok(const std::vector<CheckLine>& lines) {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

std::vector<CheckLine> series_suite(int q) {
    const Fq& F = Fq::of_order(q);
    const std::string sfx = "[q=" + std::to_string(q) + "]";
    std::vector<CheckLine> out;
    out.push_back(from_report("functional-equation" + sfx, drinfeld::verify_functional_eq(F, 4)));
    out.push_back(from_report("degree-law" + sfx, drinfeld::verify_degree_law(F, 5)));
    out.push_back(from_report("round-trip" + sfx, drinfeld::verify_composition(F, q <= 3 ? 5 : 4)));
    return out;
}

std::vector<CheckLine> place_suite(const std::string& name, const CurvePackage& pkg, int prec, int trials,
                                   std::mt19937_64& rng) {
    std::vector<CheckLine> out;
    const auto places = curve::places_at_infinity(pkg, prec + 16);
    for (std::size_t k = 0; k < places.size(); ++k) {
        const drinfeld::LocalCarlitz C(places[k].embed_t);
        const ResidueField& R = places[k].field();
        const int e = C.ram();

        // t O^ is v >= -e
        int worst = prec;
        std::uniform_int_distribution<int> vd(-e, 6);
        for (int i = 0; i < trials; ++i) {
            const LaurentSeries x = random_series(R, rng, vd(rng), prec);
            worst = std::min(worst, (C.log(C.exp(x)) - x).val());
            worst = std::min(worst, (C.exp(C.log(x)) - x).val());
        }
        out.push_back(line("log-inversion" + tag(name, k), worst >= prec - 4,
                           "residual valuation " + std::to_string(worst) + " at precision " + std::to_string(prec)));

        int vmin = 0;
        while (C.in_contraction_domain(vmin - 1)) --vmin;
        std::uniform_int_distribution<int> vin(vmin, 6);
        int bad = 0;
        for (int i = 0; i < trials; ++i) {
            const LaurentSeries x = random_series(R, rng, vin(rng), prec);
            if ((C.exp(x) - x).val() <= x.val()) ++bad;
        }
        std::string witness = "no outside witness sampled";
        for (int i = 0; i < 20; ++i) {
            const LaurentSeries x = random_series(R, rng, vmin - 1, prec);
            if ((C.exp(x) - x).val() <= x.val()) {
                witness = "outside witness at v=" + std::to_string(vmin - 1);
                break;
            }
        }
        out.push_back(line("contraction" + tag(name, k), bad == 0,
                           std::to_string(trials - bad) + "/" + std::to_string(trials) + " contract, " + witness));
    }
    return out;
}

std::vector<CheckLine> exactness_suite(int q, int window) {
    std::vector<CheckLine> out;
    const Fq& F = Fq::of_order(q);
    for (const auto& R : standard_algebras(F)) {
        const std::string sfx = "[q=" + std::to_string(q) + ",R=F_q[t]/(" + R.modulus().to_string() + ")]";
        try {
            for (auto& l : shtuka::check_prop_away(R, window)) {
                l.name += sfx;
                out.push_back(std::move(l));
            }
        } catch (const ExactnessFailure& e) {
            out.push_back(line("exactness" + sfx, false, e.what()));
        }
    }
    return out;
}

std::vector<CheckLine> cech_suite(const std::string& name, const CurvePackage& pkg) {
    std::vector<CheckLine> out;
    const std::string sfx = "[" + name + "]";
    const int n = pkg.n(), g = pkg.genus();
    std::ostringstream bad;
    for (int m = -2; m <= 3; ++m) {
        const auto s = curve::cech_cohomology(pkg, m);
        if (s.h0_dim() - s.h1_dim() != m * n + 1 - g) bad << " m=" << m;
    }
    out.push_back(line("euler" + sfx, bad.str().empty(), bad.str().empty() ? "m=-2..3" : "fails at" + bad.str()));

    bool stable = true;
    for (int m : {0, 1}) {
        const auto a = curve::cech_cohomology(pkg, m);
        const auto b = curve::cech_cohomology(pkg, m, 2 * a.window());
        stable = stable && a.h0_dim() == b.h0_dim() && a.h1_dim() == b.h1_dim();
    }
    out.push_back(line("window-stability" + sfx, stable, "doubled window"));

    const auto bd = invariants::boundary_data(pkg);
    const auto cm = invariants::class_module(bd);
    out.push_back(line("class-finite" + sfx, cm.finite, "H1 divisors " + invariants::poly_list(cm.divisors)));
    try {
        const auto um = invariants::unit_module(pkg, bd);
        out.push_back(line("unit-rank" + sfx, true, "rank " + std::to_string(um.rank) + ", torsion-free, ker d0 = 0"));
        int worst = 1 << 20;
        for (const auto& gen : um.generators) worst = std::min(worst, invariants::realize_unit(pkg, bd, gen, 64).residual_min);
        out.push_back(line("realization" + sfx, worst >= 56, "residual valuation " + std::to_string(worst)));
    } catch (const Error& e) {
        out.push_back(line("unit-rank" + sfx, false, e.what()));
    }
    return out;
}

std::vector<CheckLine> shtuka_suite(const std::string& name, const CurvePackage& pkg, int prec, int trials,
                                    std::mt19937_64& rng) {
    std::vector<CheckLine> out;
    bool zero = true;
    for (const auto& R : standard_algebras(pkg.field()))
        zero = zero && shtuka::hom_from_unit(shtuka::AffineShtuka::carlitz(R), 4).empty();
    out.push_back(line("hom-unit-carlitz[" + name + "]", zero, "Hom(1, C) = 0 in A-degree <= 4"));
    const auto places = curve::places_at_infinity(pkg, prec + 16);
    for (std::size_t k = 0; k < places.size(); ++k) {
        try {
            for (auto& l : shtuka::check_prop_lie(places[k], prec, trials, rng)) {
                l.name += tag(name, k);
                out.push_back(std::move(l));
            }
        } catch (const IdentityFailure& e) {
            out.push_back(line("diagram" + tag(name, k), false, e.what()));
        }
    }
    return out;
}

}  // namespace carlitz::verify
