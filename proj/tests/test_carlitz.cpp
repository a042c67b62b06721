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

#include <random>

#include "carlitz/drinfeld/carlitz.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/ff/factor.hpp"
#include "doctest.h"

using namespace carlitz;
using namespace carlitz::ff;
using namespace carlitz::drinfeld;

namespace {

LaurentSeries t_at(const ResidueField& F, int e, ResidueField::Elem lead = 1) {
    return LaurentSeries::monomial(F, lead, -e, 1 << 28);
}

LaurentSeries random_series(const ResidueField& F, std::mt19937_64& rng, int v, int prec) {
    std::uniform_int_distribution<ResidueField::Elem> c(0, static_cast<ResidueField::Elem>(F.order() - 1));
    std::vector<ResidueField::Elem> cs(static_cast<std::size_t>(prec - v));
    for (auto& x : cs) x = c(rng);
    if (cs[0] == 0) cs[0] = 1;
    return {F, v, cs, prec};
}

Poly random_poly(const Fq& F, std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(0, F.q() - 1);
    std::vector<Fq::Elem> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = static_cast<Fq::Elem>(coef(rng));
    return Poly(F, c);
}

}  // namespace

TEST_CASE("phi action examples") {
    const Fq& F2 = Fq::get(2, 1);
    const auto c = phi_coefficients(Poly::parse(F2, "t^2"));
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Poly::parse(F2, "t^2"));
    CHECK(c[1] == Poly::parse(F2, "t^2+t"));
    CHECK(c[2] == Poly::parse(F2, "1"));

    const auto one = phi_coefficients(Poly::constant(F2, 1));
    REQUIRE(one.size() == 1);
    CHECK(one[0].is_one());

    // the carrier F_2 = A/(t): t acts by 0 and the q-power is the identity
    CarrierOps<Fq::Elem> ops{
        [&](Fq::Elem a, Fq::Elem b) { return F2.add(a, b); },
        [&](Fq::Elem k, Fq::Elem a) { return F2.mul(k, a); },
        [](Fq::Elem) { return Fq::Elem{0}; },
        [&](Fq::Elem a) { return F2.frobenius(a); },
    };
    for (Fq::Elem x : {Fq::Elem{0}, Fq::Elem{1}}) {
        CHECK(drinfeld::phi_t(x, ops) == x);
        CHECK(phi_action(Poly::parse(F2, "t+1"), x, ops) == 0);  // annihilated by t+1
    }
}

TEST_CASE("phi is a ring homomorphism in a") {
    std::mt19937_64 rng(43);
    for (int q : {2, 3, 4}) {
        const Fq& F = Fq::of_order(q);
        for (int i = 0; i < 10; ++i) {
            const Poly a = random_poly(F, rng, 3), b = random_poly(F, rng, 3);
            const RatFunc c(random_poly(F, rng, 2), Poly::parse(F, "t^2+1"));
            CHECK(phi_action(a + b, c) == phi_action(a, c) + phi_action(b, c));
            CHECK(phi_action(a * b, c) == phi_action(a, phi_action(b, c)));
        }
    }
}

TEST_CASE("exp coefficient examples") {
    const Fq& F2 = Fq::get(2, 1);
    const auto& e = exp_coefficients(F2, 2);
    CHECK(e[0] == RatFunc(Poly::constant(F2, 1)));
    CHECK(e[1].to_string() == "1/(t^2+t)");
    CHECK(e[2] == RatFunc(Poly::constant(F2, 1), Poly::parse(F2, "(t^4+t^2)*(t^4+t)")));
    CHECK(e[2].to_string() == "1/(t^8+t^6+t^5+t^3)");
    for (int q : {3, 5}) CHECK(exp_coefficients(Fq::of_order(q), 0)[0].to_string() == "1");
}

TEST_CASE("functional equation holds exactly") {
    for (int q : {2, 3, 4, 5}) {
        const auto rep = verify_functional_eq(Fq::of_order(q), 5);
        CHECK(rep.ok);
        CHECK(rep.checked == 6);
    }
    CHECK(verify_functional_eq(Fq::of_order(2), 0).ok);
}

TEST_CASE("degree law for the exponential coefficients") {
    for (int q : {2, 3, 4, 5}) CHECK(verify_degree_law(Fq::of_order(q), 5).ok);
}

TEST_CASE("log coefficients invert exp and match the product formula") {
    for (int q : {2, 3, 4, 5}) {
        const Fq& F = Fq::of_order(q);
        const int n = q <= 3 ? 5 : 4;
        CHECK(verify_composition(F, n).ok);
        const auto& l = log_coefficients(F, n);
        // oracle: l_k = l_{k-1} / (t - t^{q^k})
        RatFunc prod(Poly::constant(F, 1));
        long long qk = 1;
        for (int k = 1; k <= n; ++k) {
            qk *= q;
            prod = prod / RatFunc(Poly::t(F) - Poly::monomial(F, 1, static_cast<int>(qk)));
            CHECK(l[k] == prod);
        }
    }
}

TEST_CASE("exp and log on the place of P1") {
    const ResidueField& F3 = ResidueField::trivial(Fq::get(3, 1));
    const LocalCarlitz C3(t_at(F3, 1));
    CHECK(C3.exp(LaurentSeries::zero(F3, 40)).is_zero());
    const LaurentSeries u(F3, 1, {1}, 40);
    const LaurentSeries d = C3.exp(u) - u;
    CHECK(d.val() > 1);

    const ResidueField& F2 = ResidueField::trivial(Fq::get(2, 1));
    const LocalCarlitz C2(t_at(F2, 1));
    const LaurentSeries inv_u(F2, -1, {1}, 40);
    const LaurentSeries back = C2.log(C2.exp(inv_u));
    CHECK(back.agrees_with(inv_u));
    CHECK(back.prec() >= 40);
    CHECK_THROWS_AS(C2.log(LaurentSeries(F2, -2, {1}, 40)), OutOfDomain);
}

TEST_CASE("exp is F_q-linear, A-linear and contracting") {
    std::mt19937_64 rng(47);
    struct Case {
        int q, d, e;
    };
    for (const Case cs : {Case{2, 1, 1}, Case{3, 1, 2}, Case{3, 2, 1}, Case{4, 1, 1}, Case{5, 1, 2}}) {
        const Fq& F = Fq::of_order(cs.q);
        const ResidueField& R = cs.d == 1 ? ResidueField::trivial(F) : ResidueField::get(F, irreducibles_of_degree(F, cs.d, 1).front());
        const LocalCarlitz C(t_at(R, cs.e, R.gen() == 0 ? 1 : R.gen()));
        const int prec = 48;
        std::uniform_int_distribution<int> vd(-2 * cs.e, 3);
        for (int i = 0; i < 20; ++i) {
            const LaurentSeries x = random_series(R, rng, vd(rng), prec);
            const LaurentSeries y = random_series(R, rng, vd(rng), prec);
            CHECK(C.exp(x + y).agrees_with(C.exp(x) + C.exp(y)));
            const Poly a = random_poly(F, rng, 3);
            const LaurentSeries lhs = C.exp(C.eval_poly(a, x));
            const LaurentSeries rhs = C.phi(a, C.exp(x));
            CHECK(lhs.agrees_with(rhs));
            CHECK(std::min(lhs.prec(), rhs.prec()) >= prec - 3 * cs.e * cs.q);
        }
        // contraction inside v > -e q/(q-1)
        int vmin = 0;
        while (C.in_contraction_domain(vmin - 1)) --vmin;
        std::uniform_int_distribution<int> vin(vmin, 6);
        for (int i = 0; i < 100; ++i) {
            const LaurentSeries x = random_series(R, rng, vin(rng), prec);
            CHECK((C.exp(x) - x).val() > x.val());
        }
    }
}

TEST_CASE("solve_exp") {
    const ResidueField& F3 = ResidueField::trivial(Fq::get(3, 1));
    const LocalCarlitz C(t_at(F3, 1));
    const LaurentSeries x(F3, -3, {1, 0, 0, 0, 1}, 40);  // u^-3 + u
    SolveInfo info;
    const LaurentSeries g = C.solve_exp(C.exp(x), &info);
    CHECK(g.agrees_with(x));
    CHECK(info.peel_steps >= 1);
    CHECK(info.residual_val >= 40);

    CHECK(C.solve_exp(LaurentSeries::zero(F3, 40)).is_zero());

    std::mt19937_64 rng(53);
    for (int i = 0; i < 20; ++i) {
        const LaurentSeries c = random_series(F3, rng, -1, 40);
        CHECK(C.solve_exp(c).agrees_with(C.log(c)));
    }

    // a ramified place over F_3
    const LocalCarlitz R(t_at(F3, 2, 2));
    for (int i = 0; i < 20; ++i) {
        const LaurentSeries y = random_series(F3, rng, -7, 48);
        const LaurentSeries c = R.exp(y);
        SolveInfo si;
        const LaurentSeries g2 = R.solve_exp(c, &si);
        CHECK(R.exp(g2).agrees_with(c));
        CHECK(si.residual_val >= c.prec());
    }
}
