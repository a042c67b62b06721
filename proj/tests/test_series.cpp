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

#include "carlitz/errors.hpp"
#include "carlitz/series/laurent_series.hpp"
#include "doctest.h"

using namespace carlitz;
using namespace carlitz::ff;
using carlitz::series::LaurentSeries;

namespace {

const ResidueField& base_field(int q) { return ResidueField::trivial(Fq::of_order(q)); }

LaurentSeries random_series(const ResidueField& F, std::mt19937_64& rng, int lo, int hi, int prec) {
    std::uniform_int_distribution<ResidueField::Elem> c(0, static_cast<ResidueField::Elem>(F.order() - 1));
    std::uniform_int_distribution<int> v(lo, hi);
    const int val = v(rng);
    std::vector<ResidueField::Elem> cs(static_cast<std::size_t>(prec - val));
    for (auto& x : cs) x = c(rng);
    return {F, val, cs, prec};
}

}  // namespace

TEST_CASE("series arithmetic examples") {
    const ResidueField& F3 = base_field(3);
    const LaurentSeries a(F3, 0, {1, 1}, 10), b(F3, 0, {1, 2}, 10);
    const LaurentSeries prod = a * b;
    CHECK(prod.agrees_with(LaurentSeries(F3, 0, {1, 0, 2}, 10)));
    CHECK(prod.prec() == 10);

    const LaurentSeries inv = LaurentSeries(F3, 0, {1, 1}, 4).inverse();
    CHECK(inv.prec() == 4);
    CHECK(inv.coeffs() == std::vector<ResidueField::Elem>{1, 2, 1, 2});

    CHECK((LaurentSeries(F3, 0, {1}, 5) + LaurentSeries(F3, 0, {1}, 3)).prec() == 3);
    CHECK_THROWS_AS(LaurentSeries::zero(F3, 5).inverse(), DivisionByZero);
}

TEST_CASE("precision rules for products and inverses") {
    const ResidueField& F = base_field(5);
    const LaurentSeries a(F, -2, {1, 3}, 6), b(F, 1, {2}, 4);
    const LaurentSeries m = a * b;
    CHECK(m.prec() == std::min(6 + 1, 4 - 2));
    CHECK(m.val() == -1);
    const LaurentSeries i = a.inverse();
    CHECK(i.val() == 2);
    CHECK(i.prec() == 6 + 4);
    CHECK((i * a).agrees_with(LaurentSeries::constant(F, 1, 100)));
}

TEST_CASE("rth_root examples") {
    const ResidueField& F3 = base_field(3);
    const LaurentSeries a(F3, 0, {1, 1}, 3);
    const LaurentSeries s = a.rth_root(2);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 2);
    CHECK((s * s).agrees_with(a));

    const LaurentSeries u2(F3, 2, {1}, 20);
    CHECK(u2.rth_root(2).agrees_with(LaurentSeries(F3, 1, {1}, 19)));

    const ResidueField& F4 = base_field(4);
    CHECK_THROWS_AS(LaurentSeries(F4, 0, {2}, 8).rth_root(2), NoRoot);
    CHECK_THROWS_AS(LaurentSeries(F3, 1, {1}, 8).rth_root(2), RamifiedRoot);
    CHECK_THROWS_AS(LaurentSeries(F3, 0, {2}, 8).rth_root(2), NoRoot);  // 2 is a non-square mod 3
}

TEST_CASE("q_power examples") {
    const ResidueField& F2 = base_field(2);
    const LaurentSeries a(F2, -1, {1, 1}, 5);
    const LaurentSeries a2 = a.q_power();
    CHECK(a2.val() == -2);
    CHECK(a2.coeff(-2) == 1);
    CHECK(a2.coeff(-1) == 0);
    CHECK(a2.coeff(0) == 1);
    CHECK(a2.prec() == 10);

    const ResidueField& F3 = base_field(3);
    CHECK(LaurentSeries(F3, 1, {2}, 8).q_power().agrees_with(LaurentSeries(F3, 3, {2}, 24)));

    // q = 2 with coefficients in F_4 = F_2[w]/(w^2+w+1)
    const Fq& f2 = Fq::get(2, 1);
    const ResidueField& F4 = ResidueField::get(f2, Poly::parse(f2, "t^2+t+1"));
    const LaurentSeries w(F4, 1, {F4.gen()}, 6);
    CHECK(w.q_power().val() == 2);
    CHECK(w.q_power().coeff(2) == F4.add(F4.gen(), 1));
    CHECK(F4.format(w.q_power().coeff(2)) == "z+1");
}

TEST_CASE("valuation examples and rendering") {
    const ResidueField& F = base_field(3);
    CHECK(LaurentSeries(F, -3, {1, 0, 0, 1}, 5).val() == -3);
    const LaurentSeries z = LaurentSeries::zero(F, 10);
    CHECK(z.is_zero());
    CHECK(z.to_string() == "O(u^10)");
    CHECK(LaurentSeries(F, 5, {1}, 8).val() == 5);
    CHECK(LaurentSeries(F, -2, {1, 0, 2}, 7).to_string() == "u^-2 + 2*u^0 + O(u^7)");
    const ResidueField& F4 = base_field(4);
    CHECK(LaurentSeries(F4, 0, {3}, 2).to_string() == "(w+1)*u^0 + O(u^2)");
}

TEST_CASE("ultrametric inequality on 500 random pairs") {
    std::mt19937_64 rng(29);
    for (int q : {2, 3, 4, 5}) {
        const ResidueField& F = base_field(q);
        for (int i = 0; i < 125; ++i) {
            const LaurentSeries a = random_series(F, rng, -4, 4, 12), b = random_series(F, rng, -4, 4, 10);
            const LaurentSeries s = a + b;
            CHECK(s.val() >= std::min(a.val(), b.val()));
            if (a.val() != b.val()) CHECK(s.val() == std::min(a.val(), b.val()));
        }
    }
}

TEST_CASE("q_power is additive and multiplicative") {
    std::mt19937_64 rng(31);
    for (int q : {2, 3, 4, 9}) {
        const ResidueField& F = base_field(q);
        for (int i = 0; i < 50; ++i) {
            const LaurentSeries a = random_series(F, rng, -3, 3, 9), b = random_series(F, rng, -3, 3, 9);
            CHECK((a + b).q_power().agrees_with(a.q_power() + b.q_power()));
            CHECK((a * b).q_power().agrees_with(a.q_power() * b.q_power()));
        }
    }
    // over a proper residue extension the coefficients are moved by x -> x^q
    const Fq& F3 = Fq::get(3, 1);
    const ResidueField& E = ResidueField::get(F3, Poly::parse(F3, "t^2+1"));
    const LaurentSeries z(E, 0, {E.gen()}, 4);
    CHECK(z.q_power().coeff(0) == E.pow(E.gen(), 3));
    CHECK(z.q_power().agrees_with(z.pow(3)));
}

TEST_CASE("rth_root round trip on 100 random units") {
    std::mt19937_64 rng(37);
    const Fq& F5 = Fq::get(5, 1);
    const ResidueField& E = ResidueField::get(F5, Poly::parse(F5, "t^2+2"));
    int done = 0;
    for (int r : {2, 3, 4, 6}) {
        for (int i = 0; i < 25; ++i) {
            // a = b^r for random b so that the leading coefficient is an r-th power
            LaurentSeries b = random_series(E, rng, -2, 2, 20);
            if (b.is_zero()) b = LaurentSeries::constant(E, 1, 20);
            const LaurentSeries a = b.pow(r);
            const LaurentSeries root = a.rth_root(r);
            CHECK(root.pow(r).agrees_with(a));
            ++done;
        }
    }
    CHECK(done == 100);
}

TEST_CASE("inverse and evaluation of polynomials") {
    std::mt19937_64 rng(41);
    const Fq& F = Fq::get(3, 1);
    const ResidueField& R = ResidueField::trivial(F);
    const LaurentSeries t(R, -1, {1}, 30);  // t = 1/u
    const Poly f = Poly::parse(F, "t^3+2*t+1");
    const LaurentSeries ft = series::eval(f, t);
    CHECK(ft.val() == -3);
    CHECK(ft.coeff(-3) == 1);
    CHECK(ft.coeff(-1) == 2);
    CHECK(ft.coeff(0) == 1);
    for (int i = 0; i < 20; ++i) {
        const LaurentSeries a = random_series(R, rng, -3, 3, 15);
        if (a.is_zero()) continue;
        CHECK((a * a.inverse()).agrees_with(LaurentSeries::constant(R, 1, 100)));
    }
}
