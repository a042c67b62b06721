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
#include "carlitz/ff/factor.hpp"
#include "carlitz/ff/field.hpp"
#include "carlitz/ff/linalg.hpp"
#include "carlitz/ff/poly.hpp"
#include "carlitz/ff/residue_field.hpp"
#include "carlitz/ff/smith.hpp"
#include "doctest.h"

using namespace carlitz;
using namespace carlitz::ff;

namespace {

Poly random_poly(const Fq& F, std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(0, F.q() - 1);
    std::vector<Fq::Elem> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = static_cast<Fq::Elem>(coef(rng));
    return Poly(F, c);
}

// Rank over F_q(t) by Gaussian elimination with rational functions; an
// independent route from the Smith form.
int rank_over_fraction_field(const PolyMatrix& m) {
    const Fq& F = m.field();
    std::vector<std::vector<RatFunc>> a(m.rows(), std::vector<RatFunc>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = RatFunc(m.at(i, j).has_field() ? m.at(i, j) : Poly(F));
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!a[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[r]);
        for (int i = r + 1; i < m.rows(); ++i) {
            if (a[i][c].is_zero()) continue;
            const RatFunc f = a[i][c] / a[r][c];
            for (int j = c; j < m.cols(); ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Exhaustive root search in F_{q^j}.
bool has_root_in_extension(const Poly& f, int j) {
    const Fq& F = f.field();
    const Poly modulus = irreducibles_of_degree(F, j, 1).front();
    const ResidueField& E = ResidueField::get(F, modulus);
    for (ResidueField::Elem x = 0; x < E.order(); ++x) {
        ResidueField::Elem acc = 0;
        for (int i = f.deg(); i >= 0; --i) acc = E.add(E.mul(acc, x), E.embed(f.coeff(i)));
        if (acc == 0) return true;
    }
    return false;
}

bool trial_division_irreducible(const Poly& f) {
    const Fq& F = f.field();
    for (int d = 1; 2 * d <= f.deg(); ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (long long code = 0; code < count; ++code) {
            std::vector<Fq::Elem> c(static_cast<std::size_t>(d) + 1);
            long long x = code;
            for (int i = 0; i < d; ++i) {
                c[i] = static_cast<Fq::Elem>(x % F.q());
                x /= F.q();
            }
            c[d] = 1;
            if ((f % Poly(F, c)).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("field arithmetic examples") {
    const Fq& F3 = Fq::get(3, 1);
    CHECK(F3.inv(2) == 2);
    CHECK_THROWS_AS(F3.inv(0), DivisionByZero);

    const Fq& F4 = Fq::get(2, 2);
    REQUIRE(F4.modulus() == std::vector<int>{1, 1, 1});  // w^2 + w + 1
    const auto w = F4.gen();
    CHECK(F4.format(F4.mul(w, w)) == "w+1");
    CHECK(F4.parse("w+1") == F4.mul(w, w));

    for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
        const Fq& F = Fq::of_order(q);
        for (int a = 0; a < q; ++a) CHECK(F.frobenius(static_cast<Fq::Elem>(a)) == a);
    }
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS(Fq::get(4, 1));
    CHECK_THROWS(Fq::get(17, 1));
    CHECK_THROWS(Fq::get(2, 7));  // 128 > 64
    CHECK_THROWS(Fq::get(2, 2, {1, 0, 1}));  // w^2+1 = (w+1)^2 over F_2
    CHECK_THROWS(Fq::of_order(6));
}

TEST_CASE("field axioms and Frobenius are a ring endomorphism") {
    std::mt19937_64 rng(7);
    for (int q : {4, 8, 9, 25, 27}) {
        const Fq& F = Fq::of_order(q);
        std::uniform_int_distribution<int> d(0, q - 1);
        for (int i = 0; i < 100; ++i) {
            const auto a = static_cast<Fq::Elem>(d(rng));
            const auto b = static_cast<Fq::Elem>(d(rng));
            const auto c = static_cast<Fq::Elem>(d(rng));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.frob_p(F.add(a, b)) == F.add(F.frob_p(a), F.frob_p(b)));
            CHECK(F.frob_p(F.mul(a, b)) == F.mul(F.frob_p(a), F.frob_p(b)));
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
    // x -> x^q on a proper extension of F_q
    const Fq& F3 = Fq::get(3, 1);
    const ResidueField& E = ResidueField::get(F3, Poly::parse(F3, "t^2+1"));
    std::uniform_int_distribution<int> d(0, static_cast<int>(E.order()) - 1);
    for (int i = 0; i < 100; ++i) {
        const auto a = static_cast<ResidueField::Elem>(d(rng));
        const auto b = static_cast<ResidueField::Elem>(d(rng));
        CHECK(E.frobenius(E.add(a, b)) == E.add(E.frobenius(a), E.frobenius(b)));
        CHECK(E.frobenius(E.mul(a, b)) == E.mul(E.frobenius(a), E.frobenius(b)));
        CHECK(E.frobenius(a) == E.pow(a, 3));
    }
    CHECK(E.frobenius(E.gen()) != E.gen());
}

TEST_CASE("polynomial arithmetic examples") {
    const Fq& F2 = Fq::get(2, 1);
    CHECK(gcd(Poly::parse(F2, "t^2+t"), Poly::parse(F2, "t^2+1")) == Poly::parse(F2, "t+1"));

    const Fq& F3 = Fq::get(3, 1);
    const Poly f = Poly::parse(F3, "2*t^2+t+1");
    CHECK(gcd(f, Poly(F3)) == f.monic());
    auto [quo, rem] = Poly::parse(F3, "t^3+1").divmod(Poly::parse(F3, "t+1"));
    CHECK(quo == Poly::parse(F3, "t^2+2*t+1"));
    CHECK(rem.is_zero());
    CHECK_THROWS_AS(f.divmod(Poly(F3)), DivisionByZero);

    CHECK(Poly::parse(F3, "t^3+2*t+1").to_string() == "t^3+2*t+1");
    const Fq& F4 = Fq::get(2, 2);
    CHECK(Poly::parse(F4, "(w+1)*t^2+w").to_string() == "(w+1)*t^2+w");
}

TEST_CASE("polynomial ring laws on random inputs") {
    std::mt19937_64 rng(11);
    for (int q : {2, 3, 4, 5, 9}) {
        const Fq& F = Fq::of_order(q);
        for (int i = 0; i < 50; ++i) {
            const Poly f = random_poly(F, rng, 8), g = random_poly(F, rng, 8), h = random_poly(F, rng, 8);
            CHECK((f + g) * h == f * h + g * h);
            if (!g.is_zero()) {
                auto [qq, r] = f.divmod(g);
                CHECK(qq * g + r == f);
                CHECK(r.deg() < g.deg());
            }
            CHECK(f.frobenius() == f.pow(static_cast<std::uint64_t>(q)));
        }
    }
}

TEST_CASE("xgcd Bezout identity on 200 random pairs") {
    std::mt19937_64 rng(13);
    const Fq& F = Fq::get(5, 1);
    for (int i = 0; i < 200; ++i) {
        const Poly a = random_poly(F, rng, 8), b = random_poly(F, rng, 8);
        const Xgcd x = xgcd(a, b);
        CHECK(x.s * a + x.t * b == x.g);
        if (!x.g.is_zero()) {
            CHECK(x.g.is_monic());
            CHECK(x.g.divides(a));
            CHECK(x.g.divides(b));
        }
    }
}

TEST_CASE("factorization examples") {
    const Fq& F2 = Fq::get(2, 1);
    auto fa = factor(Poly::parse(F2, "t^2+t+1"));
    REQUIRE(fa.factors.size() == 1);
    CHECK(fa.factors[0].first == Poly::parse(F2, "t^2+t+1"));

    fa = factor(Poly::parse(F2, "t^4+t"));
    REQUIRE(fa.factors.size() == 3);
    CHECK(fa.factors[0].first == Poly::parse(F2, "t"));
    CHECK(fa.factors[1].first == Poly::parse(F2, "t+1"));
    CHECK(fa.factors[2].first == Poly::parse(F2, "t^2+t+1"));

    const Fq& F3 = Fq::get(3, 1);
    fa = factor(Poly::parse(F3, "t^2+1"));
    REQUIRE(fa.factors.size() == 1);
    CHECK(fa.factors[0] == std::make_pair(Poly::parse(F3, "t^2+1"), 1));
}

TEST_CASE("factorization reconstructs and reports irreducibles") {
    std::mt19937_64 rng(17);
    for (int q : {2, 3, 4, 5, 8, 9}) {
        const Fq& F = Fq::of_order(q);
        for (int i = 0; i < 25; ++i) {
            Poly f = random_poly(F, rng, 7) * random_poly(F, rng, 4);
            if (f.deg() < 1) continue;
            if (i % 3 == 0) f = f * random_poly(F, rng, 2).pow(2);
            if (f.is_zero() || f.deg() < 1) continue;
            const Factorization fa = factor(f);
            CHECK(fa.product(F) == f);
            for (const auto& [g, m] : fa.factors) {
                CHECK(g.is_monic());
                CHECK(m >= 1);
                if (g.deg() <= 3) {
                    for (int j = 1; j < g.deg(); ++j) CHECK_FALSE(has_root_in_extension(g, j));
                } else if (q <= 4 && g.deg() <= 8) {
                    CHECK(trial_division_irreducible(g));
                }
            }
        }
    }
    // repeated and p-th power factors
    const Fq& F3 = Fq::get(3, 1);
    const Poly g = Poly::parse(F3, "(t+1)^3*(t^2+1)^4*t");
    const Factorization fa = factor(g);
    CHECK(fa.product(F3) == g);
    REQUIRE(fa.factors.size() == 3);
    CHECK(fa.factors[0].second == 1);
    CHECK(fa.factors[1].second == 3);
    CHECK(fa.factors[2].second == 4);
}

TEST_CASE("Smith normal form examples") {
    const Fq& F = Fq::get(3, 1);
    PolyMatrix m(F, 2, 2);
    m.at(0, 0) = Poly::t(F);
    m.at(0, 1) = Poly::constant(F, 1);
    m.at(1, 1) = Poly::t(F);
    SmithForm s = smith_normal_form(m);
    REQUIRE(s.divisors.size() == 2);
    CHECK(s.divisors[0].is_one());
    CHECK(s.divisors[1] == Poly::parse(F, "t^2"));

    s = smith_normal_form(PolyMatrix::identity(F, 3));
    for (const auto& d : s.divisors) CHECK(d.is_one());

    const Fq& F2 = Fq::get(2, 1);
    PolyMatrix one(F2, 1, 1);
    one.at(0, 0) = Poly::parse(F2, "t^2+t");
    s = smith_normal_form(one);
    CHECK(s.divisors[0] == Poly::parse(F2, "t^2+t"));
}

TEST_CASE("Smith normal form invariants on random matrices") {
    std::mt19937_64 rng(19);
    for (int q : {2, 3, 5}) {
        const Fq& F = Fq::of_order(q);
        std::uniform_int_distribution<int> dim(1, 4);
        for (int trial = 0; trial < 30; ++trial) {
            const int r = dim(rng), c = dim(rng);
            PolyMatrix m(F, r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m.at(i, j) = (trial % 4 == 0 && j == 0) ? Poly(F) : random_poly(F, rng, 2);
            const SmithForm s = smith_normal_form(m);
            const PolyMatrix d = s.left * m * s.right;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) {
                    if (i == j)
                        CHECK(d.at(i, j) == s.divisors[i]);
                    else
                        CHECK(d.at(i, j).is_zero());
                }
            for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i) CHECK(s.divisors[i].divides(s.divisors[i + 1]));
            for (const auto& dv : s.divisors)
                if (!dv.is_zero()) CHECK(dv.is_monic());
            CHECK(s.rank() == rank_over_fraction_field(m));
            const Poly dl = s.left.determinant(), dr = s.right.determinant();
            CHECK(dl.deg() == 0);
            CHECK(dr.deg() == 0);
        }
    }
}

TEST_CASE("linear algebra over F_q examples") {
    const Fq& F2 = Fq::get(2, 1);
    KMatrix m = KMatrix::from_rows(F2, {{1, 1}, {1, 1}}, 2);
    KMatrix k = kernel(m);
    REQUIRE(k.rows() == 1);
    CHECK(k.row(0) == KVector{1, 1});

    const Fq& F3 = Fq::get(3, 1);
    m = KMatrix::from_rows(F3, {{1, 2}, {2, 1}}, 2);
    CHECK(rank(m) == 1);
    k = kernel(m);
    REQUIRE(k.rows() == 1);
    CHECK(k.row(0) == KVector{1, 1});

    CHECK(image(KMatrix(F3, 3, 4)).rows() == 0);

    m = KMatrix::from_rows(F3, {{1, 1}, {0, 0}}, 2);
    CHECK_THROWS_AS(solve(m, {1, 1}), Inconsistent);
    const KVector x = solve(m, {2, 0});
    CHECK(m.apply(x) == KVector{2, 0});
}

TEST_CASE("echelon basis reduction is canonical") {
    const Fq& F = Fq::get(5, 1);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> d(0, 4);
    std::vector<KVector> gens(4, KVector(7));
    for (auto& g : gens)
        for (auto& x : g) x = static_cast<Fq::Elem>(d(rng));
    EchelonBasis a(F, 7), b(F, 7);
    for (const auto& g : gens) a.add(g);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) b.add(*it);
    CHECK(a.rows() == b.rows());
    KVector v(7);
    for (auto& x : v) x = static_cast<Fq::Elem>(d(rng));
    CHECK(a.reduce(v) == b.reduce(v));
    CHECK(a.rank() + static_cast<int>(a.free_columns().size()) == 7);
}
