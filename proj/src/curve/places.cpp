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

#include "carlitz/curve/places.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "carlitz/errors.hpp"
#include "carlitz/ff/factor.hpp"
#include "carlitz/ff/residue_field.hpp"

namespace carlitz::curve {

using ff::ResidueField;
using series::kExactPrecision;

namespace {

using RElem = ResidueField::Elem;

RElem rpow(const ResidueField& E, RElem x, long long k) {
    if (k < 0) return E.pow(E.inv(x), static_cast<std::uint64_t>(-k));
    return E.pow(x, static_cast<std::uint64_t>(k));
}

// T^k for the exact monomial T = c u^{-b}
LaurentSeries tpow(const LaurentSeries& T, int k) {
    const ResidueField& E = T.field();
    return LaurentSeries::monomial(E, rpow(E, T.lead(), k), T.val() * k, kExactPrecision);
}

LaurentSeries eval_laurent(const LaurentPoly& a, const LaurentSeries& T) {
    if (a.is_zero()) return LaurentSeries::zero(T.field(), kExactPrecision);
    return series::eval(a.body(), T) * tpow(T, a.min_exp());
}

// f(T) known at least modulo u^target.
LaurentSeries eval_rat(const RatFunc& f, const LaurentSeries& T, int target) {
    const LaurentSeries num = series::eval(f.num(), T);
    if (f.is_poly()) return num;  // denominators are monic
    const LaurentSeries den = series::eval(f.den(), T);
    const int v = den.val();
    const int vn = num.is_zero() ? target : num.val();
    const int P = std::max(v + 1, target - vn + 2 * v);
    return num * den.truncated(P).inverse();
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::llabs(a);
    }
    long long x1, y1;
    const long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

struct Edge {
    int k1, w1, k2, w2;
};

std::vector<Edge> lower_hull(const std::vector<std::pair<int, int>>& pts) {
    std::vector<std::pair<int, int>> h;
    for (const auto& p : pts) {
        while (h.size() >= 2) {
            const auto& A = h[h.size() - 2];
            const auto& B = h.back();
            const long long cross = static_cast<long long>(B.first - A.first) * (p.second - A.second) -
                                    static_cast<long long>(B.second - A.second) * (p.first - A.first);
            if (cross <= 0) h.pop_back();
            else break;
        }
        h.push_back(p);
    }
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) out.push_back({h[i].first, h[i].second, h[i + 1].first, h[i + 1].second});
    return out;
}

struct Branch {
    const ResidueField* E;
    int a, b, d;
    RElem zeta, w0;
};

std::vector<Branch> branches(const CurvePackage& pkg) {
    const Fq& F = pkg.field();
    const YPoly& g = pkg.defining();
    if (pkg.n() == 1) {
        // K = F_q(t): one rational place with uniformizer 1/t
        const int a = g[0].is_zero() ? 0 : std::max(0, g[0].num().deg());
        return {Branch{&ResidueField::trivial(F), a, 1, 1, 1, 1}};
    }
    std::vector<std::pair<int, int>> pts;
    for (int k = 0; k <= pkg.n(); ++k)
        if (!g[k].is_zero()) pts.emplace_back(k, -g[k].num().deg());
    std::vector<Branch> out;
    for (const Edge& ed : lower_hull(pts)) {
        const int dk = ed.k2 - ed.k1, dw = ed.w2 - ed.w1;
        const int gg = std::gcd(dk, std::abs(dw));
        const int b = dk / gg, a = dw / gg;
        if (b % F.p() == 0)
            throw WildOrSingular("ramification index " + std::to_string(b) + " at infinity is divisible by p");
        std::vector<Fq::Elem> rc(static_cast<std::size_t>(gg) + 1, 0);
        for (int j = 0; j <= gg; ++j) {
            const int k = ed.k1 + b * j;
            if (g[k].is_zero()) continue;
            const int w = -g[k].num().deg();
            if (static_cast<long long>(b) * (w - ed.w1) == static_cast<long long>(a) * (k - ed.k1)) rc[j] = g[k].num().lc();
        }
        const Poly R(F, rc);
        const auto fac = ff::factor(R);
        long long alpha, beta;
        ext_gcd(a, b, alpha, beta);
        if (alpha * a + beta * b != 1) {
            alpha = -alpha;
            beta = -beta;
        }
        for (const auto& [r, mult] : fac.factors) {
            if (mult > 1) throw WildOrSingular("residual polynomial " + R.to_string('Z') + " at infinity is not squarefree");
            const int d = r.deg();
            const ResidueField& E = d == 1 ? ResidueField::trivial(F) : ResidueField::get(F, r);
            const RElem rho = d == 1 ? E.embed(F.neg(r.coeff(0))) : E.gen();
            out.push_back({&E, a, b, d, rpow(E, rho, alpha), rpow(E, rho, beta)});
        }
    }
    return out;
}

Place lift(const CurvePackage& pkg, const Branch& br, int prec, int extra) {
    const ResidueField& E = *br.E;
    const YPoly& g = pkg.defining();
    const int n = pkg.n();
    int Dp = 0;
    for (const auto& bf : pkg.basis_fin())
        for (const auto& c : bf) Dp = std::max(Dp, c.num().deg() + c.den().deg());
    const int Pw = prec + std::abs(br.a) * n + br.b * Dp + 16 + extra;

    Place P;
    P.residue = &E;
    P.e = br.b;
    P.d = br.d;
    P.embed_t = LaurentSeries::monomial(E, E.inv(br.zeta), -br.b, kExactPrecision);

    if (n == 1) {
        P.embed_y = -eval_rat(g[0], P.embed_t, Pw);
    } else {
        int c = INT32_MAX;
        for (int k = 0; k <= n; ++k)
            if (!g[k].is_zero()) c = std::min(c, -br.b * g[k].num().deg() - br.a * k);
        std::vector<LaurentSeries> C;
        for (int k = 0; k <= n; ++k)
            C.push_back(series::eval(g[k].num(), P.embed_t).shifted(-br.a * k - c).truncated(Pw));
        LaurentSeries W = LaurentSeries::constant(E, br.w0, Pw);
        int iters = 2;
        for (int p = 1; p < Pw; p *= 2) ++iters;
        for (int it = 0; it < iters; ++it) {
            LaurentSeries G = C[n], dG = C[n].scaled(E.embed(pkg.field().from_int(n)));
            for (int k = n - 1; k >= 0; --k) {
                G = G * W + C[k];
                if (k >= 1) dG = dG * W + C[k].scaled(E.embed(pkg.field().from_int(k)));
            }
            if (G.is_zero()) break;
            if (dG.val() != 0) throw WildOrSingular("Newton lifting at infinity met a singular branch");
            W = W - G / dG;
        }
        P.embed_y = W.shifted(-br.a);
    }

    int got = P.embed_y.prec();
    for (const auto& bf : pkg.basis_fin()) {
        LaurentSeries acc = LaurentSeries::zero(E, kExactPrecision);
        LaurentSeries ypow = LaurentSeries::constant(E, 1, kExactPrecision);
        for (std::size_t k = 0; k < bf.size(); ++k) {
            if (!bf[k].is_zero()) acc += eval_rat(bf[k], P.embed_t, Pw) * ypow;
            ypow *= P.embed_y;
        }
        got = std::min(got, acc.prec());
        P.basis.push_back(acc);
    }
    P.prec = got;
    return P;
}

}  // namespace

LaurentSeries Place::embed_scalar(const LaurentPoly& a) const { return eval_laurent(a, embed_t); }

LaurentSeries Place::embed(const FinVec& x) const {
    LaurentSeries acc = LaurentSeries::zero(*residue, kExactPrecision);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) acc += embed_scalar(x[i]) * basis[i];
    return acc;
}

std::vector<Place> places_at_infinity(const CurvePackage& pkg, int prec) {
    std::vector<Place> out;
    for (const Branch& br : branches(pkg)) {
        int extra = 0;
        for (int attempt = 0;; ++attempt) {
            Place P = lift(pkg, br, prec, extra);
            if (P.prec >= prec) {
                out.push_back(std::move(P));
                break;
            }
            if (attempt == 6) throw PrecisionExhausted("could not reach precision " + std::to_string(prec) + " at infinity");
            extra = 2 * extra + (prec - P.prec) + 16;
        }
    }
    return out;
}

LaurentSeries defining_residual(const CurvePackage& pkg, const Place& place) {
    const ResidueField& E = place.field();
    LaurentSeries acc = LaurentSeries::zero(E, kExactPrecision);
    LaurentSeries ypow = LaurentSeries::constant(E, 1, kExactPrecision);
    for (const auto& c : pkg.defining()) {
        if (!c.is_zero()) acc += series::eval(c.num(), place.embed_t) * ypow;
        ypow *= place.embed_y;
    }
    return acc;
}

}  // namespace carlitz::curve
