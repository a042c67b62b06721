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

#include "carlitz/ff/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace carlitz::ff {

namespace {

// p-th root of a polynomial whose exponents are all multiples of p.
Poly pth_root(const Poly& f) {
    const Fq& F = f.field();
    const int p = F.p();
    // a^(1/p) = a^(q/p) on F_q
    const std::uint64_t root_exp = static_cast<std::uint64_t>(F.q() / p);
    std::vector<Fq::Elem> c(static_cast<std::size_t>(f.deg() / p) + 1, 0);
    for (int i = 0; i <= f.deg(); i += p) c[i / p] = F.pow(f.coeff(i), root_exp);
    return Poly(F, std::move(c));
}

void squarefree_rec(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    if (f.deg() <= 0) return;
    const Fq& F = f.field();
    const Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_rec(pth_root(f), mult * F.p(), out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    int i = 1;
    while (w.deg() > 0) {
        const Poly y = gcd(w, c);
        const Poly fac = w / y;
        if (fac.deg() > 0) out.emplace_back(fac.monic(), i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.deg() > 0) squarefree_rec(pth_root(c.monic()), mult * F.p(), out);
}

// a^((q^d - 1)/2) mod g for odd q, computed as (prod_{i<d} a^{q^i})^{(q-1)/2}.
Poly half_power(const Poly& a, int d, const Poly& g) {
    const Fq& F = g.field();
    const std::uint64_t q = static_cast<std::uint64_t>(F.q());
    Poly acc = Poly::constant(F, 1);
    Poly cur = a % g;
    for (int i = 0; i < d; ++i) {
        acc = (acc * cur) % g;
        cur = cur.powmod(q, g);
    }
    return acc.powmod((q - 1) / 2, g);
}

// Absolute trace a + a^2 + ... + a^(2^(k-1)) mod g with 2^k = q^d.
Poly trace_map(const Poly& a, int d, const Poly& g) {
    const Fq& F = g.field();
    const int k = F.e() * d;
    Poly acc(F);
    Poly cur = a % g;
    for (int i = 0; i < k; ++i) {
        acc = acc + cur;
        cur = (cur * cur) % g;
    }
    return acc;
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.deg() == d) {
        out.push_back(g.monic());
        return;
    }
    const Fq& F = g.field();
    std::uniform_int_distribution<int> coef(0, F.q() - 1);
    while (true) {
        std::vector<Fq::Elem> c(static_cast<std::size_t>(g.deg()), 0);
        for (auto& x : c) x = static_cast<Fq::Elem>(coef(rng));
        const Poly a(F, std::move(c));
        if (a.deg() <= 0) continue;
        Poly b = F.p() == 2 ? trace_map(a, d, g) : half_power(a, d, g) - Poly::constant(F, 1);
        const Poly h = gcd(b, g);
        if (h.deg() > 0 && h.deg() < g.deg()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

std::uint64_t seed_from(const Poly& f) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto c : f.coeffs()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    h ^= static_cast<std::uint64_t>(f.field().q());
    return h;
}

}  // namespace

Poly Factorization::product(const Fq& field) const {
    Poly r = Poly::constant(field, unit);
    for (const auto& [g, m] : factors) r = r * g.pow(static_cast<std::uint64_t>(m));
    return r;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (f.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
    squarefree_rec(f.monic(), 1, out);
    // merge equal parts that arise from the p-th root branch
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    return out;
}

bool is_squarefree(const Poly& f) {
    if (f.deg() <= 0) return !f.is_zero();
    const Poly d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).deg() == 0;
}

Factorization factor(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    const Fq& F = f.field();
    Factorization res;
    res.unit = f.lc();
    std::mt19937_64 rng(seed_from(f));
    for (const auto& [sf, mult] : squarefree_decomposition(f)) {
        // distinct-degree split
        Poly rest = sf;
        Poly h = Poly::t(F);
        const std::uint64_t q = static_cast<std::uint64_t>(F.q());
        for (int d = 1; 2 * d <= rest.deg(); ++d) {
            h = h.powmod(q, rest);
            const Poly g = gcd(h - Poly::t(F), rest);
            if (g.deg() > 0) {
                std::vector<Poly> parts;
                equal_degree(g, d, rng, parts);
                for (auto& p : parts) res.factors.emplace_back(std::move(p), mult);
                rest = rest / g;
                h = h % rest;
            }
        }
        if (rest.deg() > 0) res.factors.emplace_back(rest.monic(), mult);
    }
    // combine repeated factors and sort
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Poly, int>> merged;
    for (auto& fm : res.factors) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(std::move(fm));
    }
    res.factors = std::move(merged);
    return res;
}

bool is_irreducible(const Poly& f) {
    if (f.deg() <= 0) return false;
    if (f.deg() == 1) return true;
    if (!is_squarefree(f)) return false;
    const Fq& F = f.field();
    const Poly g = f.monic();
    Poly h = Poly::t(F);
    const std::uint64_t q = static_cast<std::uint64_t>(F.q());
    for (int d = 1; 2 * d <= g.deg(); ++d) {
        h = h.powmod(q, g);
        if (gcd(h - Poly::t(F), g).deg() > 0) return false;
    }
    return true;
}

std::vector<Poly> irreducibles_of_degree(const Fq& field, int degree, int limit) {
    std::vector<Poly> out;
    if (degree < 1) return out;
    const int q = field.q();
    std::vector<Fq::Elem> c(static_cast<std::size_t>(degree) + 1, 0);
    c[degree] = 1;
    while (static_cast<int>(out.size()) < limit) {
        Poly p(field, c);
        if (is_irreducible(p)) out.push_back(p);
        // increment the lower coefficients, most significant = c[degree-1]
        int i = 0;
        while (i < degree) {
            if (c[i] + 1 < q) {
                ++c[i];
                break;
            }
            c[i] = 0;
            ++i;
        }
        if (i == degree) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace carlitz::ff
