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

#include "carlitz/curve/function_field.hpp"

#include "carlitz/errors.hpp"
#include "carlitz/ff/expr_parser.hpp"

namespace carlitz::curve {

YPoly ynormalize(YPoly a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

YPoly yconstant(const RatFunc& c) { return ynormalize({c}); }

YPoly yadd(const YPoly& a, const YPoly& b) {
    YPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size() && i < b.size())
            r[i] = a[i] + b[i];
        else
            r[i] = i < a.size() ? a[i] : b[i];
    }
    return ynormalize(std::move(r));
}

YPoly ysub(const YPoly& a, const YPoly& b) {
    YPoly nb = b;
    for (auto& c : nb) c = -c;
    return yadd(a, nb);
}

YPoly ymul(const YPoly& a, const YPoly& b) {
    if (a.empty() || b.empty()) return {};
    const Fq& F = a.front().field();
    YPoly r(a.size() + b.size() - 1, RatFunc(Poly(F)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return ynormalize(std::move(r));
}

YPoly yscale(const YPoly& a, const RatFunc& c) {
    YPoly r = a;
    for (auto& x : r) x = x * c;
    return ynormalize(std::move(r));
}

YPoly yderivative(const YPoly& a) {
    if (a.size() <= 1) return {};
    const Fq& F = a.front().field();
    YPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * RatFunc(Poly::constant(F, F.from_int(static_cast<long long>(i))));
    return ynormalize(std::move(r));
}

int ydeg(const YPoly& a) { return static_cast<int>(a.size()) - 1; }

std::pair<YPoly, YPoly> ydivmod(const YPoly& a, const YPoly& b) {
    if (b.empty()) throw DivisionByZero("division by the zero polynomial in y");
    YPoly r = a;
    if (r.size() < b.size()) return {{}, r};
    const Fq& F = b.back().field();
    YPoly quo(r.size() - b.size() + 1, RatFunc(Poly(F)));
    const RatFunc lc_inv = b.back().inverse();
    for (int i = ydeg(r); i >= ydeg(b); --i) {
        if (static_cast<int>(r.size()) <= i || r[i].is_zero()) continue;
        const RatFunc f = r[i] * lc_inv;
        quo[i - ydeg(b)] = f;
        for (int j = 0; j <= ydeg(b); ++j) r[i - ydeg(b) + j] = r[i - ydeg(b) + j] - f * b[j];
    }
    return {ynormalize(std::move(quo)), ynormalize(std::move(r))};
}

YPoly ygcd(YPoly a, YPoly b) {
    while (!b.empty()) {
        YPoly r = ydivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return yscale(a, a.back().inverse());
}

std::string yto_string(const YPoly& a) {
    if (a.empty()) return "0";
    std::string out;
    for (int i = ydeg(a); i >= 0; --i) {
        if (a[i].is_zero()) continue;
        std::string c = a[i].to_string();
        const bool compound = c.find_first_of("+-/", 1) != std::string::npos;
        std::string term;
        if (i == 0)
            term = c;
        else {
            if (c != "1") term = (compound ? "(" + c + ")" : c) + "*";
            term += i == 1 ? "y" : "y^" + std::to_string(i);
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

YPoly parse_ypoly(const Fq& field, std::string_view text) {
    ff::RingOps<YPoly> ops;
    const RatFunc one(Poly::constant(field, 1));
    ops.from_int = [&](long long v) { return yconstant(RatFunc(Poly::constant(field, field.from_int(v)))); };
    ops.variable = [&](char c) -> YPoly {
        switch (c) {
            case 't': return yconstant(RatFunc(Poly::t(field)));
            case 's': return yconstant(RatFunc(Poly::constant(field, 1), Poly::t(field)));
            case 'y': return ynormalize({RatFunc(Poly(field)), one});
            case 'w':
                if (!field.is_prime_field()) return yconstant(RatFunc(Poly::constant(field, field.gen())));
                break;
            default: break;
        }
        throw ParseError(std::string("unknown variable '") + c + "'");
    };
    ops.add = yadd;
    ops.sub = ysub;
    ops.mul = ymul;
    ops.neg = [](const YPoly& a) { return ysub({}, a); };
    ops.pow = [&](const YPoly& a, long long n) {
        YPoly base = a;
        if (n < 0) {
            if (a.size() != 1) throw ParseError("negative power of an expression involving y");
            base = yconstant(a[0].inverse());
            n = -n;
        }
        YPoly r = yconstant(one);
        for (long long i = 0; i < n; ++i) r = ymul(r, base);
        return r;
    };
    ops.div = [](const YPoly& a, const YPoly& b) {
        if (b.size() != 1) throw ParseError("division by an expression involving y or by zero");
        return yscale(a, b[0].inverse());
    };
    return ff::ExprParser<YPoly>(text, ops).parse();
}

RatMatrix rat_inverse(const RatMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return {};
    const Fq& F = m[0][0].field();
    RatMatrix a = m;
    RatMatrix inv(n, std::vector<RatFunc>(n, RatFunc(Poly(F))));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = RatFunc(Poly::constant(F, 1));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == n) throw Inconsistent("singular matrix over F_q(t)");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        const RatFunc s = a[c][c].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] = a[c][j] * s;
            inv[c][j] = inv[c][j] * s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            const RatFunc f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = a[r][j] - f * a[c][j];
                inv[r][j] = inv[r][j] - f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace carlitz::curve
