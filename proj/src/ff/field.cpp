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

#include "carlitz/ff/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "carlitz/errors.hpp"

namespace carlitz::ff {

namespace {

// Polynomials over F_p as ascending coefficient vectors, used only while
// building tables.
using PVec = std::vector<int>;

void trim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmod(PVec a, const PVec& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    // m is monic
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int c = a.back();
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        for (int i = 0; i <= dm; ++i) {
            a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

bool divides(const PVec& d, const PVec& f, int p) {
    // d monic
    return pmod(f, d, p).empty();
}

bool irreducible_over_fp(const PVec& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int deg = 1; deg <= n / 2; ++deg) {
        // enumerate monic polynomials of degree deg
        long long count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            PVec d(deg + 1, 0);
            long long c = code;
            for (int i = 0; i < deg; ++i) {
                d[i] = static_cast<int>(c % p);
                c /= p;
            }
            d[deg] = 1;
            if (divides(d, f, p)) return false;
        }
    }
    return true;
}

PVec smallest_irreducible(int p, int e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        PVec f(e + 1, 0);
        long long c = code;
        for (int i = 0; i < e; ++i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        f[e] = 1;
        if (irreducible_over_fp(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

struct Registry {
    std::mutex mu;
    std::map<std::tuple<int, int, PVec>, std::unique_ptr<Fq>> fields;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

bool is_prime(int n) noexcept {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power(int q) noexcept {
    if (q < 2) return {0, 0};
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    int r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) return {0, 0};
    return {p, e};
}

Fq::Fq(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < e_; ++i) q_ *= p_;
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    auto digits = [&](int code) {
        PVec d(e_, 0);
        for (int i = 0; i < e_; ++i) {
            d[i] = code % p_;
            code /= p_;
        }
        return d;
    };
    auto encode = [&](const PVec& d) {
        int code = 0;
        for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p_ + d[i];
        return code;
    };

    for (int a = 0; a < q_; ++a) {
        const PVec da = digits(a);
        PVec dn(e_);
        for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Elem>(encode(dn));
        for (int b = 0; b < q_; ++b) {
            const PVec db = digits(b);
            PVec ds(e_);
            for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = static_cast<Elem>(encode(ds));
            PVec prod(2 * e_, 0);
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            PVec r = pmod(prod, modulus_, p_);
            r.resize(e_, 0);
            mul_[a * q_ + b] = static_cast<Elem>(encode(r));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<Elem>(b);
                break;
            }
}

const Fq& Fq::get(int p, int e) {
    if (!is_prime(p) || p > kMaxPrime) throw std::invalid_argument("field characteristic must be a prime <= 13");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    return get(p, e, smallest_irreducible(p, e));
}

const Fq& Fq::get(int p, int e, const std::vector<int>& modulus) {
    if (!is_prime(p) || p > kMaxPrime) throw std::invalid_argument("field characteristic must be a prime <= 13");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order must be <= 64");
    PVec m = modulus;
    for (int& c : m) c = ((c % p) + p) % p;
    trim(m);
    if (static_cast<int>(m.size()) != e + 1 || m.back() != 1)
        throw std::invalid_argument("field modulus must be monic of degree e");
    if (!irreducible_over_fp(m, p)) throw std::invalid_argument("field modulus is reducible over F_p");

    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_tuple(p, e, m);
    auto it = reg.fields.find(key);
    if (it == reg.fields.end()) {
        it = reg.fields.emplace(key, std::unique_ptr<Fq>(new Fq(p, e, m))).first;
    }
    return *it->second;
}

const Fq& Fq::of_order(int q) {
    auto [p, e] = prime_power(q);
    if (p == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return get(p, e);
}

Fq::Elem Fq::from_int(long long v) const noexcept {
    const long long r = ((v % p_) + p_) % p_;
    return static_cast<Elem>(r);
}

Fq::Elem Fq::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(q_));
    return inv_[a];
}

Fq::Elem Fq::pow(Elem a, std::uint64_t n) const noexcept {
    Elem r = 1;
    Elem b = a;
    while (n > 0) {
        if (n & 1U) r = mul(r, b);
        b = mul(b, b);
        n >>= 1U;
    }
    return r;
}

std::string Fq::format(Elem a) const {
    if (e_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::string out;
    int code = a;
    std::vector<int> d(e_);
    for (int i = 0; i < e_; ++i) {
        d[i] = code % p_;
        code /= p_;
    }
    for (int i = e_ - 1; i >= 0; --i) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]) + "*";
            out += "w";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Fq::Elem Fq::parse(std::string_view text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty field element");
    std::vector<int> acc(e_, 0);
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        long long coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coef = coef * 10 + (s[i] - '0');
                ++i;
            }
            have_coef = true;
        }
        int power = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'w') {
            if (e_ == 1) throw ParseError("prime field elements are integers, got '" + s + "'");
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw ParseError("bad exponent in field element '" + s + "'");
                power = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    power = power * 10 + (s[i] - '0');
                    ++i;
                }
            }
        } else if (!have_coef) {
            throw ParseError("bad field element '" + s + "'");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') throw ParseError("bad field element '" + s + "'");
        // reduce w^power by the modulus
        Elem term = pow(gen(), static_cast<std::uint64_t>(power));
        term = mul(term, from_int(sign * coef));
        int code = term;
        for (int k = 0; k < e_; ++k) {
            acc[k] = (acc[k] + code % p_) % p_;
            code /= p_;
        }
    }
    int code = 0;
    for (int k = e_ - 1; k >= 0; --k) code = code * p_ + acc[k];
    return static_cast<Elem>(code);
}

}  // namespace carlitz::ff
