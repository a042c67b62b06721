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

#include "carlitz/ff/poly.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "carlitz/errors.hpp"
#include "carlitz/ff/expr_parser.hpp"

namespace carlitz::ff {

// ---------------------------------------------------------------- Poly

Poly::Poly(const Fq& field, std::vector<Elem> coeffs) : field_(&field), c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Fq& Poly::field() const {
    if (field_ == nullptr) throw std::logic_error("polynomial has no field attached");
    return *field_;
}

Poly Poly::constant(const Fq& field, Elem c) { return Poly(field, {c}); }

Poly Poly::monomial(const Fq& field, Elem c, int degree) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
    v[degree] = c;
    return Poly(field, std::move(v));
}

int Poly::low_degree() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

Poly Poly::operator+(const Poly& o) const {
    const Fq* F = pick(o);
    if (F == nullptr) return {};
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(*F, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    const Fq* F = pick(o);
    if (F == nullptr) return {};
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F->sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(*F, std::move(r));
}

Poly Poly::operator-() const {
    if (field_ == nullptr) return {};
    std::vector<Elem> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->neg(c_[i]);
    return Poly(*field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    const Fq* F = pick(o);
    if (F == nullptr) return {};
    if (c_.empty() || o.c_.empty()) return Poly(*F);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Elem a = c_[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            const Elem b = o.c_[j];
            if (b == 0) continue;
            r[i + j] = F->add(r[i + j], F->mul(a, b));
        }
    }
    return Poly(*F, std::move(r));
}

Poly Poly::scaled(Elem c) const {
    if (field_ == nullptr) return {};
    std::vector<Elem> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->mul(c_[i], c);
    return Poly(*field_, std::move(r));
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (c_.empty()) return *this;
    std::vector<Elem> r(c_.size() + static_cast<std::size_t>(k), 0);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return Poly(field(), std::move(r));
}

Poly Poly::unshifted(int k) const {
    if (k <= 0) return *this;
    if (k >= static_cast<int>(c_.size())) return field_ ? Poly(*field_) : Poly();
    return Poly(field(), std::vector<Elem>(c_.begin() + k, c_.end()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Fq& F = *g.pick(*this);
    if (deg() < g.deg()) return {Poly(F), Poly(F, c_)};
    std::vector<Elem> r = c_;
    const int dg = g.deg();
    std::vector<Elem> quot(static_cast<std::size_t>(deg() - dg) + 1, 0);
    const Elem lc_inv = F.inv(g.lc());
    for (int i = deg(); i >= dg; --i) {
        const Elem c = r[i];
        if (c == 0) continue;
        const Elem f = F.mul(c, lc_inv);
        quot[i - dg] = f;
        for (int j = 0; j <= dg; ++j) r[i - dg + j] = F.sub(r[i - dg + j], F.mul(f, g.c_[j]));
    }
    r.resize(static_cast<std::size_t>(dg));
    return {Poly(F, std::move(quot)), Poly(F, std::move(r))};
}

bool Poly::divides(const Poly& f) const {
    if (is_zero()) return f.is_zero();
    return f.divmod(*this).second.is_zero();
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return scaled(field().inv(lc()));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return field_ ? Poly(*field_) : Poly();
    std::vector<Elem> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<long long>(i)));
    return Poly(*field_, std::move(r));
}

Poly Poly::frobenius() const {
    if (c_.empty()) return *this;
    const int q = field().q();
    std::vector<Elem> r(static_cast<std::size_t>(deg()) * q + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * q] = c_[i];
    return Poly(*field_, std::move(r));
}

Poly Poly::pow(std::uint64_t n) const {
    Poly r = Poly::constant(field(), 1);
    Poly b = *this;
    while (n > 0) {
        if (n & 1U) r = r * b;
        n >>= 1U;
        if (n > 0) b = b * b;
    }
    return r;
}

Poly Poly::powmod(std::uint64_t n, const Poly& m) const {
    Poly r = Poly::constant(m.field(), 1) % m;
    Poly b = *this % m;
    while (n > 0) {
        if (n & 1U) r = (r * b) % m;
        n >>= 1U;
        if (n > 0) b = (b * b) % m;
    }
    return r;
}

Poly::Elem Poly::eval(Elem x) const noexcept {
    Elem r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_->add(field_->mul(r, x), *it);
    return r;
}

Poly Poly::compose(const Poly& g) const {
    const Fq& F = field_ ? *field_ : g.field();
    Poly r(F);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + Poly::constant(F, *it);
    return r;
}

bool Poly::operator<(const Poly& o) const noexcept {
    if (deg() != o.deg()) return deg() < o.deg();
    for (int i = deg(); i >= 0; --i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::string Poly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = deg(); i >= 0; --i) {
        const Elem c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        std::string cs = field_->format(c);
        const bool compound = cs.find('+') != std::string::npos;
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c != 1) out += (compound ? "(" + cs + ")" : cs) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Poly Poly::parse(const Fq& field, std::string_view text, char var) {
    RingOps<Poly> ops;
    ops.from_int = [&](long long v) { return Poly::constant(field, field.from_int(v)); };
    ops.variable = [&](char c) {
        if (c == var) return Poly::t(field);
        if (c == 'w' && !field.is_prime_field()) return Poly::constant(field, field.gen());
        throw ParseError(std::string("unknown variable '") + c + "'");
    };
    ops.add = [](const Poly& a, const Poly& b) { return a + b; };
    ops.sub = [](const Poly& a, const Poly& b) { return a - b; };
    ops.mul = [](const Poly& a, const Poly& b) { return a * b; };
    ops.neg = [](const Poly& a) { return -a; };
    ops.pow = [](const Poly& a, long long n) {
        if (n < 0) throw ParseError("negative exponent in polynomial");
        return a.pow(static_cast<std::uint64_t>(n));
    };
    Poly r = ExprParser<Poly>(text, ops).parse();
    return Poly(field, r.coeffs());
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
    const Fq& F = a.has_field() ? a.field() : b.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F, 1), s1(F);
    Poly t0(F), t1 = Poly::constant(F, 1);
    while (!r1.is_zero()) {
        auto [qt, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - qt * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - qt * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Fq::Elem li = F.inv(r0.lc());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

// ---------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Poly& p, int low) : body_(p), low_(low) { normalize(); }

void LaurentPoly::normalize() {
    if (body_.is_zero()) {
        low_ = 0;
        return;
    }
    const int z = body_.low_degree();
    if (z > 0) {
        body_ = body_.unshifted(z);
        low_ += z;
    }
}

LaurentPoly LaurentPoly::monomial(const Fq& field, Fq::Elem c, int exponent) {
    return LaurentPoly(Poly::constant(field, c), exponent);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const int lo = std::min(low_, o.low_);
    return LaurentPoly(body_.shifted(low_ - lo) + o.body_.shifted(o.low_ - lo), lo);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    return LaurentPoly(body_ * o.body_, low_ + o.low_);
}

LaurentPoly LaurentPoly::frobenius() const {
    if (is_zero()) return *this;
    return LaurentPoly(body_.frobenius(), low_ * body_.field().q());
}

LaurentPoly LaurentPoly::window(int lo, int hi) const {
    if (is_zero() || hi < lo) return LaurentPoly(has_field() ? Poly(field()) : Poly());
    std::vector<Fq::Elem> v;
    const int a = std::max(lo, low_);
    const int b = std::min(hi, max_exp());
    if (a > b) return LaurentPoly(Poly(field()));
    v.reserve(static_cast<std::size_t>(b - a) + 1);
    for (int e = a; e <= b; ++e) v.push_back(coeff(e));
    return LaurentPoly(Poly(field(), std::move(v)), a);
}

LaurentPoly LaurentPoly::negative_part() const { return window(INT_MIN / 2, -1); }

Poly LaurentPoly::nonnegative_part() const {
    if (is_zero()) return body_;
    const LaurentPoly w = window(0, INT_MAX / 2);
    return w.is_zero() ? Poly(field()) : w.body_.shifted(w.low_);
}

Poly LaurentPoly::to_poly() const {
    if (!is_polynomial()) throw std::logic_error("Laurent polynomial has negative exponents");
    return is_zero() ? body_ : body_.shifted(low_);
}

std::string LaurentPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    const Fq& F = field();
    for (int e = max_exp(); e >= low_; --e) {
        const Fq::Elem c = coeff(e);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        std::string cs = F.format(c);
        const bool compound = cs.find('+') != std::string::npos;
        if (e == 0) {
            out += cs;
            continue;
        }
        if (c != 1) out += (compound ? "(" + cs + ")" : cs) + "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// -------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::constant(num.field(), 1)) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    const Fq& F = den.field();
    if (num.is_zero()) {
        num_ = Poly(F);
        den_ = Poly::constant(F, 1);
        return;
    }
    const Poly g = gcd(num, den);
    Poly n = num / g;
    Poly d = den / g;
    const Fq::Elem li = F.inv(d.lc());
    num_ = n.scaled(li);
    den_ = d.scaled(li);
}

RatFunc RatFunc::from_laurent(const LaurentPoly& l) {
    if (l.min_exp() >= 0) return RatFunc(l.is_zero() ? l.body() : l.body().shifted(l.min_exp()));
    const Fq& F = l.field();
    return RatFunc(l.body(), Poly::monomial(F, 1, -l.min_exp()));
}

bool RatFunc::is_laurent() const noexcept {
    if (den_.deg() <= 0) return true;
    return den_.low_degree() == den_.deg();
}

LaurentPoly RatFunc::to_laurent() const {
    if (!is_laurent()) throw std::logic_error("rational function is not a Laurent polynomial");
    return LaurentPoly(num_, -den_.deg());
}

int RatFunc::degree() const noexcept {
    if (num_.is_zero()) return INT_MIN;
    return num_.deg() - den_.deg();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    const Poly g = gcd(den_, o.den_);
    const Poly a = den_ / g;
    const Poly b = o.den_ / g;
    return RatFunc(num_ * b + o.num_ * a, a * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -num_;
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    // cross-cancel before multiplying to keep the gcds small
    const Poly g1 = gcd(num_, o.den_);
    const Poly g2 = gcd(o.num_, den_);
    RatFunc r;
    r.num_ = (num_ / g1) * (o.num_ / g2);
    r.den_ = (den_ / g2) * (o.den_ / g1);
    const Fq::Elem li = r.den_.field().inv(r.den_.lc());
    r.num_ = r.num_.scaled(li);
    r.den_ = r.den_.scaled(li);
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::frobenius() const {
    RatFunc r;
    r.num_ = num_.frobenius();
    r.den_ = den_.frobenius();
    return r;
}

std::string RatFunc::to_string(char var) const {
    auto wrap = [&](const Poly& p) {
        std::string s = p.to_string(var);
        const bool single = p.is_constant() || (s.find('+') == std::string::npos);
        return single ? s : "(" + s + ")";
    };
    if (den_.is_one()) return num_.to_string(var);
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace carlitz::ff
