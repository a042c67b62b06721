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

#include "carlitz/series/laurent_series.hpp"

#include <algorithm>
#include <numeric>

#include "carlitz/errors.hpp"

namespace carlitz::series {

namespace {

constexpr int kExactPrec = kExactPrecision;

int clamp_prec(long long p) { return static_cast<int>(std::min<long long>(p, kExactPrec)); }

}  // namespace

LaurentSeries::LaurentSeries(const ResidueField& field, int val, std::vector<Elem> coeffs, int prec)
    : field_(&field), val_(val), c_(std::move(coeffs)), prec_(prec) {
    normalize();
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<int>(lead);
    }
    if (c_.empty() || val_ >= prec_) {
        c_.clear();
        val_ = prec_;
        return;
    }
    const auto known = static_cast<std::size_t>(prec_ - val_);
    if (c_.size() > known) c_.resize(known);
    while (c_.back() == 0) c_.pop_back();  // terms beyond the stored ones are zero
}

LaurentSeries LaurentSeries::zero(const ResidueField& field, int prec) { return {field, prec, {}, prec}; }

LaurentSeries LaurentSeries::constant(const ResidueField& field, Elem c, int prec) {
    return {field, 0, {c}, prec};
}

LaurentSeries LaurentSeries::monomial(const ResidueField& field, Elem c, int exponent, int prec) {
    return {field, exponent, {c}, prec};
}

LaurentSeries LaurentSeries::from_laurent(const ResidueField& field, const ff::LaurentPoly& p, int prec) {
    if (p.is_zero()) return zero(field, prec);
    std::vector<Elem> c;
    for (int k = p.min_exp(); k <= p.max_exp(); ++k) c.push_back(field.embed(p.coeff(k)));
    return {field, p.min_exp(), std::move(c), prec};
}

LaurentSeries::Elem LaurentSeries::coeff(int exponent) const {
    if (exponent >= prec_) throw PrecisionExhausted("coefficient of u^" + std::to_string(exponent) + " beyond precision " + std::to_string(prec_));
    if (is_zero() || exponent < val_ || exponent - val_ >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(exponent - val_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    const ResidueField& F = has_field() ? *field_ : *o.field_;
    const int p = std::min(prec_, o.prec_);
    const int lo = std::min(val(), o.val());
    if (lo >= p) return zero(F, p);
    long long hi = lo;
    if (!is_zero()) hi = std::max<long long>(hi, val_ + static_cast<long long>(c_.size()));
    if (!o.is_zero()) hi = std::max<long long>(hi, o.val_ + static_cast<long long>(o.c_.size()));
    hi = std::min<long long>(hi, p);
    if (hi <= lo) return zero(F, p);
    std::vector<Elem> c(static_cast<std::size_t>(hi - lo), 0);
    for (std::size_t i = 0; i < c_.size() && val_ + static_cast<int>(i) < p; ++i) c[val_ - lo + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size() && o.val_ + static_cast<int>(i) < p; ++i) {
        auto& dst = c[o.val_ - lo + i];
        dst = F.add(dst, o.c_[i]);
    }
    return {F, lo, std::move(c), p};
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = field_->neg(x);
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    const ResidueField& F = has_field() ? *field_ : *o.field_;
    const int va = val(), vb = o.val();
    const int p = clamp_prec(std::min(static_cast<long long>(prec_) + vb, static_cast<long long>(o.prec_) + va));
    if (is_zero() || o.is_zero()) return zero(F, p);
    const int v = va + vb;
    if (v >= p) return zero(F, p);
    const std::size_t len = std::min(static_cast<std::size_t>(p - v), c_.size() + o.c_.size() - 1);
    std::vector<Elem> c(len, 0);
    for (std::size_t i = 0; i < c_.size() && i < len; ++i) {
        if (c_[i] == 0) continue;
        const std::size_t lim = std::min(o.c_.size(), len - i);
        for (std::size_t j = 0; j < lim; ++j)
            if (o.c_[j] != 0) c[i + j] = F.add(c[i + j], F.mul(c_[i], o.c_[j]));
    }
    return {F, v, std::move(c), p};
}

LaurentSeries LaurentSeries::inverse() const {
    if (!has_field() || is_zero())
        throw DivisionByZero("series is zero modulo u^" + std::to_string(prec_));
    const ResidueField& F = *field_;
    if (c_.size() == 1) return {F, -val_, {F.inv(c_[0])}, clamp_prec(static_cast<long long>(prec_) - 2LL * val_)};
    const long long rel = static_cast<long long>(prec_) - val_;
    if (rel > (1 << 20)) throw PrecisionExhausted("inverse of an exactly known series needs a working precision");
    const auto len = static_cast<std::size_t>(rel);
    std::vector<Elem> b(len, 0);
    const Elem inv0 = F.inv(c_[0]);
    b[0] = inv0;
    for (std::size_t k = 1; k < len; ++k) {
        Elem s = 0;
        for (std::size_t i = 1; i <= k && i < c_.size(); ++i)
            if (c_[i] != 0 && b[k - i] != 0) s = F.add(s, F.mul(c_[i], b[k - i]));
        b[k] = F.neg(F.mul(inv0, s));
    }
    return {F, -val_, std::move(b), prec_ - 2 * val_};
}

LaurentSeries LaurentSeries::scaled(Elem c) const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = field_->mul(c, x);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries r = *this;
    if (!r.is_zero()) r.val_ += k;
    r.prec_ = clamp_prec(static_cast<long long>(r.prec_) + k);
    if (r.is_zero()) r.val_ = r.prec_;
    return r;
}

LaurentSeries LaurentSeries::truncated(int prec) const {
    if (prec >= prec_) return *this;
    return {*field_, val_, c_, prec};
}

LaurentSeries LaurentSeries::pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    if (n == 0) return constant(*field_, 1, kExactPrec);
    LaurentSeries base = *this;
    LaurentSeries acc;
    bool have = false;
    while (n > 0) {
        if (n & 1) {
            acc = have ? acc * base : base;
            have = true;
        }
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

LaurentSeries LaurentSeries::q_power() const {
    const int q = field_->base().q();
    const int p = clamp_prec(static_cast<long long>(prec_) * q);
    if (is_zero()) return zero(*field_, p);
    std::vector<Elem> c(static_cast<std::size_t>(q) * (c_.size() - 1) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * static_cast<std::size_t>(q)] = field_->frobenius(c_[i]);
    return {*field_, val_ * q, std::move(c), p};
}

LaurentSeries LaurentSeries::q_power(int times) const {
    LaurentSeries r = *this;
    for (int i = 0; i < times; ++i) r = r.q_power();
    return r;
}

LaurentSeries LaurentSeries::map_coeffs_frobenius_inverse(int k) const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = field_->frobenius_inverse(x, k);
    return r;
}

LaurentSeries LaurentSeries::rth_root(int r) const {
    if (!has_field() || r <= 0) throw NoRoot("invalid root request");
    const ResidueField& F = *field_;
    const int p = F.base().p();
    if (std::gcd(r, p) != 1) throw NoRoot("root index " + std::to_string(r) + " divisible by the characteristic");
    if (is_zero()) throw PrecisionExhausted("root of a series that is zero to precision");
    if (val_ % r != 0) throw RamifiedRoot("valuation " + std::to_string(val_) + " not divisible by " + std::to_string(r));
    if (r == 1) return *this;

    // root of the leading coefficient
    const Elem c0 = c_[0];
    const std::uint64_t order = F.order();
    Elem root = 0;
    bool found = false;
    if (std::gcd(static_cast<std::uint64_t>(r), order - 1) == 1) {
        std::uint64_t inv_r = 1;
        while ((inv_r * static_cast<std::uint64_t>(r)) % (order - 1) != 1 % (order - 1)) ++inv_r;
        root = F.pow(c0, inv_r);
        found = true;
    } else {
        for (std::uint64_t x = 1; x < order && !found; ++x)
            if (F.pow(static_cast<Elem>(x), static_cast<std::uint64_t>(r)) == c0) {
                root = static_cast<Elem>(x);
                found = true;
            }
    }
    if (!found) throw NoRoot("leading coefficient " + F.format(c0) + " is not an r-th power");

    // Newton iteration on the unit part A, y <- y - (y^r - A)/(r y^(r-1))
    if (prec_ - val_ > (1 << 20)) throw PrecisionExhausted("root of an exactly known series needs a working precision");
    const int rel = prec_ - val_;
    const LaurentSeries A(F, 0, c_, rel);
    LaurentSeries y = constant(F, root, rel);
    const Elem r_elem = F.embed(F.base().from_int(r));
    for (int known = 1; known < 2 * rel; known *= 2) {
        const LaurentSeries yr1 = y.pow(r - 1);
        y = y - (yr1 * y - A) * (yr1.scaled(r_elem)).inverse();
        y = y.truncated(rel);
    }
    return y.shifted(val_ / r);
}

LaurentSeries LaurentSeries::part_below(int bound) const {
    if (is_zero() || bound <= val_) return zero(*field_, prec_);
    std::vector<Elem> c(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(c_.size()), bound - val_));
    return {*field_, val_, std::move(c), prec_};
}

LaurentSeries LaurentSeries::part_from(int bound) const {
    if (is_zero() || bound <= val_) return *this;
    if (bound >= prec_) return zero(*field_, prec_);
    if (bound - val_ >= static_cast<int>(c_.size())) return zero(*field_, prec_);
    std::vector<Elem> c(c_.begin() + (bound - val_), c_.end());
    return {*field_, bound, std::move(c), prec_};
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const { return (*this - o).is_zero(); }

std::string LaurentSeries::to_string(char var) const {
    std::string out;
    const std::string u(1, var);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const int k = val_ + static_cast<int>(i);
        std::string term;
        if (c_[i] != 1) {
            std::string c = field_->format(c_[i]);
            if (c.find_first_of("+-", 1) != std::string::npos) c = "(" + c + ")";
            term = c + "*";
        }
        term += u + "^" + std::to_string(k);
        out += (out.empty() ? "" : " + ") + term;
    }
    if (prec_ >= kExactPrec) return out.empty() ? "0" : out;
    out += (out.empty() ? "" : " + ") + std::string("O(") + u + "^" + std::to_string(prec_) + ")";
    return out;
}

LaurentSeries eval(const ff::Poly& p, const LaurentSeries& x) {
    const ResidueField& F = x.field();
    if (p.is_zero()) return LaurentSeries::zero(F, kExactPrec);
    LaurentSeries acc = LaurentSeries::constant(F, F.embed(p.lc()), kExactPrec);
    for (int i = p.deg() - 1; i >= 0; --i)
        acc = acc * x + LaurentSeries::constant(F, F.embed(p.coeff(i)), kExactPrec);
    return acc;
}

LaurentSeries eval(const ff::RatFunc& f, const LaurentSeries& x) {
    return eval(f.num(), x) * eval(f.den(), x).inverse();
}

}  // namespace carlitz::series
