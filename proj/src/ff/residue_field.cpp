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

#include "carlitz/ff/residue_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "carlitz/errors.hpp"
#include "carlitz/ff/factor.hpp"

namespace carlitz::ff {

namespace {

struct Registry {
    std::mutex mu;
    std::map<std::pair<const Fq*, std::vector<Fq::Elem>>, std::unique_ptr<ResidueField>> fields;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

ResidueField::ResidueField(const Fq& base, Poly modulus)
    : base_(&base), modulus_(std::move(modulus)), d_(modulus_.deg()), order_(1) {
    for (int i = 0; i < d_; ++i) order_ *= static_cast<std::uint64_t>(base.q());
    if (order_ > (1ULL << 31)) throw std::invalid_argument("residue field too large");
    if (order_ <= 256 && d_ > 1) {
        mul_table_.resize(order_ * order_);
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = 0; b < order_; ++b) mul_table_[a * order_ + b] = mul_slow(a, b);
    }
    // Frobenius matrix: z^(iq) reduced, for i < d
    const std::uint64_t q = static_cast<std::uint64_t>(base.q());
    frob_matrix_.resize(d_);
    Poly zq = d_ == 1 ? Poly::constant(base, 0) : Poly::t(base).powmod(q, modulus_);
    Poly cur = Poly::constant(base, 1);
    for (int i = 0; i < d_; ++i) {
        std::vector<Fq::Elem> c(d_, 0);
        for (int k = 0; k < d_; ++k) c[k] = cur.coeff(k);
        frob_matrix_[i] = std::move(c);
        if (d_ > 1) cur = (cur * zq) % modulus_;
    }
}

const ResidueField& ResidueField::get(const Fq& base, const Poly& modulus) {
    if (modulus.deg() < 1 || !modulus.is_monic()) throw std::invalid_argument("residue modulus must be monic, degree >= 1");
    if (modulus.deg() > 1 && !is_irreducible(modulus)) throw std::invalid_argument("residue modulus must be irreducible");
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    // all degree-one moduli give the same field; normalize to z
    std::vector<Fq::Elem> key = modulus.deg() == 1 ? std::vector<Fq::Elem>{0, 1} : modulus.coeffs();
    auto k = std::make_pair(&base, key);
    auto it = reg.fields.find(k);
    if (it == reg.fields.end()) {
        it = reg.fields.emplace(k, std::unique_ptr<ResidueField>(new ResidueField(base, Poly(base, key)))).first;
    }
    return *it->second;
}

const ResidueField& ResidueField::trivial(const Fq& base) { return get(base, Poly::t(base)); }

std::vector<Fq::Elem> ResidueField::coords(Elem a) const {
    std::vector<Fq::Elem> c(d_, 0);
    const Elem q = static_cast<Elem>(base_->q());
    for (int i = 0; i < d_; ++i) {
        c[i] = static_cast<Fq::Elem>(a % q);
        a /= q;
    }
    return c;
}

ResidueField::Elem ResidueField::from_coords(const std::vector<Fq::Elem>& c) const {
    Elem a = 0;
    const Elem q = static_cast<Elem>(base_->q());
    for (int i = d_ - 1; i >= 0; --i) a = a * q + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return a;
}

ResidueField::Elem ResidueField::from_poly(const Poly& p) const {
    if (p.is_zero()) return 0;
    if (d_ == 1) return p.coeff(0);  // modulus is z
    const Poly r = p % modulus_;
    std::vector<Fq::Elem> c(d_, 0);
    for (int i = 0; i < d_; ++i) c[i] = r.coeff(i);
    return from_coords(c);
}

ResidueField::Elem ResidueField::add(Elem a, Elem b) const noexcept {
    if (d_ == 1) return base_->add(static_cast<Fq::Elem>(a), static_cast<Fq::Elem>(b));
    const Elem q = static_cast<Elem>(base_->q());
    Elem r = 0, m = 1;
    for (int i = 0; i < d_; ++i) {
        r += m * base_->add(static_cast<Fq::Elem>(a % q), static_cast<Fq::Elem>(b % q));
        a /= q;
        b /= q;
        m *= q;
    }
    return r;
}

ResidueField::Elem ResidueField::neg(Elem a) const noexcept {
    if (d_ == 1) return base_->neg(static_cast<Fq::Elem>(a));
    const Elem q = static_cast<Elem>(base_->q());
    Elem r = 0, m = 1;
    for (int i = 0; i < d_; ++i) {
        r += m * base_->neg(static_cast<Fq::Elem>(a % q));
        a /= q;
        m *= q;
    }
    return r;
}

ResidueField::Elem ResidueField::scale(Fq::Elem c, Elem a) const noexcept {
    if (d_ == 1) return base_->mul(c, static_cast<Fq::Elem>(a));
    const Elem q = static_cast<Elem>(base_->q());
    Elem r = 0, m = 1;
    for (int i = 0; i < d_; ++i) {
        r += m * base_->mul(c, static_cast<Fq::Elem>(a % q));
        a /= q;
        m *= q;
    }
    return r;
}

ResidueField::Elem ResidueField::mul_slow(Elem a, Elem b) const noexcept {
    const Fq& F = *base_;
    const auto ca = coords(a);
    const auto cb = coords(b);
    std::vector<Fq::Elem> prod(static_cast<std::size_t>(2 * d_ - 1), 0);
    for (int i = 0; i < d_; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < d_; ++j) prod[i + j] = F.add(prod[i + j], F.mul(ca[i], cb[j]));
    }
    // reduce by the monic modulus
    for (int k = 2 * d_ - 2; k >= d_; --k) {
        const Fq::Elem c = prod[k];
        if (c == 0) continue;
        for (int j = 0; j <= d_; ++j) prod[k - d_ + j] = F.sub(prod[k - d_ + j], F.mul(c, modulus_.coeff(j)));
    }
    prod.resize(d_);
    return from_coords(prod);
}

ResidueField::Elem ResidueField::mul(Elem a, Elem b) const noexcept {
    if (d_ == 1) return base_->mul(static_cast<Fq::Elem>(a), static_cast<Fq::Elem>(b));
    if (!mul_table_.empty()) return mul_table_[a * order_ + b];
    return mul_slow(a, b);
}

ResidueField::Elem ResidueField::pow(Elem a, std::uint64_t n) const noexcept {
    Elem r = 1;
    Elem b = a;
    while (n > 0) {
        if (n & 1U) r = mul(r, b);
        n >>= 1U;
        if (n > 0) b = mul(b, b);
    }
    return r;
}

ResidueField::Elem ResidueField::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in residue field");
    return pow(a, order_ - 2);
}

ResidueField::Elem ResidueField::frobenius(Elem a) const noexcept {
    if (d_ == 1) return a;
    const Fq& F = *base_;
    const auto c = coords(a);
    std::vector<Fq::Elem> r(d_, 0);
    for (int i = 0; i < d_; ++i) {
        if (c[i] == 0) continue;
        for (int k = 0; k < d_; ++k) r[k] = F.add(r[k], F.mul(c[i], frob_matrix_[i][k]));
    }
    return from_coords(r);
}

ResidueField::Elem ResidueField::frobenius_inverse(Elem a, int k) const noexcept {
    if (d_ == 1) return a;
    const int steps = ((d_ - k % d_) % d_);
    for (int i = 0; i < steps; ++i) a = frobenius(a);
    return a;
}

std::string ResidueField::format(Elem a) const {
    if (d_ == 1) return base_->format(static_cast<Fq::Elem>(a));
    const auto c = coords(a);
    Poly p(*base_, c);
    return p.to_string('z');
}

}  // namespace carlitz::ff
