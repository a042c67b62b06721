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

#ifndef CARLITZ_FF_FIELD_HPP
#define CARLITZ_FF_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace carlitz::ff {

/// The finite field F_q, q = p^e, presented as F_p[w]/(modulus).
///
/// Elements are encoded as integers in [0, q): the base-p digits are the
/// coordinates in the basis 1, w, ..., w^(e-1). Instances are interned and
/// immutable; obtain them through get() and compare by address.
class Fq {
public:
    using Elem = std::uint8_t;

    static constexpr int kMaxOrder = 64;
    static constexpr int kMaxPrime = 13;

    /// Field with the lexicographically smallest monic irreducible modulus.
    static const Fq& get(int p, int e);
    /// Field with an explicit modulus (ascending F_p coefficients, monic).
    static const Fq& get(int p, int e, const std::vector<int>& modulus);
    /// F_q for a prime power q; throws std::invalid_argument otherwise.
    static const Fq& of_order(int q);

    int p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    int q() const noexcept { return q_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    /// The generator w (equal to the integer 1 mapped into F_p when e = 1).
    Elem gen() const noexcept { return e_ == 1 ? Elem{1} : static_cast<Elem>(p_); }
    Elem from_int(long long v) const noexcept;

    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t n) const noexcept;
    /// x -> x^p; generates Gal(F_q/F_p).
    Elem frob_p(Elem a) const noexcept { return pow(a, static_cast<std::uint64_t>(p_)); }
    /// x -> x^q, the identity on F_q.
    Elem frobenius(Elem a) const noexcept { return pow(a, static_cast<std::uint64_t>(q_)); }

    /// Text syntax: an integer for prime fields, a polynomial in w otherwise.
    std::string format(Elem a) const;
    Elem parse(std::string_view text) const;

    bool is_prime_field() const noexcept { return e_ == 1; }

private:
    Fq(int p, int e, std::vector<int> modulus);

    int p_;
    int e_;
    int q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

/// Value-semantic field element, convenient for tests and the public API.
class FieldElement {
public:
    FieldElement(const Fq& field, Fq::Elem code) : field_(&field), code_(code) {}

    const Fq& field() const noexcept { return *field_; }
    Fq::Elem code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {*field_, field_->add(code_, o.code_)}; }
    FieldElement operator-(const FieldElement& o) const { return {*field_, field_->sub(code_, o.code_)}; }
    FieldElement operator*(const FieldElement& o) const { return {*field_, field_->mul(code_, o.code_)}; }
    FieldElement operator-() const { return {*field_, field_->neg(code_)}; }
    FieldElement inverse() const { return {*field_, field_->inv(code_)}; }
    FieldElement frobenius() const { return {*field_, field_->frobenius(code_)}; }

    bool operator==(const FieldElement& o) const noexcept {
        return field_ == o.field_ && code_ == o.code_;
    }

    std::string to_string() const { return field_->format(code_); }

private:
    const Fq* field_;
    Fq::Elem code_;
};

bool is_prime(int n) noexcept;
/// Returns (p, e) with q = p^e, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power(int q) noexcept;

}  // namespace carlitz::ff

#endif  // CARLITZ_FF_FIELD_HPP
