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

#ifndef CARLITZ_FF_POLY_HPP
#define CARLITZ_FF_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "carlitz/ff/field.hpp"

namespace carlitz::ff {

/// Univariate polynomial over F_q in the variable t (an element of A = F_q[t]).
///
/// Coefficients are ascending and normalized: no trailing zeros, and the
/// zero polynomial is the empty sequence. A default-constructed Poly has no
/// field attached and behaves as zero in binary operations.
class Poly {
public:
    using Elem = Fq::Elem;

    Poly() = default;
    explicit Poly(const Fq& field) : field_(&field) {}
    Poly(const Fq& field, std::vector<Elem> coeffs);

    static Poly constant(const Fq& field, Elem c);
    static Poly monomial(const Fq& field, Elem c, int degree);
    static Poly t(const Fq& field) { return monomial(field, 1, 1); }
    /// Parses `t^3+2*t+1`; coefficients in extension fields use `w`.
    static Poly parse(const Fq& field, std::string_view text, char var = 't');

    bool has_field() const noexcept { return field_ != nullptr; }
    const Fq& field() const;

    int deg() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Elem coeff(int i) const noexcept {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Elem{0};
    }
    Elem lc() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    /// Lowest exponent with a nonzero coefficient (the t-adic valuation); -1 for zero.
    int low_degree() const noexcept;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(Elem c) const;
    /// Multiplication by t^k, k >= 0.
    Poly shifted(int k) const;
    /// Drops the k lowest coefficients (exact division by t^k when t^k | f).
    Poly unshifted(int k) const;

    /// Returns (quotient, remainder); throws DivisionByZero when g = 0.
    std::pair<Poly, Poly> divmod(const Poly& g) const;
    Poly operator/(const Poly& g) const { return divmod(g).first; }
    Poly operator%(const Poly& g) const { return divmod(g).second; }
    bool divides(const Poly& f) const;

    Poly monic() const;
    Poly derivative() const;
    /// f^q = f(t^q), since coefficients lie in F_q.
    Poly frobenius() const;
    Poly pow(std::uint64_t n) const;
    /// f^n mod m by square and multiply.
    Poly powmod(std::uint64_t n, const Poly& m) const;
    Elem eval(Elem x) const noexcept;
    /// Composition f(g).
    Poly compose(const Poly& g) const;

    bool operator==(const Poly& o) const noexcept { return c_ == o.c_; }
    bool operator!=(const Poly& o) const noexcept { return c_ != o.c_; }
    /// Deterministic total order: by degree, then coefficients from the top.
    bool operator<(const Poly& o) const noexcept;

    std::string to_string(char var = 't') const;

private:
    void normalize() noexcept;
    const Fq* pick(const Poly& o) const noexcept { return field_ ? field_ : o.field_; }

    const Fq* field_ = nullptr;
    std::vector<Elem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
    Poly g;  ///< monic gcd
    Poly s;  ///< s*a + t*b = g
    Poly t;
};
Xgcd xgcd(const Poly& a, const Poly& b);

/// Laurent polynomial t^low * body, normalized so body(0) != 0 (or zero).
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Poly& p, int low = 0);
    static LaurentPoly monomial(const Fq& field, Fq::Elem c, int exponent);

    bool is_zero() const noexcept { return body_.is_zero(); }
    const Poly& body() const noexcept { return body_; }
    /// Lowest exponent present; 0 for the zero polynomial.
    int min_exp() const noexcept { return low_; }
    /// Highest exponent present; only meaningful when nonzero.
    int max_exp() const noexcept { return low_ + body_.deg(); }
    Fq::Elem coeff(int exponent) const noexcept { return body_.coeff(exponent - low_); }
    bool has_field() const noexcept { return body_.has_field(); }
    const Fq& field() const { return body_.field(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const { return LaurentPoly(-body_, low_); }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly scaled(Fq::Elem c) const { return LaurentPoly(body_.scaled(c), low_); }
    LaurentPoly shifted(int k) const { return is_zero() ? *this : LaurentPoly(body_, low_ + k); }
    LaurentPoly frobenius() const;

    /// Terms with exponent < 0, resp. >= 0.
    LaurentPoly negative_part() const;
    Poly nonnegative_part() const;
    /// Terms with exponent in [lo, hi].
    LaurentPoly window(int lo, int hi) const;
    bool is_polynomial() const noexcept { return is_zero() || low_ >= 0; }
    Poly to_poly() const;  ///< requires is_polynomial()

    bool operator==(const LaurentPoly& o) const noexcept { return low_ == o.low_ && body_ == o.body_; }
    std::string to_string(char var = 't') const;

private:
    void normalize();

    Poly body_;
    int low_ = 0;
};

/// Rational function num/den in F = F_q(t), den monic and coprime to num.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(const Poly& num);
    RatFunc(const Poly& num, const Poly& den);
    static RatFunc from_laurent(const LaurentPoly& l);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_poly() const noexcept { return den_.deg() <= 0; }
    /// Denominator is a power of t.
    bool is_laurent() const noexcept;
    LaurentPoly to_laurent() const;  ///< requires is_laurent()
    const Fq& field() const { return num_.has_field() ? num_.field() : den_.field(); }
    /// deg num - deg den (the negative of the valuation at infinity); zero -> INT_MIN.
    int degree() const noexcept;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc inverse() const;
    /// x^q, computed coefficientwise.
    RatFunc frobenius() const;

    bool operator==(const RatFunc& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const noexcept { return !(*this == o); }
    /// `num/den`, with parentheses around multi-term parts; `num` when den = 1.
    std::string to_string(char var = 't') const;

private:
    Poly num_;
    Poly den_;
};

}  // namespace carlitz::ff

#endif  // CARLITZ_FF_POLY_HPP
