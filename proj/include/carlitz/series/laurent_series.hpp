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

#ifndef CARLITZ_SERIES_LAURENT_SERIES_HPP
#define CARLITZ_SERIES_LAURENT_SERIES_HPP

#include <string>
#include <vector>

#include "carlitz/ff/poly.hpp"
#include "carlitz/ff/residue_field.hpp"

namespace carlitz::series {

using ff::ResidueField;

// Precision carried by exactly known values such as constants and the exact
// expansion of t at a place; the min-rules bring it down in arithmetic.
inline constexpr int kExactPrecision = 1 << 28;

// A Laurent series in a uniformizer u over a finite field, known modulo u^prec.
// Precision is absolute. There is no exact zero: the zero series is always
// "zero modulo u^prec", and its valuation is reported as prec.
class LaurentSeries {
public:
    using Elem = ResidueField::Elem;

    LaurentSeries() = default;
    LaurentSeries(const ResidueField& field, int val, std::vector<Elem> coeffs, int prec);

    static LaurentSeries zero(const ResidueField& field, int prec);
    static LaurentSeries constant(const ResidueField& field, Elem c, int prec);
    static LaurentSeries monomial(const ResidueField& field, Elem c, int exponent, int prec);
    // Laurent polynomial in u with base-field coefficients.
    static LaurentSeries from_laurent(const ResidueField& field, const ff::LaurentPoly& p, int prec);

    bool has_field() const noexcept { return field_ != nullptr; }
    const ResidueField& field() const { return *field_; }
    int prec() const noexcept { return prec_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int val() const noexcept { return is_zero() ? prec_ : val_; }
    Elem lead() const noexcept { return is_zero() ? Elem{0} : c_.front(); }
    Elem coeff(int exponent) const;  ///< throws PrecisionExhausted beyond prec
    // Stored terms from u^val upward; the front is nonzero and omitted tail terms are zero.
    const std::vector<Elem>& coeffs() const noexcept { return c_; }

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries inverse() const;
    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inverse(); }
    LaurentSeries scaled(Elem c) const;
    LaurentSeries shifted(int k) const;      ///< times u^k
    LaurentSeries truncated(int prec) const;  ///< lowers precision
    LaurentSeries pow(long long n) const;     ///< negative n allowed for nonzero series
    LaurentSeries q_power() const;            ///< x -> x^q, q the base field order
    LaurentSeries q_power(int times) const;
    LaurentSeries rth_root(int r) const;
    LaurentSeries map_coeffs_frobenius_inverse(int k) const;  ///< coefficientwise inverse of c -> c^(q^k)

    // Parts with exponents below / at or above a bound.
    LaurentSeries part_below(int bound) const;
    LaurentSeries part_from(int bound) const;

    // True when the two series agree modulo u^min(prec).
    bool agrees_with(const LaurentSeries& o) const;

    std::string to_string(char var = 'u') const;

private:
    void normalize();

    const ResidueField* field_ = nullptr;
    int val_ = 0;
    std::vector<Elem> c_;
    int prec_ = 0;
};

// Evaluate a polynomial (resp. rational function) over the base field at a series.
LaurentSeries eval(const ff::Poly& p, const LaurentSeries& x);
LaurentSeries eval(const ff::RatFunc& f, const LaurentSeries& x);

}  // namespace carlitz::series

#endif  // CARLITZ_SERIES_LAURENT_SERIES_HPP
