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

#ifndef CARLITZ_CURVE_PACKAGE_HPP
#define CARLITZ_CURVE_PACKAGE_HPP

#include <string>
#include <vector>

#include "carlitz/curve/function_field.hpp"

namespace carlitz::curve {

// An element of O_fin[1/t], as Laurent-polynomial coordinates in basis_fin.
using FinVec = std::vector<LaurentPoly>;

FinVec fin_zero(const Fq& field, int n);
FinVec fin_add(const FinVec& a, const FinVec& b);
FinVec fin_sub(const FinVec& a, const FinVec& b);
FinVec fin_scale(const FinVec& a, Fq::Elem c);
FinVec fin_mul_poly(const FinVec& a, const LaurentPoly& c);
FinVec fin_shift(const FinVec& a, int k);  ///< times t^k
bool fin_is_zero(const FinVec& a);
bool fin_is_polynomial(const FinVec& a);
std::string fin_to_string(const FinVec& a);

// X presented by two charts: O_fin over A = F_q[t] with basis b_i and O_inf
// over F_q[s], s = 1/t, with basis beta_j = sum_i T_ji b_i.
class CurvePackage {
public:
    enum class Kind { POne, Superelliptic, Generic };

    static CurvePackage pone(const Fq& field);
    static CurvePackage superelliptic(const Fq& field, int m, const Poly& f);
    static CurvePackage generic(const Fq& field, const YPoly& g, const std::vector<YPoly>& basis_fin,
                                const std::vector<YPoly>& basis_inf);

    const Fq& field() const noexcept { return *field_; }
    Kind kind() const noexcept { return kind_; }
    std::string kind_name() const;
    int n() const noexcept { return n_; }
    int genus() const noexcept { return genus_; }
    const YPoly& defining() const noexcept { return g_; }
    const std::vector<YPoly>& basis_fin() const noexcept { return basis_fin_; }
    const std::vector<YPoly>& basis_inf() const noexcept { return basis_inf_; }
    const LaurentMatrix& T() const noexcept { return T_; }
    const LaurentMatrix& S() const noexcept { return S_; }
    int max_exp_T() const noexcept { return max_T_; }
    int max_exp_S() const noexcept { return max_S_; }
    int coefficient_degree_bound() const noexcept { return coeff_bound_; }
    int superelliptic_m() const noexcept { return sup_m_; }
    const Poly& superelliptic_f() const noexcept { return sup_f_; }

    int series_precision() const noexcept { return series_prec_; }
    void set_series_precision(int p) { series_prec_ = p; }

    FinVec basis_element(int i) const;
    FinVec one() const { return one_; }
    FinVec mul(const FinVec& a, const FinVec& b) const;
    FinVec frobenius(const FinVec& a) const;
    FinVec to_beta(const FinVec& a) const;
    FinVec from_beta(const FinVec& c) const;
    YPoly to_ypoly(const FinVec& a) const;
    FinVec from_ypoly(const YPoly& a) const;  ///< throws InvariantViolation if coordinates are not Laurent
    std::vector<RatFunc> fin_coordinates(const YPoly& a) const;

    // Membership in t^m O_inf: every beta-coordinate has t-exponents <= m.
    bool in_inf_twist(const FinVec& a, int m) const;

private:
    CurvePackage() = default;
    void build(const YPoly& g, const std::vector<YPoly>& basis_fin, const std::vector<YPoly>& basis_inf);
    void validate();

    const Fq* field_ = nullptr;
    Kind kind_ = Kind::Generic;
    int sup_m_ = 0;
    Poly sup_f_;
    int n_ = 0;
    int genus_ = 0;
    int series_prec_ = 64;
    YPoly g_;
    std::vector<YPoly> basis_fin_, basis_inf_;
    RatMatrix P_, Pinv_;
    LaurentMatrix T_, S_;
    int max_T_ = 0, max_S_ = 0, coeff_bound_ = 0;
    std::vector<std::vector<FinVec>> mult_;  // b_i b_j
    std::vector<FinVec> frob_;              // b_i^q
    FinVec one_;
};

CurvePackage parse_package(const std::string& text);
CurvePackage load_package(const std::string& path);

}  // namespace carlitz::curve

#endif  // CARLITZ_CURVE_PACKAGE_HPP
