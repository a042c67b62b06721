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

#ifndef CARLITZ_DRINFELD_CARLITZ_HPP
#define CARLITZ_DRINFELD_CARLITZ_HPP

#include <functional>
#include <string>
#include <vector>

#include "carlitz/ff/poly.hpp"
#include "carlitz/series/laurent_series.hpp"

namespace carlitz::drinfeld {

using ff::Fq;
using ff::Poly;
using ff::RatFunc;
using series::LaurentSeries;

// Coefficients c_k of phi_a = sum_k c_k tau^k, where phi_t = t + tau.
std::vector<Poly> phi_coefficients(const Poly& a);

// A carrier for the Carlitz action: an additive group with the image of t
// acting by multiplication and an additive q-power map.
template <class V>
struct CarrierOps {
    std::function<V(const V&, const V&)> add;
    std::function<V(Fq::Elem, const V&)> scale;
    std::function<V(const V&)> mul_t;
    std::function<V(const V&)> q_power;
};

template <class V>
V phi_t(const V& c, const CarrierOps<V>& ops) {
    return ops.add(ops.mul_t(c), ops.q_power(c));
}

template <class V>
V phi_action(const Poly& a, const V& c, const CarrierOps<V>& ops) {
    V acc = ops.scale(0, c);
    V cur = c;
    for (int k = 0; k <= a.deg(); ++k) {
        if (a.coeff(k) != 0) acc = ops.add(acc, ops.scale(a.coeff(k), cur));
        if (k < a.deg()) cur = phi_t(cur, ops);
    }
    return acc;
}

// phi_a on the function field F = F_q(t) itself.
RatFunc phi_action(const Poly& a, const RatFunc& c);

struct ExpCoeffs {
    int q = 0;
    std::vector<RatFunc> e;  ///< e_0 = 1, ..., e_N
    std::vector<RatFunc> l;  ///< l_0 = 1, ..., l_N
};

// Cached per field. e_i = 1/D_i with D_i = D_{i-1}^q (t^{q^i} - t).
const std::vector<RatFunc>& exp_coefficients(const Fq& field, int n);
// Compositional inverse of the exponential, by formal inversion.
const std::vector<RatFunc>& log_coefficients(const Fq& field, int n);
ExpCoeffs exp_coeffs(const Fq& field, int n);

struct IdentityReport {
    bool ok = true;
    int checked = 0;
    std::vector<std::string> failures;
};

// exp(tx) - t exp(x) - exp(x)^q = 0 modulo x^{q^{N+1}}, exactly over F.
IdentityReport verify_functional_eq(const Fq& field, int n);
// sum_j l_j (sum_i e_i x^{q^i})^{q^j} = x modulo x^{q^{N+1}}.
IdentityReport verify_composition(const Fq& field, int n);
// deg den(e_i) - deg num(e_i) = i q^i.
IdentityReport verify_degree_law(const Fq& field, int n);

struct SolveInfo {
    int peel_steps = 0;
    int fixed_point_steps = 0;
    bool brute_forced = false;
    int residual_val = 0;
};

// The Carlitz module on a completion K_z = F_{q^d}((u)), given the expansion
// of t, which must be an exact monomial c u^{-e}.
class LocalCarlitz {
public:
    explicit LocalCarlitz(const LaurentSeries& t_image);

    const LaurentSeries& t_image() const noexcept { return t_; }
    const ff::ResidueField& field() const { return t_.field(); }
    int ram() const noexcept { return e_; }
    int q() const noexcept { return q_; }

    LaurentSeries mul_t(const LaurentSeries& c) const { return t_ * c; }
    LaurentSeries phi_t(const LaurentSeries& c) const;
    LaurentSeries phi(const Poly& a, const LaurentSeries& c) const;
    LaurentSeries eval_poly(const Poly& a, const LaurentSeries& c) const;  ///< a(t) * c

    // e_i evaluated at t, known modulo u^prec.
    LaurentSeries exp_coefficient(int i, int prec) const;

    // exp x modulo u^min(target, x.prec()).
    LaurentSeries exp(const LaurentSeries& x) const { return exp(x, x.prec()); }
    LaurentSeries exp(const LaurentSeries& x, int target) const;
    // Requires v(x) >= -e, the domain t O on which exp is an isometry.
    LaurentSeries log(const LaurentSeries& x) const;
    // Some gamma with exp(gamma) = c to the precision of c.
    LaurentSeries solve_exp(const LaurentSeries& c, SolveInfo* info = nullptr, int max_depth = 32) const;

    // Valuation bound of the contraction domain |x| < |t|^{q/(q-1)}: v(x) > -e q/(q-1).
    bool in_contraction_domain(int v) const noexcept { return static_cast<long long>(v) * (q_ - 1) > -static_cast<long long>(e_) * q_; }

private:
    LaurentSeries d_series(int i, int rel) const;
    LaurentSeries monomial_exp(ff::ResidueField::Elem a, int exponent, int target) const;

    LaurentSeries t_;
    int e_;
    int q_;
};

}  // namespace carlitz::drinfeld

#endif  // CARLITZ_DRINFELD_CARLITZ_HPP
