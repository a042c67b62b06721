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

#ifndef CARLITZ_CURVE_FUNCTION_FIELD_HPP
#define CARLITZ_CURVE_FUNCTION_FIELD_HPP

#include <string>
#include <string_view>
#include <vector>

#include "carlitz/ff/poly.hpp"

namespace carlitz::curve {

using ff::Fq;
using ff::LaurentPoly;
using ff::Poly;
using ff::RatFunc;

// Polynomial in y over F = F_q(t), coefficients in ascending y-degree, no
// trailing zeros. The zero polynomial is empty.
using YPoly = std::vector<RatFunc>;

YPoly ynormalize(YPoly a);
YPoly yconstant(const RatFunc& c);
YPoly yadd(const YPoly& a, const YPoly& b);
YPoly ysub(const YPoly& a, const YPoly& b);
YPoly ymul(const YPoly& a, const YPoly& b);
YPoly yscale(const YPoly& a, const RatFunc& c);
YPoly yderivative(const YPoly& a);
int ydeg(const YPoly& a);
std::pair<YPoly, YPoly> ydivmod(const YPoly& a, const YPoly& b);
YPoly ygcd(YPoly a, YPoly b);  ///< monic
std::string yto_string(const YPoly& a);

// Parse an expression in t, y, s = 1/t (and w for extension fields);
// division is allowed by expressions free of y.
YPoly parse_ypoly(const Fq& field, std::string_view text);

using RatMatrix = std::vector<std::vector<RatFunc>>;
RatMatrix rat_inverse(const RatMatrix& m);  ///< throws Inconsistent when singular

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

}  // namespace carlitz::curve

#endif  // CARLITZ_CURVE_FUNCTION_FIELD_HPP
