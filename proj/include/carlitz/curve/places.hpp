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

#ifndef CARLITZ_CURVE_PLACES_HPP
#define CARLITZ_CURVE_PLACES_HPP

#include <vector>

#include "carlitz/curve/package.hpp"
#include "carlitz/series/laurent_series.hpp"

namespace carlitz::curve {

using series::LaurentSeries;

// A place above t = infinity with its completion F_{q^d}((u)).
struct Place {
    const ff::ResidueField* residue = nullptr;
    int e = 1;  ///< ramification index
    int d = 1;  ///< residue degree
    LaurentSeries embed_t;  ///< exact monomial zeta^{-1} u^{-e}
    LaurentSeries embed_y;
    std::vector<LaurentSeries> basis;  ///< images of basis_fin
    int prec = 0;                      ///< every stored expansion is known to at least this

    const ff::ResidueField& field() const { return *residue; }
    // Image of an element of O_fin[1/t].
    LaurentSeries embed(const FinVec& x) const;
    // Image of a Laurent polynomial in t.
    LaurentSeries embed_scalar(const LaurentPoly& a) const;
};

// Newton polygon of g over F_q((1/t)), one place per edge factor of the
// residual polynomial. Throws WildOrSingular when p divides a ramification
// index or a residual polynomial is not squarefree.
std::vector<Place> places_at_infinity(const CurvePackage& pkg, int prec);

// g(embed_t, embed_y), which must vanish to the working precision.
LaurentSeries defining_residual(const CurvePackage& pkg, const Place& place);

}  // namespace carlitz::curve

#endif  // CARLITZ_CURVE_PLACES_HPP
