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

#ifndef CARLITZ_CURVE_COHOMOLOGY_HPP
#define CARLITZ_CURVE_COHOMOLOGY_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "carlitz/curve/package.hpp"
#include "carlitz/ff/linalg.hpp"

namespace carlitz::curve {

using ff::KMatrix;
using ff::KVector;

// H^0 and H^1 of O_X(mD) on the two-chart cover.
//
// H^1 is O_fin[1/t] / (O_fin + t^m O_inf). Classes are read inside the window
// of exponents -N..-1; column (N - j) n + i holds the coefficient of
// t^{-j} b_i, so echelon pivots land on the most negative exponents and the
// free columns (the representatives) do not move when N grows.
class CohomologySlice {
public:
    const Fq& field() const noexcept { return *field_; }
    int twist() const noexcept { return m_; }
    int window() const noexcept { return N_; }
    int n() const noexcept { return n_; }
    int h0_dim() const noexcept { return static_cast<int>(h0_basis_.size()); }
    int h1_dim() const noexcept { return static_cast<int>(free_.size()); }

    // Basis of L(mD) in echelon form (polynomial coordinates).
    const std::vector<FinVec>& h0_basis() const noexcept { return h0_basis_; }
    // Representatives t^{-j} b_i, one per free column.
    const std::vector<FinVec>& h1_basis() const noexcept { return h1_basis_; }

    // Coordinates of an element of L(mD) in h0_basis(); throws Inconsistent otherwise.
    KVector h0_coords(const FinVec& h) const;
    // Coordinates of the class of x in H^1 (x in O_fin[1/t]).
    KVector class_of(const FinVec& x) const;
    KVector window_vector(const FinVec& x) const;

private:
    friend struct SliceBuilder;

    CohomologySlice(const Fq& field, int m, int N, int n) : field_(&field), m_(m), N_(N), n_(n), rel_(field, N * n) {}

    const Fq* field_;
    int m_;
    int N_;
    int n_;
    int h0_cols_ = 0;
    std::vector<FinVec> h0_basis_;
    std::vector<KVector> h0_rows_;
    std::vector<int> h0_pivots_;
    ff::EchelonBasis rel_;
    std::vector<int> free_;
    std::vector<FinVec> h1_basis_;
};

// With no window given, N starts at 2 c + m n + 4 (c the coefficient degree
// bound) and doubles until the dimensions at N and 2N agree.
CohomologySlice cech_cohomology(const CurvePackage& pkg, int m, std::optional<int> window = std::nullopt);

// Matrix (to.h1 x from.h1) of the F_q-linear map sending each representative
// r of `from` to the class of fn(r) in `to`.
KMatrix apply_map(const CohomologySlice& from, const CohomologySlice& to, const std::function<FinVec(const FinVec&)>& fn);

KMatrix incl_matrix(const CohomologySlice& from, const CohomologySlice& to);
KMatrix mult_t_matrix(const CohomologySlice& from, const CohomologySlice& to);
KMatrix frob_matrix(const CurvePackage& pkg, const CohomologySlice& from, const CohomologySlice& to);

// The maps used by the boundary complex at twist m: H^1(m) -> H^1(m+1) and
// H^1(m) -> H^1(qm) -> H^1(m+1). Requires qm <= m + 1.
struct CohMaps {
    KMatrix incl;        ///< m -> m+1
    KMatrix mult_t;      ///< m -> m+1
    KMatrix frob;        ///< m -> qm
    KMatrix incl_frob;   ///< qm -> m+1
};

CohMaps coh_maps(const CurvePackage& pkg, const CohomologySlice& sm, const CohomologySlice& sm1,
                 const CohomologySlice& sqm);

// x = ffin + ginf with ffin in O_fin and ginf in t^m O_inf. Throws
// NonzeroClass when the class of x in H^1(mD) is nonzero.
std::pair<FinVec, FinVec> decompose(const CurvePackage& pkg, const CohomologySlice& slice, const FinVec& x);
std::pair<FinVec, FinVec> decompose(const CurvePackage& pkg, const FinVec& x, int m);

}  // namespace carlitz::curve

#endif  // CARLITZ_CURVE_COHOMOLOGY_HPP
