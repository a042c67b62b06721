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

#ifndef CARLITZ_INVARIANTS_INVARIANTS_HPP
#define CARLITZ_INVARIANTS_INVARIANTS_HPP

#include <string>
#include <vector>

#include "carlitz/curve/cohomology.hpp"
#include "carlitz/curve/places.hpp"
#include "carlitz/ff/smith.hpp"

namespace carlitz::invariants {

using curve::CohomologySlice;
using curve::CurvePackage;
using curve::FinVec;
using ff::PolyMatrix;
using ff::Poly;
using series::LaurentSeries;

// The boundary of the two-term complex on cohomology, at twist tau >= 0:
// slices at m = -tau, 1 - tau and q m.
//
// d0: L(mD) (x) A -> L((m+1)D) (x) A, columns T incl(h) - [t h] - [h^q].
// B:  H^1(mD) (x) A -> H^1((m+1)D) (x) A, B = T incl - mult_t - incl o frob.
// T is the variable of A, printed as t.
struct BoundaryData {
    int twist;
    CohomologySlice s_m;
    CohomologySlice s_m1;
    CohomologySlice s_qm;
    PolyMatrix d0;
    PolyMatrix B;
};

BoundaryData boundary_data(const CurvePackage& pkg, int twist = 0);

struct ClassModule {
    std::vector<Poly> divisors;  ///< nonunit invariant factors of coker B
    int log_cardinality = 0;     ///< sum of their degrees
    bool finite = true;
    int free_rank = 0;  ///< rank of coker B over A; zero for valid packages
};

ClassModule class_module(const BoundaryData& bd);

struct UnitGenerator {
    enum class Kind { Coker, KerB };
    Kind kind;
    // Coker: coefficients w_l with the class of sum_l h_l (x) w_l, h_l the basis of L((m+1)D).
    // KerB: v with B v = 0, the cocycle sum_k r_k (x) v_k, r_k the H^1(mD) representatives.
    std::vector<Poly> coeffs;
};

struct UnitModule {
    int rank = 0;
    std::vector<Poly> torsion_divisors;
    std::vector<UnitGenerator> generators;
    int kernel_d0 = 0;  ///< rank of ker d0, zero for valid packages
};

// Throws InvalidPackage when the rank is not n or torsion appears.
UnitModule unit_module(const CurvePackage& pkg, const BoundaryData& bd);

struct Realization {
    FinVec c;  ///< in O_fin
    std::vector<LaurentSeries> gammas;
    std::vector<int> residual_valuations;
    int residual_min = 0;
};

// A section (c, (gamma_z)) with exp gamma_z = c at every place above infinity.
// Throws RealizationFailed when a residual falls below prec - 8.
Realization realize_unit(const CurvePackage& pkg, const BoundaryData& bd, const UnitGenerator& gen, int prec);

// Realization of an arbitrary element sum_l h_l (x) w_l of L((m+1)D) (x) A.
Realization realize_coker_element(const CurvePackage& pkg, const BoundaryData& bd, const std::vector<Poly>& w, int prec);

struct AnalyticSetting {
    int prec = 0;
    int depth = 0;
    int dim_q = 0;   ///< dim of K_inf / (O_fin + W)
    int image = 0;   ///< dim of the span of the exp generators in it
    int codim = 0;   ///< estimate of log_q |H^1|
    bool saturated = false;  ///< false at depth 0 or when the span was still growing
};

struct AnalyticReport {
    std::string status;  ///< PASS, INCONCLUSIVE, or LOWER-SATURATION
    std::vector<AnalyticSetting> settings;
};

// One estimate of log_q |K_inf / (O_fin + exp K_inf)|.
AnalyticSetting analytic_estimate(const CurvePackage& pkg, int prec, int depth);
// PASS when every setting reproduces the algebraic log-cardinality.
AnalyticReport analytic_check(const CurvePackage& pkg, const ClassModule& cm, const std::vector<std::pair<int, int>>& settings);

struct TwistSummary {
    int twist;
    std::vector<Poly> divisors;
    int unit_rank;
    int unit_torsion;
};

// Throws MismatchAcrossTwists when the invariants differ.
std::vector<TwistSummary> twist_invariance(const CurvePackage& pkg, const std::vector<int>& twists);

// Generators needed per degree: dim V_d / (V_d cap phi_t(O_fin)), V_d the
// elements of O_fin with coordinates of degree <= d.
struct GenerationRow {
    int degree;
    int dim_window;
    int dim_image;
    int needed;
};
std::vector<GenerationRow> generation_table(const CurvePackage& pkg, int max_degree);

std::string poly_list(const std::vector<Poly>& ps);

}  // namespace carlitz::invariants

#endif  // CARLITZ_INVARIANTS_INVARIANTS_HPP
